#include "pbdelta/polynomial.hpp"

#include "pbdelta/error.hpp"

namespace pbd {

polynomial::polynomial(std::vector<rational> coefficients) : coef_(std::move(coefficients)) {
  trim();
}

polynomial polynomial::constant(const rational& c) { return polynomial({c}); }

polynomial polynomial::monomial(const rational& c, std::size_t k) {
  std::vector<rational> v(k + 1, rational(0));
  v[k] = c;
  return polynomial(std::move(v));
}

void polynomial::trim() {
  while (!coef_.empty() && coef_.back().is_zero()) coef_.pop_back();
}

rational polynomial::coefficient(std::size_t k) const {
  return k < coef_.size() ? coef_[k] : rational(0);
}

rational polynomial::operator()(const rational& t) const {
  rational acc(0);
  for (std::size_t i = coef_.size(); i-- > 0;) acc = acc * t + coef_[i];
  return acc;
}

polynomial& polynomial::operator+=(const polynomial& o) {
  if (coef_.size() < o.coef_.size()) coef_.resize(o.coef_.size(), rational(0));
  for (std::size_t i = 0; i < o.coef_.size(); ++i) coef_[i] += o.coef_[i];
  trim();
  return *this;
}

polynomial& polynomial::operator-=(const polynomial& o) {
  if (coef_.size() < o.coef_.size()) coef_.resize(o.coef_.size(), rational(0));
  for (std::size_t i = 0; i < o.coef_.size(); ++i) coef_[i] -= o.coef_[i];
  trim();
  return *this;
}

polynomial operator*(const polynomial& a, const polynomial& b) {
  if (a.is_zero() || b.is_zero()) return polynomial();
  std::vector<rational> out(a.coef_.size() + b.coef_.size() - 1, rational(0));
  for (std::size_t i = 0; i < a.coef_.size(); ++i)
    for (std::size_t j = 0; j < b.coef_.size(); ++j) out[i + j] += a.coef_[i] * b.coef_[j];
  return polynomial(std::move(out));
}

polynomial polynomial::operator-() const {
  polynomial r = *this;
  for (auto& c : r.coef_) c = -c;
  return r;
}

polynomial polynomial::scaled(const rational& c) const {
  if (c.is_zero()) return polynomial();
  polynomial r = *this;
  for (auto& x : r.coef_) x *= c;
  return r;
}

polynomial polynomial::pow(unsigned long exp) const {
  polynomial result = constant(1);
  polynomial base = *this;
  while (exp > 0) {
    if (exp & 1) result = result * base;
    base = base * base;
    exp >>= 1;
  }
  return result;
}

polynomial polynomial::compose_affine(const rational& c0, const rational& c1) const {
  polynomial arg({c0, c1});
  polynomial acc;
  for (std::size_t i = coef_.size(); i-- > 0;) acc = acc * arg + constant(coef_[i]);
  return acc;
}

polynomial polynomial::antiderivative() const {
  if (is_zero()) return polynomial();
  std::vector<rational> out(coef_.size() + 1, rational(0));
  for (std::size_t i = 0; i < coef_.size(); ++i)
    out[i + 1] = coef_[i] / rational(static_cast<long>(i) + 1);
  return polynomial(std::move(out));
}

rational polynomial::integral(const rational& lo, const rational& hi) const {
  polynomial F = antiderivative();
  return F(hi) - F(lo);
}

}  // namespace pbd
