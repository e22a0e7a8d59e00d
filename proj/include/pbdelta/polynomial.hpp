#pragma once

#include <cstddef>
#include <vector>

#include "pbdelta/rational.hpp"

namespace pbd {

/// Dense univariate polynomial over pbd::rational, coefficient i multiplying
/// t^i. The zero polynomial has an empty coefficient vector.
class polynomial {
public:
  polynomial() = default;
  explicit polynomial(std::vector<rational> coefficients);

  static polynomial constant(const rational& c);
  static polynomial monomial(const rational& c, std::size_t k);

  bool is_zero() const { return coef_.empty(); }
  std::size_t degree() const { return coef_.empty() ? 0 : coef_.size() - 1; }
  const std::vector<rational>& coefficients() const { return coef_; }
  rational coefficient(std::size_t k) const;

  rational operator()(const rational& t) const;

  polynomial& operator+=(const polynomial& o);
  polynomial& operator-=(const polynomial& o);
  friend polynomial operator+(polynomial a, const polynomial& b) { return a += b; }
  friend polynomial operator-(polynomial a, const polynomial& b) { return a -= b; }
  friend polynomial operator*(const polynomial& a, const polynomial& b);
  polynomial operator-() const;

  polynomial scaled(const rational& c) const;
  polynomial pow(unsigned long exp) const;

  /// p(c0 + c1 * t), computed by Horner over the shifted variable.
  polynomial compose_affine(const rational& c0, const rational& c1) const;

  /// Antiderivative with zero constant term.
  polynomial antiderivative() const;
  rational integral(const rational& lo, const rational& hi) const;

  friend bool operator==(const polynomial& a, const polynomial& b) { return a.coef_ == b.coef_; }

private:
  void trim();
  std::vector<rational> coef_;
};

}  // namespace pbd
