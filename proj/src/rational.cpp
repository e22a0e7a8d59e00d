#include "pbdelta/rational.hpp"

#include <cctype>
#include <ostream>

#include "pbdelta/error.hpp"

namespace pbd {

namespace {

mpq_class make_canonical(const mpz_class& num, const mpz_class& den) {
  if (den == 0) fail(errc::invalid_argument, "rational with zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace

rational::rational(long num, long den) { v_ = make_canonical(mpz_class(num), mpz_class(den)); }

rational::rational(const mpz_class& num, const mpz_class& den) { v_ = make_canonical(num, den); }

rational& rational::operator/=(const rational& o) {
  if (o.is_zero()) fail(errc::invalid_argument, "rational division by zero");
  v_ /= o.v_;
  return *this;
}

rational rational::operator-() const {
  rational r;
  r.v_ = -v_;
  return r;
}

rational rational::parse(std::string_view text) {
  size_t lo = 0, hi = text.size();
  while (lo < hi && std::isspace(static_cast<unsigned char>(text[lo]))) ++lo;
  while (hi > lo && std::isspace(static_cast<unsigned char>(text[hi - 1]))) --hi;
  text = text.substr(lo, hi - lo);

  auto read_int = [](std::string_view s) -> mpz_class {
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
      if (s.size() == 1) fail(errc::parse_error, "bare sign is not a number");
    }
    size_t digits_from = (!s.empty() && (s[0] == '+' || s[0] == '-')) ? 1 : 0;
    if (s.size() == digits_from) fail(errc::parse_error, "empty integer");
    for (size_t i = digits_from; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        fail(errc::parse_error, "invalid character in number: '" + std::string(s) + "'");
    if (s[0] == '+') s.remove_prefix(1);  // mpz_set_str rejects a leading plus
    return mpz_class(std::string(s), 10);
  };

  if (text.empty()) fail(errc::parse_error, "empty rational");
  size_t slash = text.find('/');
  if (slash == std::string_view::npos) return rational(read_int(text));
  if (text.find('/', slash + 1) != std::string_view::npos)
    fail(errc::parse_error, "more than one '/' in rational");
  mpz_class num = read_int(text.substr(0, slash));
  mpz_class den = read_int(text.substr(slash + 1));
  if (den == 0) fail(errc::parse_error, "zero denominator");
  return rational(num, den);
}

std::string rational::str() const {
  std::string s = v_.get_num().get_str();
  if (v_.get_den() != 1) {
    s += '/';
    s += v_.get_den().get_str();
  }
  return s;
}

rational abs(const rational& x) { return x.sign() < 0 ? -x : x; }

rational pow(const rational& base, unsigned long exp) {
  rational result(1);
  rational b = base;
  while (exp > 0) {
    if (exp & 1) result *= b;
    b *= b;
    exp >>= 1;
  }
  return result;
}

std::string decimal(const rational& x, int significant) {
  if (significant < 1) fail(errc::invalid_argument, "need at least one significant digit");
  if (x.is_zero()) return "0=";

  mpz_class p = x.num(), q = x.den();
  bool negative = p < 0;
  if (negative) p = -p;

  // Exponent of the leading digit: |x| is in [10^e10, 10^(e10+1)).
  long e10;
  mpz_class ipart = p / q;
  if (ipart > 0) {
    e10 = static_cast<long>(ipart.get_str().size()) - 1;
  } else {
    e10 = -1;
    mpz_class scaled = p * 10;
    while (scaled < q) {
      scaled *= 10;
      --e10;
    }
  }

  long frac = significant - 1 - e10;
  if (frac < 1) frac = 1;

  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(frac));
  mpz_class t = p * pow10;
  mpz_class digits = t / q;
  mpz_class rem = t % q;
  bool exact = (rem == 0);
  if (rem * 2 >= q) digits += 1;

  std::string ds = digits.get_str();
  if (static_cast<long>(ds.size()) <= frac) ds.insert(0, frac + 1 - ds.size(), '0');
  std::string out;
  if (negative) out += '-';
  out.append(ds, 0, ds.size() - frac);
  out += '.';
  out.append(ds, ds.size() - frac, frac);
  out += exact ? '=' : '~';
  return out;
}

std::ostream& operator<<(std::ostream& os, const rational& x) { return os << x.str(); }

}  // namespace pbd
