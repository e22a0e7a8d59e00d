#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace pbd {

/// Arbitrary-precision rational number, always stored in lowest terms with a
/// positive denominator. All arithmetic is exact; construction from a zero
/// denominator or division by zero throws rather than trapping inside GMP.
class rational {
public:
  rational() : v_(0) {}
  rational(long n) : v_(n) {}  // implicit on purpose: lets 0, 1, -3 appear in formulas
  rational(long num, long den);
  rational(const mpz_class& n) : v_(n) {}
  rational(const mpz_class& num, const mpz_class& den);

  /// Parses "p", "p/q", optional leading sign on either part, surrounding
  /// whitespace allowed. Anything else (empty, decimals, trailing junk)
  /// throws errc::parse_error.
  static rational parse(std::string_view text);

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  /// Canonical form: "p/q", or "p" when the denominator is 1.
  std::string str() const;
  double to_double() const { return v_.get_d(); }

  rational operator-() const;
  rational& operator+=(const rational& o) { v_ += o.v_; return *this; }
  rational& operator-=(const rational& o) { v_ -= o.v_; return *this; }
  rational& operator*=(const rational& o) { v_ *= o.v_; return *this; }
  rational& operator/=(const rational& o);

  friend rational operator+(rational a, const rational& b) { return a += b; }
  friend rational operator-(rational a, const rational& b) { return a -= b; }
  friend rational operator*(rational a, const rational& b) { return a *= b; }
  friend rational operator/(rational a, const rational& b) { return a /= b; }

  friend bool operator==(const rational& a, const rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const rational& a, const rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const rational& a, const rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const rational& a, const rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const rational& a, const rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const rational& a, const rational& b) { return a.v_ >= b.v_; }

private:
  mpq_class v_;
};

rational abs(const rational& x);
rational pow(const rational& base, unsigned long exp);

inline const rational& min(const rational& a, const rational& b) { return b < a ? b : a; }
inline const rational& max(const rational& a, const rational& b) { return a < b ? b : a; }

/// Decimal rendering with `significant` significant digits (at least one
/// fractional digit is always kept). The trailing marker states whether the
/// decimal is the exact value ('=') or a half-up rounding of it ('~').
std::string decimal(const rational& x, int significant = 15);

std::ostream& operator<<(std::ostream& os, const rational& x);

}  // namespace pbd
