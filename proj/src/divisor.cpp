#include "pbdelta/divisor.hpp"

#include <string>

#include "pbdelta/error.hpp"

namespace pbd {

const char* cone_region_name(cone_region region) {
  switch (region) {
    case cone_region::ample: return "ample";
    case cone_region::nef_not_ample: return "nef_not_ample";
    case cone_region::pseff_not_nef: return "pseff_not_nef";
    case cone_region::not_pseff: return "not_pseff";
  }
  return "unknown";
}

cone_region cone_position(const divisor_class& c, const bundle& e) {
  const rational& a = c.a;
  const rational& b = c.b;
  if (a.sign() > 0 && b > -a * e.slope_min()) return cone_region::ample;
  if (a.sign() >= 0 && b >= -a * e.slope_min()) return cone_region::nef_not_ample;
  if (a.sign() >= 0 && b >= -a * e.slope_max()) return cone_region::pseff_not_nef;
  return cone_region::not_pseff;
}

rational intersection_number(long xi_exp, long f_exp, const bundle& e) {
  if (xi_exp < 0 || f_exp < 0 || xi_exp + f_exp != e.rank())
    fail(errc::invalid_argument,
         "intersection_number needs nonnegative exponents summing to " +
             std::to_string(e.rank()));
  if (f_exp == 0) return rational(e.degree());
  if (f_exp == 1) return rational(1);
  return rational(0);
}

rational eval_top_power(const divisor_class& c, const bundle& e) {
  long n = e.rank();
  rational an1 = pow(c.a, static_cast<unsigned long>(n - 1));
  return an1 * c.a * rational(e.degree()) + rational(n) * an1 * c.b;
}

rational pair_with_power(const divisor_class& m, const divisor_class& c, const bundle& e) {
  long n = e.rank();
  // Expand c^(n-1); only the f-exponent 0 and 1 terms survive against m.
  rational an1 = pow(c.a, static_cast<unsigned long>(n - 1));
  rational an2 = n >= 2 ? pow(c.a, static_cast<unsigned long>(n - 2)) : rational(0);
  rational xi_part = an1;                            // xi^(n-1) coefficient
  rational f_part = rational(n - 1) * an2 * c.b;     // xi^(n-2) f coefficient
  return m.a * (xi_part * rational(e.degree()) + f_part) + m.b * xi_part;
}

divisor_class canonical_class(const bundle& e) {
  return {rational(-e.rank()), rational(2 * e.genus() - 2 + e.degree())};
}

}  // namespace pbd
