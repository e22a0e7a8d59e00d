#pragma once

#include "pbdelta/bundle.hpp"
#include "pbdelta/rational.hpp"

namespace pbd {

/// Divisor class a*xi + b*f on the projectivized bundle, where xi is the
/// tautological class and f the fiber class.
struct divisor_class {
  rational a;
  rational b;

  friend divisor_class operator+(const divisor_class& x, const divisor_class& y) {
    return {x.a + y.a, x.b + y.b};
  }
  friend divisor_class operator-(const divisor_class& x, const divisor_class& y) {
    return {x.a - y.a, x.b - y.b};
  }
  friend divisor_class operator*(const rational& c, const divisor_class& x) {
    return {c * x.a, c * x.b};
  }
  friend bool operator==(const divisor_class& x, const divisor_class& y) {
    return x.a == y.a && x.b == y.b;
  }
};

enum class cone_region {
  ample,
  nef_not_ample,
  pseff_not_nef,
  not_pseff,
};

const char* cone_region_name(cone_region region);

/// Position of a*xi + b*f relative to the nested nef and pseudoeffective
/// cones: ample iff a > 0 and b > -a*mu_min, nef on the closure, pseff iff
/// a >= 0 and b >= -a*mu_max.
cone_region cone_position(const divisor_class& c, const bundle& e);

inline bool is_ample(const divisor_class& c, const bundle& e) {
  return cone_position(c, e) == cone_region::ample;
}
inline bool is_nef(const divisor_class& c, const bundle& e) {
  cone_region region = cone_position(c, e);
  return region == cone_region::ample || region == cone_region::nef_not_ample;
}

/// xi^xi_exp . f^f_exp with xi_exp + f_exp = dim = rank; the only nonzero
/// values are xi^n = degree and xi^(n-1).f = 1.
rational intersection_number(long xi_exp, long f_exp, const bundle& e);

/// (a*xi + b*f)^n = a^n * d + n * a^(n-1) * b.
rational eval_top_power(const divisor_class& c, const bundle& e);

/// m . c^(n-1), the mixed pairing used for canonical-divisor intersections.
rational pair_with_power(const divisor_class& m, const divisor_class& c, const bundle& e);

/// K = -n*xi + (2g - 2 + d)*f.
divisor_class canonical_class(const bundle& e);

}  // namespace pbd
