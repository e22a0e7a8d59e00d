#include "pbdelta/delta.hpp"

#include <string>
#include <utility>

#include "pbdelta/error.hpp"

namespace pbd {

const char* branch_name(delta_branch branch) {
  switch (branch) {
    case delta_branch::fiber: return "fiber";
    case delta_branch::exceptional: return "exceptional";
    case delta_branch::projective_space: return "projective_space";
    case delta_branch::indeterminate: return "indeterminate";
  }
  return "unknown";
}

namespace {

void require_ample(const divisor_class& l, const bundle& e, const char* who) {
  if (!is_ample(l, e))
    fail(errc::not_ample, std::string(who) + " needs an ample class, but " + l.a.str() +
                              "*xi + " + l.b.str() + "*f is " +
                              cone_region_name(cone_position(l, e)));
}

rational mean_slope(long n, long r, const rational& mu_max, const rational& mu_min) {
  return (rational(r) * mu_max + rational(n - r) * mu_min) / rational(n);
}

}  // namespace

rational s_fiber_formula(long n, long r, const rational& mu_max, const rational& mu_min,
                         const rational& a, const rational& b) {
  rational mu = mean_slope(n, r, mu_max, mu_min);
  rational delta_slopes = mu_max - mu_min;
  rational rho = rational(r) * rational(r + 1) / (rational(2) * rational(n + 1));
  rational numerator = rational(n) * (a * mu_min + b) * (a * (2 * mu - mu_min) + b) / rational(2) +
                       a * a * delta_slopes * delta_slopes * rho;
  return numerator / (rational(n) * (a * mu + b));
}

rational s_exceptional_formula(long n, long r, const rational& mu_max, const rational& mu_min,
                               const rational& a, const rational& b) {
  rational mu = mean_slope(n, r, mu_max, mu_min);
  rational numerator = a * rational(r) *
                       (rational(r + 1) * (a * mu_max + b) + rational(n - r) * (a * mu_min + b));
  return numerator / (rational(n) * rational(n + 1) * (a * mu + b));
}

rational s_fiber(const divisor_class& l, const bundle& e) {
  require_ample(l, e, "s_fiber");
  if (e.filtration_length() == 1) return (l.a * e.slope() + l.b) / rational(2);
  return s_fiber_formula(e.rank(), e.blowup_rank(), e.slope_max(), e.slope_min(), l.a, l.b);
}

rational s_exceptional(const divisor_class& l, const bundle& e) {
  require_ample(l, e, "s_exceptional");
  long r = e.blowup_rank();
  if (e.filtration_length() == 1) return rational(r) * l.a / rational(e.rank());
  return s_exceptional_formula(e.rank(), r, e.slope_max(), e.slope_min(), l.a, l.b);
}

threshold_set az_thresholds(const divisor_class& l, const bundle& e) {
  require_ample(l, e, "az_thresholds");
  if (e.filtration_length() != 2)
    fail(errc::invalid_argument,
         "az_thresholds needs a two-step filtration; semistable bundles are handled by "
         "delta_semistable");
  long n = e.rank();
  rational volume_factor = rational(n) * (l.a * e.slope() + l.b);
  threshold_set t;
  t.s1 = rational(e.blowup_rank()) / s_exceptional(l, e);
  t.s2 = volume_factor / (l.a * (l.a * e.slope_max() + l.b));
  t.fiber_upper = volume_factor / (l.a * (l.a * e.slope_min() + l.b));
  return t;
}

delta_report delta_bounds(const divisor_class& l, const bundle& e) {
  require_ample(l, e, "delta_bounds");
  if (e.filtration_length() != 2)
    fail(errc::invalid_argument,
         "delta_bounds needs a two-step filtration; use delta_semistable instead");

  delta_report rep;
  rep.s_fiber = s_fiber(l, e);
  rep.s_exceptional = s_exceptional(l, e);
  threshold_set t = az_thresholds(l, e);
  rep.s1 = t.s1;
  rep.s2 = t.s2;

  rational inv_sf = rational(1) / rep.s_fiber;
  rep.lower = min(inv_sf, t.s2);
  rep.upper = min(inv_sf, t.s1);
  rep.exact = inv_sf <= t.s2;
  if (rep.exact) {
    rep.branch = delta_branch::fiber;
  } else {
    if (inv_sf < t.s1)
      rep.branch = delta_branch::fiber;
    else if (t.s1 < inv_sf)
      rep.branch = delta_branch::exceptional;
    else
      rep.branch = delta_branch::indeterminate;
    rep.note = "bounds only: delta lies in [lower, upper]";
  }
  return rep;
}

delta_report delta_semistable(const divisor_class& l, const bundle& e) {
  require_ample(l, e, "delta_semistable");
  if (e.filtration_length() != 1)
    fail(errc::invalid_argument,
         "delta_semistable needs a semistable bundle; use delta_bounds instead");

  delta_report rep;
  rep.s_fiber = (l.a * e.slope() + l.b) / rational(2);
  if (e.sub_rank())
    rep.s_exceptional = rational(*e.sub_rank()) * l.a / rational(e.rank());

  rational fiber_term = rational(1) / rep.s_fiber;
  rational ps_term = rational(e.rank()) / l.a;
  rational candidate = min(fiber_term, ps_term);

  if (e.stability() == stability_flag::stable) {
    rep.exact = fiber_term <= ps_term;
    rep.lower = candidate;
    rep.upper = fiber_term;
    if (rep.exact)
      rep.branch = fiber_term < ps_term ? delta_branch::fiber : delta_branch::indeterminate;
    else
      rep.branch = delta_branch::indeterminate;
    if (!rep.exact) rep.note = "stable semistable case: exact value open, bounds only";
  } else {
    rep.exact = true;
    rep.lower = candidate;
    rep.upper = candidate;
    if (fiber_term < ps_term)
      rep.branch = delta_branch::fiber;
    else if (ps_term < fiber_term)
      rep.branch = delta_branch::projective_space;
    else
      rep.branch = delta_branch::indeterminate;
  }
  return rep;
}

delta_report delta_for(const divisor_class& l, const bundle& e) {
  return e.filtration_length() == 2 ? delta_bounds(l, e) : delta_semistable(l, e);
}

namespace {

// Upper bound on sqrt(x) for x >= 0: exact when x is a perfect rational
// square, otherwise within 2^-32 above the true root.
std::pair<rational, bool> sqrt_upper(const rational& x) {
  if (x.sign() < 0) fail(errc::invalid_argument, "sqrt_upper needs x >= 0");
  mpz_class p = x.num(), q = x.den();
  const unsigned long scale_bits = 32;
  mpz_class m;
  mpz_ui_pow_ui(m.get_mpz_t(), 2, scale_bits);
  mpz_class target = p * q * m * m;
  mpz_class s;
  mpz_sqrt(s.get_mpz_t(), target.get_mpz_t());
  bool exact = (s * s == target);
  if (!exact) s += 1;
  return {rational(s, q * m), exact};
}

}  // namespace

rational b_exactness_threshold(const rational& a, const bundle& e) {
  if (a.sign() <= 0)
    fail(errc::invalid_argument, "b_exactness_threshold needs a > 0, got a = " + a.str());
  if (e.filtration_length() == 1 && e.stability() != stability_flag::stable)
    return -a * e.slope_min();  // the min formula is exact on the whole ample range

  long n = e.rank();
  long r = e.has_blowup() ? e.blowup_rank() : 1;  // r drops out when the slopes coincide
  rational delta_slopes = e.slope_max() - e.slope_min();
  rational rho = rational(r) * rational(r + 1) / (rational(2) * rational(n + 1));
  rational ample_inf = -a * e.slope_min();

  // Exactness in u = b + a*mu_min is Q(u) >= 0 with
  // Q(u) = (n/2) u^2 + a (r*delta - 1) u + a^2 delta (rho*delta - 1).
  rational qa = rational(n, 2);
  rational qb = a * (rational(r) * delta_slopes - 1);
  rational qc = a * a * delta_slopes * (rho * delta_slopes - 1);

  rational disc = qb * qb - 4 * qa * qc;
  if (disc.sign() <= 0) return ample_inf;
  auto [root, exact] = sqrt_upper(disc);
  (void)exact;
  rational u_plus = (-qb + root) / (2 * qa);
  if (u_plus.sign() <= 0) return ample_inf;
  return u_plus + ample_inf;
}

std::vector<limit_point> limit_small_a(const rational& b, const bundle& e, int steps) {
  if (steps < 1) fail(errc::invalid_argument, "limit_small_a needs steps >= 1");
  std::vector<limit_point> out;
  rational a(1);
  for (int k = 1; k <= steps; ++k) {
    a /= 2;
    limit_point point;
    point.a = a;
    divisor_class l{a, b};
    if (is_ample(l, e)) {
      delta_report rep = delta_for(l, e);
      point.ample = true;
      point.lower = rep.lower;
      point.upper = rep.upper;
    }
    out.push_back(std::move(point));
  }
  return out;
}

}  // namespace pbd
