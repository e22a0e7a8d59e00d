#include "pbdelta/volume.hpp"

#include <array>
#include <string>

#include "pbdelta/combinatorics.hpp"
#include "pbdelta/error.hpp"

namespace pbd {

namespace {

void require_ample(const divisor_class& l, const bundle& e, const char* who) {
  if (!is_ample(l, e))
    fail(errc::not_ample, std::string(who) + " needs an ample class, but " + l.a.str() +
                              "*xi + " + l.b.str() + "*f is " +
                              cone_region_name(cone_position(l, e)));
}

}  // namespace

zariski_decomposition zariski_decompose(const rational& t, const bundle& e) {
  if (t > e.slope_max())
    fail(errc::not_pseff, "H - tF is not pseudoeffective for t = " + t.str() + " > mu_max = " +
                              e.slope_max().str());
  rational alpha(0);
  if (t > e.slope_min())
    alpha = (t - e.slope_min()) / (e.slope_max() - e.slope_min());
  return {t, alpha, {rational(1), -t, -alpha}};
}

rational volume_hyperplane_minus_fiber(const rational& t, const bundle& e) {
  if (t <= e.slope_min()) return rational(e.rank()) * (e.slope() - t);
  if (t >= e.slope_max()) return rational(0);
  zariski_decomposition z = zariski_decompose(t, e);
  return eval_power(z.positive, e);
}

rational volume_minus_fiber(const divisor_class& l, const rational& t, const bundle& e) {
  require_ample(l, e, "volume_minus_fiber");
  rational s = (t - l.b) / l.a;
  return pow(l.a, static_cast<unsigned long>(e.rank())) * volume_hyperplane_minus_fiber(s, e);
}

rational volume_minus_exceptional(const divisor_class& l, const rational& t, const bundle& e) {
  require_ample(l, e, "volume_minus_exceptional");
  if (t.sign() < 0)
    fail(errc::invalid_argument, "volume_minus_exceptional needs t >= 0, got " + t.str());
  if (t > l.a) {
    (void)e.blowup_rank();  // still reject bundles without exceptional data
    return rational(0);
  }
  return eval_power({l.a, l.b, -t}, e);
}

const char* axis_name(axis ax) { return ax == axis::fiber ? "fiber" : "exceptional"; }

namespace {

// Vol(H - sF) on the boundary chamber as a polynomial in s, assembled from
// the multinomial expansion of (H - sF - alpha(s)D)^n.
polynomial boundary_chamber_poly(const bundle& e) {
  long n = e.rank();
  rational delta = e.slope_max() - e.slope_min();
  polynomial alpha({-e.slope_min() / delta, rational(1) / delta});
  polynomial s({rational(0), rational(1)});

  polynomial acc;
  for (long i = 0; i <= n; ++i) {
    for (long j = 0; j + i <= n && j <= 1; ++j) {
      long k = n - i - j;
      rational t = triple_power(i, j, k, e);
      if (t.is_zero()) continue;
      std::array<long, 3> parts{i, j, k};
      polynomial term = polynomial::constant(rational(multinom(n, parts)) * t);
      if (j == 1) term = term * (-s);
      polynomial neg_alpha_pow = (-alpha).pow(static_cast<unsigned long>(k));
      acc += term * neg_alpha_pow;
    }
  }
  return acc;
}

}  // namespace

std::vector<chamber_polynomial> chamber_profile(const divisor_class& l, axis ax,
                                                const bundle& e) {
  require_ample(l, e, "chamber_profile");
  long n = e.rank();

  if (ax == axis::exceptional) {
    (void)e.blowup_rank();
    std::vector<rational> coef(n + 1, rational(0));
    for (long k = 0; k <= n; ++k) {
      rational c(0);
      for (long i = 0; i + k <= n; ++i) {
        long j = n - k - i;
        if (j > 1) continue;
        rational t = triple_power(i, j, k, e);
        if (t.is_zero()) continue;
        std::array<long, 3> parts{i, j, k};
        c += rational(multinom(n, parts)) * pow(l.a, static_cast<unsigned long>(i)) *
             pow(l.b, static_cast<unsigned long>(j)) * t;
      }
      if (k % 2 != 0) c = -c;
      coef[k] = c;
    }
    return {{rational(0), l.a, polynomial(std::move(coef))}};
  }

  rational an1 = pow(l.a, static_cast<unsigned long>(n - 1));
  polynomial nef_poly(
      {rational(n) * an1 * (l.a * e.slope() + l.b), -rational(n) * an1});
  rational wall = l.b + l.a * e.slope_min();
  rational tau = l.b + l.a * e.slope_max();

  if (e.slope_max() == e.slope_min()) return {{rational(0), tau, nef_poly}};

  polynomial boundary = boundary_chamber_poly(e)
                            .compose_affine(-l.b / l.a, rational(1) / l.a)
                            .scaled(pow(l.a, static_cast<unsigned long>(n)));
  return {{rational(0), wall, nef_poly}, {wall, tau, boundary}};
}

rational integral_volume(const divisor_class& l, axis ax, const bundle& e) {
  rational acc(0);
  for (const auto& chamber : chamber_profile(l, ax, e))
    acc += chamber.poly.integral(chamber.lo, chamber.hi);
  return acc;
}

rational pseff_threshold(const divisor_class& l, axis ax, const bundle& e) {
  require_ample(l, e, "pseff_threshold");
  if (ax == axis::exceptional) {
    (void)e.blowup_rank();
    return l.a;
  }
  return l.b + l.a * e.slope_max();
}

rational profile_value(const std::vector<chamber_polynomial>& profile, const rational& t) {
  if (t.sign() < 0) fail(errc::invalid_argument, "profile_value needs t >= 0");
  for (const auto& chamber : profile)
    if (t <= chamber.hi) return chamber.poly(t);
  return rational(0);
}

}  // namespace pbd
