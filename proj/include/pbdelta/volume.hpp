#pragma once

#include <vector>

#include "pbdelta/blowup.hpp"
#include "pbdelta/bundle.hpp"
#include "pbdelta/divisor.hpp"
#include "pbdelta/polynomial.hpp"
#include "pbdelta/rational.hpp"

namespace pbd {

/// Negative-part data of H - tF on the blowup: positive part
/// P(t) = H - tF - alpha(t) D with
///   alpha(t) = 0                              for t <= mu_min,
///   alpha(t) = (t - mu_min)/(mu_max - mu_min) for mu_min <= t <= mu_max.
/// Beyond mu_max the class leaves the pseudoeffective cone.
struct zariski_decomposition {
  rational t;
  rational alpha;
  blowup_class positive;
};

zariski_decomposition zariski_decompose(const rational& t, const bundle& e);

/// Vol(H - tF): n(mu - t) on the nef chamber, the positive-part top power on
/// the boundary chamber, 0 at and beyond mu_max.
rational volume_hyperplane_minus_fiber(const rational& t, const bundle& e);

/// Vol(L - tF) for ample L = (a, b), via the scaling Vol(L - tF) =
/// a^n Vol(H - sF) with s = (t - b)/a.
rational volume_minus_fiber(const divisor_class& l, const rational& t, const bundle& e);

/// Vol(L - tD) for ample L on a bundle with exceptional data; polynomial on
/// [0, a], zero beyond, rejected for t < 0.
rational volume_minus_exceptional(const divisor_class& l, const rational& t, const bundle& e);

enum class axis { fiber, exceptional };

const char* axis_name(axis ax);

/// One polynomial chamber of a volume profile: vol(t) = poly(t) on [lo, hi].
struct chamber_polynomial {
  rational lo;
  rational hi;
  polynomial poly;
};

/// Piecewise-polynomial description of t -> Vol(L - t*axis) on [0, tau].
/// Fiber axis: one chamber when the slopes coincide, otherwise the nef
/// chamber [0, b + a*mu_min] and the boundary chamber up to tau.
/// Exceptional axis: a single chamber [0, a].
std::vector<chamber_polynomial> chamber_profile(const divisor_class& l, axis ax, const bundle& e);

/// Exact integral of the volume profile from 0 to tau.
rational integral_volume(const divisor_class& l, axis ax, const bundle& e);

/// tau: b + a*mu_max on the fiber axis, a on the exceptional axis.
rational pseff_threshold(const divisor_class& l, axis ax, const bundle& e);

/// Evaluates a profile at t >= 0 (zero beyond its last chamber).
rational profile_value(const std::vector<chamber_polynomial>& profile, const rational& t);

}  // namespace pbd
