#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pbdelta/bundle.hpp"
#include "pbdelta/divisor.hpp"
#include "pbdelta/rational.hpp"

namespace pbd {

enum class delta_branch {
  fiber,             // bound attained / governed by the fiber divisor
  exceptional,       // governed by the exceptional divisor
  projective_space,  // semistable case, the n/a term binds
  indeterminate,
};

const char* branch_name(delta_branch branch);

struct delta_report {
  rational s_fiber;
  std::optional<rational> s_exceptional;
  std::optional<rational> s1;
  std::optional<rational> s2;
  rational lower;
  rational upper;
  bool exact = false;
  delta_branch branch = delta_branch::indeterminate;
  std::string note;
};

/// Closed form for the expected vanishing order along a fiber, parametrized
/// by the slope data; with mu_max = mu_min = mu it degenerates to (a*mu+b)/2.
rational s_fiber_formula(long n, long r, const rational& mu_max, const rational& mu_min,
                         const rational& a, const rational& b);

/// Closed form for the expected vanishing order along the exceptional
/// divisor; with equal slopes it degenerates to r*a/n.
rational s_exceptional_formula(long n, long r, const rational& mu_max, const rational& mu_min,
                               const rational& a, const rational& b);

rational s_fiber(const divisor_class& l, const bundle& e);
rational s_exceptional(const divisor_class& l, const bundle& e);

/// The three comparison thresholds of the two-step case: s1 = r/S(L,D),
/// s2 = n(a*mu+b)/(a(a*mu_max+b)), and the fiber route's own bound
/// 1/S(L,F) <= n(a*mu+b)/(a(a*mu_min+b)).
struct threshold_set {
  rational s1;
  rational s2;
  rational fiber_upper;
};

threshold_set az_thresholds(const divisor_class& l, const bundle& e);

/// Two-step case: lower = min(1/S_F, s2), upper = min(1/S_F, s1), exact
/// (with value 1/S_F) iff 1/S_F <= s2.
delta_report delta_bounds(const divisor_class& l, const bundle& e);

/// Semistable case: candidate value min(2/(a*mu+b), n/a); exact for strictly
/// semistable and polystable bundles, an upper/lower bound pair for stable
/// ones unless the fiber term already wins.
delta_report delta_semistable(const divisor_class& l, const bundle& e);

/// Dispatches on the filtration length.
delta_report delta_for(const divisor_class& l, const bundle& e);

/// Smallest b (as an exact value or a rational upper bound within 2^-32)
/// such that the delta report is exact for every ample (a, b') with b' >= b.
/// Returns -a*mu_min (the ample infimum) when exactness holds on the whole
/// ample range.
rational b_exactness_threshold(const rational& a, const bundle& e);

struct limit_point {
  rational a;
  bool ample = false;
  rational lower;
  rational upper;
};

/// Bounds for L = (2^-k) * xi + b * f, k = 1..steps; rows where L is not yet
/// ample carry ample = false and no bounds.
std::vector<limit_point> limit_small_a(const rational& b, const bundle& e, int steps);

}  // namespace pbd
