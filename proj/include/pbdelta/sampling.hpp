#pragma once

#include <random>

#include "pbdelta/bundle.hpp"
#include "pbdelta/divisor.hpp"
#include "pbdelta/rational.hpp"

namespace pbd {

/// Deterministic instance generator for the verification suite. mt19937_64
/// with modulo draws is pinned by the standard, so a seed reproduces the
/// same instances on every platform.
class instance_sampler {
public:
  explicit instance_sampler(unsigned long long seed) : rng_(seed) {}

  long uniform(long lo, long hi);

  /// Rational with numerator in [num_lo, num_hi] and denominator in [1, den_hi].
  rational random_rational(long num_lo, long num_hi, long den_hi);

  /// Unstable bundle with a two-step filtration, rank in [2, max_rank],
  /// small degrees, mu_max > mu_min.
  bundle random_two_step(long max_rank);

  /// Ample class a*xi + b*f with a > 0 and b = margin - a*mu_min, margin > 0;
  /// all generating integers bounded by max_int.
  divisor_class random_ample(const bundle& e, long max_int = 20);

private:
  std::mt19937_64 rng_;
};

}  // namespace pbd
