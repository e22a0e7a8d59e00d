#include "pbdelta/sampling.hpp"

#include "pbdelta/error.hpp"

namespace pbd {

long instance_sampler::uniform(long lo, long hi) {
  if (hi < lo) fail(errc::invalid_argument, "uniform needs lo <= hi");
  unsigned long long span = static_cast<unsigned long long>(hi - lo) + 1;
  return lo + static_cast<long>(rng_() % span);
}

rational instance_sampler::random_rational(long num_lo, long num_hi, long den_hi) {
  return rational(uniform(num_lo, num_hi), uniform(1, den_hi));
}

bundle instance_sampler::random_two_step(long max_rank) {
  long n = uniform(2, max_rank);
  long r = uniform(1, n - 1);
  long d1 = 0, d2 = 0;
  do {
    d1 = uniform(-8, 8);
    d2 = uniform(-8, 8);
  } while (d1 * (n - r) <= d2 * r);  // keep mu_max = d1/r > d2/(n-r) = mu_min

  bundle_data data;
  data.genus = uniform(0, 3);
  data.rank = n;
  data.degree = d1 + d2;
  data.step = hn_step{r, d1};
  data.stability = stability_flag::unstable_one_step;
  return bundle::validate(data);
}

divisor_class instance_sampler::random_ample(const bundle& e, long max_int) {
  rational a = random_rational(1, max_int, max_int);
  rational margin = random_rational(1, max_int, max_int);
  return {a, margin - a * e.slope_min()};
}

}  // namespace pbd
