#include "pbdelta/blowup.hpp"

#include <array>
#include <string>
#include <vector>

#include "pbdelta/combinatorics.hpp"
#include "pbdelta/error.hpp"

namespace pbd {

rational triple_power(long h_exp, long f_exp, long e_exp, const bundle& e) {
  long n = e.rank();
  if (h_exp < 0 || f_exp < 0 || e_exp < 0 || h_exp + f_exp + e_exp != n)
    fail(errc::invalid_argument,
         "triple_power needs nonnegative exponents summing to " + std::to_string(n));
  long r = e.blowup_rank();

  if (f_exp >= 2) return rational(0);
  if (e_exp == 0)
    return f_exp == 0 ? rational(e.degree()) : rational(1);

  // Pushing down through the exceptional divisor kills everything until the
  // e-exponent reaches the subbundle rank; binom's out-of-range zeros make
  // the two cases below cover 1 <= e_exp < r as well.
  if (f_exp == 0) {
    rational term1 = rational(binom(e_exp - 1, r - 1)) * rational(n - r) * e.slope_min();
    rational term2 = rational(binom(e_exp - 1, r)) * rational(r) * e.slope_max();
    if ((1 + r) % 2 != 0) term1 = -term1;
    if (r % 2 != 0) term2 = -term2;
    return term1 + term2;
  }
  rational term = rational(binom(e_exp - 1, r - 1));
  if ((r + 1) % 2 != 0) term = -term;
  return term;
}

rational eval_power(const blowup_class& c, const bundle& e) {
  long n = e.rank();
  std::vector<rational> hp(n + 1), fp(n + 1), ep(n + 1);
  hp[0] = fp[0] = ep[0] = rational(1);
  for (long k = 1; k <= n; ++k) {
    hp[k] = hp[k - 1] * c.h;
    fp[k] = fp[k - 1] * c.f;
    ep[k] = ep[k - 1] * c.e;
  }

  rational acc(0);
  for (long i = 0; i <= n; ++i) {
    for (long j = 0; j + i <= n && j <= 1; ++j) {
      long k = n - i - j;
      rational t = triple_power(i, j, k, e);
      if (t.is_zero()) continue;
      std::array<long, 3> parts{i, j, k};
      acc += rational(multinom(n, parts)) * hp[i] * fp[j] * ep[k] * t;
    }
  }
  return acc;
}

}  // namespace pbd
