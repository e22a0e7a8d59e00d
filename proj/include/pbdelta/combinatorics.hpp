#pragma once

#include <gmpxx.h>

#include <span>

#include "pbdelta/rational.hpp"

namespace pbd {

/// Binomial coefficient with the out-of-range convention required by the
/// intersection formulas: n must be >= 0, and any k outside [0, n] gives 0.
mpz_class binom(long n, long k);

/// Multinomial coefficient n! / (parts[0]! parts[1]! ...). Parts must be
/// nonnegative and sum to n.
mpz_class multinom(long n, std::span<const long> parts);

struct identity_sides {
  rational lhs;
  rational rhs;
};

/// Alternating-sum identity underpinning the single-chamber volume integral:
///   sum_{c=r+1}^{n} C(c-2, r-1) C(n+1, c+1) (-1)^(c+r+1)
///     = r(r+1)/2 + (n+1)(n/2 - r),  for 1 <= r <= n-1.
/// Both sides are returned so callers can cross-check rather than trust.
identity_sides identity_main(long n, long r);

enum class aux_identity {
  sum_is_n_minus_r,  // sum_{c=r+1}^{n} C(c-2,r-1) C(n,c)   (-1)^(c+r+1) = n-r   (n >= r+2)
  sum_is_one,        // sum_{c=r+1}^{n} C(c-2,r-1) C(n-1,c-1)(-1)^(c+r+1) = 1    (n >= r+3)
  sum_is_zero,       // sum_{c=r}^{n}   C(c,r)     C(n,c)   (-1)^c        = 0    (r < n)
};

identity_sides identity_aux(aux_identity kind, long n, long r);

}  // namespace pbd
