#include "pbdelta/combinatorics.hpp"

#include <string>

#include "pbdelta/error.hpp"

namespace pbd {

mpz_class binom(long n, long k) {
  if (n < 0) fail(errc::invalid_argument, "binom requires n >= 0, got n = " + std::to_string(n));
  if (k < 0 || k > n) return 0;
  mpz_class result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return result;
}

mpz_class multinom(long n, std::span<const long> parts) {
  if (n < 0) fail(errc::invalid_argument, "multinom requires n >= 0");
  long sum = 0;
  for (long p : parts) {
    if (p < 0) fail(errc::invalid_argument, "multinom parts must be nonnegative");
    sum += p;
  }
  if (sum != n) fail(errc::invalid_argument, "multinom parts must sum to n");
  mpz_class result = 1;
  long remaining = n;
  for (long p : parts) {
    result *= binom(remaining, p);
    remaining -= p;
  }
  return result;
}

identity_sides identity_main(long n, long r) {
  if (r < 1 || n < r + 1)
    fail(errc::invalid_argument, "identity_main requires 1 <= r <= n-1, got n = " +
                                     std::to_string(n) + ", r = " + std::to_string(r));
  mpz_class acc = 0;
  for (long c = r + 1; c <= n; ++c) {
    mpz_class term = binom(c - 2, r - 1) * binom(n + 1, c + 1);
    if ((c + r + 1) % 2 != 0) term = -term;
    acc += term;
  }
  rational rhs = rational(r) * rational(r + 1) / 2 + rational(n + 1) * (rational(n, 2) - rational(r));
  return {rational(acc), rhs};
}

identity_sides identity_aux(aux_identity kind, long n, long r) {
  mpz_class acc = 0;
  switch (kind) {
    case aux_identity::sum_is_n_minus_r:
      if (r < 1 || n < r + 2)
        fail(errc::invalid_argument, "sum_is_n_minus_r requires r >= 1 and n >= r+2");
      for (long c = r + 1; c <= n; ++c) {
        mpz_class term = binom(c - 2, r - 1) * binom(n, c);
        if ((c + r + 1) % 2 != 0) term = -term;
        acc += term;
      }
      return {rational(acc), rational(n - r)};
    case aux_identity::sum_is_one:
      if (r < 1 || n < r + 3)
        fail(errc::invalid_argument, "sum_is_one requires r >= 1 and n >= r+3");
      for (long c = r + 1; c <= n; ++c) {
        mpz_class term = binom(c - 2, r - 1) * binom(n - 1, c - 1);
        if ((c + r + 1) % 2 != 0) term = -term;
        acc += term;
      }
      return {rational(acc), rational(1)};
    case aux_identity::sum_is_zero:
      if (n < 1 || r < 0 || r > n)
        fail(errc::invalid_argument, "sum_is_zero requires n >= 1 and 0 <= r <= n");
      for (long c = r; c <= n; ++c) {
        mpz_class term = binom(c, r) * binom(n, c);
        if (c % 2 != 0) term = -term;
        acc += term;
      }
      return {rational(acc), rational(0)};
  }
  fail(errc::invalid_argument, "unknown identity kind");
}

}  // namespace pbd
