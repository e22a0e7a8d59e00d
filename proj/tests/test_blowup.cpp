#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pbdelta/blowup.hpp"
#include "pbdelta/divisor.hpp"
#include "pbdelta/error.hpp"
#include "pbdelta/sampling.hpp"
#include "pbdelta/verify.hpp"
#include "test_util.hpp"

using pbd::blowup_class;
using pbd::eval_power;
using pbd::rational;
using pbd::triple_power;

TEST_CASE("case table on a rank-3 bundle (r = 1, mu_max = 1, mu_min = 0)") {
  // degree 1 with a destabilizing line subbundle of degree 1
  auto e = test_util::two_step(0, 3, 1, 1, 1);

  // pullback classes reproduce the downstairs table
  CHECK(triple_power(3, 0, 0, e) == rational(1));
  CHECK(triple_power(2, 1, 0, e) == rational(1));
  CHECK(triple_power(1, 2, 0, e) == rational(0));
  CHECK(triple_power(0, 3, 0, e) == rational(0));

  // f-exponent >= 2 kills everything
  CHECK(triple_power(0, 2, 1, e) == rational(0));

  // exceptional powers: r = 1 so every e_exp >= 1 contributes
  CHECK(triple_power(1, 1, 1, e) == rational(1));     // H F D
  CHECK(triple_power(2, 0, 1, e) == rational(0));     // H^2 D
  CHECK(triple_power(1, 0, 2, e) == rational(-1));    // H D^2: -C(1,1) d1 = -1
  CHECK(triple_power(0, 1, 2, e) == rational(1));     // F D^2: (-1)^(r+1) C(1,0) = 1
  CHECK(triple_power(0, 0, 3, e) == rational(-2));    // D^3: 0 - C(2,1) d1 = -2
}

TEST_CASE("exponent validation and missing blowup data") {
  auto e = test_util::two_step(0, 3, 1, 1, 1);
  CHECK_THROWS_AS(triple_power(1, 1, 0, e), pbd::error);   // sum != n
  CHECK_THROWS_AS(triple_power(-1, 2, 2, e), pbd::error);

  auto stable = test_util::semistable(2, 3, 1, pbd::stability_flag::stable);
  try {
    triple_power(3, 0, 0, stable);
    FAIL("expected no_blowup");
  } catch (const pbd::error& err) {
    CHECK(err.code() == pbd::errc::no_blowup);
  }
}

TEST_CASE("case table agrees with the literal Segre expansion everywhere") {
  pbd::instance_sampler sampler(91);
  for (int trial = 0; trial < 60; ++trial) {
    auto e = sampler.random_two_step(7);
    long n = e.rank();
    for (long i = 0; i <= n; ++i)
      for (long j = 0; i + j <= n; ++j) {
        long k = n - i - j;
        CAPTURE(n);
        CAPTURE(i);
        CAPTURE(j);
        CHECK(triple_power(i, j, k, e) == pbd::segre_triple_power(i, j, k, e));
      }
  }
}

TEST_CASE("negative control: a sign flip in the Segre route is detected") {
  auto e = test_util::two_step(0, 3, 1, 1, 1);
  // r = 1 makes (-1)^(r+1) = +1; flipping it would negate H F D
  CHECK(triple_power(1, 1, 1, e) != -pbd::segre_triple_power(1, 1, 1, e));
}

TEST_CASE("pullback top power matches the downstairs computation") {
  pbd::instance_sampler sampler(17);
  for (int trial = 0; trial < 40; ++trial) {
    auto e = sampler.random_two_step(6);
    auto l = sampler.random_ample(e);
    CHECK(eval_power({l.a, l.b, rational(0)}, e) == pbd::eval_top_power(l, e));
  }
}

TEST_CASE("declared sub_rank gives the equal-slope blowup table") {
  // rank 4, degree 8, sub_rank 2: mu_max = mu_min = mu = 2
  auto e = test_util::semistable(0, 4, 8, pbd::stability_flag::strictly_semistable, 2);
  CHECK(triple_power(4, 0, 0, e) == rational(8));
  CHECK(triple_power(3, 1, 0, e) == rational(1));
  // r = 2: D and D^2 with too few factors vanish against the center
  CHECK(triple_power(3, 0, 1, e) == rational(0));
  CHECK(triple_power(2, 1, 1, e) == rational(0));
  // c = r = 2, j = 1: (-1)^(r+1) C(1,1) = -1
  CHECK(triple_power(1, 1, 2, e) == rational(-1));
  // the Segre route applies verbatim with equal slopes
  for (long i = 0; i <= 4; ++i)
    for (long j = 0; i + j <= 4; ++j)
      CHECK(triple_power(i, j, 4 - i - j, e) == pbd::segre_triple_power(i, j, 4 - i - j, e));
}

TEST_CASE("eval_power expands multinomially") {
  auto e = test_util::two_step(0, 2, 1, 1, 1);
  // (H - tF - sD)^2 on the rank-2 demo bundle, evaluated symbolically by hand:
  // H^2 = 1, HF = 1, HD = 0, F D = 1, D^2 = -1, F^2 = 0
  // => 1 - 2t - 2s(FD)(-1)... expanded: H^2 - 2tHF - 2sHD + t^2F^2 + 2tsFD + s^2D^2
  //  = 1 - 2t + 2ts - s^2
  for (long tn = 0; tn <= 3; ++tn)
    for (long sn = 0; sn <= 3; ++sn) {
      rational t(tn, 3), s(sn, 3);
      blowup_class c{rational(1), -t, -s};
      CHECK(eval_power(c, e) == rational(1) - 2 * t + 2 * t * s - s * s);
    }
}
