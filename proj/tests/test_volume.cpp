#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pbdelta/delta.hpp"
#include "pbdelta/error.hpp"
#include "pbdelta/sampling.hpp"
#include "pbdelta/volume.hpp"
#include "test_util.hpp"

using pbd::axis;
using pbd::chamber_profile;
using pbd::divisor_class;
using pbd::rational;

TEST_CASE("Zariski negative part on the demo bundle") {
  auto e = test_util::demo_two_step();
  CHECK(pbd::zariski_decompose(rational(-1), e).alpha == rational(0));
  CHECK(pbd::zariski_decompose(rational(0), e).alpha == rational(0));
  CHECK(pbd::zariski_decompose(rational(1, 2), e).alpha == rational(1, 2));
  CHECK(pbd::zariski_decompose(rational(1), e).alpha == rational(1));
  auto z = pbd::zariski_decompose(rational(1, 3), e);
  CHECK(z.positive.h == rational(1));
  CHECK(z.positive.f == rational(-1, 3));
  CHECK(z.positive.e == rational(-1, 3));
  CHECK_THROWS_AS(pbd::zariski_decompose(rational(2), e), pbd::error);
  try {
    pbd::zariski_decompose(rational(3, 2), e);
  } catch (const pbd::error& err) {
    CHECK(err.code() == pbd::errc::not_pseff);
  }
}

TEST_CASE("Vol(H - tF) is piecewise with the expected chamber forms") {
  auto e = test_util::demo_two_step();  // n = 2, mu = 1/2
  // nef chamber: 2(1/2 - t)
  CHECK(pbd::volume_hyperplane_minus_fiber(rational(-1), e) == rational(3));
  CHECK(pbd::volume_hyperplane_minus_fiber(rational(0), e) == rational(1));
  // boundary chamber: (1 - t)^2
  CHECK(pbd::volume_hyperplane_minus_fiber(rational(1, 2), e) == rational(1, 4));
  CHECK(pbd::volume_hyperplane_minus_fiber(rational(3, 4), e) == rational(1, 16));
  CHECK(pbd::volume_hyperplane_minus_fiber(rational(1), e) == rational(0));
  CHECK(pbd::volume_hyperplane_minus_fiber(rational(7), e) == rational(0));
}

TEST_CASE("volume along the fiber direction scales as degree n") {
  auto e = test_util::two_step(1, 3, 1, 1, 1);
  divisor_class l{rational(1), rational(1)};
  divisor_class l2{rational(2), rational(2)};
  for (long num = 0; num <= 8; ++num) {
    rational t(num, 4);
    CHECK(pbd::volume_minus_fiber(l2, 2 * t, e) ==
          rational(8) * pbd::volume_minus_fiber(l, t, e));
  }
}

TEST_CASE("volume along the exceptional direction on the worked rank-3 example") {
  auto e = test_util::two_step(0, 3, 1, 1, 1);
  divisor_class l{rational(1), rational(1)};
  // Q(t) = 4 - 6t + 2t^3 on [0, 1]
  CHECK(pbd::volume_minus_exceptional(l, rational(0), e) == rational(4));
  CHECK(pbd::volume_minus_exceptional(l, rational(1, 2), e) == rational(5, 4));
  CHECK(pbd::volume_minus_exceptional(l, rational(1), e) == rational(0));
  CHECK(pbd::volume_minus_exceptional(l, rational(2), e) == rational(0));
  CHECK_THROWS_AS(pbd::volume_minus_exceptional(l, rational(-1, 2), e), pbd::error);

  auto profile = chamber_profile(l, axis::exceptional, e);
  REQUIRE(profile.size() == 1);
  CHECK(profile[0].lo == rational(0));
  CHECK(profile[0].hi == rational(1));
  CHECK(profile[0].poly ==
        pbd::polynomial({rational(4), rational(-6), rational(0), rational(2)}));
  CHECK(pbd::integral_volume(l, axis::exceptional, e) == rational(3, 2));
}

TEST_CASE("fiber-direction profile of the demo bundle at L = xi + f") {
  auto e = test_util::demo_two_step();
  divisor_class l{rational(1), rational(1)};
  auto profile = chamber_profile(l, axis::fiber, e);
  REQUIRE(profile.size() == 2);
  CHECK(profile[0].lo == rational(0));
  CHECK(profile[0].hi == rational(1));  // wall at b + a mu_min
  CHECK(profile[1].hi == rational(2));  // tau = b + a mu_max
  CHECK(profile[0].poly == pbd::polynomial({rational(3), rational(-2)}));
  CHECK(profile[1].poly == pbd::polynomial({rational(4), rational(-4), rational(1)}));
  CHECK(pbd::integral_volume(l, axis::fiber, e) == rational(7, 3));
  CHECK(pbd::pseff_threshold(l, axis::fiber, e) == rational(2));
  CHECK(pbd::pseff_threshold(l, axis::exceptional, e) == rational(1));
}

TEST_CASE("profiles agree with pointwise volumes, joins and endpoints included") {
  pbd::instance_sampler sampler(2024);
  for (int trial = 0; trial < 30; ++trial) {
    auto e = sampler.random_two_step(6);
    auto l = sampler.random_ample(e);

    auto fiber_profile = chamber_profile(l, axis::fiber, e);
    rational tau = pbd::pseff_threshold(l, axis::fiber, e);
    CHECK(fiber_profile.front().lo == rational(0));
    CHECK(fiber_profile.back().hi == tau);
    for (size_t c = 0; c + 1 < fiber_profile.size(); ++c) {
      CHECK(fiber_profile[c].hi == fiber_profile[c + 1].lo);
      CHECK(fiber_profile[c].poly(fiber_profile[c].hi) ==
            fiber_profile[c + 1].poly(fiber_profile[c].hi));
    }
    for (long num = 0; num <= 6; ++num) {
      rational t = tau * rational(num, 6);
      CHECK(pbd::profile_value(fiber_profile, t) == pbd::volume_minus_fiber(l, t, e));
    }
    CHECK(pbd::profile_value(fiber_profile, tau).is_zero());
    CHECK(pbd::profile_value(fiber_profile, tau + 1) == rational(0));

    auto exc_profile = chamber_profile(l, axis::exceptional, e);
    for (long num = 0; num <= 5; ++num) {
      rational t = l.a * rational(num, 5);
      CHECK(pbd::profile_value(exc_profile, t) == pbd::volume_minus_exceptional(l, t, e));
    }
    CHECK(exc_profile.back().poly(l.a).is_zero());
  }
}

TEST_CASE("volume at t = 0 is the top self-intersection") {
  pbd::instance_sampler sampler(7);
  for (int trial = 0; trial < 25; ++trial) {
    auto e = sampler.random_two_step(6);
    auto l = sampler.random_ample(e);
    rational vol = pbd::eval_top_power(l, e);
    CHECK(pbd::volume_minus_fiber(l, rational(0), e) == vol);
    CHECK(pbd::volume_minus_exceptional(l, rational(0), e) == vol);
    CHECK(vol.sign() > 0);
  }
}

TEST_CASE("semistable bundles have a single nef chamber on the fiber axis") {
  auto e = test_util::semistable(1, 2, 0, pbd::stability_flag::strictly_semistable);
  divisor_class l{rational(2), rational(3)};
  auto profile = chamber_profile(l, axis::fiber, e);
  REQUIRE(profile.size() == 1);
  CHECK(profile[0].hi == rational(3));  // tau = b + a mu
  CHECK(profile[0].poly == pbd::polynomial({rational(12), rational(-4)}));
  CHECK(pbd::integral_volume(l, axis::fiber, e) == rational(18));
  // 2 S(L, F) Vol = integral: S = (a mu + b)/2 = 3/2, Vol = 12
  CHECK(rational(3, 2) * rational(12) == rational(18));

  // no exceptional direction without sub_rank
  CHECK_THROWS_AS(chamber_profile(l, axis::exceptional, e), pbd::error);

  auto with_sub = test_util::semistable(1, 2, 0, pbd::stability_flag::strictly_semistable, 1);
  auto exc = chamber_profile(l, axis::exceptional, with_sub);
  REQUIRE(exc.size() == 1);
  CHECK(exc[0].hi == rational(2));
  CHECK(pbd::integral_volume(l, axis::exceptional, with_sub) ==
        pbd::s_exceptional(l, with_sub) * rational(12));
}

TEST_CASE("non-ample classes are rejected") {
  auto e = test_util::demo_two_step();
  divisor_class nef_only{rational(1), rational(0)};
  CHECK_THROWS_AS(pbd::volume_minus_fiber(nef_only, rational(0), e), pbd::error);
  CHECK_THROWS_AS(chamber_profile(nef_only, axis::fiber, e), pbd::error);
  try {
    pbd::integral_volume(nef_only, axis::fiber, e);
  } catch (const pbd::error& err) {
    CHECK(err.code() == pbd::errc::not_ample);
  }
}
