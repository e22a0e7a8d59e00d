#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pbdelta/divisor.hpp"
#include "pbdelta/error.hpp"
#include "test_util.hpp"

using pbd::cone_position;
using pbd::cone_region;
using pbd::divisor_class;
using pbd::rational;

TEST_CASE("cone positions on the demo bundle (mu_max = 1, mu_min = 0)") {
  auto e = test_util::demo_two_step();
  auto at = [&](long a_num, long a_den, long b_num, long b_den) {
    return cone_position({rational(a_num, a_den), rational(b_num, b_den)}, e);
  };
  CHECK(at(1, 1, 1, 1) == cone_region::ample);
  CHECK(at(1, 1, 1, 1000) == cone_region::ample);
  CHECK(at(1, 1, 0, 1) == cone_region::nef_not_ample);   // b = -a mu_min
  CHECK(at(0, 1, 1, 1) == cone_region::nef_not_ample);   // fiber class
  CHECK(at(1, 1, -1, 2) == cone_region::pseff_not_nef);
  CHECK(at(1, 1, -1, 1) == cone_region::pseff_not_nef);  // b = -a mu_max
  CHECK(at(1, 1, -2, 1) == cone_region::not_pseff);
  CHECK(at(-1, 1, 5, 1) == cone_region::not_pseff);
  CHECK(at(0, 1, 0, 1) == cone_region::nef_not_ample);   // zero class sits on both boundaries
  CHECK(pbd::is_ample({rational(3), rational(1, 7)}, e));
  CHECK(pbd::is_nef({rational(1), rational(0)}, e));
  CHECK_FALSE(pbd::is_ample({rational(1), rational(0)}, e));
}

TEST_CASE("cone positions with negative mu_min") {
  // rank 2, degree -3, destabilizing degree -1: mu_max = -1, mu_min = -2
  auto e = test_util::two_step(0, 2, -3, 1, -1);
  CHECK(cone_position({rational(1), rational(3)}, e) == cone_region::ample);
  CHECK(cone_position({rational(1), rational(2)}, e) == cone_region::nef_not_ample);
  CHECK(cone_position({rational(1), rational(3, 2)}, e) == cone_region::pseff_not_nef);
  CHECK(cone_position({rational(1), rational(1)}, e) == cone_region::pseff_not_nef);
  CHECK(cone_position({rational(1), rational(1, 2)}, e) == cone_region::not_pseff);
}

TEST_CASE("intersection numbers on the projectivization") {
  auto e = test_util::two_step(1, 3, 2, 1, 2);
  CHECK(pbd::intersection_number(3, 0, e) == rational(2));  // xi^n = degree
  CHECK(pbd::intersection_number(2, 1, e) == rational(1));  // xi^(n-1) f = 1
  CHECK(pbd::intersection_number(1, 2, e) == rational(0));  // f^2 = 0
  CHECK(pbd::intersection_number(0, 3, e) == rational(0));
  CHECK_THROWS_AS(pbd::intersection_number(2, 2, e), pbd::error);
  CHECK_THROWS_AS(pbd::intersection_number(-1, 4, e), pbd::error);
}

TEST_CASE("top self-intersection expands binomially") {
  auto e = test_util::two_step(1, 3, 2, 1, 2);
  divisor_class l{rational(2), rational(-1, 3)};
  // (a xi + b f)^3 = a^3 d + 3 a^2 b
  CHECK(pbd::eval_top_power(l, e) == rational(8) * rational(2) + rational(12) * rational(-1, 3));
  CHECK(pbd::eval_top_power({rational(0), rational(5)}, e) == rational(0));
  CHECK(pbd::eval_top_power({rational(1), rational(0)}, e) == rational(2));
}

TEST_CASE("mixed pairing m . c^(n-1) extends the top power") {
  auto e = test_util::two_step(2, 4, 5, 2, 4);
  divisor_class l{rational(3, 2), rational(7, 5)};
  CHECK(pbd::pair_with_power(l, l, e) == pbd::eval_top_power(l, e));

  divisor_class m{rational(-2), rational(1, 3)};
  // bilinearity in the first slot
  divisor_class sum = l + m;
  CHECK(pbd::pair_with_power(sum, l, e) ==
        pbd::pair_with_power(l, l, e) + pbd::pair_with_power(m, l, e));
}

TEST_CASE("canonical class and the strictly semistable elliptic example") {
  // genus 1, rank 2, degree 0: K = -2 xi, so K . (a xi + b f) = -2b
  auto e = test_util::semistable(1, 2, 0, pbd::stability_flag::strictly_semistable);
  divisor_class k = pbd::canonical_class(e);
  CHECK(k.a == rational(-2));
  CHECK(k.b == rational(0));
  for (long a = 1; a <= 5; ++a)
    for (long b = 1; b <= 5; ++b) {
      divisor_class l{rational(a), rational(b)};
      CHECK(pbd::pair_with_power(k, l, e) == rational(-2 * b));
    }

  auto e2 = test_util::two_step(2, 3, 1, 1, 1);
  divisor_class k2 = pbd::canonical_class(e2);
  CHECK(k2.a == rational(-3));
  CHECK(k2.b == rational(2 * 2 - 2 + 1));
}

TEST_CASE("divisor class arithmetic") {
  divisor_class x{rational(1), rational(2)};
  divisor_class y{rational(3), rational(-1)};
  CHECK((x + y) == divisor_class{rational(4), rational(1)});
  CHECK((x - y) == divisor_class{rational(-2), rational(3)});
  CHECK((rational(1, 2) * y) == divisor_class{rational(3, 2), rational(-1, 2)});
}
