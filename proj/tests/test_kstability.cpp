#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pbdelta/delta.hpp"
#include "pbdelta/error.hpp"
#include "pbdelta/kstability.hpp"
#include "test_util.hpp"

using pbd::divisor_class;
using pbd::polarization_class;
using pbd::rational;

namespace {

pbd::bundle elliptic_rank2() {
  return test_util::semistable(1, 2, 0, pbd::stability_flag::strictly_semistable);
}

}  // namespace

TEST_CASE("rank-2 degree-0 bundle over an elliptic curve: a >= b >= 1 all pass") {
  auto e = elliptic_rank2();
  CHECK(pbd::canonical_class(e) == divisor_class{rational(-2), rational(0)});
  for (long a = 1; a <= 5; ++a) {
    for (long b = 1; b <= a; ++b) {
      divisor_class l{rational(a), rational(b)};
      auto delta = pbd::delta_semistable(l, e);
      REQUIRE(delta.exact);
      CHECK(delta.lower == rational(2, a));
      CHECK(pbd::pair_with_power(pbd::canonical_class(e), l, e) == rational(-2 * b));

      auto rep = pbd::ksemistable_sufficient(l, delta.lower, e);
      CHECK(rep.passes);
      CHECK(rep.first_nef);
      CHECK(rep.second_nef);
      CHECK(rep.witness_first == divisor_class{rational(0), rational(2 * b, a)});
      CHECK(rep.witness_second == divisor_class{rational(2), rational(0)});
      CHECK_FALSE(rep.note.empty());  // both witnesses sit on the nef boundary
    }
  }
}

TEST_CASE("the passing set in delta_lower is the ray [2/a, infinity)") {
  auto e = elliptic_rank2();
  divisor_class l{rational(4), rational(3)};
  rational threshold(2, 4);

  CHECK(pbd::ksemistable_sufficient(l, threshold, e).passes);
  CHECK_FALSE(pbd::ksemistable_sufficient(l, threshold - rational(1, 100), e).passes);
  CHECK_FALSE(pbd::ksemistable_sufficient(l, rational(1, 1000), e).passes);

  auto above = pbd::ksemistable_sufficient(l, threshold + rational(1, 7), e);
  CHECK(above.passes);
  CHECK(above.note.empty());  // strictly inside the ample cone now

  // upward closed: once it passes it keeps passing
  bool seen_pass = false;
  for (long k = 1; k <= 40; ++k) {
    bool passes = pbd::ksemistable_sufficient(l, rational(k, 20), e).passes;
    if (seen_pass) CHECK(passes);
    if (passes) seen_pass = true;
  }
  CHECK(seen_pass);
}

TEST_CASE("first witness fails nef for an unstable bundle at its exact delta") {
  auto e = test_util::demo_two_step();
  divisor_class l{rational(1), rational(1)};
  auto delta = pbd::delta_bounds(l, e);
  REQUIRE(delta.exact);
  auto rep = pbd::ksemistable_sufficient(l, delta.lower, e);
  CHECK_FALSE(rep.first_nef);
  CHECK(rep.witness_first == divisor_class{rational(-5, 7), rational(2, 7)});
  CHECK_FALSE(rep.passes);
}

TEST_CASE("the criterion is sufficient, not necessary") {
  // stable bundle: every ample class is K-polystable, yet the witness test
  // can still fail when delta is small relative to -K
  auto e = test_util::semistable(2, 2, 1, pbd::stability_flag::stable);
  CHECK(pbd::classify_polarizations(e) == polarization_class::all_kpolystable);
  divisor_class l{rational(1), rational(1)};
  auto delta = pbd::delta_semistable(l, e);
  REQUIRE(delta.exact);
  REQUIRE(delta.lower == rational(4, 3));
  auto rep = pbd::ksemistable_sufficient(l, delta.lower, e);
  CHECK_FALSE(rep.passes);
}

TEST_CASE("input validation") {
  auto e = elliptic_rank2();
  divisor_class l{rational(2), rational(1)};
  CHECK_THROWS_AS(pbd::ksemistable_sufficient(l, rational(0), e), pbd::error);
  CHECK_THROWS_AS(pbd::ksemistable_sufficient(l, rational(-1), e), pbd::error);
  divisor_class not_ample{rational(0), rational(1)};
  CHECK_THROWS_AS(pbd::ksemistable_sufficient(not_ample, rational(1), e), pbd::error);
  try {
    pbd::ksemistable_sufficient(l, rational(-1), e);
  } catch (const pbd::error& err) {
    CHECK(err.code() == pbd::errc::invalid_argument);
  }
}

TEST_CASE("classification of all ample polarizations by stability type") {
  using sf = pbd::stability_flag;
  CHECK(pbd::classify_polarizations(test_util::semistable(3, 2, 1, sf::stable)) ==
        polarization_class::all_kpolystable);
  CHECK(pbd::classify_polarizations(test_util::semistable(1, 3, 0, sf::polystable)) ==
        polarization_class::all_kpolystable);
  CHECK(pbd::classify_polarizations(elliptic_rank2()) ==
        polarization_class::all_ksemistable_not_poly);
  CHECK(pbd::classify_polarizations(test_util::demo_two_step()) ==
        polarization_class::none_ksemistable);

  CHECK(std::string(pbd::polarization_class_name(polarization_class::all_kpolystable)) ==
        "all_ample_kpolystable");
  CHECK(std::string(pbd::polarization_class_name(
            polarization_class::all_ksemistable_not_poly)) ==
        "all_ample_ksemistable_not_polystable");
  CHECK(std::string(pbd::polarization_class_name(polarization_class::none_ksemistable)) ==
        "none_ksemistable");
}
