#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "pbdelta/blowup.hpp"
#include "pbdelta/error.hpp"
#include "pbdelta/verify.hpp"
#include "test_util.hpp"

using pbd::verify_options;

namespace {

const std::vector<std::string> expected_items = {
    "identity-main",
    "identity-aux-n-minus-r",
    "identity-aux-one",
    "identity-aux-zero",
    "binomial-pascal",
    "segre-vs-case-table",
    "pullback-top-power",
    "fiber-closed-form-vs-integral",
    "exceptional-closed-form-vs-integral",
    "chamber-wall-continuity",
    "threshold-vanishing",
    "degenerate-slopes-collapse",
    "scaling-covariance",
};

}  // namespace

TEST_CASE("a small verification run passes every item") {
  verify_options options;
  options.nmax = 20;
  options.instances = 15;
  auto items = pbd::run_verification(options);
  REQUIRE(items.size() == expected_items.size());
  for (size_t i = 0; i < items.size(); ++i) {
    CAPTURE(items[i].name);
    CHECK(items[i].name == expected_items[i]);
    CHECK(items[i].pass);
    CHECK(items[i].detail.find("0 failures") != std::string::npos);
  }
  CHECK(pbd::all_pass(items));
}

TEST_CASE("same options give the identical report twice") {
  verify_options options;
  options.nmax = 12;
  options.instances = 10;
  options.seed = 777;
  auto first = pbd::run_verification(options);
  auto second = pbd::run_verification(options);
  REQUIRE(first.size() == second.size());
  for (size_t i = 0; i < first.size(); ++i) {
    CHECK(first[i].name == second[i].name);
    CHECK(first[i].pass == second[i].pass);
    CHECK(first[i].detail == second[i].detail);
  }
}

TEST_CASE("all_pass notices a single failure") {
  std::vector<pbd::verify_item> items = {{"a", true, ""}, {"b", true, ""}};
  CHECK(pbd::all_pass(items));
  items[1].pass = false;
  CHECK_FALSE(pbd::all_pass(items));
  CHECK_FALSE(pbd::all_pass({}));  // an empty report never counts as a pass
}

TEST_CASE("verification table mirrors the items") {
  verify_options options;
  options.nmax = 8;
  options.instances = 4;
  auto items = pbd::run_verification(options);
  auto table = pbd::verification_table(items);
  REQUIRE(table.columns == std::vector<std::string>{"item", "pass", "detail"});
  REQUIRE(table.rows.size() == items.size());
  for (size_t i = 0; i < items.size(); ++i) {
    CHECK(table.rows[i][0] == items[i].name);
    CHECK(table.rows[i][1] == (items[i].pass ? "true" : "false"));
    CHECK(table.rows[i][2] == items[i].detail);
  }
}

TEST_CASE("option validation") {
  verify_options options;
  options.nmax = 0;
  CHECK_THROWS_AS(pbd::run_verification(options), pbd::error);
  options = verify_options{};
  options.instances = -3;
  CHECK_THROWS_AS(pbd::run_verification(options), pbd::error);
}

TEST_CASE("the exported Segre route stays in lockstep on a fresh sample") {
  // belt and braces on top of the blowup tests: a couple of fixed bundles
  auto e1 = test_util::two_step(0, 5, 3, 2, 2);
  auto e2 = test_util::two_step(2, 4, -2, 3, 0);
  for (const auto& e : {e1, e2}) {
    long n = e.rank();
    for (long i = 0; i <= n; ++i)
      for (long j = 0; i + j <= n; ++j) {
        long c = n - i - j;
        CHECK(pbd::segre_triple_power(i, j, c, e) == pbd::triple_power(i, j, c, e));
      }
  }
}
