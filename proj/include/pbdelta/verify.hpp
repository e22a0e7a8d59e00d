#pragma once

#include <string>
#include <vector>

#include "pbdelta/bundle.hpp"
#include "pbdelta/rational.hpp"
#include "pbdelta/table.hpp"

namespace pbd {

struct verify_options {
  long nmax = 50;                     // upper bound for the identity sweeps
  unsigned long long seed = 20240817; // instance generator seed
  int instances = 100;                // randomized cross-check count
};

struct verify_item {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Full self-check: combinatorial identity sweeps, closed forms against the
/// integral oracle, the intersection table against a literal Segre-class
/// expansion, chamber continuity, threshold vanishing, degenerate-slope
/// collapses and scaling covariance.
std::vector<verify_item> run_verification(const verify_options& options);

bool all_pass(const std::vector<verify_item>& items);

/// Columns: item, pass, detail.
string_table verification_table(const std::vector<verify_item>& items);

/// Literal Segre-expansion route to the blowup intersection numbers,
/// published so callers can cross-check triple_power independently.
rational segre_triple_power(long h_exp, long f_exp, long e_exp, const bundle& e);

}  // namespace pbd
