#pragma once

#include <optional>
#include <vector>

#include "pbdelta/bundle.hpp"
#include "pbdelta/delta.hpp"
#include "pbdelta/table.hpp"

namespace pbd {

struct scan_range {
  rational lo;
  rational hi;
  rational step;
};

struct scan_config {
  scan_range a_range;
  scan_range b_range;
  unsigned threads = 1;  // 0 means hardware concurrency
};

struct scan_row {
  rational a;
  rational b;
  bool ample = false;
  std::optional<delta_report> report;
  bool ks_pass = false;
};

/// Grid scan over (a, b) in row-major order (a outer, b inner). Non-ample
/// points are kept as skipped rows. The result is a pure function of bundle
/// and grid; the thread count only partitions the work.
std::vector<scan_row> run_scan(const bundle& e, const scan_config& config);

/// Columns: a, b, status, lower, upper, exact, branch, ks_pass. Skipped rows
/// carry status "skipped" and empty cells after b.
string_table scan_table(const bundle& e, const scan_config& config);

}  // namespace pbd
