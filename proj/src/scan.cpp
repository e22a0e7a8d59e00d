#include "pbdelta/scan.hpp"

#include <thread>

#include "pbdelta/error.hpp"
#include "pbdelta/kstability.hpp"

namespace pbd {

namespace {

std::vector<rational> grid_values(const scan_range& range, const char* which) {
  if (range.step.sign() <= 0)
    fail(errc::invalid_argument, std::string(which) + " range needs step > 0");
  if (range.hi < range.lo)
    fail(errc::invalid_argument, std::string(which) + " range needs lo <= hi");
  std::vector<rational> values;
  for (rational v = range.lo; v <= range.hi; v += range.step) values.push_back(v);
  return values;
}

void fill_row(scan_row& row, const bundle& e) {
  divisor_class l{row.a, row.b};
  if (!is_ample(l, e)) return;
  row.ample = true;
  row.report = delta_for(l, e);
  row.ks_pass = ksemistable_sufficient(l, row.report->lower, e).passes;
}

}  // namespace

std::vector<scan_row> run_scan(const bundle& e, const scan_config& config) {
  std::vector<rational> as = grid_values(config.a_range, "a");
  std::vector<rational> bs = grid_values(config.b_range, "b");

  std::vector<scan_row> rows(as.size() * bs.size());
  for (size_t i = 0; i < as.size(); ++i)
    for (size_t j = 0; j < bs.size(); ++j) {
      scan_row& row = rows[i * bs.size() + j];
      row.a = as[i];
      row.b = bs[j];
    }

  unsigned threads = config.threads;
  if (threads == 0) threads = std::thread::hardware_concurrency();
  if (threads == 0) threads = 1;
  if (threads > rows.size()) threads = static_cast<unsigned>(rows.size());
  if (threads <= 1) {
    for (auto& row : rows) fill_row(row, e);
    return rows;
  }

  std::vector<std::thread> workers;
  workers.reserve(threads);
  for (unsigned w = 0; w < threads; ++w) {
    workers.emplace_back([&, w] {
      for (size_t idx = w; idx < rows.size(); idx += threads) fill_row(rows[idx], e);
    });
  }
  for (auto& worker : workers) worker.join();
  return rows;
}

string_table scan_table(const bundle& e, const scan_config& config) {
  string_table table;
  table.columns = {"a", "b", "status", "lower", "upper", "exact", "branch", "ks_pass"};
  for (const auto& row : run_scan(e, config)) {
    if (!row.ample) {
      table.rows.push_back({row.a.str(), row.b.str(), "skipped", "", "", "", "", ""});
      continue;
    }
    const delta_report& rep = *row.report;
    table.rows.push_back({row.a.str(), row.b.str(), "ok", rep.lower.str(), rep.upper.str(),
                          rep.exact ? "true" : "false", branch_name(rep.branch),
                          row.ks_pass ? "true" : "false"});
  }
  return table;
}

}  // namespace pbd
