// Command-line front end; all computation goes through the C API in pbdelta.h.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pbdelta.h"

namespace {

using nlohmann::json;

struct unique_str {
  char* p = nullptr;
  unique_str() = default;
  explicit unique_str(char* raw) : p(raw) {}
  unique_str(const unique_str&) = delete;
  unique_str& operator=(const unique_str&) = delete;
  ~unique_str() { pbd_string_free(p); }
  bool ok() const { return p != nullptr; }
  std::string str() const { return p ? std::string(p) : std::string(); }
};

struct bundle_handle {
  pbd_bundle* p = nullptr;
  ~bundle_handle() { pbd_bundle_free(p); }
};

struct report_handle {
  pbd_report* p = nullptr;
  ~report_handle() { pbd_report_free(p); }
};

struct profile_handle {
  pbd_profile* p = nullptr;
  ~profile_handle() { pbd_profile_free(p); }
};

struct table_handle {
  pbd_table* p = nullptr;
  ~table_handle() { pbd_table_free(p); }
};

std::string take_message(char* errmsg) {
  if (!errmsg) return "unknown error";
  std::string out(errmsg);
  pbd_string_free(errmsg);
  return out;
}

int input_error(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return 2;
}

int emit(const std::string& output_path, const std::string& content) {
  if (output_path.empty()) {
    std::cout << content;
    return 0;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) return input_error("cannot open output file '" + output_path + "'");
  out << content;
  if (!out) return input_error("failed writing '" + output_path + "'");
  return 0;
}

std::string csv_escape(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string table_to_csv(const pbd_table* table, const std::string& preamble = "") {
  std::ostringstream out;
  out << preamble;
  size_t rows = pbd_table_rows(table), cols = pbd_table_cols(table);
  for (size_t c = 0; c < cols; ++c) {
    unique_str name(pbd_table_column_name(table, c));
    out << (c ? "," : "") << csv_escape(name.str());
  }
  out << "\n";
  for (size_t r = 0; r < rows; ++r) {
    for (size_t c = 0; c < cols; ++c) {
      unique_str cell(pbd_table_cell(table, r, c));
      out << (c ? "," : "") << csv_escape(cell.str());
    }
    out << "\n";
  }
  return out.str();
}

json table_to_json_rows(const pbd_table* table) {
  json rows = json::array();
  size_t nrows = pbd_table_rows(table), cols = pbd_table_cols(table);
  std::vector<std::string> names(cols);
  for (size_t c = 0; c < cols; ++c) {
    unique_str name(pbd_table_column_name(table, c));
    names[c] = name.str();
  }
  for (size_t r = 0; r < nrows; ++r) {
    json row = json::object();
    for (size_t c = 0; c < cols; ++c) {
      unique_str cell(pbd_table_cell(table, r, c));
      row[names[c]] = cell.str();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

const char* branch_label(pbd_branch branch) {
  switch (branch) {
    case PBD_BRANCH_FIBER: return "fiber";
    case PBD_BRANCH_EXCEPTIONAL: return "exceptional";
    case PBD_BRANCH_PROJECTIVE_SPACE: return "projective_space";
    case PBD_BRANCH_INDETERMINATE: return "indeterminate";
  }
  return "unknown";
}

std::string decimal_of(const std::string& value) {
  unique_str d(pbd_rat_decimal(value.c_str(), 15));
  return d.str();
}

int load_bundle(const std::string& path, bundle_handle& bundle) {
  char* errmsg = nullptr;
  pbd_status status = pbd_bundle_load(path.c_str(), &bundle.p, &errmsg);
  if (status != PBD_OK) return input_error(take_message(errmsg));
  return 0;
}

struct common_options {
  std::string bundle_path;
  std::string a = "1";
  std::string b = "0";
  std::string output;
  bool as_json = false;
};

int run_delta(const common_options& opt) {
  bundle_handle bundle;
  if (int rc = load_bundle(opt.bundle_path, bundle)) return rc;

  report_handle report;
  char* errmsg = nullptr;
  pbd_status status = pbd_delta(bundle.p, opt.a.c_str(), opt.b.c_str(), &report.p, &errmsg);
  if (status != PBD_OK) return input_error(take_message(errmsg));

  struct field_row {
    const char* name;
    pbd_report_field id;
  };
  const field_row fields[] = {
      {"s_fiber", PBD_FIELD_S_FIBER}, {"s_exceptional", PBD_FIELD_S_EXCEPTIONAL},
      {"s1", PBD_FIELD_S1},           {"s2", PBD_FIELD_S2},
      {"lower", PBD_FIELD_LOWER},     {"upper", PBD_FIELD_UPPER},
  };

  unique_str a_canon(pbd_rat_canonical(opt.a.c_str()));
  unique_str b_canon(pbd_rat_canonical(opt.b.c_str()));
  unique_str note(pbd_report_note(report.p));
  bool exact = pbd_report_exact(report.p) != 0;
  std::string branch = branch_label(pbd_report_branch(report.p));

  if (opt.as_json) {
    json doc;
    doc["a"] = a_canon.str();
    doc["b"] = b_canon.str();
    for (const auto& field : fields) {
      unique_str value(pbd_report_field_value(report.p, field.id));
      if (!value.ok()) {
        doc[field.name] = nullptr;
        continue;
      }
      doc[field.name] = {{"value", value.str()}, {"decimal", decimal_of(value.str())}};
    }
    doc["exact"] = exact;
    doc["branch"] = branch;
    doc["note"] = note.str();
    return emit(opt.output, doc.dump(2) + "\n");
  }

  std::ostringstream out;
  out << "quantity,value,decimal\n";
  out << "a," << a_canon.str() << "," << decimal_of(a_canon.str()) << "\n";
  out << "b," << b_canon.str() << "," << decimal_of(b_canon.str()) << "\n";
  for (const auto& field : fields) {
    unique_str value(pbd_report_field_value(report.p, field.id));
    if (!value.ok()) continue;
    out << field.name << "," << value.str() << "," << decimal_of(value.str()) << "\n";
  }
  out << "exact," << (exact ? "true" : "false") << ",\n";
  out << "branch," << branch << ",\n";
  out << "note," << csv_escape(note.str()) << ",\n";
  return emit(opt.output, out.str());
}

int run_profile(const common_options& opt, const std::string& axis, size_t samples) {
  if (axis != "F" && axis != "D") return input_error("--axis must be F or D");
  bundle_handle bundle;
  if (int rc = load_bundle(opt.bundle_path, bundle)) return rc;

  profile_handle profile;
  char* errmsg = nullptr;
  pbd_status status =
      pbd_profile_compute(bundle.p, opt.a.c_str(), opt.b.c_str(), axis[0], &profile.p, &errmsg);
  if (status != PBD_OK) return input_error(take_message(errmsg));

  table_handle samples_table;
  status = pbd_profile_sample(profile.p, samples, &samples_table.p, &errmsg);
  if (status != PBD_OK) return input_error(take_message(errmsg));

  unique_str threshold(pbd_profile_threshold(profile.p));
  unique_str integral(pbd_profile_integral(profile.p));
  size_t chambers = pbd_profile_chambers(profile.p);

  if (opt.as_json) {
    unique_str a_canon(pbd_rat_canonical(opt.a.c_str()));
    unique_str b_canon(pbd_rat_canonical(opt.b.c_str()));
    json doc;
    doc["axis"] = axis;
    doc["a"] = a_canon.str();
    doc["b"] = b_canon.str();
    doc["threshold"] = threshold.str();
    doc["integral"] = integral.str();
    doc["chambers"] = json::array();
    for (size_t c = 0; c < chambers; ++c) {
      unique_str lo(pbd_profile_chamber_lo(profile.p, c));
      unique_str hi(pbd_profile_chamber_hi(profile.p, c));
      json coefficients = json::array();
      size_t count = pbd_profile_coefficients(profile.p, c);
      for (size_t k = 0; k < count; ++k) {
        unique_str coef(pbd_profile_coefficient(profile.p, c, k));
        coefficients.push_back(coef.str());
      }
      doc["chambers"].push_back(
          {{"lo", lo.str()}, {"hi", hi.str()}, {"coefficients", coefficients}});
    }
    doc["samples"] = table_to_json_rows(samples_table.p);
    return emit(opt.output, doc.dump(2) + "\n");
  }

  std::ostringstream preamble;
  preamble << "# axis: " << axis << "\n";
  preamble << "# threshold: " << threshold.str() << "\n";
  preamble << "# integral: " << integral.str() << "\n";
  for (size_t c = 0; c < chambers; ++c) {
    unique_str lo(pbd_profile_chamber_lo(profile.p, c));
    unique_str hi(pbd_profile_chamber_hi(profile.p, c));
    preamble << "# chamber " << c << ": [" << lo.str() << ", " << hi.str() << "] coefficients";
    size_t count = pbd_profile_coefficients(profile.p, c);
    for (size_t k = 0; k < count; ++k) {
      unique_str coef(pbd_profile_coefficient(profile.p, c, k));
      preamble << " " << coef.str();
    }
    preamble << "\n";
  }
  return emit(opt.output, table_to_csv(samples_table.p, preamble.str()));
}

int run_scan(const common_options& opt, const std::string& a_range, const std::string& b_range,
             unsigned threads) {
  auto split_range = [](const std::string& text, std::string parts[3]) {
    size_t first = text.find(':');
    size_t second = first == std::string::npos ? std::string::npos : text.find(':', first + 1);
    if (first == std::string::npos || second == std::string::npos ||
        text.find(':', second + 1) != std::string::npos)
      return false;
    parts[0] = text.substr(0, first);
    parts[1] = text.substr(first + 1, second - first - 1);
    parts[2] = text.substr(second + 1);
    return true;
  };

  std::string a_parts[3], b_parts[3];
  if (!split_range(a_range, a_parts)) return input_error("--a-range must be LO:HI:STEP");
  if (!split_range(b_range, b_parts)) return input_error("--b-range must be LO:HI:STEP");

  bundle_handle bundle;
  if (int rc = load_bundle(opt.bundle_path, bundle)) return rc;

  table_handle table;
  char* errmsg = nullptr;
  pbd_status status =
      pbd_scan(bundle.p, a_parts[0].c_str(), a_parts[1].c_str(), a_parts[2].c_str(),
               b_parts[0].c_str(), b_parts[1].c_str(), b_parts[2].c_str(), threads, &table.p,
               &errmsg);
  if (status != PBD_OK) return input_error(take_message(errmsg));

  if (opt.as_json) {
    json doc;
    doc["rows"] = table_to_json_rows(table.p);
    return emit(opt.output, doc.dump(2) + "\n");
  }
  return emit(opt.output, table_to_csv(table.p));
}

int run_verify(const std::string& output, bool as_json, long nmax, unsigned long long seed,
               int instances) {
  table_handle table;
  int all_passed = 0;
  char* errmsg = nullptr;
  pbd_status status = pbd_verify(nmax, seed, instances, &table.p, &all_passed, &errmsg);
  if (status != PBD_OK) return input_error(take_message(errmsg));

  int rc;
  if (as_json) {
    json doc;
    doc["all_pass"] = all_passed != 0;
    doc["items"] = table_to_json_rows(table.p);
    rc = emit(output, doc.dump(2) + "\n");
  } else {
    rc = emit(output, table_to_csv(table.p));
  }
  if (rc != 0) return rc;
  return all_passed ? 0 : 3;
}

int run_classify(const common_options& opt) {
  bundle_handle bundle;
  if (int rc = load_bundle(opt.bundle_path, bundle)) return rc;
  pbd_classification result = pbd_classify(bundle.p);
  const char* label = "unknown";
  switch (result) {
    case PBD_CLASS_ALL_KPOLYSTABLE: label = "all_ample_kpolystable"; break;
    case PBD_CLASS_ALL_KSEMISTABLE_NOT_POLY: label = "all_ample_ksemistable_not_polystable"; break;
    case PBD_CLASS_NONE_KSEMISTABLE: label = "none_ksemistable"; break;
    case PBD_CLASS_INVALID: return input_error("classification failed");
  }
  if (opt.as_json) {
    json doc;
    doc["classification"] = label;
    return emit(opt.output, doc.dump(2) + "\n");
  }
  return emit(opt.output, std::string("classification\n") + label + "\n");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact delta-invariant bounds, volume profiles and K-stability verdicts for "
      "polarized projective bundles over smooth curves"};
  app.require_subcommand(1);

  common_options delta_opt, profile_opt, scan_opt, classify_opt;
  std::string axis = "F";
  size_t samples = 50;
  std::string a_range, b_range;
  unsigned threads = 1;
  std::string verify_output;
  bool verify_json = false;
  long nmax = 50;
  unsigned long long seed = 20240817ULL;
  int instances = 100;

  auto add_bundle_polarization = [](CLI::App* cmd, common_options& opt) {
    cmd->add_option("--bundle", opt.bundle_path, "bundle spec file")->required();
    cmd->add_option("-a,--a", opt.a, "coefficient of xi (rational P/Q)")->required();
    cmd->add_option("-b,--b", opt.b, "coefficient of the fiber class (rational P/Q)")->required();
    cmd->add_option("-o,--output", opt.output, "write to file instead of stdout");
    cmd->add_flag("--json", opt.as_json, "emit JSON instead of CSV");
  };

  CLI::App* delta_cmd =
      app.add_subcommand("delta", "expected vanishing orders and delta bounds");
  add_bundle_polarization(delta_cmd, delta_opt);

  CLI::App* profile_cmd =
      app.add_subcommand("volume-profile", "piecewise-polynomial volume profile and samples");
  add_bundle_polarization(profile_cmd, profile_opt);
  profile_cmd->add_option("--axis", axis, "F (fiber direction) or D (exceptional direction)")
      ->required();
  profile_cmd->add_option("--samples", samples, "number of sample points (>= 2)")
      ->check(CLI::Range(static_cast<size_t>(2), static_cast<size_t>(1000000)));

  CLI::App* scan_cmd = app.add_subcommand("scan", "delta and K-stability over an (a, b) grid");
  scan_cmd->add_option("--bundle", scan_opt.bundle_path, "bundle spec file")->required();
  scan_cmd->add_option("--a-range", a_range, "LO:HI:STEP (rationals)")->required();
  scan_cmd->add_option("--b-range", b_range, "LO:HI:STEP (rationals)")->required();
  scan_cmd->add_option("--threads", threads, "worker threads (0 = hardware)");
  scan_cmd->add_option("-o,--output", scan_opt.output, "write to file instead of stdout");
  scan_cmd->add_flag("--json", scan_opt.as_json, "emit JSON instead of CSV");

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "run the self-verification suite (exit 3 on failure)");
  verify_cmd->add_option("--nmax", nmax, "identity sweep bound")->check(CLI::Range(4L, 200L));
  verify_cmd->add_option("--seed", seed, "instance generator seed");
  verify_cmd->add_option("--instances", instances, "randomized instances per check")
      ->check(CLI::Range(1, 100000));
  verify_cmd->add_option("-o,--output", verify_output, "write to file instead of stdout");
  verify_cmd->add_flag("--json", verify_json, "emit JSON instead of CSV");

  CLI::App* classify_cmd =
      app.add_subcommand("classify", "K-stability classification of all ample polarizations");
  classify_cmd->add_option("--bundle", classify_opt.bundle_path, "bundle spec file")->required();
  classify_cmd->add_option("-o,--output", classify_opt.output, "write to file instead of stdout");
  classify_cmd->add_flag("--json", classify_opt.as_json, "emit JSON instead of CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    int code = app.exit(err);
    return code == 0 ? 0 : 2;
  }

  if (app.got_subcommand(delta_cmd)) return run_delta(delta_opt);
  if (app.got_subcommand(profile_cmd)) return run_profile(profile_opt, axis, samples);
  if (app.got_subcommand(scan_cmd)) return run_scan(scan_opt, a_range, b_range, threads);
  if (app.got_subcommand(verify_cmd))
    return run_verify(verify_output, verify_json, nmax, seed, instances);
  if (app.got_subcommand(classify_cmd)) return run_classify(classify_opt);
  return 2;
}
