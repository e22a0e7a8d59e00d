#include "pbdelta.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "pbdelta/bundle.hpp"
#include "pbdelta/delta.hpp"
#include "pbdelta/divisor.hpp"
#include "pbdelta/error.hpp"
#include "pbdelta/kstability.hpp"
#include "pbdelta/scan.hpp"
#include "pbdelta/table.hpp"
#include "pbdelta/verify.hpp"
#include "pbdelta/volume.hpp"

struct pbd_bundle {
  pbd::bundle value;
};

struct pbd_report {
  pbd::delta_report value;
};

struct pbd_profile {
  std::vector<pbd::chamber_polynomial> chambers;
  pbd::rational threshold;
};

struct pbd_table {
  pbd::string_table value;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) return nullptr;
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_errmsg(char** errmsg, const std::string& msg) {
  if (errmsg) *errmsg = dup_string(msg);
}

pbd_status status_from(pbd::errc code) {
  switch (code) {
    case pbd::errc::parse_error: return PBD_ERR_PARSE;
    case pbd::errc::unsupported_filtration: return PBD_ERR_UNSUPPORTED;
    case pbd::errc::not_ample: return PBD_ERR_NOT_AMPLE;
    case pbd::errc::not_pseff: return PBD_ERR_NOT_PSEFF;
    case pbd::errc::no_blowup: return PBD_ERR_NO_BLOWUP;
    case pbd::errc::invalid_argument:
    case pbd::errc::rank_out_of_range:
    case pbd::errc::slope_not_decreasing:
    case pbd::errc::inconsistent_stability: return PBD_ERR_INVALID_INPUT;
  }
  return PBD_ERR_INTERNAL;
}

template <typename Fn>
pbd_status guarded(char** errmsg, Fn&& fn) {
  try {
    return fn();
  } catch (const pbd::error& err) {
    set_errmsg(errmsg, err.what());
    return status_from(err.code());
  } catch (const std::exception& ex) {
    set_errmsg(errmsg, ex.what());
    return PBD_ERR_INTERNAL;
  } catch (...) {
    set_errmsg(errmsg, "unknown error");
    return PBD_ERR_INTERNAL;
  }
}

pbd_table* make_table(pbd::string_table table) { return new pbd_table{std::move(table)}; }

}  // namespace

extern "C" {

const char* pbd_version(void) { return "0.1.0"; }

void pbd_string_free(char* s) { std::free(s); }

char* pbd_rat_canonical(const char* text) {
  if (!text) return nullptr;
  try {
    return dup_string(pbd::rational::parse(text).str());
  } catch (...) {
    return nullptr;
  }
}

char* pbd_rat_decimal(const char* text, int significant) {
  if (!text) return nullptr;
  try {
    return dup_string(pbd::decimal(pbd::rational::parse(text), significant));
  } catch (...) {
    return nullptr;
  }
}

pbd_status pbd_bundle_parse(const char* text, pbd_bundle** out, char** errmsg) {
  if (!text || !out) {
    set_errmsg(errmsg, "null argument");
    return PBD_ERR_NULL_ARG;
  }
  return guarded(errmsg, [&] {
    *out = new pbd_bundle{pbd::bundle::validate(pbd::parse_bundle_data(text))};
    return PBD_OK;
  });
}

pbd_status pbd_bundle_load(const char* path, pbd_bundle** out, char** errmsg) {
  if (!path || !out) {
    set_errmsg(errmsg, "null argument");
    return PBD_ERR_NULL_ARG;
  }
  std::ifstream in(path);
  if (!in) {
    set_errmsg(errmsg, std::string("cannot open bundle file '") + path + "'");
    return PBD_ERR_IO;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  return pbd_bundle_parse(text.c_str(), out, errmsg);
}

void pbd_bundle_free(pbd_bundle* e) { delete e; }

long pbd_bundle_genus(const pbd_bundle* e) { return e ? e->value.genus() : 0; }
long pbd_bundle_rank(const pbd_bundle* e) { return e ? e->value.rank() : 0; }
long pbd_bundle_degree(const pbd_bundle* e) { return e ? e->value.degree() : 0; }
int pbd_bundle_filtration_length(const pbd_bundle* e) {
  return e ? e->value.filtration_length() : 0;
}

pbd_stability pbd_bundle_stability(const pbd_bundle* e) {
  if (!e) return PBD_STABLE;
  switch (e->value.stability()) {
    case pbd::stability_flag::stable: return PBD_STABLE;
    case pbd::stability_flag::strictly_semistable: return PBD_STRICTLY_SEMISTABLE;
    case pbd::stability_flag::polystable: return PBD_POLYSTABLE;
    case pbd::stability_flag::unstable_one_step: return PBD_UNSTABLE_ONE_STEP;
  }
  return PBD_STABLE;
}

char* pbd_bundle_slope(const pbd_bundle* e) { return e ? dup_string(e->value.slope().str()) : nullptr; }
char* pbd_bundle_slope_max(const pbd_bundle* e) {
  return e ? dup_string(e->value.slope_max().str()) : nullptr;
}
char* pbd_bundle_slope_min(const pbd_bundle* e) {
  return e ? dup_string(e->value.slope_min().str()) : nullptr;
}

pbd_cone pbd_cone_position(const pbd_bundle* e, const char* a, const char* b) {
  if (!e || !a || !b) return PBD_CONE_INVALID;
  try {
    pbd::divisor_class l{pbd::rational::parse(a), pbd::rational::parse(b)};
    switch (pbd::cone_position(l, e->value)) {
      case pbd::cone_region::ample: return PBD_CONE_AMPLE;
      case pbd::cone_region::nef_not_ample: return PBD_CONE_NEF_NOT_AMPLE;
      case pbd::cone_region::pseff_not_nef: return PBD_CONE_PSEFF_NOT_NEF;
      case pbd::cone_region::not_pseff: return PBD_CONE_NOT_PSEFF;
    }
    return PBD_CONE_INVALID;
  } catch (...) {
    return PBD_CONE_INVALID;
  }
}

pbd_status pbd_delta(const pbd_bundle* e, const char* a, const char* b, pbd_report** out,
                     char** errmsg) {
  if (!e || !a || !b || !out) {
    set_errmsg(errmsg, "null argument");
    return PBD_ERR_NULL_ARG;
  }
  return guarded(errmsg, [&] {
    pbd::divisor_class l{pbd::rational::parse(a), pbd::rational::parse(b)};
    *out = new pbd_report{pbd::delta_for(l, e->value)};
    return PBD_OK;
  });
}

void pbd_report_free(pbd_report* r) { delete r; }

char* pbd_report_field_value(const pbd_report* r, pbd_report_field field) {
  if (!r) return nullptr;
  const pbd::delta_report& rep = r->value;
  switch (field) {
    case PBD_FIELD_S_FIBER: return dup_string(rep.s_fiber.str());
    case PBD_FIELD_S_EXCEPTIONAL:
      return rep.s_exceptional ? dup_string(rep.s_exceptional->str()) : nullptr;
    case PBD_FIELD_S1: return rep.s1 ? dup_string(rep.s1->str()) : nullptr;
    case PBD_FIELD_S2: return rep.s2 ? dup_string(rep.s2->str()) : nullptr;
    case PBD_FIELD_LOWER: return dup_string(rep.lower.str());
    case PBD_FIELD_UPPER: return dup_string(rep.upper.str());
  }
  return nullptr;
}

int pbd_report_exact(const pbd_report* r) { return r && r->value.exact ? 1 : 0; }

pbd_branch pbd_report_branch(const pbd_report* r) {
  if (!r) return PBD_BRANCH_INDETERMINATE;
  switch (r->value.branch) {
    case pbd::delta_branch::fiber: return PBD_BRANCH_FIBER;
    case pbd::delta_branch::exceptional: return PBD_BRANCH_EXCEPTIONAL;
    case pbd::delta_branch::projective_space: return PBD_BRANCH_PROJECTIVE_SPACE;
    case pbd::delta_branch::indeterminate: return PBD_BRANCH_INDETERMINATE;
  }
  return PBD_BRANCH_INDETERMINATE;
}

char* pbd_report_note(const pbd_report* r) { return r ? dup_string(r->value.note) : nullptr; }

pbd_status pbd_b_exactness_threshold(const pbd_bundle* e, const char* a, char** out,
                                     char** errmsg) {
  if (!e || !a || !out) {
    set_errmsg(errmsg, "null argument");
    return PBD_ERR_NULL_ARG;
  }
  return guarded(errmsg, [&] {
    *out = dup_string(pbd::b_exactness_threshold(pbd::rational::parse(a), e->value).str());
    return PBD_OK;
  });
}

pbd_status pbd_ksemistable_sufficient(const pbd_bundle* e, const char* a, const char* b,
                                      const char* delta_lower, int* passes, char** witness_first,
                                      char** witness_second, char** note, char** errmsg) {
  if (!e || !a || !b || !delta_lower || !passes) {
    set_errmsg(errmsg, "null argument");
    return PBD_ERR_NULL_ARG;
  }
  return guarded(errmsg, [&] {
    pbd::divisor_class l{pbd::rational::parse(a), pbd::rational::parse(b)};
    pbd::ksufficient_report rep =
        pbd::ksemistable_sufficient(l, pbd::rational::parse(delta_lower), e->value);
    *passes = rep.passes ? 1 : 0;
    auto render = [](const pbd::divisor_class& c) {
      return c.a.str() + "*xi + " + c.b.str() + "*f";
    };
    if (witness_first) *witness_first = dup_string(render(rep.witness_first));
    if (witness_second) *witness_second = dup_string(render(rep.witness_second));
    if (note) *note = dup_string(rep.note);
    return PBD_OK;
  });
}

pbd_classification pbd_classify(const pbd_bundle* e) {
  if (!e) return PBD_CLASS_INVALID;
  switch (pbd::classify_polarizations(e->value)) {
    case pbd::polarization_class::all_kpolystable: return PBD_CLASS_ALL_KPOLYSTABLE;
    case pbd::polarization_class::all_ksemistable_not_poly:
      return PBD_CLASS_ALL_KSEMISTABLE_NOT_POLY;
    case pbd::polarization_class::none_ksemistable: return PBD_CLASS_NONE_KSEMISTABLE;
  }
  return PBD_CLASS_INVALID;
}

size_t pbd_table_rows(const pbd_table* t) { return t ? t->value.rows.size() : 0; }
size_t pbd_table_cols(const pbd_table* t) { return t ? t->value.columns.size() : 0; }

char* pbd_table_column_name(const pbd_table* t, size_t col) {
  if (!t || col >= t->value.columns.size()) return nullptr;
  return dup_string(t->value.columns[col]);
}

char* pbd_table_cell(const pbd_table* t, size_t row, size_t col) {
  if (!t || row >= t->value.rows.size() || col >= t->value.rows[row].size()) return nullptr;
  return dup_string(t->value.rows[row][col]);
}

void pbd_table_free(pbd_table* t) { delete t; }

pbd_status pbd_profile_compute(const pbd_bundle* e, const char* a, const char* b, char axis,
                               pbd_profile** out, char** errmsg) {
  if (!e || !a || !b || !out) {
    set_errmsg(errmsg, "null argument");
    return PBD_ERR_NULL_ARG;
  }
  if (axis != 'F' && axis != 'D') {
    set_errmsg(errmsg, "axis must be 'F' or 'D'");
    return PBD_ERR_INVALID_INPUT;
  }
  return guarded(errmsg, [&] {
    pbd::divisor_class l{pbd::rational::parse(a), pbd::rational::parse(b)};
    pbd::axis ax = axis == 'F' ? pbd::axis::fiber : pbd::axis::exceptional;
    auto chambers = pbd::chamber_profile(l, ax, e->value);
    pbd::rational tau = pbd::pseff_threshold(l, ax, e->value);
    *out = new pbd_profile{std::move(chambers), std::move(tau)};
    return PBD_OK;
  });
}

void pbd_profile_free(pbd_profile* p) { delete p; }

size_t pbd_profile_chambers(const pbd_profile* p) { return p ? p->chambers.size() : 0; }

char* pbd_profile_chamber_lo(const pbd_profile* p, size_t chamber) {
  if (!p || chamber >= p->chambers.size()) return nullptr;
  return dup_string(p->chambers[chamber].lo.str());
}

char* pbd_profile_chamber_hi(const pbd_profile* p, size_t chamber) {
  if (!p || chamber >= p->chambers.size()) return nullptr;
  return dup_string(p->chambers[chamber].hi.str());
}

size_t pbd_profile_coefficients(const pbd_profile* p, size_t chamber) {
  if (!p || chamber >= p->chambers.size()) return 0;
  return p->chambers[chamber].poly.coefficients().size();
}

char* pbd_profile_coefficient(const pbd_profile* p, size_t chamber, size_t k) {
  if (!p || chamber >= p->chambers.size()) return nullptr;
  const auto& coef = p->chambers[chamber].poly.coefficients();
  if (k >= coef.size()) return nullptr;
  return dup_string(coef[k].str());
}

char* pbd_profile_threshold(const pbd_profile* p) {
  return p ? dup_string(p->threshold.str()) : nullptr;
}

char* pbd_profile_value(const pbd_profile* p, const char* t) {
  if (!p || !t) return nullptr;
  try {
    return dup_string(pbd::profile_value(p->chambers, pbd::rational::parse(t)).str());
  } catch (...) {
    return nullptr;
  }
}

char* pbd_profile_integral(const pbd_profile* p) {
  if (!p) return nullptr;
  pbd::rational acc(0);
  for (const auto& chamber : p->chambers) acc += chamber.poly.integral(chamber.lo, chamber.hi);
  return dup_string(acc.str());
}

pbd_status pbd_profile_sample(const pbd_profile* p, size_t count, pbd_table** out,
                              char** errmsg) {
  if (!p || !out) {
    set_errmsg(errmsg, "null argument");
    return PBD_ERR_NULL_ARG;
  }
  if (count < 2) {
    set_errmsg(errmsg, "need at least 2 samples");
    return PBD_ERR_INVALID_INPUT;
  }
  return guarded(errmsg, [&] {
    pbd::string_table table;
    table.columns = {"t", "volume", "chamber", "t_decimal", "volume_decimal"};
    for (size_t i = 0; i < count; ++i) {
      pbd::rational t = p->threshold * pbd::rational(static_cast<long>(i)) /
                        pbd::rational(static_cast<long>(count - 1));
      pbd::rational vol = pbd::profile_value(p->chambers, t);
      size_t chamber = 0;
      while (chamber + 1 < p->chambers.size() && t > p->chambers[chamber].hi) ++chamber;
      table.rows.push_back({t.str(), vol.str(), std::to_string(chamber), pbd::decimal(t),
                            pbd::decimal(vol)});
    }
    *out = make_table(std::move(table));
    return PBD_OK;
  });
}

pbd_status pbd_scan(const pbd_bundle* e, const char* a_lo, const char* a_hi, const char* a_step,
                    const char* b_lo, const char* b_hi, const char* b_step, unsigned threads,
                    pbd_table** out, char** errmsg) {
  if (!e || !a_lo || !a_hi || !a_step || !b_lo || !b_hi || !b_step || !out) {
    set_errmsg(errmsg, "null argument");
    return PBD_ERR_NULL_ARG;
  }
  return guarded(errmsg, [&] {
    pbd::scan_config config;
    config.a_range = {pbd::rational::parse(a_lo), pbd::rational::parse(a_hi),
                      pbd::rational::parse(a_step)};
    config.b_range = {pbd::rational::parse(b_lo), pbd::rational::parse(b_hi),
                      pbd::rational::parse(b_step)};
    config.threads = threads;
    *out = make_table(pbd::scan_table(e->value, config));
    return PBD_OK;
  });
}

pbd_status pbd_limit_check(const pbd_bundle* e, const char* b, int steps, pbd_table** out,
                           char** errmsg) {
  if (!e || !b || !out) {
    set_errmsg(errmsg, "null argument");
    return PBD_ERR_NULL_ARG;
  }
  return guarded(errmsg, [&] {
    auto points = pbd::limit_small_a(pbd::rational::parse(b), e->value, steps);
    pbd::string_table table;
    table.columns = {"k", "a", "status", "lower", "upper", "gap"};
    for (size_t i = 0; i < points.size(); ++i) {
      const auto& point = points[i];
      if (point.ample)
        table.rows.push_back({std::to_string(i + 1), point.a.str(), "ok", point.lower.str(),
                              point.upper.str(), (point.upper - point.lower).str()});
      else
        table.rows.push_back({std::to_string(i + 1), point.a.str(), "skipped", "", "", ""});
    }
    *out = make_table(std::move(table));
    return PBD_OK;
  });
}

pbd_status pbd_verify(long nmax, unsigned long long seed, int instances, pbd_table** out,
                      int* all_passed, char** errmsg) {
  if (!out || !all_passed) {
    set_errmsg(errmsg, "null argument");
    return PBD_ERR_NULL_ARG;
  }
  return guarded(errmsg, [&] {
    auto items = pbd::run_verification({nmax, seed, instances});
    *all_passed = pbd::all_pass(items) ? 1 : 0;
    *out = make_table(pbd::verification_table(items));
    return PBD_OK;
  });
}

}  // extern "C"
