#include "pbdelta/bundle.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

#include "pbdelta/error.hpp"

namespace pbd {

const char* stability_name(stability_flag flag) {
  switch (flag) {
    case stability_flag::stable: return "stable";
    case stability_flag::strictly_semistable: return "strictly_semistable";
    case stability_flag::polystable: return "polystable";
    case stability_flag::unstable_one_step: return "unstable_one_step";
  }
  return "unknown";
}

std::optional<stability_flag> stability_from_name(std::string_view name) {
  if (name == "stable") return stability_flag::stable;
  if (name == "strictly_semistable") return stability_flag::strictly_semistable;
  if (name == "polystable") return stability_flag::polystable;
  if (name == "unstable_one_step") return stability_flag::unstable_one_step;
  return std::nullopt;
}

bundle::bundle(const bundle_data& data) : data_(data) {
  slope_ = rational(data_.degree, data_.rank);
  if (data_.step) {
    slope_max_ = rational(data_.step->degree, data_.step->rank);
    slope_min_ = rational(data_.degree - data_.step->degree, data_.rank - data_.step->rank);
  } else {
    slope_max_ = slope_;
    slope_min_ = slope_;
  }
}

bundle bundle::validate(const bundle_data& data) {
  if (data.rank < 2)
    fail(errc::rank_out_of_range, "bundle rank must be at least 2, got " + std::to_string(data.rank));
  if (data.genus < 0)
    fail(errc::invalid_argument, "genus must be nonnegative, got " + std::to_string(data.genus));

  bool semistable_flag = data.stability != stability_flag::unstable_one_step;
  if (data.step) {
    if (semistable_flag)
      fail(errc::inconsistent_stability,
           std::string("stability '") + stability_name(data.stability) +
               "' is inconsistent with a declared destabilizing step");
    if (data.step->rank < 1 || data.step->rank >= data.rank)
      fail(errc::rank_out_of_range, "hn_step rank must satisfy 1 <= r <= n-1, got r = " +
                                        std::to_string(data.step->rank) + " with n = " +
                                        std::to_string(data.rank));
    // mu_max > mu_min is equivalent to d1 * n > d * r1.
    if (data.step->degree * data.rank <= data.degree * data.step->rank)
      fail(errc::slope_not_decreasing,
           "destabilizing step must have strictly larger slope than the quotient");
  } else if (data.stability == stability_flag::unstable_one_step) {
    fail(errc::inconsistent_stability, "stability 'unstable_one_step' requires an hn_step");
  }

  if (data.sub_rank) {
    if (data.stability != stability_flag::strictly_semistable &&
        data.stability != stability_flag::polystable)
      fail(errc::inconsistent_stability,
           "sub_rank declares an equal-slope subbundle and needs stability "
           "strictly_semistable or polystable");
    if (*data.sub_rank < 1 || *data.sub_rank >= data.rank)
      fail(errc::rank_out_of_range, "sub_rank must satisfy 1 <= r <= n-1, got " +
                                        std::to_string(*data.sub_rank));
    if ((*data.sub_rank * data.degree) % data.rank != 0)
      fail(errc::invalid_argument,
           "sub_rank * degree must be divisible by rank (the subbundle has slope d/n and "
           "integer degree)");
  }

  return bundle(data);
}

long bundle::blowup_rank() const {
  if (data_.step) return data_.step->rank;
  if (data_.sub_rank) return *data_.sub_rank;
  fail(errc::no_blowup,
       "no exceptional divisor: bundle is semistable with no declared sub_rank");
}

namespace {

long parse_long(std::string_view text, const std::string& what) {
  rational r = [&] {
    try {
      return rational::parse(text);
    } catch (const error&) {
      fail(errc::parse_error, what + " must be an integer, got '" + std::string(text) + "'");
    }
  }();
  if (!r.is_integer())
    fail(errc::parse_error, what + " must be an integer, got '" + std::string(text) + "'");
  if (!r.num().fits_slong_p()) fail(errc::parse_error, what + " is out of range");
  return r.num().get_si();
}

std::string_view trim(std::string_view s) {
  size_t lo = 0, hi = s.size();
  while (lo < hi && std::isspace(static_cast<unsigned char>(s[lo]))) ++lo;
  while (hi > lo && std::isspace(static_cast<unsigned char>(s[hi - 1]))) --hi;
  return s.substr(lo, hi - lo);
}

hn_step parse_step_value(std::string_view value) {
  value = trim(value);
  if (value.size() < 2 || value.front() != '{' || value.back() != '}')
    fail(errc::parse_error, "hn_step must look like { rank = R, degree = D }");
  value = trim(value.substr(1, value.size() - 2));

  std::vector<std::string_view> items;
  size_t start = 0;
  for (size_t i = 0; i <= value.size(); ++i) {
    if (i == value.size() || value[i] == ',') {
      items.push_back(trim(value.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (items.size() != 2)
    fail(errc::parse_error, "hn_step needs exactly a rank and a degree");

  hn_step step;
  bool named = items[0].find('=') != std::string_view::npos;
  if (named) {
    bool have_rank = false, have_degree = false;
    for (auto item : items) {
      size_t eq = item.find('=');
      if (eq == std::string_view::npos)
        fail(errc::parse_error, "hn_step entries must all be named or all positional");
      std::string_view key = trim(item.substr(0, eq));
      long val = parse_long(item.substr(eq + 1), std::string("hn_step ") + std::string(key));
      if (key == "rank") {
        step.rank = val;
        have_rank = true;
      } else if (key == "degree") {
        step.degree = val;
        have_degree = true;
      } else {
        fail(errc::parse_error, "unknown hn_step key '" + std::string(key) + "'");
      }
    }
    if (!have_rank || !have_degree)
      fail(errc::parse_error, "hn_step needs both rank and degree");
  } else {
    step.rank = parse_long(items[0], "hn_step rank");
    step.degree = parse_long(items[1], "hn_step degree");
  }
  return step;
}

}  // namespace

bundle_data parse_bundle_data(std::string_view text) {
  bundle_data data;
  bool have_genus = false, have_rank = false, have_degree = false, have_stability = false;

  size_t pos = 0;
  int lineno = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++lineno;

    size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    size_t eq = line.find('=');
    if (eq == std::string_view::npos)
      fail(errc::parse_error, "line " + std::to_string(lineno) + ": expected key = value");
    std::string key(trim(line.substr(0, eq)));
    std::string_view value = trim(line.substr(eq + 1));

    if (key == "genus") {
      if (have_genus) fail(errc::parse_error, "duplicate key 'genus'");
      data.genus = parse_long(value, "genus");
      have_genus = true;
    } else if (key == "rank") {
      if (have_rank) fail(errc::parse_error, "duplicate key 'rank'");
      data.rank = parse_long(value, "rank");
      have_rank = true;
    } else if (key == "degree") {
      if (have_degree) fail(errc::parse_error, "duplicate key 'degree'");
      data.degree = parse_long(value, "degree");
      have_degree = true;
    } else if (key == "stability") {
      if (have_stability) fail(errc::parse_error, "duplicate key 'stability'");
      auto flag = stability_from_name(value);
      if (!flag)
        fail(errc::parse_error, "unknown stability '" + std::string(value) +
                                    "' (expected stable, strictly_semistable, polystable or "
                                    "unstable_one_step)");
      data.stability = *flag;
      have_stability = true;
    } else if (key == "hn_step") {
      if (data.step)
        fail(errc::unsupported_filtration,
             "more than one hn_step: filtrations of length > 2 are not supported");
      data.step = parse_step_value(value);
    } else if (key == "sub_rank") {
      if (data.sub_rank) fail(errc::parse_error, "duplicate key 'sub_rank'");
      data.sub_rank = parse_long(value, "sub_rank");
    } else {
      fail(errc::parse_error, "unknown key '" + key + "'");
    }
  }

  std::string missing;
  if (!have_genus) missing += " genus";
  if (!have_rank) missing += " rank";
  if (!have_degree) missing += " degree";
  if (!have_stability) missing += " stability";
  if (!missing.empty()) fail(errc::parse_error, "missing required key(s):" + missing);
  return data;
}

bundle load_bundle_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::parse_error, "cannot open bundle file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return bundle::validate(parse_bundle_data(buf.str()));
}

}  // namespace pbd
