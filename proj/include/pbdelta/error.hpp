#pragma once

#include <stdexcept>
#include <string>

namespace pbd {

enum class errc {
  invalid_argument,
  parse_error,
  rank_out_of_range,
  slope_not_decreasing,
  inconsistent_stability,
  unsupported_filtration,
  not_ample,
  not_pseff,
  no_blowup,
};

/// Library-wide exception type. Every precondition violation and input
/// rejection throws this; the C boundary maps codes to status values.
class error : public std::runtime_error {
public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

inline const char* errc_name(errc code) {
  switch (code) {
    case errc::invalid_argument: return "invalid_argument";
    case errc::parse_error: return "parse_error";
    case errc::rank_out_of_range: return "rank_out_of_range";
    case errc::slope_not_decreasing: return "slope_not_decreasing";
    case errc::inconsistent_stability: return "inconsistent_stability";
    case errc::unsupported_filtration: return "unsupported_filtration";
    case errc::not_ample: return "not_ample";
    case errc::not_pseff: return "not_pseff";
    case errc::no_blowup: return "no_blowup";
  }
  return "unknown";
}

}  // namespace pbd
