#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "pbdelta/rational.hpp"

namespace pbd {

enum class stability_flag {
  stable,
  strictly_semistable,
  polystable,
  unstable_one_step,
};

const char* stability_name(stability_flag flag);
std::optional<stability_flag> stability_from_name(std::string_view name);

/// Top nonzero piece of a two-step slope filtration: the destabilizing
/// subbundle's rank and degree.
struct hn_step {
  long rank = 0;
  long degree = 0;
};

/// Raw bundle description as read from a spec file, before validation.
struct bundle_data {
  long genus = 0;
  long rank = 0;
  long degree = 0;
  std::optional<hn_step> step;
  /// Rank of a declared equal-slope subbundle; only meaningful (and only
  /// accepted) for strictly semistable or polystable bundles, where it
  /// selects the subbundle whose projectivization gets blown up.
  std::optional<long> sub_rank;
  stability_flag stability = stability_flag::stable;
};

/// Validated bundle over a smooth curve of the given genus, with slope data
/// cached. Filtration length is 1 (semistable) or 2 (one destabilizing step).
class bundle {
public:
  static bundle validate(const bundle_data& data);

  long genus() const { return data_.genus; }
  long rank() const { return data_.rank; }
  long degree() const { return data_.degree; }
  stability_flag stability() const { return data_.stability; }
  int filtration_length() const { return data_.step ? 2 : 1; }
  const std::optional<hn_step>& step() const { return data_.step; }
  const std::optional<long>& sub_rank() const { return data_.sub_rank; }

  const rational& slope() const { return slope_; }
  const rational& slope_max() const { return slope_max_; }
  const rational& slope_min() const { return slope_min_; }

  /// True when the exceptional-divisor geometry is available: either the
  /// filtration has two steps, or an equal-slope sub_rank was declared.
  bool has_blowup() const { return data_.step.has_value() || data_.sub_rank.has_value(); }
  /// Rank of the subbundle being blown up; throws errc::no_blowup otherwise.
  long blowup_rank() const;

  const bundle_data& data() const { return data_; }

private:
  explicit bundle(const bundle_data& data);
  bundle_data data_;
  rational slope_, slope_max_, slope_min_;
};

/// Parses the key = value spec format:
///   genus = 1
///   rank = 3
///   degree = 2
///   hn_step = { rank = 1, degree = 2 }   # or: { 1, 2 }
///   stability = unstable_one_step
/// '#' starts a comment; keys genus, rank, degree, stability are required;
/// hn_step and sub_rank are optional. A second hn_step line is rejected as an
/// unsupported filtration of length > 2.
bundle_data parse_bundle_data(std::string_view text);

bundle load_bundle_file(const std::string& path);

}  // namespace pbd
