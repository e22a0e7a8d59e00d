#pragma once

#include <string>
#include <vector>

namespace pbd {

/// Column-named table of strings, the common currency for scan results,
/// verification reports and profile samples on their way to CSV or JSON.
struct string_table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

}  // namespace pbd
