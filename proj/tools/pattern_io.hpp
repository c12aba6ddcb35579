#ifndef WEAKHASH_TOOLS_PATTERN_IO_HPP
#define WEAKHASH_TOOLS_PATTERN_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include "weakhash/error.hpp"
#include "weakhash/measure.hpp"

namespace weakhash::cli {

// Pattern files are JSON objects:
//   {"dimension": d, "origin": [x0...], "atoms": [{"point": [...], "multiplicity": m}, ...]}

class PatternError : public InputError {
 public:
  using InputError::InputError;
};

/// Parses and validates a pattern document. Diagnostics name the offending
/// line (syntax errors) or field path (schema errors), prefixed by `source`.
[[nodiscard]] CountingMeasure parse_pattern(std::string_view text,
                                            std::string_view source = "<input>");

[[nodiscard]] CountingMeasure load_pattern(const std::filesystem::path& path);

/// Canonical JSON; coordinates round-trip bit-exactly through parse_pattern.
[[nodiscard]] std::string serialize_pattern(const CountingMeasure& mu);

void save_pattern(const std::filesystem::path& path, const CountingMeasure& mu);

}  // namespace weakhash::cli

#endif  // WEAKHASH_TOOLS_PATTERN_IO_HPP
