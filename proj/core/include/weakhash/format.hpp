#ifndef WEAKHASH_FORMAT_HPP
#define WEAKHASH_FORMAT_HPP

#include <string>

namespace weakhash {

/// Shortest decimal with at most 15 significant digits; "inf"/"-inf"/"nan"
/// for non-finite values.
[[nodiscard]] std::string format_real(double value);

}  // namespace weakhash

#endif  // WEAKHASH_FORMAT_HPP
