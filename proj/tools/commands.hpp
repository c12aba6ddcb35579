#ifndef WEAKHASH_TOOLS_COMMANDS_HPP
#define WEAKHASH_TOOLS_COMMANDS_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "weakhash/convergence.hpp"
#include "weakhash/point_set.hpp"

namespace weakhash::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kInputError = 2,
  kOracleMismatch = 3,
  kCriteriaDisagree = 4,
  kIterationCap = 5,
};

/// Runs the weakhash command line. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// `ball:x,y,...:r` (closed ball) or `box:lo,...:hi,...`, separated by ';'.
[[nodiscard]] std::vector<PointSet> parse_set_list(std::string_view spec);

/// `tent:c,...:radius[:height]` or `bump:c,...:radius[:height]`, separated by ';'.
[[nodiscard]] std::vector<TestFunction> parse_function_list(std::string_view spec);

}  // namespace weakhash::cli

#endif  // WEAKHASH_TOOLS_COMMANDS_HPP
