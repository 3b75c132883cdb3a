#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nearbrace::cli {

/// Runs one invocation. `args` excludes the program name.
/// Returns 0 when every requested verification passed, 1 when one failed,
/// 2 for malformed input or usage errors.
int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace nearbrace::cli
