#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pinchlink::cli {

/// Runs one `pinchlink` invocation. `args` excludes the program name.
/// Returns 0 on success, 2 on input errors and 3 on internal failures.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace pinchlink::cli
