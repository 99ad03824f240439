#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kfloer::cli {

/// Runs the `knotinv` command line (args excludes the program name).
/// Returns 0 on success, 1 on a domain or invalid-complex error, 2 on a
/// usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kfloer::cli
