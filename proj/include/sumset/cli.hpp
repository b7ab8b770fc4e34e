#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sumset::cli {

/// One sumset-lab invocation; args exclude the program name. The report (or
/// {"error": {...}}) goes to `out`. Exit codes: 0 ok, 1 a check failed,
/// 2 invalid configuration, 3 any other error.
int run(const std::vector<std::string>& args, std::ostream& out);

}  // namespace sumset::cli
