#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hypcert::cli {

/// Exit codes: 0 success, 1 malformed input, 2 hypothesis failure.
/// Output is byte-deterministic for fixed arguments.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hypcert::cli
