#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wallnorm::cli {

/// Runs one wallnorm command line (without the program name). Returns 0 on
/// success, 1 for domain errors, 2 for usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wallnorm::cli
