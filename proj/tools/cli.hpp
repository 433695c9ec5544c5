#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace teissier::cli {

/// Exit codes: 0 success, 1 theorem violation (bug), 2 input error,
/// 3 stabilization cap exceeded.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace teissier::cli
