#pragma once

#include <string>
#include <vector>

namespace vknots::cli {

struct RunResult {
    int exit_code = 0;
    std::string output; // JSON on success and on input errors; help text for --help
};

// Runs the vknot command line given argv without the program name.
// Exit codes: 0 success, 1 input error (reported as {"error": ...} JSON),
// 2 internal error.
RunResult run(const std::vector<std::string>& args);

} // namespace vknots::cli
