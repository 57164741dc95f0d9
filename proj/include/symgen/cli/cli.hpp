#pragma once

#include <string>
#include <vector>

namespace symgen::cli {

/// Exit codes: 0 success, 1 computation error, 2 usage error.
struct CliResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

/// Runs one command line (program name excluded). Never throws.
CliResult dispatch(const std::vector<std::string>& args);

}  // namespace symgen::cli
