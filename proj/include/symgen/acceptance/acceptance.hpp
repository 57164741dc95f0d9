#pragma once

#include "symgen/symm/symmetric.hpp"

#include <string>
#include <vector>

namespace symgen::acceptance {

struct AcceptanceConfig {
    int bound = 30;  // truncation degree D
    symm::GeneratorStart start = symm::GeneratorStart::FromZero;
    unsigned seed = 20240601;
};

enum class Status { Pass, Fail, Skipped };
std::string status_name(Status s);

struct CheckResult {
    int id = 0;
    std::string name;
    Status status = Status::Skipped;
    int required_bound = 0;
    std::string detail;
    double seconds = 0;
};

/// Number of criteria; ids run 1..count().
int count();
CheckResult run_check(int id, const AcceptanceConfig& config);
/// All criteria, sorted by id.
std::vector<CheckResult> run_all(const AcceptanceConfig& config);

}  // namespace symgen::acceptance
