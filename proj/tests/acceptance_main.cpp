// Runs every acceptance criterion at the default truncation and prints one line each.
#include "symgen/acceptance/acceptance.hpp"

#include <cstdio>

int main() {
    using namespace symgen::acceptance;
    const auto results = run_all(AcceptanceConfig{});
    int failures = 0;
    for (const auto& r : results) {
        const bool ok = r.status == Status::Pass;
        failures += !ok;
        std::printf("[%s] %2d %-38s %8.3f s  %s\n", ok ? "PASS" : r.status == Status::Fail ? "FAIL" : "SKIP", r.id,
                    r.name.c_str(), r.seconds, r.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failures, results.size());
    return failures ? 1 : 0;
}
