#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cmfix {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Library-level invariant sweep used by the `selftest` command.
std::vector<CheckResult> run_selftest(std::uint64_t seed);

} // namespace cmfix
