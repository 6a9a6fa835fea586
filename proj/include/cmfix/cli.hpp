#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cmfix::cli {

inline constexpr std::uint64_t default_seed = 20240917;

/// Entry point shared by the executable and the tests. args excludes the
/// program name. Returns 0 on success, 1 on a failed verification, 2 on a
/// usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cmfix::cli
