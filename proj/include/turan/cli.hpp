#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace turan {

inline constexpr const char* tool_version = "turan 0.1.0";

// exit codes: 0 ok, 2 budget exhausted, 64 usage, 65 bad data, 66 unsupported size
inline constexpr int exit_ok = 0;
inline constexpr int exit_budget = 2;
inline constexpr int exit_usage = 64;
inline constexpr int exit_data = 65;
inline constexpr int exit_unsupported = 66;

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace turan
