#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gbinom::cli {

// Exit codes shared by every subcommand.
inline constexpr int exit_ok = 0;
inline constexpr int exit_falsified = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_unsupported = 3;

// Runs `gbinom <subcommand> ...`; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace gbinom::cli
