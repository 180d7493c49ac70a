#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ontomap::cli {

// Exit statuses shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;  // validation, dimension or alphabet error
inline constexpr int kExitIo = 2;      // unreadable/unwritable file, malformed text, bad usage

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ontomap::cli
