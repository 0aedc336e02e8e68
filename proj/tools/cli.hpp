#pragma once

#include <ostream>

namespace mcfl::cli {

/// Runs the command line tool. Exit codes: 0 success or REACHABLE/MEMBER, 1 UNREACHABLE/NONMEMBER,
/// 2 usage or parse error, 3 budget exhausted.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mcfl::cli
