#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace permlink {

/// Command dispatch for the permlink tool. Exit status: 0 on success,
/// 1 when verification or a cross-check finds a counterexample, 2 on
/// usage errors (unknown flags, malformed permutations, missing files).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace permlink
