#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace excseq {

// Runs one CLI invocation. Returns 0 on success, 2 on validation failures
// (malformed input, unknown keys, invalid sequences), 3 on domain errors
// (non-Dynkin quivers, out-of-domain operations, rank caps).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace excseq
