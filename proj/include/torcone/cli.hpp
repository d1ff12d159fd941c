#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace torcone {

// Exit codes: 0 success/verified, 1 a verification check failed,
// 2 invalid input, 3 unsupported request (dimension cap, cones outside the
// classified family). JSON on out, diagnostics on err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace torcone
