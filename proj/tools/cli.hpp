#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hoobs::cli {

/// Exit codes: 0 all hold / success, 1 violated or mismatch, 2 usage or input
/// error, 3 state cap reached.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hoobs::cli
