#pragma once

#include <string>
#include <vector>

#include "hoobs/verifier.hpp"

namespace hoobs {

enum class ReportFormat { text, json };

std::string emit_report(const std::vector<Verdict>& verdicts, ReportFormat format);

/// Label sequence as written on the command line: "a,b"; "" for the empty sequence.
std::string join_alpha(const std::vector<std::string>& alpha);

}  // namespace hoobs
