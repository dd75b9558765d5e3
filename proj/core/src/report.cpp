#include "hoobs/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace hoobs {

std::string join_alpha(const std::vector<std::string>& alpha) {
    std::string out;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (i) out += ',';
        out += alpha[i];
    }
    return out;
}

std::string emit_report(const std::vector<Verdict>& verdicts, ReportFormat format) {
    if (format == ReportFormat::json) {
        auto arr = nlohmann::json::array();
        for (const auto& v : verdicts) {
            nlohmann::json j;
            j["property"] = v.property;
            j["holds"] = v.holds;
            j["order"] = v.order;
            j["stage"] = v.stage;
            j["states_visited"] = v.states_visited;
            if (v.witness) {
                j["witness"] = {{"alpha", v.witness->alpha},
                                {"state", v.witness->state},
                                {"estimate", v.witness->estimate}};
            } else {
                j["witness"] = nullptr;
            }
            arr.push_back(std::move(j));
        }
        return arr.dump(2) + "\n";
    }
    if (verdicts.empty()) return "";
    std::size_t width = 8;
    for (const auto& v : verdicts) width = std::max(width, v.property.size());
    std::ostringstream os;
    for (const auto& v : verdicts) {
        os << v.property << std::string(width - v.property.size() + 2, ' ') << (v.holds ? "holds   " : "VIOLATED")
           << "  order=" << v.order << " stage=" << v.stage << " states=" << v.states_visited;
        if (v.witness) {
            os << "  witness=\"" << join_alpha(v.witness->alpha) << "\" state=" << v.witness->state
               << " estimate=" << v.witness->estimate;
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace hoobs
