#pragma once

#include <string>
#include <vector>

#include "hoobs/constructions.hpp"
#include "hoobs/high_order.hpp"

namespace hoobs {

struct DotOptions {
    std::string graph_name = "G";
    /// States drawn in red (system states for automata; ignored otherwise).
    StateSet secrets;
    /// For order-n observers: print flattened estimates instead of pairs.
    bool flatten = false;
};

std::string emit_dot(const Automaton& a, const DotOptions& opt = {});
/// Silent events are drawn dashed.
std::string emit_dot(const LabeledAutomaton& s, const DotOptions& opt = {});
std::string emit_dot(const SetAutomaton& x, const DotOptions& opt = {});
std::string emit_dot(const ProductAutomaton& p, const DotOptions& opt = {});
/// The final observer of the pipeline with nested (or flattened) state labels.
std::string emit_dot(const HighOrderObserver& h, const DotOptions& opt = {});
/// The lifted composition of level k >= 2 with "(q,<nested>)" state labels.
std::string emit_level_composition(const HighOrderObserver& h, std::size_t k, const DotOptions& opt = {});

}  // namespace hoobs
