#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hoobs/high_order.hpp"
#include "hoobs/predicate.hpp"

namespace hoobs {

struct Witness {
    /// Observed label sequence, as names.
    std::vector<std::string> alpha;
    /// Rendered violating state of the walked automaton.
    std::string state;
    /// Rendered flattened estimate (for strong CSO, the violating pair set).
    std::string estimate;
};

struct Verdict {
    std::string property;
    bool holds = true;
    std::optional<Witness> witness;
    std::size_t states_visited = 0;
    /// "observer", "detector", "han" or "diamond".
    std::string stage;
    std::size_t order = 1;
};

enum class StageChoice { observer, detector, automatic };

/// Walks Obs(S) in BFS order and evaluates p at every state. With `lazy` the
/// observer is built only up to the first violation.
Verdict verify_order1(const LabeledAutomaton& s, const Formula& p, bool lazy = true);

enum class ScsoMethod { han, diamond };

Verdict verify_scso(const LabeledAutomaton& s, const StateSet& secrets, ScsoMethod method);

/// Builds (or fetches from `cache`) the order-n pipeline and evaluates p on the
/// flattened value of every reachable state. Throws ValidationError when the
/// detector stage is requested for an ineligible predicate.
Verdict verify_order_n(PipelineCache& cache, const AgentChain& chain, const Formula& p,
                       StageChoice stage = StageChoice::automatic);
Verdict verify_order_n(const Automaton& g, const AgentChain& chain, const Formula& p,
                       StageChoice stage = StageChoice::automatic, std::size_t state_cap = kDefaultStateCap);

/// Flattened order-n estimate after observing alpha (label names of A_n).
/// Throws NotGeneratedError if alpha is not generated.
Estimate estimate_at(PipelineCache& cache, const AgentChain& chain, const std::vector<std::string>& alpha,
                     Stage stage = Stage::observer);
Estimate estimate_at(const Automaton& g, const AgentChain& chain, const std::vector<std::string>& alpha,
                     Stage stage = Stage::observer);

}  // namespace hoobs
