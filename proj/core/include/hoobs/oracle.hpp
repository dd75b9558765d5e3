#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hoobs/high_order.hpp"
#include "hoobs/predicate.hpp"
#include "hoobs/verifier.hpp"

namespace hoobs {

struct OracleConfig {
    std::size_t max_trace_len = 8;
    std::size_t stabilization_window = 2;
    /// Extra trace length per level below the top one. With equal bounds at
    /// every level, traces at the length limit get truncated inner estimates.
    std::size_t level_slack = 2;
    /// Size guard on the number of enumerated traces.
    std::size_t max_traces = 1'000'000;
};

/// All s in L(G) with |s| <= bound, in shortlex order of event ids.
std::vector<std::vector<EventId>> enumerate_traces(const Automaton& g, std::size_t bound,
                                                   std::size_t max_traces = 1'000'000);

/// Brute-force order-k estimates for k = 1..n by enumerating every trace up to a
/// length bound and evaluating the nested set-builder definitions literally.
/// Level k of an n-agent chain uses traces up to max_trace_len + (n-k)*level_slack.
/// Uses only the transition relation of G.
class TraceOracle {
public:
    TraceOracle(const Automaton& g, const AgentChain& chain, const OracleConfig& cfg = {});

    struct Result {
        /// Empty base set / empty set when alpha is not generated within the bound.
        Estimate value;
        bool generated = false;
        /// The same value was obtained at every bound down to max_trace_len - window.
        bool stabilized = false;
    };

    /// Order-n estimate (1 <= n <= chain length) after the observation alpha,
    /// given as event names of A_n. Throws ValidationError if alpha is longer
    /// than the bound or names an event A_n does not observe.
    Result estimate(std::size_t n, const std::vector<std::string>& alpha) const;

    /// Every observation P_n(s) of a trace within the level-n bound, shortlex by event name.
    std::vector<std::vector<std::string>> observations(std::size_t n) const;

    std::size_t num_traces() const { return nodes_.size(); }

private:
    struct Node {
        std::size_t parent;
        EventId event;
        std::size_t depth;
        StateSet end;
        std::vector<std::size_t> word;  // projected word id per level
    };
    struct Words {
        std::vector<std::size_t> parent;
        std::vector<EventId> event;
        std::vector<std::size_t> length;
        std::map<std::pair<std::size_t, EventId>, std::size_t> child;
    };
    /// values[k][w] for words of level k+1; level k+1 uses traces of length <= bound + slack(k).
    std::vector<std::vector<std::optional<Estimate>>> aggregate(std::size_t bound) const;

    Automaton g_;
    AgentChain chain_;
    OracleConfig cfg_;
    std::vector<Node> nodes_;
    std::vector<Words> words_;
    /// aggregate() at max_trace_len - j for j = 0..window.
    std::vector<std::vector<std::vector<std::optional<Estimate>>>> tables_;
};

/// Convenience wrapper building a TraceOracle for one query.
TraceOracle::Result oracle_estimate_order_n(const Automaton& g, const AgentChain& chain, std::size_t n,
                                            const std::vector<std::string>& alpha, const OracleConfig& cfg = {});

/// Evaluates p on the oracle's estimates for every generated observation up to
/// the bound, in shortlex order. Only stabilized estimates can produce a
/// violation; holds=true means no violation within the bound.
Verdict oracle_verify(const Automaton& g, const AgentChain& chain, const Formula& p, const OracleConfig& cfg = {});

}  // namespace hoobs
