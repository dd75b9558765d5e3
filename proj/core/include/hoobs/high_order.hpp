#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hoobs/constructions.hpp"
#include "hoobs/nested.hpp"

namespace hoobs {

enum class Stage { observer, detector };

std::string to_string(Stage s);

/// Ordered agents A1..An; A(k+1) reasons about Ak.
using AgentChain = std::vector<AgentProfile>;

/// Renames every product event to its first component and relabels with the
/// projection onto `next_observable`. Throws InternalError if a product event
/// has a silent first component.
LabeledAutomaton lift_composition(const ProductAutomaton& product, const NameTable& left_events,
                                  const EventSet& next_observable);

/// One level of the pipeline. Level 1 holds the observer (or detector) of G
/// under P1. Level k >= 2 holds CC(G under P(k-1), level k-1), its lift to
/// P(k), and the observer of the lift.
struct PipelineLevel {
    AgentProfile agent;
    std::optional<ProductAutomaton> product;
    std::optional<LabeledAutomaton> lifted;
    std::variant<Observer, Detector> automaton;
    /// Nested value of each state of `automaton`.
    std::vector<NestedState> values;

    const SetAutomaton& set_automaton() const;
};

/// The order-n observer of G for a chain of agents, built level by level.
class HighOrderObserver {
public:
    /// Throws ValidationError on an empty chain or on the detector stage with n = 1,
    /// ResourceError when more than `state_cap` states are built.
    HighOrderObserver(const Automaton& g, const AgentChain& chain, Stage stage,
                      std::size_t state_cap = kDefaultStateCap);

    /// Same pipeline with one more agent appended; prefix levels are shared.
    static HighOrderObserver extend(const HighOrderObserver& prefix, const AgentProfile& next,
                                    std::size_t state_cap = kDefaultStateCap);

    std::size_t order() const { return levels_.size(); }
    Stage stage() const { return stage_; }
    const Automaton& system() const { return *g_; }
    AgentChain chain() const;
    /// 1-based.
    const PipelineLevel& level(std::size_t k) const { return *levels_.at(k - 1); }
    /// The order-n observer. For n = 1 in the detector stage there is none.
    const Observer& final_observer() const;
    const NestedState& value(std::size_t i) const { return levels_.back()->values.at(i); }
    Estimate estimate(std::size_t i) const { return flatten(value(i)); }
    /// Labeling of G by the last agent's projection (the alphabet of alpha).
    Labeling final_labeling() const;
    std::optional<std::size_t> run(std::span<const LabelId> alpha) const;
    std::size_t states_built() const { return states_built_; }

    /// "(q,<nested value>)" for a product state of level k >= 2.
    std::string render_product_state(std::size_t k, StateId s) const;

private:
    HighOrderObserver() = default;
    void push_first(const AgentProfile& a1, StateBudget& budget);
    void push_next(const AgentProfile& next, StateBudget& budget);

    std::shared_ptr<const Automaton> g_;
    Stage stage_ = Stage::observer;
    std::vector<std::shared_ptr<const PipelineLevel>> levels_;
    std::size_t states_built_ = 0;
};

/// E_i subset-or-superset of E_{i+1} for every consecutive pair.
bool nested_chain_fastpath_applicable(const AgentChain& chain);

/// Per-level reachable-state counts of the pipeline next to those of the plain
/// observer Obs_{A_k}(G).
struct FastPathCheck {
    bool applicable = false;
    std::vector<std::size_t> pipeline_counts;
    std::vector<std::size_t> plain_counts;
    bool counts_equal = false;
};

FastPathCheck check_fastpath(const HighOrderObserver& h);

/// Shares pipelines and their prefixes between queries on one system.
class PipelineCache {
public:
    explicit PipelineCache(const Automaton& g, std::size_t state_cap = kDefaultStateCap)
        : g_(g), cap_(state_cap) {}

    std::shared_ptr<const HighOrderObserver> get(const AgentChain& chain, Stage stage);

private:
    Automaton g_;
    std::size_t cap_;
    std::map<std::pair<std::vector<std::string>, Stage>, std::shared_ptr<const HighOrderObserver>> cache_;
};

}  // namespace hoobs
