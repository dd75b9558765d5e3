#pragma once

#include <functional>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hoobs/automaton.hpp"

namespace hoobs {

inline constexpr std::size_t kDefaultStateCap = 1'000'000;

/// Counts states created across one or more constructions and throws
/// ResourceError once the cap is exceeded.
class StateBudget {
public:
    explicit StateBudget(std::size_t cap = kDefaultStateCap) : cap_(cap) {}
    void charge(std::size_t n = 1);
    std::size_t used() const { return used_; }
    std::size_t cap() const { return cap_; }

private:
    std::size_t cap_;
    std::size_t used_ = 0;
};

struct ObserverOptions {
    /// Route empty successor sets to an absorbing empty sink.
    bool completed = false;
    StateBudget* budget = nullptr;
    /// Called when a state is discovered; returning false stops exploration.
    std::function<bool(std::size_t, const StateSet&)> on_state;
};

namespace detail {
struct SetAutomatonAccess;
}

/// Automaton over labels whose states are subsets of a source automaton's states.
/// State 0 is the initial state; ids follow BFS discovery order with labels
/// explored in name order.
class SetAutomaton {
public:
    struct Edge {
        LabelId label;
        std::size_t target;
    };

    std::size_t size() const { return states_.size(); }
    const StateSet& state(std::size_t i) const { return states_.at(i); }
    const std::vector<Edge>& edges(std::size_t i) const { return edges_.at(i); }
    std::size_t num_edges() const;
    const NameTable& labels() const { return labels_; }
    const std::vector<LabelId>& label_order() const { return label_order_; }
    /// Names of the source automaton's states, for rendering.
    const NameTable& source_states() const { return source_states_; }
    std::optional<std::size_t> find(const StateSet& X) const;

    /// Wraps this automaton as an LFSA whose events are the labels, identity-labelled.
    /// With `named`, states are named by their rendered subsets, otherwise "s<i>".
    LabeledAutomaton as_labeled(bool named = true) const;

protected:
    std::size_t add_state(StateSet X);

    std::vector<StateSet> states_;
    std::vector<std::vector<Edge>> edges_;
    NameTable labels_;
    std::vector<LabelId> label_order_;
    NameTable source_states_;
    std::unordered_map<StateSet, std::size_t, StateSetHash> index_;

    friend struct detail::SetAutomatonAccess;
};

/// Deterministic observer (powerset construction with silent closure).
class Observer : public SetAutomaton {
public:
    std::optional<std::size_t> next(std::size_t i, LabelId label) const;
    /// Index reached from the initial state, or nullopt if alpha is not generated.
    std::optional<std::size_t> run(std::span<const LabelId> alpha) const;
    /// Shortest, then lexicographically least, label sequence reaching state i.
    std::vector<LabelId> path_to(std::size_t i) const;
    bool completed() const { return completed_; }
    /// Index of the empty sink in the completed variant, if present.
    std::optional<std::size_t> sink() const { return sink_; }
    /// False when exploration was stopped early by the visitor.
    bool finished() const { return finished_; }

private:
    std::vector<std::pair<std::size_t, LabelId>> parent_;
    bool completed_ = false;
    bool finished_ = true;
    std::optional<std::size_t> sink_;

    friend struct detail::SetAutomatonAccess;
};

/// Nondeterministic detector: non-initial states have one or two elements.
class Detector : public SetAutomaton {
    friend struct detail::SetAutomatonAccess;
};

Observer build_observer(const LabeledAutomaton& s, const ObserverOptions& opt);
Observer build_observer(const LabeledAutomaton& s, bool completed = false);

Detector build_detector(const LabeledAutomaton& s, StateBudget* budget = nullptr);

inline constexpr EventId kNoEvent = std::numeric_limits<EventId>::max();

/// CC(S1, S2): reachable part of the concurrent composition.
struct ProductAutomaton {
    LabeledAutomaton lfsa;
    std::vector<std::pair<StateId, StateId>> state_pairs;
    /// kNoEvent marks the silent side of a lone move.
    std::vector<std::pair<EventId, EventId>> event_pairs;
};

/// Both labelings must use the same label names. Product state names are
/// "(l,r)" unless a factor has anonymous state names.
ProductAutomaton concurrent_composition(const LabeledAutomaton& s1, const LabeledAutomaton& s2,
                                        StateBudget* budget = nullptr);

struct NonsecretPart {
    LabeledAutomaton lfsa;
    /// original[i] is the state of the input automaton that state i came from.
    std::vector<StateId> original;
    /// Every initial state was secret; the part has no behaviour.
    bool empty = false;
};

/// Removes the secret states and all transitions touching them. Events are kept.
NonsecretPart nonsecret_subautomaton(const LabeledAutomaton& s, const StateSet& secrets);

inline constexpr std::string_view kDiamondName = "<>";

struct DiamondCompletion {
    LabeledAutomaton lfsa;
    StateId diamond;
};

/// Adds the fresh state <> and sends every missing (state, event) move to it.
/// When the input has no initial state, <> becomes initial.
DiamondCompletion diamond_completion(const LabeledAutomaton& s_ns);

}  // namespace hoobs
