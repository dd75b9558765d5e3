#pragma once

#include <compare>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "hoobs/names.hpp"

namespace hoobs {

struct Transition {
    StateId src;
    EventId event;
    StateId dst;

    friend auto operator<=>(const Transition&, const Transition&) = default;
};

/// Nondeterministic finite automaton G = (Q, E, delta, Q0). States and events are
/// dense ids; transitions are kept sorted by (src, event, dst) without duplicates.
class Automaton {
public:
    Automaton() = default;
    /// Validates endpoints and ids. Throws ValidationError when `initial` is empty
    /// unless `allow_empty_initial` is set.
    Automaton(NameTable states, NameTable events, std::vector<Transition> transitions,
              StateSet initial, bool allow_empty_initial = false);

    std::size_t num_states() const { return states_.size(); }
    std::size_t num_events() const { return events_.size(); }
    const NameTable& state_names() const { return states_; }
    const NameTable& event_names() const { return events_; }
    const StateSet& initial() const { return initial_; }
    const std::vector<Transition>& transitions() const { return transitions_; }

    /// Outgoing transitions of q, sorted by (event, dst).
    std::span<const Transition> out(StateId q) const;
    /// Outgoing transitions of q labelled with event e.
    std::span<const Transition> out(StateId q, EventId e) const;

private:
    NameTable states_;
    NameTable events_;
    std::vector<Transition> transitions_;
    std::vector<std::size_t> offsets_;
    StateSet initial_;
};

inline constexpr LabelId kEpsilon = std::numeric_limits<LabelId>::max();

/// Maps every event to a label or to epsilon.
class Labeling {
public:
    Labeling() = default;
    Labeling(std::vector<LabelId> map, NameTable labels);

    /// P_{E'}: observable events keep their own name as label, the rest are silent.
    static Labeling projection(const NameTable& events, const EventSet& observable);
    /// Every event observable under its own name.
    static Labeling identity(const NameTable& events);

    LabelId operator()(EventId e) const { return map_.at(e); }
    bool observable(EventId e) const { return map_.at(e) != kEpsilon; }
    std::size_t num_events() const { return map_.size(); }
    const NameTable& labels() const { return labels_; }
    const std::vector<LabelId>& map() const { return map_; }
    EventSet observable_events() const;
    /// Label ids ordered by name; exploration order for observers and witnesses.
    std::vector<LabelId> labels_by_name() const;

private:
    std::vector<LabelId> map_;
    NameTable labels_;
};

struct LabeledAutomaton {
    LabeledAutomaton() = default;
    LabeledAutomaton(Automaton a, Labeling l);

    Automaton automaton;
    Labeling labeling;
};

/// An agent and the events it observes.
struct AgentProfile {
    std::string name;
    EventSet observable;
};

/// Union of delta(q, word) over q in `from`.
StateSet extended_transition(const Automaton& a, const StateSet& from, std::span<const EventId> word);

/// Sub-automaton induced by the states reachable from the initial set.
Automaton reachable_part(const Automaton& a);

/// Least superset of X closed under silent transitions.
StateSet unobservable_closure(const LabeledAutomaton& s, const StateSet& X);

/// States reached from X by one transition carrying label `label` (no closure).
StateSet label_step(const LabeledAutomaton& s, const StateSet& X, LabelId label);

/// M(S, alpha). Empty iff alpha is not generated.
StateSet current_state_estimate(const LabeledAutomaton& s, std::span<const LabelId> alpha);

/// Converts label names to ids; throws ValidationError on unknown names.
std::vector<LabelId> parse_labels(const Labeling& l, const std::vector<std::string>& names);

}  // namespace hoobs
