#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "hoobs/hoobs.hpp"

namespace hoobs::test {

/// Test-side reference computations written directly from the definitions.
/// Nothing here calls the library's constructions.

/// All traces of length <= bound, collected by depth-first search over runs.
std::set<std::vector<EventId>> naive_traces(const Automaton& g, std::size_t bound);

/// Projection of an event word onto `observable`.
std::vector<EventId> naive_project(const std::vector<EventId>& s, const EventSet& observable);

/// M(G under P, alpha): states q with a run q0 -s-> q, q0 initial, P(s) = alpha.
/// Exact: breadth-first search over (state, position in alpha).
StateSet naive_estimate(const Automaton& g, const EventSet& observable, const std::vector<EventId>& alpha);

/// Labels observed along s under an arbitrary labeling.
std::vector<LabelId> naive_labels(const std::vector<EventId>& s, const Labeling& l);

/// M(S, alpha) for a general labeling; exact, same search as naive_estimate.
StateSet naive_label_estimate(const LabeledAutomaton& s, const std::vector<LabelId>& alpha);

/// States reached from X by one e-move followed by moves unobservable under `observable`.
StateSet naive_step(const Automaton& g, const EventSet& observable, const StateSet& X, EventId e);

/// Exact order-k knowledge, tracked along runs.
///
/// Level 1 knowledge after s is M1(P1(s)). Level k knowledge after s is the set
/// of pairs (state after s', level k-1 knowledge after s') over all runs s' with
/// Pk(s') = Pk(s). Updates are computed event by event, so the value is exact
/// without any length bound.
class Knowledge {
public:
    Knowledge(const Automaton& g, const std::vector<EventSet>& chain);

    /// Flattened order-n estimate after observing alpha (events of E_n),
    /// or nullopt if alpha is not generated.
    std::optional<Estimate> estimate(std::size_t n, const std::vector<EventId>& alpha) const;

private:
    struct Info {
        int level = 1;
        std::vector<StateId> base;
        std::vector<StateId> qs;
        std::vector<Info> subs;
        bool operator<(const Info& o) const;
        bool operator==(const Info& o) const;
    };
    Info initial(int level) const;
    Info update(const Info& x, EventId e) const;
    Info close(int level, std::set<std::pair<StateId, std::size_t>> pairs, std::vector<Info>& pool) const;
    Info make_level(int level, const std::set<std::pair<StateId, std::size_t>>& pairs,
                    const std::vector<Info>& pool) const;
    Estimate flatten(const Info& x) const;
    bool empty(const Info& x) const { return x.level == 1 ? x.base.empty() : x.qs.empty(); }

    const Automaton& g_;
    std::vector<EventSet> chain_;
};

/// Words over `alphabet` of length <= bound, shortlex.
std::vector<std::vector<EventId>> words_up_to(const EventSet& alphabet, std::size_t bound);

}  // namespace hoobs::test
