#include "hoobs/automaton.hpp"

#include <algorithm>
#include <deque>

#include "hoobs/errors.hpp"

namespace hoobs {

Automaton::Automaton(NameTable states, NameTable events, std::vector<Transition> transitions,
                     StateSet initial, bool allow_empty_initial)
    : states_(std::move(states)), events_(std::move(events)), transitions_(std::move(transitions)),
      initial_(std::move(initial)) {
    const auto n = states_.size();
    for (const auto& t : transitions_) {
        if (t.src >= n || t.dst >= n) throw ValidationError("transition endpoint out of range");
        if (t.event >= events_.size()) throw ValidationError("transition event out of range");
    }
    for (StateId q : initial_) {
        if (q >= n) throw ValidationError("initial state out of range");
    }
    if (initial_.empty() && !allow_empty_initial) throw ValidationError("initial state set is empty");
    std::sort(transitions_.begin(), transitions_.end());
    transitions_.erase(std::unique(transitions_.begin(), transitions_.end()), transitions_.end());
    offsets_.assign(n + 1, 0);
    for (const auto& t : transitions_) ++offsets_[t.src + 1];
    for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] += offsets_[i];
}

std::span<const Transition> Automaton::out(StateId q) const {
    return {transitions_.data() + offsets_[q], transitions_.data() + offsets_[q + 1]};
}

std::span<const Transition> Automaton::out(StateId q, EventId e) const {
    auto all = out(q);
    auto lo = std::lower_bound(all.begin(), all.end(), e,
                               [](const Transition& t, EventId ev) { return t.event < ev; });
    auto hi = std::upper_bound(lo, all.end(), e,
                               [](EventId ev, const Transition& t) { return ev < t.event; });
    return {lo, hi};
}

Labeling::Labeling(std::vector<LabelId> map, NameTable labels)
    : map_(std::move(map)), labels_(std::move(labels)) {
    for (LabelId l : map_) {
        if (l != kEpsilon && l >= labels_.size()) throw ValidationError("label id out of range");
    }
    for (const auto& n : labels_.names()) {
        if (n == kEpsName) throw ValidationError("'eps' is reserved and cannot be a label");
    }
}

Labeling Labeling::projection(const NameTable& events, const EventSet& observable) {
    std::vector<LabelId> map(events.size(), kEpsilon);
    NameTable labels;
    for (EventId e : observable) {
        if (e >= events.size()) throw ValidationError("observable event out of range");
        map[e] = labels.add(events.name(e));
    }
    return Labeling(std::move(map), std::move(labels));
}

Labeling Labeling::identity(const NameTable& events) {
    EventSet all;
    for (EventId e = 0; e < events.size(); ++e) all.insert(e);
    return projection(events, all);
}

EventSet Labeling::observable_events() const {
    std::vector<EventId> out;
    for (EventId e = 0; e < map_.size(); ++e) {
        if (map_[e] != kEpsilon) out.push_back(e);
    }
    return EventSet::from_sorted(std::move(out));
}

std::vector<LabelId> Labeling::labels_by_name() const {
    std::vector<LabelId> ids(labels_.size());
    for (LabelId i = 0; i < ids.size(); ++i) ids[i] = i;
    auto names = labels_.names();
    std::sort(ids.begin(), ids.end(), [&](LabelId a, LabelId b) { return names[a] < names[b]; });
    return ids;
}

LabeledAutomaton::LabeledAutomaton(Automaton a, Labeling l) : automaton(std::move(a)), labeling(std::move(l)) {
    if (labeling.num_events() != automaton.num_events()) {
        throw ValidationError("labeling does not cover the automaton's events");
    }
}

StateSet extended_transition(const Automaton& a, const StateSet& from, std::span<const EventId> word) {
    for (StateId q : from) {
        if (q >= a.num_states()) throw ValidationError("state out of range");
    }
    StateSet cur = from;
    for (EventId e : word) {
        if (e >= a.num_events()) throw ValidationError("event out of range");
        std::vector<StateId> next;
        for (StateId q : cur) {
            for (const auto& t : a.out(q, e)) next.push_back(t.dst);
        }
        cur = StateSet(std::move(next));
    }
    return cur;
}

Automaton reachable_part(const Automaton& a) {
    std::vector<char> seen(a.num_states(), 0);
    std::deque<StateId> queue;
    for (StateId q : a.initial()) {
        seen[q] = 1;
        queue.push_back(q);
    }
    while (!queue.empty()) {
        StateId q = queue.front();
        queue.pop_front();
        for (const auto& t : a.out(q)) {
            if (!seen[t.dst]) {
                seen[t.dst] = 1;
                queue.push_back(t.dst);
            }
        }
    }
    std::vector<StateId> renum(a.num_states(), 0);
    NameTable names;
    for (StateId q = 0; q < a.num_states(); ++q) {
        if (seen[q]) renum[q] = names.add(a.state_names().name(q));
    }
    std::vector<Transition> ts;
    for (const auto& t : a.transitions()) {
        if (seen[t.src]) ts.push_back({renum[t.src], t.event, renum[t.dst]});
    }
    std::vector<StateId> init;
    for (StateId q : a.initial()) init.push_back(renum[q]);
    return Automaton(std::move(names), a.event_names(), std::move(ts), StateSet(std::move(init)),
                     a.initial().empty());
}

StateSet unobservable_closure(const LabeledAutomaton& s, const StateSet& X) {
    const auto& a = s.automaton;
    std::vector<char> seen(a.num_states(), 0);
    std::vector<StateId> stack(X.begin(), X.end());
    for (StateId q : X) seen.at(q) = 1;
    std::vector<StateId> out(X.begin(), X.end());
    while (!stack.empty()) {
        StateId q = stack.back();
        stack.pop_back();
        for (const auto& t : a.out(q)) {
            if (!s.labeling.observable(t.event) && !seen[t.dst]) {
                seen[t.dst] = 1;
                stack.push_back(t.dst);
                out.push_back(t.dst);
            }
        }
    }
    return StateSet(std::move(out));
}

StateSet label_step(const LabeledAutomaton& s, const StateSet& X, LabelId label) {
    std::vector<StateId> out;
    for (StateId q : X) {
        for (const auto& t : s.automaton.out(q)) {
            if (s.labeling(t.event) == label) out.push_back(t.dst);
        }
    }
    return StateSet(std::move(out));
}

StateSet current_state_estimate(const LabeledAutomaton& s, std::span<const LabelId> alpha) {
    StateSet cur = unobservable_closure(s, s.automaton.initial());
    for (LabelId l : alpha) {
        if (l >= s.labeling.labels().size()) throw ValidationError("label out of range");
        if (cur.empty()) break;
        cur = unobservable_closure(s, label_step(s, cur, l));
    }
    return cur;
}

std::vector<LabelId> parse_labels(const Labeling& l, const std::vector<std::string>& names) {
    std::vector<LabelId> out;
    out.reserve(names.size());
    for (const auto& n : names) out.push_back(l.labels().at(n, "label"));
    return out;
}

}  // namespace hoobs
