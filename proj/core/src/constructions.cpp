#include "hoobs/constructions.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "hoobs/errors.hpp"
#include "step_index.hpp"

namespace hoobs {

void StateBudget::charge(std::size_t n) {
    used_ += n;
    if (used_ > cap_) {
        throw ResourceError("state cap of " + std::to_string(cap_) + " exceeded");
    }
}

std::size_t SetAutomaton::num_edges() const {
    std::size_t n = 0;
    for (const auto& e : edges_) n += e.size();
    return n;
}

std::optional<std::size_t> SetAutomaton::find(const StateSet& X) const {
    auto it = index_.find(X);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t SetAutomaton::add_state(StateSet X) {
    auto id = states_.size();
    index_.emplace(X, id);
    states_.push_back(std::move(X));
    edges_.emplace_back();
    return id;
}

LabeledAutomaton SetAutomaton::as_labeled(bool named) const {
    NameTable states;
    if (named) {
        for (const auto& X : states_) states.add(render_set(X, source_states_));
    } else {
        states = NameTable::anonymous(states_.size());
    }
    std::vector<Transition> ts;
    for (std::size_t i = 0; i < states_.size(); ++i) {
        for (const auto& e : edges_[i]) {
            ts.push_back({static_cast<StateId>(i), e.label, static_cast<StateId>(e.target)});
        }
    }
    StateSet init;
    if (!states_.empty()) init.insert(0);
    Automaton a(std::move(states), labels_, std::move(ts), std::move(init), states_.empty());
    Labeling l = Labeling::identity(labels_);
    return LabeledAutomaton(std::move(a), std::move(l));
}

std::optional<std::size_t> Observer::next(std::size_t i, LabelId label) const {
    for (const auto& e : edges_.at(i)) {
        if (e.label == label) return e.target;
    }
    return std::nullopt;
}

std::optional<std::size_t> Observer::run(std::span<const LabelId> alpha) const {
    if (states_.empty()) return std::nullopt;
    std::size_t cur = 0;
    for (LabelId l : alpha) {
        auto n = next(cur, l);
        if (!n) return std::nullopt;
        cur = *n;
    }
    return cur;
}

std::vector<LabelId> Observer::path_to(std::size_t i) const {
    std::vector<LabelId> path;
    while (i != 0) {
        auto [p, l] = parent_.at(i);
        path.push_back(l);
        i = p;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

namespace detail {

struct SetAutomatonAccess {
    static void init(SetAutomaton& a, const LabeledAutomaton& s) {
        a.labels_ = s.labeling.labels();
        a.label_order_ = s.labeling.labels_by_name();
        a.source_states_ = s.automaton.state_names();
    }

    static Observer observer(const LabeledAutomaton& s, const ObserverOptions& opt) {
        Observer obs;
        init(obs, s);
        obs.completed_ = opt.completed;
        StepIndex idx(s);
        const auto nlabels = s.labeling.labels().size();

        auto discover = [&](StateSet X, std::size_t parent, LabelId via) -> std::pair<std::size_t, bool> {
            if (auto hit = obs.find(X)) return {*hit, true};
            if (opt.budget) opt.budget->charge();
            bool is_empty = X.empty();
            auto id = obs.add_state(X);
            obs.parent_.emplace_back(parent, via);
            if (is_empty && opt.completed) obs.sink_ = id;
            bool go_on = !opt.on_state || opt.on_state(id, obs.states_[id]);
            return {id, go_on};
        };

        std::vector<StateId> init(s.automaton.initial().begin(), s.automaton.initial().end());
        if (!discover(idx.closure(std::move(init)), 0, kEpsilon).second) {
            obs.finished_ = false;
            return obs;
        }
        std::vector<std::vector<StateId>> buckets(nlabels);
        for (std::size_t i = 0; i < obs.states_.size(); ++i) {
            if (obs.states_[i].empty()) {
                if (opt.completed) {
                    for (LabelId l : obs.label_order_) obs.edges_[i].push_back({l, i});
                }
                continue;
            }
            idx.step_all(obs.states_[i], buckets);
            for (LabelId l : obs.label_order_) {
                if (buckets[l].empty() && !opt.completed) continue;
                StateSet Y = idx.closure(buckets[l]);
                auto [target, go_on] = discover(std::move(Y), i, l);
                obs.edges_[i].push_back({l, target});
                if (!go_on) {
                    obs.finished_ = false;
                    return obs;
                }
            }
        }
        return obs;
    }

    static Detector detector(const LabeledAutomaton& s, StateBudget* budget) {
        Detector det;
        init(det, s);
        StepIndex idx(s);
        const auto nlabels = s.labeling.labels().size();

        auto discover = [&](StateSet X) {
            if (auto hit = det.find(X)) return *hit;
            if (budget) budget->charge();
            return det.add_state(std::move(X));
        };

        std::vector<StateId> init(s.automaton.initial().begin(), s.automaton.initial().end());
        discover(idx.closure(std::move(init)));
        std::vector<std::vector<StateId>> buckets(nlabels);
        for (std::size_t i = 0; i < det.states_.size(); ++i) {
            idx.step_all(det.states_[i], buckets);
            for (LabelId l : det.label_order_) {
                if (buckets[l].empty()) continue;
                StateSet Y = idx.closure(buckets[l]);
                if (Y.size() == 1) {
                    auto t = discover(Y);
                    det.edges_[i].push_back({l, t});
                    continue;
                }
                for (std::size_t a = 0; a < Y.size(); ++a) {
                    for (std::size_t b = a + 1; b < Y.size(); ++b) {
                        auto t = discover(StateSet::from_sorted({Y[a], Y[b]}));
                        det.edges_[i].push_back({l, t});
                    }
                }
            }
        }
        return det;
    }
};

}  // namespace detail

Observer build_observer(const LabeledAutomaton& s, const ObserverOptions& opt) {
    return detail::SetAutomatonAccess::observer(s, opt);
}

Observer build_observer(const LabeledAutomaton& s, bool completed) {
    ObserverOptions opt;
    opt.completed = completed;
    return build_observer(s, opt);
}

Detector build_detector(const LabeledAutomaton& s, StateBudget* budget) {
    return detail::SetAutomatonAccess::detector(s, budget);
}

namespace {

std::string pair_event_name(const NameTable& e1, const NameTable& e2, std::pair<EventId, EventId> p) {
    std::string a = p.first == kNoEvent ? std::string(kEpsName) : e1.name(p.first);
    std::string b = p.second == kNoEvent ? std::string(kEpsName) : e2.name(p.second);
    return "(" + a + "," + b + ")";
}

}  // namespace

ProductAutomaton concurrent_composition(const LabeledAutomaton& s1, const LabeledAutomaton& s2,
                                        StateBudget* budget) {
    const auto& L1 = s1.labeling.labels();
    const auto& L2 = s2.labeling.labels();
    auto n1 = L1.names(), n2 = L2.names();
    std::sort(n1.begin(), n1.end());
    std::sort(n2.begin(), n2.end());
    if (n1 != n2) throw ValidationError("concurrent composition: label alphabets differ");
    // Right labels expressed as left label ids.
    std::vector<LabelId> to_left(L2.size());
    for (LabelId l = 0; l < L2.size(); ++l) to_left[l] = L1.at(L2.name(l));

    const auto& a1 = s1.automaton;
    const auto& a2 = s2.automaton;
    // Per right state: observable moves keyed by left label id, and silent moves.
    std::vector<std::vector<std::tuple<LabelId, EventId, StateId>>> obs2(a2.num_states());
    std::vector<std::vector<std::pair<EventId, StateId>>> sil2(a2.num_states());
    for (const auto& t : a2.transitions()) {
        LabelId l = s2.labeling(t.event);
        if (l == kEpsilon) {
            sil2[t.src].emplace_back(t.event, t.dst);
        } else {
            obs2[t.src].emplace_back(to_left[l], t.event, t.dst);
        }
    }
    for (auto& v : obs2) std::sort(v.begin(), v.end());

    std::vector<std::pair<StateId, StateId>> pairs;
    std::unordered_map<std::uint64_t, StateId> index;
    struct Raw {
        StateId src;
        std::pair<EventId, EventId> ev;
        StateId dst;
    };
    std::vector<Raw> raw;
    auto key = [&](StateId l, StateId r) { return (static_cast<std::uint64_t>(l) << 32) | r; };
    auto discover = [&](StateId l, StateId r) {
        auto [it, fresh] = index.emplace(key(l, r), static_cast<StateId>(pairs.size()));
        if (fresh) {
            if (budget) budget->charge();
            pairs.emplace_back(l, r);
        }
        return it->second;
    };

    std::vector<StateId> initial;
    for (StateId q1 : a1.initial()) {
        for (StateId q2 : a2.initial()) initial.push_back(discover(q1, q2));
    }
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        auto [p, r] = pairs[i];
        auto src = static_cast<StateId>(i);
        for (const auto& t : a1.out(p)) {
            LabelId l = s1.labeling(t.event);
            if (l == kEpsilon) {
                StateId d = discover(t.dst, r);
                raw.push_back({src, {t.event, kNoEvent}, d});
                continue;
            }
            auto& moves = obs2[r];
            auto lo = std::lower_bound(moves.begin(), moves.end(), std::make_tuple(l, EventId{0}, StateId{0}));
            for (auto it = lo; it != moves.end() && std::get<0>(*it) == l; ++it) {
                StateId d = discover(t.dst, std::get<2>(*it));
                raw.push_back({src, {t.event, std::get<1>(*it)}, d});
            }
        }
        for (const auto& [e2, r2] : sil2[r]) {
            StateId d = discover(p, r2);
            raw.push_back({src, {kNoEvent, e2}, d});
        }
    }

    std::vector<std::pair<EventId, EventId>> events;
    for (const auto& t : raw) events.push_back(t.ev);
    std::sort(events.begin(), events.end());
    events.erase(std::unique(events.begin(), events.end()), events.end());
    NameTable event_names;
    std::vector<LabelId> labels;
    for (const auto& ev : events) {
        event_names.add(pair_event_name(a1.event_names(), a2.event_names(), ev));
        labels.push_back(ev.first == kNoEvent ? kEpsilon : s1.labeling(ev.first));
    }
    std::vector<Transition> ts;
    ts.reserve(raw.size());
    for (const auto& t : raw) {
        auto e = static_cast<EventId>(std::lower_bound(events.begin(), events.end(), t.ev) - events.begin());
        ts.push_back({t.src, e, t.dst});
    }

    NameTable state_names;
    const auto& sn1 = a1.state_names();
    const auto& sn2 = a2.state_names();
    if (sn1.is_anonymous() || sn2.is_anonymous()) {
        state_names = NameTable::anonymous(pairs.size());
    } else {
        for (const auto& [l, r] : pairs) state_names.add("(" + sn1.name(l) + "," + sn2.name(r) + ")");
    }
    Automaton a(std::move(state_names), std::move(event_names), std::move(ts), StateSet(initial),
                initial.empty());
    ProductAutomaton out{LabeledAutomaton(std::move(a), Labeling(std::move(labels), L1)), std::move(pairs),
                         std::move(events)};
    return out;
}

NonsecretPart nonsecret_subautomaton(const LabeledAutomaton& s, const StateSet& secrets) {
    const auto& a = s.automaton;
    for (StateId q : secrets) {
        if (q >= a.num_states()) throw ValidationError("secret state out of range");
    }
    std::vector<StateId> renum(a.num_states(), kNoEvent);
    std::vector<StateId> original;
    NameTable names;
    for (StateId q = 0; q < a.num_states(); ++q) {
        if (secrets.contains(q)) continue;
        renum[q] = names.add(a.state_names().name(q));
        original.push_back(q);
    }
    std::vector<Transition> ts;
    for (const auto& t : a.transitions()) {
        if (renum[t.src] != kNoEvent && renum[t.dst] != kNoEvent) {
            ts.push_back({renum[t.src], t.event, renum[t.dst]});
        }
    }
    std::vector<StateId> init;
    for (StateId q : a.initial()) {
        if (renum[q] != kNoEvent) init.push_back(renum[q]);
    }
    bool empty = init.empty();
    Automaton out(std::move(names), a.event_names(), std::move(ts), StateSet(std::move(init)), true);
    return {LabeledAutomaton(std::move(out), s.labeling), std::move(original), empty};
}

DiamondCompletion diamond_completion(const LabeledAutomaton& s_ns) {
    const auto& a = s_ns.automaton;
    if (a.state_names().find(kDiamondName)) {
        throw ValidationError("state name '<>' is reserved");
    }
    NameTable names;
    for (const auto& n : a.state_names().names()) names.add(n);
    auto diamond = names.add(std::string(kDiamondName));
    std::vector<Transition> ts = a.transitions();
    for (StateId q = 0; q < a.num_states(); ++q) {
        for (EventId e = 0; e < a.num_events(); ++e) {
            if (a.out(q, e).empty()) ts.push_back({q, e, diamond});
        }
    }
    for (EventId e = 0; e < a.num_events(); ++e) ts.push_back({diamond, e, diamond});
    StateSet init = a.initial();
    if (init.empty()) init.insert(diamond);
    Automaton out(std::move(names), a.event_names(), std::move(ts), std::move(init));
    return {LabeledAutomaton(std::move(out), s_ns.labeling), diamond};
}

}  // namespace hoobs
