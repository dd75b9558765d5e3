#include "fixtures.hpp"

#ifndef HOOBS_SCENARIO_DIR
#error "HOOBS_SCENARIO_DIR must be defined"
#endif

namespace hoobs::test {

Automaton make_automaton(const std::vector<std::string>& states, const std::vector<std::string>& events,
                         const std::vector<Edge3>& transitions, const std::vector<std::string>& initial) {
    NameTable qs(states), es(events);
    std::vector<Transition> ts;
    for (const auto& t : transitions) ts.push_back({qs.at(t[0]), es.at(t[1]), qs.at(t[2])});
    std::vector<StateId> init;
    for (const auto& q : initial) init.push_back(qs.at(q));
    return Automaton(qs, es, std::move(ts), StateSet(std::move(init)));
}

AgentProfile make_agent(const Automaton& g, const std::string& name, const std::vector<std::string>& observable) {
    std::vector<EventId> ids;
    for (const auto& e : observable) ids.push_back(g.event_names().at(e));
    return {name, EventSet(std::move(ids))};
}

LabeledAutomaton project(const Automaton& g, const std::vector<std::string>& observable) {
    return LabeledAutomaton(g, Labeling::projection(g.event_names(), make_agent(g, "", observable).observable));
}

StateSet states_of(const Automaton& g, const std::vector<std::string>& names) {
    std::vector<StateId> ids;
    for (const auto& n : names) ids.push_back(g.state_names().at(n));
    return StateSet(std::move(ids));
}

std::vector<LabelId> labels_of(const Labeling& l, const std::vector<std::string>& names) {
    return parse_labels(l, names);
}

Automaton g1() {
    return make_automaton({"0", "1", "2", "3", "4", "5"}, {"a", "b", "c", "d"},
                          {{"0", "a", "1"},
                           {"1", "b", "2"},
                           {"2", "b", "3"},
                           {"3", "c", "2"},
                           {"3", "a", "4"},
                           {"3", "a", "5"},
                           {"4", "d", "4"}},
                          {"0"});
}

Automaton g_cou2() {
    return make_automaton({"0", "1", "2", "3", "4", "5"}, {"a", "b", "c"},
                          {{"0", "c", "2"}, {"2", "b", "4"}, {"0", "a", "1"}, {"1", "b", "3"}, {"2", "b", "5"}}, {"0"});
}

Automaton g_cou3() {
    return make_automaton({"0", "1"}, {"a", "b", "c"}, {{"0", "a", "1"}, {"1", "b", "0"}, {"1", "c", "0"}}, {"0"});
}

namespace {

LabeledAutomaton label_by_a(Automaton g) {
    NameTable labels;
    LabelId a = labels.add("a");
    std::vector<LabelId> map(g.num_events(), kEpsilon);
    map[g.event_names().at("a")] = a;
    return LabeledAutomaton(std::move(g), Labeling(std::move(map), std::move(labels)));
}

}  // namespace

LabeledAutomaton s_scso() {
    return label_by_a(make_automaton(
        {"q0", "q1", "q2", "q3", "q4", "q5"}, {"a", "u"},
        {{"q0", "a", "q1"}, {"q1", "a", "q2"}, {"q0", "u", "q3"}, {"q3", "a", "q4"}, {"q4", "a", "q5"}}, {"q0"}));
}

LabeledAutomaton s_cou0() {
    return label_by_a(
        make_automaton({"q1", "q2", "q3", "q4"}, {"a"}, {{"q1", "a", "q2"}, {"q3", "a", "q4"}}, {"q1", "q3"}));
}

std::string scenario_path(const std::string& file) { return std::string(HOOBS_SCENARIO_DIR) + "/" + file; }

std::vector<std::string> rendered_states(const SetAutomaton& x) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < x.size(); ++i) out.push_back(render_set(x.state(i), x.source_states()));
    return out;
}

std::set<std::tuple<std::string, std::string, std::string>> rendered_edges(const SetAutomaton& x) {
    auto names = rendered_states(x);
    std::set<std::tuple<std::string, std::string, std::string>> out;
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (const auto& e : x.edges(i)) out.insert({names[i], x.labels().name(e.label), names[e.target]});
    }
    return out;
}

std::vector<std::string> product_states(const HighOrderObserver& h, std::size_t k) {
    const auto& p = *h.level(k).product;
    std::vector<std::string> out;
    for (StateId s = 0; s < p.state_pairs.size(); ++s) out.push_back(h.render_product_state(k, s));
    return out;
}

std::set<std::tuple<std::string, std::string, std::string>> product_edges(const HighOrderObserver& h, std::size_t k) {
    const auto& lifted = *h.level(k).lifted;
    auto names = product_states(h, k);
    std::set<std::tuple<std::string, std::string, std::string>> out;
    for (const auto& t : lifted.automaton.transitions()) {
        out.insert({names[t.src], lifted.automaton.event_names().name(t.event), names[t.dst]});
    }
    return out;
}

std::vector<std::string> nested_states(const HighOrderObserver& h) {
    std::vector<std::string> out;
    const auto& sa = h.level(h.order()).set_automaton();
    for (std::size_t i = 0; i < sa.size(); ++i) out.push_back(render(h.value(i), h.system().state_names()));
    return out;
}

std::set<std::tuple<std::string, std::string, std::string>> nested_edges(const HighOrderObserver& h) {
    const auto& sa = h.level(h.order()).set_automaton();
    auto names = nested_states(h);
    std::set<std::tuple<std::string, std::string, std::string>> out;
    for (std::size_t i = 0; i < sa.size(); ++i) {
        for (const auto& e : sa.edges(i)) out.insert({names[i], sa.labels().name(e.label), names[e.target]});
    }
    return out;
}

std::vector<std::string> flattened_states(const HighOrderObserver& h) {
    std::vector<std::string> out;
    const auto& sa = h.level(h.order()).set_automaton();
    for (std::size_t i = 0; i < sa.size(); ++i) out.push_back(render(h.estimate(i), h.system().state_names()));
    return out;
}

}  // namespace hoobs::test
