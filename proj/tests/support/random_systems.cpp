#include "random_systems.hpp"

namespace hoobs::test {

Automaton SystemGenerator::automaton(std::size_t max_states, std::size_t max_events) {
    std::size_t n = 1 + below(max_states);
    std::size_t m = 1 + below(max_events);
    static const unsigned densities[] = {12, 20, 30, 40};
    return automaton_exact(n, m, densities[below(4)]);
}

Automaton SystemGenerator::automaton_exact(std::size_t n, std::size_t m, unsigned density_percent) {
    std::vector<std::string> qs, es;
    for (std::size_t i = 0; i < n; ++i) qs.push_back(std::to_string(i));
    for (std::size_t i = 0; i < m; ++i) es.push_back(std::string(1, static_cast<char>('a' + i)));
    std::vector<Transition> ts;
    for (StateId q = 0; q < n; ++q) {
        for (EventId e = 0; e < m; ++e) {
            for (StateId r = 0; r < n; ++r) {
                if (chance(density_percent)) ts.push_back({q, e, r});
            }
        }
    }
    std::vector<StateId> init{0};
    if (n > 1 && chance(20)) init.push_back(static_cast<StateId>(1 + below(n - 1)));
    return Automaton(NameTable(qs), NameTable(es), std::move(ts), StateSet(std::move(init)));
}

EventSet SystemGenerator::events(const Automaton& g) {
    std::vector<EventId> out;
    for (EventId e = 0; e < g.num_events(); ++e) {
        if (chance(50)) out.push_back(e);
    }
    return EventSet(std::move(out));
}

Labeling SystemGenerator::labeling(const Automaton& g) {
    std::vector<LabelId> map;
    for (EventId e = 0; e < g.num_events(); ++e) {
        std::size_t r = below(3);
        map.push_back(r == 2 ? kEpsilon : static_cast<LabelId>(r));
    }
    return Labeling(std::move(map), NameTable({"x", "y"}));
}

StateSet SystemGenerator::states(const Automaton& g) {
    std::vector<StateId> out;
    for (StateId q = 0; q < g.num_states(); ++q) {
        if (chance(40)) out.push_back(q);
    }
    return StateSet(std::move(out));
}

std::vector<StateSet> SystemGenerator::small_family(const Automaton& g) {
    std::size_t n = g.num_states();
    std::vector<StateSet> fam;
    std::size_t count = 1 + below(3);
    for (std::size_t i = 0; i < count; ++i) {
        StateId a = static_cast<StateId>(below(n));
        StateId b = static_cast<StateId>(below(n));
        fam.push_back(StateSet{a, b});
    }
    return fam;
}

}  // namespace hoobs::test
