#pragma once

#include <array>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "hoobs/hoobs.hpp"

namespace hoobs::test {

using Edge3 = std::array<std::string, 3>;

Automaton make_automaton(const std::vector<std::string>& states, const std::vector<std::string>& events,
                         const std::vector<Edge3>& transitions, const std::vector<std::string>& initial);
AgentProfile make_agent(const Automaton& g, const std::string& name, const std::vector<std::string>& observable);
LabeledAutomaton project(const Automaton& g, const std::vector<std::string>& observable);
StateSet states_of(const Automaton& g, const std::vector<std::string>& names);
std::vector<LabelId> labels_of(const Labeling& l, const std::vector<std::string>& names);

/// 0-a->1-b->2, 2-b->3, 3-c->2, 3-a->4, 3-a->5, 4-d->4.
Automaton g1();
/// 0-c->2, 2-b->4, 0-a->1, 1-b->3, 2-b->5.
Automaton g_cou2();
/// 0-a->1, 1-b->0, 1-c->0.
Automaton g_cou3();
/// q0-a->q1-a->q2, q0-u->q3-a->q4-a->q5 with u silent. Secrets q1, q3.
LabeledAutomaton s_scso();
/// q1-a->q2, q3-a->q4, initial q1 and q3. Secrets q2, q3.
LabeledAutomaton s_cou0();

/// Absolute path of a file in the scenarios directory.
std::string scenario_path(const std::string& file);

std::vector<std::string> rendered_states(const SetAutomaton& x);
std::set<std::tuple<std::string, std::string, std::string>> rendered_edges(const SetAutomaton& x);
/// Product states as "(l,r)" strings and edges labelled by the left event name.
std::vector<std::string> product_states(const HighOrderObserver& h, std::size_t k);
std::set<std::tuple<std::string, std::string, std::string>> product_edges(const HighOrderObserver& h, std::size_t k);
/// Final observer of the pipeline with nested values rendered.
std::vector<std::string> nested_states(const HighOrderObserver& h);
std::set<std::tuple<std::string, std::string, std::string>> nested_edges(const HighOrderObserver& h);
std::vector<std::string> flattened_states(const HighOrderObserver& h);

}  // namespace hoobs::test
