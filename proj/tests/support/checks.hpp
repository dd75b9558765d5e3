#pragma once

#include <cstdint>
#include <string>

#include "hoobs/hoobs.hpp"
#include "random_systems.hpp"

namespace hoobs::test {

/// Outcome of one property over many cases. The first failure is kept as a
/// readable counterexample.
struct Tally {
    explicit Tally(std::string n = {}) : name(std::move(n)) {}

    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string counterexample;

    void check(bool ok, const std::string& why);
    bool clean() const { return failures == 0; }
};

/// "{0-a->1, 1-b->0} init {0}"
std::string describe(const Automaton& g);
std::string describe_events(const Automaton& g, const EventSet& e);

/// Observer runs agree with M(S, alpha) and with the test-side search for
/// every label sequence up to `bound`.
void check_observer_vs_estimate(const LabeledAutomaton& s, std::size_t bound, Tally& t);

/// Detector / observer run relation (every maximal-size choice at the end of an
/// observer run is reachable by a detector run that keeps sizes maximal).
void check_detector_runs(const LabeledAutomaton& s, std::size_t bound, Tally& t);

/// Label language of CC(S1, S2) equals the intersection of the label languages.
void check_composition_language(const LabeledAutomaton& s1, const LabeledAutomaton& s2, std::size_t bound, Tally& t);

/// Every (state, event) of a diamond completion has a successor.
void check_diamond_complete(const LabeledAutomaton& s, const StateSet& secrets, Tally& t);

struct Order2Tallies {
    Tally initial_literal{"initial state: pairs (q,X0) with {q} = X0"};
    Tally initial_closure{"initial state: silent closure of Q0 x {X0}"};
    Tally state_in_estimate{"q in X for every pair of every reachable state"};
    Tally flatten_matches{"flattened run value = exact order-2 estimate"};
    Tally language{"L(G) = L(CC(lifted composition, order-2 observer))"};
    Tally sub_uniform{"E1 in E2: uniform second component X with q in X and Obs_A2 state inside X"};
    Tally sub_counts{"E1 in E2: same reachable-state count as Obs_A2"};
    Tally sup_containment{"E2 in E1: X inside the Obs_A2 state for every pair"};
    Tally sup_counts{"E2 in E1: same reachable-state count as Obs_A2"};
    Tally detector_q_in_x{"detector stage: q in X for every pair"};
    Tally detector_initial{"detector stage: initial pairs (q,X0) with {q} = X0"};
};

/// Lemma-level properties of the order-2 observer for one system and chain.
void check_order2(const Automaton& g, const EventSet& e1, const EventSet& e2, std::size_t bound, Order2Tallies& t);

/// Order-n pipeline values against the exact test-side knowledge recursion
/// for every observation up to `bound`.
void check_order_n_exact(const Automaton& g, const std::vector<EventSet>& chain, std::size_t bound, Tally& t);

/// Library trace oracle against the pipeline on observations with |alpha| <= B - |Q|
/// whose oracle value is stabilized at bound B and at B + |Q| and equal at both.
/// Systems over the oracle's size guard are skipped. `compared` counts comparisons.
void check_trace_oracle(const Automaton& g, const std::vector<EventSet>& chain, const OracleConfig& cfg, Tally& t,
                        std::size_t& compared, std::size_t& skipped);

/// Same verdict from the observer-first and detector-first pipelines.
void check_stage_agreement(const Automaton& g, const AgentChain& chain, const Formula& p, Tally& t);

/// Same strong-CSO verdict from both methods.
void check_scso_methods(const LabeledAutomaton& s, const StateSet& secrets, Tally& t);

/// Every builtin predicate against explicit set-theoretic membership, for all
/// values over state spaces of size 1..max_states.
void check_predicates_bruteforce(std::size_t max_states, Tally& t);

/// A violation witness replays to an estimate that violates the predicate.
void check_witness_replay(const Automaton& g, const AgentChain& chain, const Formula& p, Tally& t);

AgentChain chain_of(const std::vector<EventSet>& sets);

/// The order-2 observer's state count exceeds Obs_A2's although E1 is inside E2.
Automaton nested_count_counterexample();
/// E2 a subset of E1 with more order-2 states than Obs_A2 has: 2 against 1.
Automaton superset_count_counterexample();

}  // namespace hoobs::test
