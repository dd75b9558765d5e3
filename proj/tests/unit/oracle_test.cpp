#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "goldens.hpp"
#include "hoobs/hoobs.hpp"

namespace hoobs::test {
namespace {

std::set<std::string> trace_names(const Automaton& g, std::size_t bound) {
    std::set<std::string> out;
    for (const auto& w : enumerate_traces(g, bound)) {
        std::string s;
        for (EventId e : w) s += g.event_names().name(e);
        out.insert(s);
    }
    return out;
}

AgentChain cou2_chain(const Automaton& g, std::size_t n) {
    AgentChain c{make_agent(g, "Usr", {"b", "c"}), make_agent(g, "Intr", {"a", "b"}), make_agent(g, "Usr2", {"b", "c"})};
    c.resize(n);
    return c;
}

TEST(EnumerateTraces, SmallBounds) {
    EXPECT_EQ(trace_names(g_cou3(), 2), (std::set<std::string>{"", "a", "ab", "ac"}));
    EXPECT_EQ(trace_names(g1(), 3), (std::set<std::string>{"", "a", "ab", "abb"}));
    EXPECT_EQ(trace_names(g_cou2(), 0), (std::set<std::string>{""}));
}

TEST(EnumerateTraces, ShortlexOrderAndGuard) {
    Automaton g = g_cou3();
    auto ts = enumerate_traces(g, 4);
    for (std::size_t i = 1; i < ts.size(); ++i) {
        EXPECT_TRUE(ts[i - 1].size() < ts[i].size() || (ts[i - 1].size() == ts[i].size() && ts[i - 1] < ts[i]));
    }
    EXPECT_THROW(enumerate_traces(g, 20, 10), ResourceError);
}

TEST(TraceOracle, OrderOneIsInitialClosure) {
    Automaton g = g1();
    auto r = oracle_estimate_order_n(g, {make_agent(g, "A1", {"b", "c", "d"})}, 1, {});
    EXPECT_TRUE(r.generated);
    EXPECT_TRUE(r.stabilized);
    EXPECT_EQ(render(r.value, g.state_names()), "{0,1}");
}

TEST(TraceOracle, PublishedOrderTwoAndThreeValues) {
    Automaton g = g_cou2();
    auto two = oracle_estimate_order_n(g, cou2_chain(g, 2), 2, {"b"});
    EXPECT_TRUE(two.stabilized);
    EXPECT_EQ(render(two.value, g.state_names()), "{{4,5}}");
    auto three = oracle_estimate_order_n(g, cou2_chain(g, 3), 3, {"c"});
    EXPECT_TRUE(three.stabilized);
    EXPECT_EQ(render(three.value, g.state_names()), "{{{0,1},{2}}}");
}

TEST(TraceOracle, AgreesWithPipelineOnPublishedEstimates) {
    Automaton g = g_cou2();
    HighOrderObserver h(g, cou2_chain(g, 3), Stage::observer);
    TraceOracle oracle(g, cou2_chain(g, 3));
    for (std::vector<std::string> alpha : {std::vector<std::string>{}, {"c"}, {"c", "b"}, {"b"}}) {
        auto r = oracle.estimate(3, alpha);
        ASSERT_TRUE(r.stabilized) << join_alpha(alpha);
        auto i = h.run(labels_of(h.final_labeling(), alpha));
        ASSERT_TRUE(i.has_value());
        EXPECT_EQ(h.estimate(*i), r.value) << join_alpha(alpha);
    }
    Automaton g1_ = g1();
    AgentChain c{make_agent(g1_, "A1", {"b", "c", "d"}), make_agent(g1_, "A2", {"a", "b"})};
    HighOrderObserver h1(g1_, c, Stage::observer);
    TraceOracle o1(g1_, c);
    for (const auto& alpha : o1.observations(2)) {
        auto r = o1.estimate(2, alpha);
        if (!r.stabilized) continue;
        auto i = h1.run(labels_of(h1.final_labeling(), alpha));
        ASSERT_TRUE(i.has_value());
        EXPECT_EQ(h1.estimate(*i), r.value) << join_alpha(alpha);
    }
}

TEST(TraceOracle, NotGeneratedGivesEmptyValue) {
    Automaton g = g_cou2();
    auto r = oracle_estimate_order_n(g, cou2_chain(g, 2), 2, {"b", "b"});
    EXPECT_FALSE(r.generated);
    EXPECT_TRUE(r.value.members().empty());
}

TEST(TraceOracle, Validation) {
    Automaton g = g_cou2();
    OracleConfig cfg;
    cfg.max_trace_len = 2;
    EXPECT_THROW(oracle_estimate_order_n(g, cou2_chain(g, 2), 2, {"b", "a", "b"}, cfg), ValidationError);
    EXPECT_THROW(oracle_estimate_order_n(g, cou2_chain(g, 2), 2, {"c"}), ValidationError);
    EXPECT_THROW(oracle_estimate_order_n(g, cou2_chain(g, 2), 3, {}), ValidationError);
    EXPECT_THROW(TraceOracle(g, {}), ValidationError);
    cfg.max_traces = 3;
    EXPECT_THROW(TraceOracle(g, cou2_chain(g, 2), cfg), ResourceError);
}

TEST(TraceOracle, ObservationsAreShortlexAndBounded) {
    Automaton g = g_cou3();
    OracleConfig cfg;
    cfg.max_trace_len = 3;
    TraceOracle oracle(g, {make_agent(g, "Usr", {"a", "b"}), make_agent(g, "Intr", {"a", "c"})}, cfg);
    auto obs = oracle.observations(2);
    ASSERT_FALSE(obs.empty());
    EXPECT_TRUE(obs.front().empty());
    for (const auto& a : obs) EXPECT_LE(a.size(), 3u);
    EXPECT_EQ(join_alpha(obs[1]), "a");
}

TEST(OracleVerify, PublishedVerdicts) {
    Automaton g = g1();
    AgentChain c{make_agent(g, "A1", {"b", "c", "d"}), make_agent(g, "A2", {"a", "b"})};
    Verdict v = oracle_verify(g, c, builtin::hoo_b());
    EXPECT_FALSE(v.holds);
    EXPECT_EQ(join_alpha(v.witness->alpha), "a,b");
    EXPECT_EQ(v.stage, "oracle");

    Verdict vac = oracle_verify(g, c, Formula::forall(Formula::nonempty()));
    EXPECT_TRUE(vac.holds);
    EXPECT_GT(vac.states_visited, 0u);

    Automaton h = g_cou3();
    AgentChain d{make_agent(h, "Usr", {"a", "b"}), make_agent(h, "Intr", {"a", "c"})};
    Formula never_sure = Formula::negation(Formula::forall(Formula::superset_any_of({states_of(h, {"0", "1"})})));
    Verdict w = oracle_verify(h, d, never_sure);
    EXPECT_FALSE(w.holds);
    EXPECT_EQ(join_alpha(w.witness->alpha), "a,c");
    EXPECT_EQ(w.witness->estimate, "{{0,1}}");
    EXPECT_THROW(oracle_verify(h, d, builtin::order3_cso()), ValidationError);
}

// Estimates at bounds B and B+|Q| coincide for every observation with |Q|*(|alpha|+1) <= B.
void expect_monotone(const Automaton& g, const AgentChain& chain, const std::string& tag) {
    const std::size_t nq = g.num_states();
    OracleConfig lo, hi;
    lo.max_trace_len = 3 * nq;
    hi.max_trace_len = lo.max_trace_len + nq;
    TraceOracle a(g, chain, lo), b(g, chain, hi);
    std::size_t compared = 0;
    for (std::size_t n = 1; n <= chain.size(); ++n) {
        for (const auto& alpha : a.observations(n)) {
            if (nq * (alpha.size() + 1) > lo.max_trace_len) continue;
            ++compared;
            EXPECT_EQ(a.estimate(n, alpha).value, b.estimate(n, alpha).value)
                << tag << " n=" << n << " alpha=" << join_alpha(alpha);
        }
    }
    EXPECT_GT(compared, 0u) << tag;
}

TEST(TraceOracle, MonotoneStabilizationOnCorpus) {
    for (const char* file : {"g1.json", "g_cou2.json", "g_cou3.json", "s_scso.json", "s_cou0.json"}) {
        Scenario sc = load_scenario_file(scenario_path(file));
        ASSERT_LE(sc.system.num_states(), 6u) << file;
        std::vector<AgentChain> chains;
        for (const auto& p : sc.properties) {
            if (!p.chain.empty()) chains.push_back(p.chain);
        }
        for (const auto& a : sc.agents) chains.push_back({a});
        if (sc.labeling) chains.push_back({{"S", sc.labeling->observable_events()}});
        for (const auto& c : chains) expect_monotone(sc.system, c, file);
    }
}

// Comparing all observations of length <= B-|Q| is not enough: on G_cou3 the
// observation a,a,a needs the trace a,c,a,c,a,c of length 6 to reach state 0.
TEST(TraceOracle, ShortObservationCanNeedLongerTrace) {
    Automaton g = g_cou3();
    AgentChain usr{make_agent(g, "Usr", {"a", "b"})};
    OracleConfig lo, hi;
    lo.max_trace_len = 5;
    hi.max_trace_len = 7;
    auto at5 = TraceOracle(g, usr, lo).estimate(1, {"a", "a", "a"});
    auto at7 = TraceOracle(g, usr, hi).estimate(1, {"a", "a", "a"});
    EXPECT_EQ(render(at5.value, g.state_names()), "{1}");
    EXPECT_EQ(render(at7.value, g.state_names()), "{0,1}");
    EXPECT_FALSE(at5.stabilized);
    LabeledAutomaton s = project(g, {"a", "b"});
    EXPECT_EQ(render_set(current_state_estimate(s, labels_of(s.labeling, {"a", "a", "a"})), g.state_names()), "{0,1}");
}

}  // namespace
}  // namespace hoobs::test
