#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "goldens.hpp"
#include "hoobs/hoobs.hpp"

namespace hoobs::test {
namespace {

AgentChain g1_chain(const Automaton& g) { return {make_agent(g, "A1", {"b", "c", "d"}), make_agent(g, "A2", {"a", "b"})}; }

AgentChain cou2_chain(const Automaton& g, std::size_t n = 2) {
    AgentChain c{make_agent(g, "Usr", {"b", "c"}), make_agent(g, "Intr", {"a", "b"}), make_agent(g, "Usr2", {"b", "c"})};
    c.resize(n);
    return c;
}

std::string alpha_of(const Verdict& v) { return v.witness ? join_alpha(v.witness->alpha) : "<none>"; }

TEST(VerifyOrderOne, G1Determinism) {
    Verdict v = verify_order1(project(g1(), {"b", "c", "d"}), builtin::determinism());
    EXPECT_FALSE(v.holds);
    EXPECT_EQ(alpha_of(v), "");
    EXPECT_EQ(v.witness->state, "{0,1}");
    EXPECT_EQ(v.order, 1u);
    EXPECT_EQ(v.stage, "observer");
}

TEST(VerifyOrderOne, G1CriticalObservabilityHolds) {
    Automaton g = g1();
    Verdict v = verify_order1(project(g, {"b", "c", "d"}), builtin::critical_observability(states_of(g, {"2"}), 6));
    EXPECT_TRUE(v.holds);
    EXPECT_EQ(v.states_visited, 4u);
    EXPECT_FALSE(v.witness.has_value());
}

TEST(VerifyOrderOne, LazyStopsAtFirstViolation) {
    Automaton g = g1();
    Formula f = Formula::negation(Formula::equals(states_of(g, {"3", "4", "5"})));
    Verdict lazy = verify_order1(project(g, {"b", "c", "d"}), f, true);
    Verdict full = verify_order1(project(g, {"b", "c", "d"}), f, false);
    EXPECT_FALSE(lazy.holds);
    EXPECT_EQ(alpha_of(lazy), "b,b");
    EXPECT_EQ(alpha_of(full), "b,b");
    EXPECT_EQ(lazy.states_visited, 3u);
    EXPECT_EQ(full.states_visited, 4u);
    EXPECT_TRUE(full.holds == lazy.holds);
}

TEST(VerifyOrderOne, RejectsHigherLevelPredicate) {
    EXPECT_THROW(verify_order1(project(g1(), {"b"}), builtin::hoo_b()), ValidationError);
}

TEST(VerifyOrderN, G1HooBFailsAtABOnBothStages) {
    Automaton g = g1();
    for (StageChoice stage : {StageChoice::observer, StageChoice::detector}) {
        Verdict v = verify_order_n(g, g1_chain(g), builtin::hoo_b(), stage);
        EXPECT_FALSE(v.holds);
        EXPECT_EQ(alpha_of(v), "a,b");
        EXPECT_EQ(v.witness->estimate, "{{2}}");
        EXPECT_EQ(v.order, 2u);
    }
}

TEST(VerifyOrderN, GCou2HooA) {
    Automaton g = g_cou2();
    Verdict v = verify_order_n(g, cou2_chain(g), builtin::hoo_a({states_of(g, {"0", "1"}), states_of(g, {"4", "5"})}));
    EXPECT_FALSE(v.holds);
    EXPECT_EQ(alpha_of(v), "a,b");
    EXPECT_EQ(v.witness->estimate, "{{3}}");
    Verdict w = verify_order_n(g, cou2_chain(g),
                               builtin::hoo_a({states_of(g, {"1"}), states_of(g, {"2"}), states_of(g, {"3"})}));
    EXPECT_FALSE(w.holds);
    EXPECT_EQ(alpha_of(w), "b");
    EXPECT_EQ(w.witness->estimate, "{{4,5}}");
}

TEST(VerifyOrderN, GCou3IntruderCertainAtAC) {
    Automaton g = g_cou3();
    AgentChain c{make_agent(g, "Usr", {"a", "b"}), make_agent(g, "Intr", {"a", "c"})};
    Formula never_sure = Formula::negation(Formula::forall(Formula::superset_any_of({states_of(g, {"0", "1"})})));
    Verdict v = verify_order_n(g, c, never_sure);
    EXPECT_FALSE(v.holds);
    EXPECT_EQ(alpha_of(v), "a,c");
    EXPECT_EQ(v.witness->estimate, "{{0,1}}");
    EXPECT_EQ(v.stage, "observer");
}

TEST(VerifyOrderN, OrderThreeCsoFailsAtB) {
    Automaton g = g_cou2();
    for (StageChoice stage : {StageChoice::observer, StageChoice::detector}) {
        Verdict v = verify_order_n(g, cou2_chain(g, 3), builtin::order3_cso(), stage);
        EXPECT_FALSE(v.holds);
        EXPECT_EQ(alpha_of(v), "b");
        EXPECT_EQ(v.witness->estimate, "{{{3}}}");
        EXPECT_EQ(v.order, 3u);
    }
}

TEST(VerifyOrderN, AutomaticStagePicksDetectorForTDetShapes) {
    Automaton g = g1();
    EXPECT_EQ(verify_order_n(g, g1_chain(g), builtin::hoo_b()).stage, "detector");
    EXPECT_EQ(verify_order_n(g, g1_chain(g), builtin::hoo_c(6)).stage, "observer");
    EXPECT_THROW(verify_order_n(g, g1_chain(g), builtin::hoo_c(6), StageChoice::detector), ValidationError);
}

TEST(VerifyOrderN, LevelMustMatchChain) {
    Automaton g = g1();
    EXPECT_THROW(verify_order_n(g, g1_chain(g), builtin::order3_cso()), ValidationError);
    EXPECT_THROW(verify_order_n(g, {}, builtin::hoo_b()), ValidationError);
}

TEST(VerifyOrderN, CacheSharesPipelines) {
    Automaton g = g_cou2();
    PipelineCache cache(g);
    Verdict a = verify_order_n(cache, cou2_chain(g), builtin::hoo_b(), StageChoice::observer);
    Verdict b = verify_order_n(cache, cou2_chain(g), builtin::hoo_b(), StageChoice::observer);
    EXPECT_EQ(a.holds, b.holds);
    EXPECT_EQ(alpha_of(a), alpha_of(b));
}

TEST(VerifyScso, SScsoFailsByBothMethods) {
    LabeledAutomaton s = s_scso();
    StateSet secrets = states_of(s.automaton, {"q1", "q3"});
    Verdict han = verify_scso(s, secrets, ScsoMethod::han);
    Verdict diamond = verify_scso(s, secrets, ScsoMethod::diamond);
    EXPECT_FALSE(han.holds);
    EXPECT_FALSE(diamond.holds);
    EXPECT_EQ(han.stage, "han");
    EXPECT_EQ(diamond.stage, "diamond");
    EXPECT_EQ(alpha_of(han), "a");
    EXPECT_EQ(diamond.witness->state, "{(q1,<>),(q4,<>)}");
    EXPECT_TRUE(verify_order1(s, builtin::cso(secrets)).holds);
}

TEST(VerifyScso, SCou0IsOpaqueButNotStrongly) {
    LabeledAutomaton s = s_cou0();
    StateSet secrets = states_of(s.automaton, {"q2", "q3"});
    EXPECT_TRUE(verify_order1(s, builtin::cso(secrets)).holds);
    EXPECT_FALSE(verify_scso(s, secrets, ScsoMethod::han).holds);
    EXPECT_FALSE(verify_scso(s, secrets, ScsoMethod::diamond).holds);
}

TEST(VerifyScso, NoSecretsHolds) {
    LabeledAutomaton s = s_scso();
    EXPECT_TRUE(verify_scso(s, {}, ScsoMethod::han).holds);
    EXPECT_TRUE(verify_scso(s, {}, ScsoMethod::diamond).holds);
}

TEST(EstimateAt, Values) {
    Automaton g = g_cou2();
    EXPECT_EQ(render(estimate_at(g, cou2_chain(g), {"b"}), g.state_names()), "{{4,5}}");
    EXPECT_EQ(canonical(render(estimate_at(g, cou2_chain(g, 3), {}), g.state_names())),
              canonical("{{{0,1},{2}},{{0,1}}}"));
    EXPECT_THROW(estimate_at(g, cou2_chain(g), {"b", "b"}), NotGeneratedError);
    EXPECT_THROW(estimate_at(g, cou2_chain(g), {"c"}), ValidationError);
    // Detector-stage values are pair-split estimates.
    Automaton h = g1();
    EXPECT_EQ(canonical(render(estimate_at(h, g1_chain(h), {"a", "b", "b", "a"}, Stage::detector), h.state_names())),
              canonical("{{4},{3,4},{4,5},{3,5}}"));
    EXPECT_EQ(render(estimate_at(h, g1_chain(h), {"a", "b", "b", "a"}), h.state_names()), "{{3,4,5},{4}}");
}

TEST(Report, TextAndJson) {
    Verdict v;
    v.property = "p";
    v.holds = false;
    v.witness = Witness{{"a", "b"}, "{(2,{2})}", "{{2}}"};
    v.states_visited = 3;
    v.stage = "observer";
    v.order = 2;
    std::string text = emit_report({v}, ReportFormat::text);
    EXPECT_NE(text.find("VIOLATED"), std::string::npos);
    EXPECT_NE(text.find("witness=\"a,b\""), std::string::npos);
    std::string json = emit_report({v}, ReportFormat::json);
    EXPECT_NE(json.find("\"holds\": false"), std::string::npos);
    EXPECT_EQ(join_alpha({}), "");
    EXPECT_EQ(join_alpha({"a", "c"}), "a,c");
}

}  // namespace
}  // namespace hoobs::test
