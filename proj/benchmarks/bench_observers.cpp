#include <benchmark/benchmark.h>

#include "hoobs/hoobs.hpp"

namespace {

using namespace hoobs;

AgentProfile agent(const Automaton& g, const char* name, std::initializer_list<const char*> events) {
    std::vector<EventId> ids;
    for (const char* e : events) ids.push_back(g.event_names().at(e, "event"));
    return {name, EventSet(std::move(ids))};
}

void BM_Observer(benchmark::State& state) {
    Automaton g = counter_automaton(static_cast<std::size_t>(state.range(0)));
    LabeledAutomaton s(g, Labeling::projection(g.event_names(), agent(g, "", {"r", "t"}).observable));
    std::size_t n = 0;
    for (auto _ : state) {
        Observer obs = build_observer(s);
        n = obs.size();
        benchmark::DoNotOptimize(n);
    }
    state.counters["states"] = static_cast<double>(n);
}
BENCHMARK(BM_Observer)->DenseRange(2, 8, 2)->Unit(benchmark::kMicrosecond);

void BM_Detector(benchmark::State& state) {
    Automaton g = counter_automaton(static_cast<std::size_t>(state.range(0)));
    LabeledAutomaton s(g, Labeling::projection(g.event_names(), agent(g, "", {"f", "t"}).observable));
    std::size_t n = 0;
    for (auto _ : state) {
        Detector det = build_detector(s);
        n = det.size();
        benchmark::DoNotOptimize(n);
    }
    state.counters["states"] = static_cast<double>(n);
}
BENCHMARK(BM_Detector)->DenseRange(2, 8, 2)->Unit(benchmark::kMicrosecond);

// Nested alphabets: the order-2 observer stays the size of Obs_A2.
void BM_OrderTwoNested(benchmark::State& state) {
    Automaton g = counter_automaton(static_cast<std::size_t>(state.range(0)));
    AgentChain chain{agent(g, "Exact", {"f", "r", "t"}), agent(g, "Full", {"d", "f", "r", "t"})};
    std::size_t n = 0;
    for (auto _ : state) {
        HighOrderObserver h(g, chain, Stage::observer);
        n = h.final_observer().size();
        benchmark::DoNotOptimize(n);
    }
    state.counters["states"] = static_cast<double>(n);
}
BENCHMARK(BM_OrderTwoNested)->DenseRange(1, 6)->Unit(benchmark::kMillisecond);

// Incomparable alphabets: the order-2 observer grows past Obs_A2.
void BM_OrderTwoIncomparable(benchmark::State& state) {
    Automaton g = counter_automaton(static_cast<std::size_t>(state.range(0)));
    AgentChain chain{agent(g, "Flip", {"f", "t"}), agent(g, "Reset", {"r", "t"})};
    std::size_t n = 0;
    for (auto _ : state) {
        HighOrderObserver h(g, chain, Stage::observer);
        n = h.final_observer().size();
        benchmark::DoNotOptimize(n);
    }
    state.counters["states"] = static_cast<double>(n);
}
BENCHMARK(BM_OrderTwoIncomparable)->DenseRange(1, 6)->Unit(benchmark::kMillisecond);

void BM_OrderThreeStages(benchmark::State& state) {
    Automaton g = counter_automaton(3);
    AgentChain chain{agent(g, "Flip", {"f", "t"}), agent(g, "Reset", {"r", "t"}), agent(g, "Flip2", {"f", "t"})};
    Stage stage = state.range(0) == 0 ? Stage::observer : Stage::detector;
    std::size_t n = 0;
    for (auto _ : state) {
        try {
            HighOrderObserver h(g, chain, stage, 200'000);
            n = h.states_built();
        } catch (const ResourceError& e) {
            state.SkipWithError(e.what());
            break;
        }
        benchmark::DoNotOptimize(n);
    }
    state.SetLabel(to_string(stage));
    state.counters["states_built"] = static_cast<double>(n);
}
BENCHMARK(BM_OrderThreeStages)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->Iterations(1);

void BM_VerifyLazyVsFull(benchmark::State& state) {
    Automaton g = counter_automaton(8);
    LabeledAutomaton s(g, Labeling::projection(g.event_names(), agent(g, "", {"r", "t"}).observable));
    bool lazy = state.range(0) == 1;
    std::size_t visited = 0;
    for (auto _ : state) {
        Verdict v = verify_order1(s, builtin::determinism(), lazy);
        visited = v.states_visited;
        benchmark::DoNotOptimize(visited);
    }
    state.SetLabel(lazy ? "lazy" : "full");
    state.counters["visited"] = static_cast<double>(visited);
}
BENCHMARK(BM_VerifyLazyVsFull)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
