#include "hoobs/oracle.hpp"

#include <algorithm>

#include "hoobs/errors.hpp"

namespace hoobs {

namespace {

StateSet step(const Automaton& g, const StateSet& X, EventId e) {
    std::vector<StateId> out;
    for (StateId q : X) {
        for (const auto& t : g.out(q, e)) out.push_back(t.dst);
    }
    return StateSet(std::move(out));
}

}  // namespace

std::vector<std::vector<EventId>> enumerate_traces(const Automaton& g, std::size_t bound, std::size_t max_traces) {
    std::vector<std::vector<EventId>> out{{}};
    std::vector<StateSet> ends{g.initial()};
    if (g.initial().empty()) return {};
    // Breadth-first by length keeps the output shortlex.
    std::size_t begin = 0;
    for (std::size_t len = 0; len < bound; ++len) {
        std::size_t end = out.size();
        for (std::size_t i = begin; i < end; ++i) {
            for (EventId e = 0; e < g.num_events(); ++e) {
                StateSet next = step(g, ends[i], e);
                if (next.empty()) continue;
                if (out.size() >= max_traces) throw ResourceError("trace enumeration exceeds the size guard");
                auto w = out[i];
                w.push_back(e);
                out.push_back(std::move(w));
                ends.push_back(std::move(next));
            }
        }
        begin = end;
    }
    return out;
}

TraceOracle::TraceOracle(const Automaton& g, const AgentChain& chain, const OracleConfig& cfg)
    : g_(g), chain_(chain), cfg_(cfg) {
    if (chain_.empty()) throw ValidationError("agent chain is empty");
    if (cfg_.max_trace_len < 1) throw ValidationError("max_trace_len must be positive");
    const std::size_t levels = chain_.size();
    words_.resize(levels);
    for (auto& w : words_) {
        w.parent.push_back(0);
        w.event.push_back(0);
        w.length.push_back(0);
    }
    if (g_.initial().empty()) return;

    nodes_.push_back({0, 0, 0, g_.initial(), std::vector<std::size_t>(levels, 0)});
    const std::size_t longest = cfg_.max_trace_len + (levels - 1) * cfg_.level_slack;
    std::size_t begin = 0;
    for (std::size_t len = 0; len < longest; ++len) {
        std::size_t end = nodes_.size();
        for (std::size_t i = begin; i < end; ++i) {
            for (EventId e = 0; e < g_.num_events(); ++e) {
                StateSet next = step(g_, nodes_[i].end, e);
                if (next.empty()) continue;
                if (nodes_.size() >= cfg_.max_traces) {
                    throw ResourceError("oracle trace enumeration exceeds the size guard");
                }
                Node n{i, e, len + 1, std::move(next), nodes_[i].word};
                for (std::size_t k = 0; k < levels; ++k) {
                    if (!chain_[k].observable.contains(e)) continue;
                    auto& W = words_[k];
                    auto key = std::make_pair(n.word[k], e);
                    auto it = W.child.find(key);
                    if (it == W.child.end()) {
                        auto id = W.parent.size();
                        W.parent.push_back(n.word[k]);
                        W.event.push_back(e);
                        W.length.push_back(W.length[n.word[k]] + 1);
                        it = W.child.emplace(key, id).first;
                    }
                    n.word[k] = it->second;
                }
                nodes_.push_back(std::move(n));
            }
        }
        begin = end;
    }
    for (std::size_t j = 0; j <= cfg_.stabilization_window && j <= cfg_.max_trace_len; ++j) {
        tables_.push_back(aggregate(cfg_.max_trace_len - j));
    }
}

std::vector<std::vector<std::optional<Estimate>>> TraceOracle::aggregate(std::size_t bound) const {
    const std::size_t levels = chain_.size();
    std::vector<std::vector<std::optional<Estimate>>> values(levels);
    // Level 1: union of the end sets of all traces with the same observation.
    {
        std::vector<std::vector<StateId>> acc(words_[0].parent.size());
        std::vector<char> seen(acc.size(), 0);
        const std::size_t limit = bound + (levels - 1) * cfg_.level_slack;
        for (const auto& n : nodes_) {
            if (n.depth > limit) continue;
            auto w = n.word[0];
            seen[w] = 1;
            acc[w].insert(acc[w].end(), n.end.begin(), n.end.end());
        }
        values[0].resize(acc.size());
        for (std::size_t w = 0; w < acc.size(); ++w) {
            if (seen[w]) values[0][w] = Estimate::base(StateSet(std::move(acc[w])));
        }
    }
    // Level k: the set of level-(k-1) estimates of P_{k-1}(s) over traces s with P_k(s) = w.
    for (std::size_t k = 1; k < levels; ++k) {
        std::vector<std::vector<Estimate>> acc(words_[k].parent.size());
        std::vector<char> seen(acc.size(), 0);
        const std::size_t limit = bound + (levels - 1 - k) * cfg_.level_slack;
        for (const auto& n : nodes_) {
            if (n.depth > limit) continue;
            auto w = n.word[k];
            seen[w] = 1;
            acc[w].push_back(*values[k - 1][n.word[k - 1]]);
        }
        values[k].resize(acc.size());
        for (std::size_t w = 0; w < acc.size(); ++w) {
            if (seen[w]) values[k][w] = Estimate::set(std::move(acc[w]), static_cast<int>(k + 1));
        }
    }
    return values;
}

TraceOracle::Result TraceOracle::estimate(std::size_t n, const std::vector<std::string>& alpha) const {
    if (n < 1 || n > chain_.size()) throw ValidationError("oracle order out of range");
    if (alpha.size() > cfg_.max_trace_len) throw ValidationError("observation longer than the oracle bound");
    const auto k = n - 1;
    Result r{n == 1 ? Estimate::base({}) : Estimate::set({}, static_cast<int>(n)), false, false};
    std::size_t w = 0;
    const auto& W = words_[k];
    for (const auto& name : alpha) {
        EventId e = g_.event_names().at(name, "event");
        if (!chain_[k].observable.contains(e)) {
            throw ValidationError("agent '" + chain_[k].name + "' does not observe '" + name + "'");
        }
        auto it = W.child.find({w, e});
        if (it == W.child.end()) return r;
        w = it->second;
    }
    if (nodes_.empty() || !tables_[0][k][w]) return r;
    r.value = *tables_[0][k][w];
    r.generated = true;
    r.stabilized = tables_.size() == cfg_.stabilization_window + 1;
    for (std::size_t j = 1; j < tables_.size(); ++j) {
        const auto& other = tables_[j][k][w];
        if (!other || !(*other == r.value)) r.stabilized = false;
    }
    return r;
}

std::vector<std::vector<std::string>> TraceOracle::observations(std::size_t n) const {
    if (n < 1 || n > chain_.size()) throw ValidationError("oracle order out of range");
    const auto& W = words_[n - 1];
    std::vector<std::vector<std::string>> out;
    if (nodes_.empty()) return out;
    for (std::size_t w = 0; w < W.parent.size(); ++w) {
        if (!tables_[0][n - 1][w] || W.length[w] > cfg_.max_trace_len) continue;
        std::vector<std::string> word;
        for (std::size_t x = w; x != 0; x = W.parent[x]) word.push_back(g_.event_names().name(W.event[x]));
        std::reverse(word.begin(), word.end());
        out.push_back(std::move(word));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

TraceOracle::Result oracle_estimate_order_n(const Automaton& g, const AgentChain& chain, std::size_t n,
                                            const std::vector<std::string>& alpha, const OracleConfig& cfg) {
    if (n < 1 || n > chain.size()) throw ValidationError("oracle order out of range");
    AgentChain prefix(chain.begin(), chain.begin() + static_cast<std::ptrdiff_t>(n));
    return TraceOracle(g, prefix, cfg).estimate(n, alpha);
}

Verdict oracle_verify(const Automaton& g, const AgentChain& chain, const Formula& p, const OracleConfig& cfg) {
    const std::size_t n = chain.size();
    if (p.level() != static_cast<int>(n)) throw ValidationError("predicate level does not match chain length");
    TraceOracle oracle(g, chain, cfg);
    Verdict v;
    v.stage = "oracle";
    v.order = n;
    for (const auto& alpha : oracle.observations(n)) {
        auto r = oracle.estimate(n, alpha);
        ++v.states_visited;
        if (!r.stabilized || p.evaluate(r.value)) continue;
        v.holds = false;
        auto text = render(r.value, g.state_names());
        v.witness = Witness{alpha, text, text};
        break;
    }
    return v;
}

}  // namespace hoobs
