#include "hoobs/verifier.hpp"

#include "hoobs/errors.hpp"

namespace hoobs {

namespace {

std::vector<std::string> label_names(const NameTable& labels, const std::vector<LabelId>& ids) {
    std::vector<std::string> out;
    out.reserve(ids.size());
    for (LabelId l : ids) out.push_back(labels.name(l));
    return out;
}

Stage resolve_stage(StageChoice choice, const Formula& p, std::size_t order) {
    bool eligible = detector_stage_eligible(p, order);
    switch (choice) {
        case StageChoice::observer: return Stage::observer;
        case StageChoice::detector:
            if (!eligible) {
                throw ValidationError("the detector stage requires a T_Det-shaped predicate of level >= 2");
            }
            return Stage::detector;
        case StageChoice::automatic: break;
    }
    return eligible ? Stage::detector : Stage::observer;
}

}  // namespace

Verdict verify_order1(const LabeledAutomaton& s, const Formula& p, bool lazy) {
    if (p.level() != 1) throw ValidationError("order-1 verification needs a level-1 predicate");
    Verdict v;
    v.stage = "observer";
    v.order = 1;
    std::optional<std::size_t> bad;
    ObserverOptions opt;
    opt.on_state = [&](std::size_t i, const StateSet& X) {
        if (p.evaluate_base(X)) return true;
        if (!bad) bad = i;
        return !lazy;
    };
    Observer obs = build_observer(s, opt);
    v.states_visited = obs.size();
    if (bad) {
        v.holds = false;
        const auto& names = s.automaton.state_names();
        std::string rendered = render_set(obs.state(*bad), names);
        v.witness = Witness{label_names(obs.labels(), obs.path_to(*bad)), rendered, rendered};
    }
    return v;
}

Verdict verify_scso(const LabeledAutomaton& s, const StateSet& secrets, ScsoMethod method) {
    for (StateId q : secrets) {
        if (q >= s.automaton.num_states()) throw ValidationError("secret state out of range");
    }
    NonsecretPart ns = nonsecret_subautomaton(s, secrets);
    Verdict v;
    v.order = 1;
    if (method == ScsoMethod::han) {
        v.stage = "han";
        Observer obs_ns = build_observer(ns.lfsa, true);
        LabeledAutomaton right = obs_ns.as_labeled(true);
        ProductAutomaton cc = concurrent_composition(s, right);
        // A violating product state is (secret q, empty estimate); search the
        // observer of the product so the witness is the shortest label sequence.
        auto violating = [&](StateId ps) {
            const auto& [q, X] = cc.state_pairs[ps];
            return secrets.contains(q) && obs_ns.state(X).empty();
        };
        std::optional<std::size_t> bad;
        ObserverOptions opt;
        opt.on_state = [&](std::size_t i, const StateSet& X) {
            for (StateId ps : X) {
                if (violating(ps)) {
                    bad = i;
                    return false;
                }
            }
            return true;
        };
        Observer walk = build_observer(cc.lfsa, opt);
        v.states_visited = cc.lfsa.automaton.num_states();
        if (bad) {
            v.holds = false;
            std::string pair;
            for (StateId ps : walk.state(*bad)) {
                if (violating(ps)) {
                    pair = cc.lfsa.automaton.state_names().name(ps);
                    break;
                }
            }
            v.witness = Witness{label_names(walk.labels(), walk.path_to(*bad)), pair,
                                render_set(walk.state(*bad), cc.lfsa.automaton.state_names())};
        }
        return v;
    }

    v.stage = "diamond";
    DiamondCompletion dc = diamond_completion(ns.lfsa);
    ProductAutomaton cc = concurrent_composition(s, dc.lfsa);
    ScsoPredicate pred = builtin::scso(secrets, s.automaton.num_states());
    auto as_pairs = [&](const StateSet& X) {
        std::vector<ScsoPredicate::Pair> out;
        for (StateId ps : X) {
            const auto& [q, r] = cc.state_pairs[ps];
            if (r == dc.diamond) {
                out.emplace_back(q, std::nullopt);
            } else {
                out.emplace_back(q, ns.original.at(r));
            }
        }
        return out;
    };
    std::optional<std::size_t> bad;
    ObserverOptions opt;
    opt.on_state = [&](std::size_t i, const StateSet& X) {
        if (pred.evaluate(as_pairs(X))) return true;
        bad = i;
        return false;
    };
    Observer walk = build_observer(cc.lfsa, opt);
    v.states_visited = walk.size();
    if (bad) {
        v.holds = false;
        std::string rendered = render_set(walk.state(*bad), cc.lfsa.automaton.state_names());
        v.witness = Witness{label_names(walk.labels(), walk.path_to(*bad)), rendered, rendered};
    }
    return v;
}

Verdict verify_order_n(PipelineCache& cache, const AgentChain& chain, const Formula& p, StageChoice choice) {
    if (chain.empty()) throw ValidationError("agent chain is empty");
    if (p.level() != static_cast<int>(chain.size())) {
        throw ValidationError("predicate level " + std::to_string(p.level()) + " does not match chain length " +
                              std::to_string(chain.size()));
    }
    Stage stage = resolve_stage(choice, p, chain.size());
    auto h = cache.get(chain, stage);
    const Observer& obs = h->final_observer();
    const auto& names = h->system().state_names();
    Verdict v;
    v.stage = to_string(stage);
    v.order = chain.size();
    // Ids follow BFS discovery order, so the first violating id has the
    // shortest, lexicographically least path.
    for (std::size_t i = 0; i < obs.size(); ++i) {
        ++v.states_visited;
        Estimate e = h->estimate(i);
        if (p.evaluate(e)) continue;
        v.holds = false;
        v.witness = Witness{label_names(obs.labels(), obs.path_to(i)), render(h->value(i), names), render(e, names)};
        break;
    }
    return v;
}

Verdict verify_order_n(const Automaton& g, const AgentChain& chain, const Formula& p, StageChoice stage,
                       std::size_t state_cap) {
    PipelineCache cache(g, state_cap);
    return verify_order_n(cache, chain, p, stage);
}

Estimate estimate_at(PipelineCache& cache, const AgentChain& chain, const std::vector<std::string>& alpha,
                     Stage stage) {
    auto h = cache.get(chain, stage);
    auto ids = parse_labels(h->final_labeling(), alpha);
    auto i = h->run(ids);
    if (!i) throw NotGeneratedError("label sequence is not generated");
    return h->estimate(*i);
}

Estimate estimate_at(const Automaton& g, const AgentChain& chain, const std::vector<std::string>& alpha,
                     Stage stage) {
    PipelineCache cache(g);
    return estimate_at(cache, chain, alpha, stage);
}

}  // namespace hoobs
