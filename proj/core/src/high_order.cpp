#include "hoobs/high_order.hpp"

#include <algorithm>

#include "hoobs/errors.hpp"

namespace hoobs {

std::string to_string(Stage s) { return s == Stage::observer ? "observer" : "detector"; }

LabeledAutomaton lift_composition(const ProductAutomaton& product, const NameTable& left_events,
                                  const EventSet& next_observable) {
    const auto& a = product.lfsa.automaton;
    std::vector<Transition> ts;
    ts.reserve(a.transitions().size());
    for (const auto& t : a.transitions()) {
        EventId first = product.event_pairs.at(t.event).first;
        if (first == kNoEvent) throw InternalError("lift: product event with a silent first component");
        ts.push_back({t.src, first, t.dst});
    }
    Automaton lifted(a.state_names(), left_events, std::move(ts), a.initial(), a.initial().empty());
    return LabeledAutomaton(std::move(lifted), Labeling::projection(left_events, next_observable));
}

const SetAutomaton& PipelineLevel::set_automaton() const {
    return std::visit([](const auto& x) -> const SetAutomaton& { return x; }, automaton);
}

HighOrderObserver::HighOrderObserver(const Automaton& g, const AgentChain& chain, Stage stage,
                                     std::size_t state_cap) {
    if (chain.empty()) throw ValidationError("agent chain is empty");
    if (stage == Stage::detector && chain.size() < 2) {
        throw ValidationError("the detector stage needs a chain of at least two agents");
    }
    for (const auto& a : chain) {
        for (EventId e : a.observable) {
            if (e >= g.num_events()) throw ValidationError("agent '" + a.name + "' observes an unknown event");
        }
    }
    g_ = std::make_shared<const Automaton>(g);
    stage_ = stage;
    StateBudget budget(state_cap);
    push_first(chain.front(), budget);
    for (std::size_t k = 1; k < chain.size(); ++k) push_next(chain[k], budget);
    states_built_ = budget.used();
}

HighOrderObserver HighOrderObserver::extend(const HighOrderObserver& prefix, const AgentProfile& next,
                                            std::size_t state_cap) {
    HighOrderObserver h = prefix;
    StateBudget budget(state_cap);
    budget.charge(prefix.states_built_);
    h.push_next(next, budget);
    h.states_built_ = budget.used();
    return h;
}

void HighOrderObserver::push_first(const AgentProfile& a1, StateBudget& budget) {
    LabeledAutomaton s(*g_, Labeling::projection(g_->event_names(), a1.observable));
    auto level = std::make_shared<PipelineLevel>();
    level->agent = a1;
    if (stage_ == Stage::observer) {
        ObserverOptions opt;
        opt.budget = &budget;
        level->automaton = build_observer(s, opt);
    } else {
        level->automaton = build_detector(s, &budget);
    }
    const auto& sa = level->set_automaton();
    level->values.reserve(sa.size());
    for (std::size_t i = 0; i < sa.size(); ++i) {
        if (sa.state(i).empty()) throw InternalError("empty estimate in a level-1 observer");
        level->values.push_back(NestedState::base(sa.state(i)));
    }
    levels_.push_back(std::move(level));
}

void HighOrderObserver::push_next(const AgentProfile& next, StateBudget& budget) {
    const auto& prev = *levels_.back();
    LabeledAutomaton left(*g_, Labeling::projection(g_->event_names(), prev.agent.observable));
    LabeledAutomaton right = prev.set_automaton().as_labeled(false);

    auto level = std::make_shared<PipelineLevel>();
    level->agent = next;
    level->product = concurrent_composition(left, right, &budget);
    level->lifted = lift_composition(*level->product, g_->event_names(), next.observable);
    ObserverOptions opt;
    opt.budget = &budget;
    Observer obs = build_observer(*level->lifted, opt);

    const auto& pairs = level->product->state_pairs;
    level->values.reserve(obs.size());
    for (std::size_t i = 0; i < obs.size(); ++i) {
        std::vector<NestedState::Pair> members;
        members.reserve(obs.state(i).size());
        for (StateId ps : obs.state(i)) {
            const auto& [q, r] = pairs[ps];
            members.emplace_back(q, prev.values.at(r));
        }
        if (members.empty()) throw InternalError("empty estimate in an order-n observer");
        level->values.push_back(NestedState::level(std::move(members)));
    }
    level->automaton = std::move(obs);
    levels_.push_back(std::move(level));
}

AgentChain HighOrderObserver::chain() const {
    AgentChain out;
    for (const auto& l : levels_) out.push_back(l->agent);
    return out;
}

const Observer& HighOrderObserver::final_observer() const {
    const auto* obs = std::get_if<Observer>(&levels_.back()->automaton);
    if (!obs) throw ValidationError("a detector-stage pipeline of order 1 has no observer");
    return *obs;
}

Labeling HighOrderObserver::final_labeling() const {
    return Labeling::projection(g_->event_names(), levels_.back()->agent.observable);
}

std::optional<std::size_t> HighOrderObserver::run(std::span<const LabelId> alpha) const {
    return final_observer().run(alpha);
}

std::string HighOrderObserver::render_product_state(std::size_t k, StateId s) const {
    const auto& lv = level(k);
    if (!lv.product) throw ValidationError("level 1 has no product");
    const auto& [q, r] = lv.product->state_pairs.at(s);
    return "(" + g_->state_names().name(q) + "," + render(level(k - 1).values.at(r), g_->state_names()) + ")";
}

bool nested_chain_fastpath_applicable(const AgentChain& chain) {
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        const auto& a = chain[i].observable;
        const auto& b = chain[i + 1].observable;
        if (!a.is_subset_of(b) && !b.is_subset_of(a)) return false;
    }
    return true;
}

FastPathCheck check_fastpath(const HighOrderObserver& h) {
    FastPathCheck out;
    auto chain = h.chain();
    out.applicable = nested_chain_fastpath_applicable(chain);
    out.counts_equal = true;
    for (std::size_t k = 1; k <= h.order(); ++k) {
        out.pipeline_counts.push_back(h.level(k).set_automaton().size());
        LabeledAutomaton s(h.system(), Labeling::projection(h.system().event_names(), chain[k - 1].observable));
        out.plain_counts.push_back(build_observer(s).size());
        if (out.pipeline_counts.back() != out.plain_counts.back()) out.counts_equal = false;
    }
    return out;
}

std::shared_ptr<const HighOrderObserver> PipelineCache::get(const AgentChain& chain, Stage stage) {
    if (chain.empty()) throw ValidationError("agent chain is empty");
    std::vector<std::string> names;
    for (const auto& a : chain) names.push_back(a.name);
    if (auto it = cache_.find({names, stage}); it != cache_.end()) return it->second;

    std::shared_ptr<const HighOrderObserver> built;
    std::size_t min_prefix = stage == Stage::detector ? 2 : 1;
    if (chain.size() > min_prefix) {
        AgentChain prefix(chain.begin(), chain.end() - 1);
        auto base = get(prefix, stage);
        built = std::make_shared<const HighOrderObserver>(HighOrderObserver::extend(*base, chain.back(), cap_));
    } else {
        built = std::make_shared<const HighOrderObserver>(g_, chain, stage, cap_);
    }
    cache_.emplace(std::make_pair(names, stage), built);
    return built;
}

}  // namespace hoobs
