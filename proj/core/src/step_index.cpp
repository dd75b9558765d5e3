#include "step_index.hpp"

#include <algorithm>

namespace hoobs::detail {

StepIndex::StepIndex(const LabeledAutomaton& s)
    : silent_(s.automaton.num_states()), moves_(s.automaton.num_states()),
      stamp_(s.automaton.num_states(), 0) {
    for (const auto& t : s.automaton.transitions()) {
        LabelId l = s.labeling(t.event);
        if (l == kEpsilon) {
            silent_[t.src].push_back(t.dst);
        } else {
            moves_[t.src].emplace_back(l, t.dst);
        }
    }
    for (auto& m : moves_) {
        std::sort(m.begin(), m.end());
        m.erase(std::unique(m.begin(), m.end()), m.end());
    }
}

StateSet StepIndex::closure(std::vector<StateId> seeds) {
    if (++gen_ == 0) {
        std::fill(stamp_.begin(), stamp_.end(), 0);
        gen_ = 1;
    }
    std::vector<StateId> out;
    out.reserve(seeds.size());
    for (StateId q : seeds) {
        if (stamp_[q] != gen_) {
            stamp_[q] = gen_;
            out.push_back(q);
        }
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (StateId r : silent_[out[i]]) {
            if (stamp_[r] != gen_) {
                stamp_[r] = gen_;
                out.push_back(r);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return StateSet::from_sorted(std::move(out));
}

void StepIndex::step_all(const StateSet& X, std::vector<std::vector<StateId>>& buckets) const {
    for (auto& b : buckets) b.clear();
    for (StateId q : X) {
        for (const auto& [l, r] : moves_[q]) buckets[l].push_back(r);
    }
}

}  // namespace hoobs::detail
