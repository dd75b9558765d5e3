#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hoobs/automaton.hpp"

namespace hoobs::detail {

/// Per-state silent and labelled successor lists with a reusable marker array,
/// so repeated closures do not reallocate.
class StepIndex {
public:
    explicit StepIndex(const LabeledAutomaton& s);

    StateSet closure(std::vector<StateId> seeds);
    /// Successors of every state in X, bucketed by label.
    void step_all(const StateSet& X, std::vector<std::vector<StateId>>& buckets) const;
    const std::vector<std::pair<LabelId, StateId>>& moves(StateId q) const { return moves_[q]; }
    const std::vector<StateId>& silent(StateId q) const { return silent_[q]; }

private:
    std::vector<std::vector<StateId>> silent_;
    std::vector<std::vector<std::pair<LabelId, StateId>>> moves_;
    std::vector<std::uint32_t> stamp_;
    std::uint32_t gen_ = 0;
};

}  // namespace hoobs::detail
