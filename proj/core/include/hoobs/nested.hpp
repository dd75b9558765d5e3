#pragma once

#include <compare>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hoobs/names.hpp"

namespace hoobs {

/// State of an order-n observer: a base set of system states (depth 1) or a set
/// of (system state, NestedState) pairs one level deeper. Immutable, shared.
class NestedState {
public:
    using Pair = std::pair<StateId, NestedState>;

    static NestedState base(StateSet states);
    /// Sorts and deduplicates. Throws InternalError on an empty set or mixed depths.
    static NestedState level(std::vector<Pair> pairs);

    bool is_base() const;
    int depth() const;
    const StateSet& states() const;
    const std::vector<Pair>& pairs() const;
    std::size_t hash() const;

    friend bool operator==(const NestedState& a, const NestedState& b);
    friend std::strong_ordering operator<=>(const NestedState& a, const NestedState& b);

private:
    struct Node;
    std::shared_ptr<const Node> node_;
};

/// Flattened order-n estimate, an element of Pow_n(Q): a base set (depth 1) or a
/// set of depth-(k-1) estimates. A non-base estimate may be empty.
class Estimate {
public:
    static Estimate base(StateSet states);
    static Estimate set(std::vector<Estimate> members, int depth);

    bool is_base() const;
    int depth() const;
    const StateSet& states() const;
    const std::vector<Estimate>& members() const;
    std::size_t hash() const;

    friend bool operator==(const Estimate& a, const Estimate& b);
    friend std::strong_ordering operator<=>(const Estimate& a, const Estimate& b);

private:
    struct Node;
    std::shared_ptr<const Node> node_;
};

struct NestedStateHash {
    std::size_t operator()(const NestedState& x) const { return x.hash(); }
};

struct EstimateHash {
    std::size_t operator()(const Estimate& x) const { return x.hash(); }
};

/// Drops the first component of every pair, recursively.
Estimate flatten(const NestedState& x);

/// "{(2,{2}),(3,{3,4,5})}"
std::string render(const NestedState& x, const NameTable& states);
/// "{{2},{3,4,5}}"
std::string render(const Estimate& x, const NameTable& states);

}  // namespace hoobs
