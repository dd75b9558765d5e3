#include "hoobs/nested.hpp"

#include <algorithm>

#include "hoobs/errors.hpp"

namespace hoobs {

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
    return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

}  // namespace

struct NestedState::Node {
    int depth = 1;
    std::size_t hash = 0;
    StateSet states;
    std::vector<Pair> pairs;
};

NestedState NestedState::base(StateSet states) {
    auto n = std::make_shared<Node>();
    n->hash = mix(1, StateSetHash{}(states));
    n->states = std::move(states);
    NestedState x;
    x.node_ = std::move(n);
    return x;
}

NestedState NestedState::level(std::vector<Pair> pairs) {
    if (pairs.empty()) throw InternalError("nested state with no pairs");
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    auto n = std::make_shared<Node>();
    int d = pairs.front().second.depth();
    std::size_t h = static_cast<std::size_t>(d + 1);
    for (const auto& [q, x] : pairs) {
        if (x.depth() != d) throw InternalError("nested state mixes depths");
        h = mix(mix(h, q), x.hash());
    }
    n->depth = d + 1;
    n->hash = h;
    n->pairs = std::move(pairs);
    NestedState x;
    x.node_ = std::move(n);
    return x;
}

bool NestedState::is_base() const { return node_->depth == 1; }
int NestedState::depth() const { return node_->depth; }
const StateSet& NestedState::states() const { return node_->states; }
const std::vector<NestedState::Pair>& NestedState::pairs() const { return node_->pairs; }
std::size_t NestedState::hash() const { return node_->hash; }

bool operator==(const NestedState& a, const NestedState& b) {
    if (a.node_ == b.node_) return true;
    if (a.hash() != b.hash() || a.depth() != b.depth()) return false;
    return (a <=> b) == 0;
}

std::strong_ordering operator<=>(const NestedState& a, const NestedState& b) {
    if (a.node_ == b.node_) return std::strong_ordering::equal;
    if (auto c = a.depth() <=> b.depth(); c != 0) return c;
    if (a.is_base()) return a.states() <=> b.states();
    const auto& pa = a.pairs();
    const auto& pb = b.pairs();
    for (std::size_t i = 0; i < pa.size() && i < pb.size(); ++i) {
        if (auto c = pa[i].first <=> pb[i].first; c != 0) return c;
        if (auto c = pa[i].second <=> pb[i].second; c != 0) return c;
    }
    return pa.size() <=> pb.size();
}

struct Estimate::Node {
    int depth = 1;
    std::size_t hash = 0;
    StateSet states;
    std::vector<Estimate> members;
};

Estimate Estimate::base(StateSet states) {
    auto n = std::make_shared<Node>();
    n->hash = mix(1, StateSetHash{}(states));
    n->states = std::move(states);
    Estimate x;
    x.node_ = std::move(n);
    return x;
}

Estimate Estimate::set(std::vector<Estimate> members, int depth) {
    if (depth < 2) throw InternalError("estimate set needs depth >= 2");
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    auto n = std::make_shared<Node>();
    std::size_t h = static_cast<std::size_t>(depth);
    for (const auto& m : members) {
        if (m.depth() != depth - 1) throw InternalError("estimate member has the wrong depth");
        h = mix(h, m.hash());
    }
    n->depth = depth;
    n->hash = h;
    n->members = std::move(members);
    Estimate x;
    x.node_ = std::move(n);
    return x;
}

bool Estimate::is_base() const { return node_->depth == 1; }
int Estimate::depth() const { return node_->depth; }
const StateSet& Estimate::states() const { return node_->states; }
const std::vector<Estimate>& Estimate::members() const { return node_->members; }
std::size_t Estimate::hash() const { return node_->hash; }

bool operator==(const Estimate& a, const Estimate& b) {
    if (a.node_ == b.node_) return true;
    if (a.hash() != b.hash() || a.depth() != b.depth()) return false;
    return (a <=> b) == 0;
}

std::strong_ordering operator<=>(const Estimate& a, const Estimate& b) {
    if (a.node_ == b.node_) return std::strong_ordering::equal;
    if (auto c = a.depth() <=> b.depth(); c != 0) return c;
    if (a.is_base()) return a.states() <=> b.states();
    const auto& ma = a.members();
    const auto& mb = b.members();
    for (std::size_t i = 0; i < ma.size() && i < mb.size(); ++i) {
        if (auto c = ma[i] <=> mb[i]; c != 0) return c;
    }
    return ma.size() <=> mb.size();
}

Estimate flatten(const NestedState& x) {
    if (x.is_base()) return Estimate::base(x.states());
    std::vector<Estimate> members;
    members.reserve(x.pairs().size());
    for (const auto& [q, inner] : x.pairs()) members.push_back(flatten(inner));
    return Estimate::set(std::move(members), x.depth());
}

std::string render(const NestedState& x, const NameTable& states) {
    if (x.is_base()) return render_set(x.states(), states);
    std::string out = "{";
    bool first = true;
    for (const auto& [q, inner] : x.pairs()) {
        if (!first) out += ',';
        first = false;
        out += '(' + states.name(q) + ',' + render(inner, states) + ')';
    }
    return out + '}';
}

std::string render(const Estimate& x, const NameTable& states) {
    if (x.is_base()) return render_set(x.states(), states);
    std::string out = "{";
    bool first = true;
    for (const auto& m : x.members()) {
        if (!first) out += ',';
        first = false;
        out += render(m, states);
    }
    return out + '}';
}

}  // namespace hoobs
