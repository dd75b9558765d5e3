#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <vector>

namespace hoobs {

/// Set stored as a sorted vector without duplicates, so equal sets compare and
/// hash identically.
template <typename T>
class OrdSet {
public:
    using value_type = T;
    using const_iterator = typename std::vector<T>::const_iterator;

    OrdSet() = default;
    OrdSet(std::initializer_list<T> init) : items_(init) { normalize(); }
    explicit OrdSet(std::vector<T> items) : items_(std::move(items)) { normalize(); }

    /// Caller guarantees `items` is sorted and unique.
    static OrdSet from_sorted(std::vector<T> items) {
        OrdSet s;
        s.items_ = std::move(items);
        return s;
    }

    bool insert(const T& x) {
        auto it = std::lower_bound(items_.begin(), items_.end(), x);
        if (it != items_.end() && *it == x) return false;
        items_.insert(it, x);
        return true;
    }

    bool contains(const T& x) const {
        return std::binary_search(items_.begin(), items_.end(), x);
    }

    bool is_subset_of(const OrdSet& other) const {
        return std::includes(other.items_.begin(), other.items_.end(), items_.begin(), items_.end());
    }

    OrdSet unite(const OrdSet& other) const {
        std::vector<T> out;
        out.reserve(items_.size() + other.items_.size());
        std::set_union(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                       std::back_inserter(out));
        return from_sorted(std::move(out));
    }

    OrdSet intersect(const OrdSet& other) const {
        std::vector<T> out;
        std::set_intersection(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                              std::back_inserter(out));
        return from_sorted(std::move(out));
    }

    OrdSet minus(const OrdSet& other) const {
        std::vector<T> out;
        std::set_difference(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                            std::back_inserter(out));
        return from_sorted(std::move(out));
    }

    std::size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }
    const_iterator begin() const { return items_.begin(); }
    const_iterator end() const { return items_.end(); }
    const T& operator[](std::size_t i) const { return items_[i]; }
    const std::vector<T>& vec() const { return items_; }

    friend bool operator==(const OrdSet&, const OrdSet&) = default;
    friend auto operator<=>(const OrdSet& a, const OrdSet& b) { return a.items_ <=> b.items_; }

private:
    void normalize() {
        std::sort(items_.begin(), items_.end());
        items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
    }

    std::vector<T> items_;
};

template <typename T>
struct OrdSetHash {
    std::size_t operator()(const OrdSet<T>& s) const {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (const T& x : s) {
            h ^= std::hash<T>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

}  // namespace hoobs
