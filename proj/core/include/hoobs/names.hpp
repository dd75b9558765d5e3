#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hoobs/ordered_set.hpp"

namespace hoobs {

using StateId = std::uint32_t;
using EventId = std::uint32_t;
using LabelId = std::uint32_t;

using StateSet = OrdSet<StateId>;
using EventSet = OrdSet<EventId>;
using StateSetHash = OrdSetHash<StateId>;

/// Reserved spelling of the empty label in files.
inline constexpr std::string_view kEpsName = "eps";

/// Bidirectional id <-> name map. Ids are dense and assigned in insertion order.
/// An anonymous table has no stored names; name(i) synthesizes one.
class NameTable {
public:
    NameTable() = default;
    explicit NameTable(const std::vector<std::string>& names);

    static NameTable anonymous(std::size_t count, std::string prefix = "s");

    /// Throws ValidationError on duplicates.
    std::uint32_t add(std::string name);
    std::optional<std::uint32_t> find(std::string_view name) const;
    /// Throws ValidationError naming `what` if absent.
    std::uint32_t at(std::string_view name, std::string_view what = "name") const;
    std::string name(std::uint32_t id) const;
    std::size_t size() const { return anonymous_ ? count_ : names_.size(); }
    bool is_anonymous() const { return anonymous_; }
    std::vector<std::string> names() const;

    friend bool operator==(const NameTable& a, const NameTable& b) { return a.names() == b.names(); }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::uint32_t> index_;
    bool anonymous_ = false;
    std::size_t count_ = 0;
    std::string prefix_;
};

/// Renders "{a,b,c}" using the table's names.
std::string render_set(const StateSet& s, const NameTable& names);

}  // namespace hoobs
