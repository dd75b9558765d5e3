#include "hoobs/names.hpp"

#include "hoobs/errors.hpp"

namespace hoobs {

NameTable::NameTable(const std::vector<std::string>& names) {
    for (const auto& n : names) add(n);
}

NameTable NameTable::anonymous(std::size_t count, std::string prefix) {
    NameTable t;
    t.anonymous_ = true;
    t.count_ = count;
    t.prefix_ = std::move(prefix);
    return t;
}

std::uint32_t NameTable::add(std::string name) {
    if (anonymous_) throw InternalError("add() on an anonymous name table");
    auto id = static_cast<std::uint32_t>(names_.size());
    auto [it, fresh] = index_.emplace(name, id);
    if (!fresh) throw ValidationError("duplicate name '" + name + "'");
    names_.push_back(std::move(name));
    return id;
}

std::optional<std::uint32_t> NameTable::find(std::string_view name) const {
    if (anonymous_) {
        if (name.substr(0, prefix_.size()) != prefix_) return std::nullopt;
        try {
            std::size_t pos = 0;
            std::string digits(name.substr(prefix_.size()));
            auto v = std::stoul(digits, &pos);
            if (pos == digits.size() && v < count_) return static_cast<std::uint32_t>(v);
        } catch (const std::exception&) {
        }
        return std::nullopt;
    }
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::uint32_t NameTable::at(std::string_view name, std::string_view what) const {
    if (auto id = find(name)) return *id;
    throw ValidationError("unknown " + std::string(what) + " '" + std::string(name) + "'");
}

std::string NameTable::name(std::uint32_t id) const {
    if (anonymous_) return prefix_ + std::to_string(id);
    return names_.at(id);
}

std::vector<std::string> NameTable::names() const {
    if (!anonymous_) return names_;
    std::vector<std::string> out;
    out.reserve(count_);
    for (std::size_t i = 0; i < count_; ++i) out.push_back(name(static_cast<std::uint32_t>(i)));
    return out;
}

std::string render_set(const StateSet& s, const NameTable& names) {
    std::string out = "{";
    bool first = true;
    for (StateId q : s) {
        if (!first) out += ',';
        first = false;
        out += names.name(q);
    }
    out += '}';
    return out;
}

}  // namespace hoobs
