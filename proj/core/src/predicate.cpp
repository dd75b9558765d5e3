#include "hoobs/predicate.hpp"

#include <algorithm>
#include <cctype>

#include "hoobs/errors.hpp"

namespace hoobs {

struct Formula::Node {
    Kind kind;
    int level = 1;
    StateSet set;
    std::size_t count = 0;
    std::vector<StateSet> family;
    std::vector<Formula> children;
};

namespace {

using Kind = Formula::Kind;

const char* keyword(Kind k) {
    switch (k) {
        case Kind::nonempty: return "nonempty";
        case Kind::subset_of: return "subset";
        case Kind::not_subset_of: return "not_subset";
        case Kind::equals: return "equals";
        case Kind::card_eq: return "card=";
        case Kind::card_ge: return "card>=";
        case Kind::card_le: return "card<=";
        case Kind::superset_any_of: return "superset_any";
        case Kind::exists: return "exists";
        case Kind::forall: return "forall";
        case Kind::conj: return "and";
        case Kind::disj: return "or";
        case Kind::negation: return "not";
    }
    return "?";
}

}  // namespace

Formula Formula::nonempty() {
    auto n = std::make_shared<Node>();
    n->kind = Kind::nonempty;
    return Formula(std::move(n));
}

#define HOOBS_SET_ATOM(fn, k)                 \
    Formula Formula::fn(StateSet a) {         \
        auto n = std::make_shared<Node>();    \
        n->kind = k;                          \
        n->set = std::move(a);                \
        return Formula(std::move(n));         \
    }
HOOBS_SET_ATOM(subset_of, Kind::subset_of)
HOOBS_SET_ATOM(not_subset_of, Kind::not_subset_of)
HOOBS_SET_ATOM(equals, Kind::equals)
#undef HOOBS_SET_ATOM

#define HOOBS_CARD_ATOM(fn, k)                \
    Formula Formula::fn(std::size_t c) {      \
        auto n = std::make_shared<Node>();    \
        n->kind = k;                          \
        n->count = c;                         \
        return Formula(std::move(n));         \
    }
HOOBS_CARD_ATOM(card_eq, Kind::card_eq)
HOOBS_CARD_ATOM(card_ge, Kind::card_ge)
HOOBS_CARD_ATOM(card_le, Kind::card_le)
#undef HOOBS_CARD_ATOM

Formula Formula::superset_any_of(std::vector<StateSet> family) {
    for (const auto& s : family) {
        if (s.empty() || s.size() > 2) {
            throw ValidationError("superset_any members must have one or two states");
        }
    }
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
    auto n = std::make_shared<Node>();
    n->kind = Kind::superset_any_of;
    n->family = std::move(family);
    return Formula(std::move(n));
}

Formula Formula::exists(Formula f) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::exists;
    n->level = f.level() + 1;
    n->children.push_back(std::move(f));
    return Formula(std::move(n));
}

Formula Formula::forall(Formula f) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::forall;
    n->level = f.level() + 1;
    n->children.push_back(std::move(f));
    return Formula(std::move(n));
}

Formula Formula::conj(std::vector<Formula> fs) {
    if (fs.empty()) throw ValidationError("'and' needs at least one operand");
    for (const auto& f : fs) {
        if (f.level() != fs.front().level()) throw ValidationError("'and' operands have different levels");
    }
    auto n = std::make_shared<Node>();
    n->kind = Kind::conj;
    n->level = fs.front().level();
    n->children = std::move(fs);
    return Formula(std::move(n));
}

Formula Formula::disj(std::vector<Formula> fs) {
    if (fs.empty()) throw ValidationError("'or' needs at least one operand");
    for (const auto& f : fs) {
        if (f.level() != fs.front().level()) throw ValidationError("'or' operands have different levels");
    }
    auto n = std::make_shared<Node>();
    n->kind = Kind::disj;
    n->level = fs.front().level();
    n->children = std::move(fs);
    return Formula(std::move(n));
}

Formula Formula::negation(Formula f) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::negation;
    n->level = f.level();
    n->children.push_back(std::move(f));
    return Formula(std::move(n));
}

Formula::Kind Formula::kind() const { return node_->kind; }
int Formula::level() const { return node_->level; }
const StateSet& Formula::set() const { return node_->set; }
std::size_t Formula::count() const { return node_->count; }
const std::vector<StateSet>& Formula::family() const { return node_->family; }
const std::vector<Formula>& Formula::children() const { return node_->children; }

bool Formula::is_atom() const {
    switch (kind()) {
        case Kind::exists:
        case Kind::forall:
        case Kind::conj:
        case Kind::disj:
        case Kind::negation:
            return false;
        default:
            return true;
    }
}

bool Formula::evaluate_base(const StateSet& X) const {
    switch (kind()) {
        case Kind::nonempty: return !X.empty();
        case Kind::subset_of: return X.is_subset_of(set());
        case Kind::not_subset_of: return !X.is_subset_of(set());
        case Kind::equals: return X == set();
        case Kind::card_eq: return X.size() == count();
        case Kind::card_ge: return X.size() >= count();
        case Kind::card_le: return X.size() <= count();
        case Kind::superset_any_of:
            return std::any_of(family().begin(), family().end(), [&](const StateSet& t) { return t.is_subset_of(X); });
        case Kind::conj:
            return std::all_of(children().begin(), children().end(), [&](const Formula& f) { return f.evaluate_base(X); });
        case Kind::disj:
            return std::any_of(children().begin(), children().end(), [&](const Formula& f) { return f.evaluate_base(X); });
        case Kind::negation: return !children().front().evaluate_base(X);
        case Kind::exists:
        case Kind::forall:
            break;
    }
    throw ValidationError("predicate level does not match estimate depth");
}

bool Formula::evaluate(const Estimate& v) const {
    if (level() != v.depth()) {
        throw ValidationError("predicate of level " + std::to_string(level()) + " applied to an estimate of depth " +
                              std::to_string(v.depth()));
    }
    if (v.is_base()) return evaluate_base(v.states());
    const auto& ms = v.members();
    switch (kind()) {
        case Kind::exists: {
            const auto& f = children().front();
            return std::any_of(ms.begin(), ms.end(), [&](const Estimate& m) { return f.evaluate(m); });
        }
        case Kind::forall: {
            const auto& f = children().front();
            return std::all_of(ms.begin(), ms.end(), [&](const Estimate& m) { return f.evaluate(m); });
        }
        case Kind::conj:
            return std::all_of(children().begin(), children().end(), [&](const Formula& f) { return f.evaluate(v); });
        case Kind::disj:
            return std::any_of(children().begin(), children().end(), [&](const Formula& f) { return f.evaluate(v); });
        case Kind::negation: return !children().front().evaluate(v);
        default:
            throw InternalError("atom above level 1");
    }
}

std::optional<StateId> Formula::max_state() const {
    std::optional<StateId> best;
    auto see = [&](const StateSet& s) {
        if (!s.empty() && (!best || s.vec().back() > *best)) best = s.vec().back();
    };
    see(set());
    for (const auto& t : family()) see(t);
    for (const auto& c : children()) {
        if (auto m = c.max_state(); m && (!best || *m > *best)) best = m;
    }
    return best;
}

bool evaluate(const Formula& p, const Estimate& v) { return p.evaluate(v); }

std::string to_string(const Formula& p, const NameTable& states) {
    auto set_text = [&](const StateSet& s) {
        std::string out = "{";
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (i) out += ' ';
            out += states.name(s[i]);
        }
        return out + "}";
    };
    std::string out = "(";
    out += keyword(p.kind());
    switch (p.kind()) {
        case Kind::nonempty:
            break;
        case Kind::subset_of:
        case Kind::not_subset_of:
        case Kind::equals:
            out += ' ' + set_text(p.set());
            break;
        case Kind::card_eq:
        case Kind::card_ge:
        case Kind::card_le:
            out += ' ' + std::to_string(p.count());
            break;
        case Kind::superset_any_of: {
            out += " {";
            for (std::size_t i = 0; i < p.family().size(); ++i) {
                if (i) out += ' ';
                out += set_text(p.family()[i]);
            }
            out += '}';
            break;
        }
        default:
            for (const auto& c : p.children()) out += ' ' + to_string(c, states);
    }
    return out + ")";
}

namespace {

class Parser {
public:
    Parser(std::string_view text, const NameTable& states) : text_(text), states_(states) {}

    Formula parse() {
        Formula f = formula();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return f;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ValidationError("predicate parse error at offset " + std::to_string(pos_) + ": " + msg);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    void expect(char c) {
        if (!peek(c)) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    static bool token_char(char c) {
        return !std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')' && c != '{' && c != '}';
    }

    std::string token() {
        skip_ws();
        auto start = pos_;
        while (pos_ < text_.size() && token_char(text_[pos_])) ++pos_;
        if (start == pos_) fail("expected a name");
        return std::string(text_.substr(start, pos_ - start));
    }

    StateSet state_set() {
        expect('{');
        std::vector<StateId> ids;
        while (!peek('}')) {
            auto at = pos_;
            auto name = token();
            auto id = states_.find(name);
            if (!id) {
                pos_ = at;
                skip_ws();
                fail("unknown state '" + name + "'");
            }
            ids.push_back(*id);
        }
        expect('}');
        return StateSet(std::move(ids));
    }

    std::vector<StateSet> family() {
        expect('{');
        std::vector<StateSet> out;
        while (!peek('}')) out.push_back(state_set());
        expect('}');
        return out;
    }

    std::size_t number() {
        auto at = pos_;
        auto t = token();
        if (!std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
            pos_ = at;
            skip_ws();
            fail("expected a non-negative integer");
        }
        return std::stoul(t);
    }

    Formula formula() {
        skip_ws();
        if (!peek('(')) {
            auto at = pos_;
            auto t = token();
            if (t == "nonempty") return Formula::nonempty();
            pos_ = at;
            fail("expected '(' or 'nonempty'");
        }
        ++pos_;
        auto at = pos_;
        auto op = token();
        Formula out = Formula::nonempty();
        try {
            if (op == "nonempty") {
            } else if (op == "subset") {
                out = Formula::subset_of(state_set());
            } else if (op == "not_subset") {
                out = Formula::not_subset_of(state_set());
            } else if (op == "equals") {
                out = Formula::equals(state_set());
            } else if (op == "card=") {
                out = Formula::card_eq(number());
            } else if (op == "card>=") {
                out = Formula::card_ge(number());
            } else if (op == "card<=") {
                out = Formula::card_le(number());
            } else if (op == "superset_any") {
                out = Formula::superset_any_of(family());
            } else if (op == "exists") {
                out = Formula::exists(formula());
            } else if (op == "forall") {
                out = Formula::forall(formula());
            } else if (op == "not") {
                out = Formula::negation(formula());
            } else if (op == "and" || op == "or") {
                std::vector<Formula> fs;
                while (!peek(')')) fs.push_back(formula());
                out = op == "and" ? Formula::conj(std::move(fs)) : Formula::disj(std::move(fs));
            } else {
                pos_ = at;
                fail("unknown operator '" + op + "'");
            }
        } catch (const ValidationError& e) {
            std::string msg = e.what();
            if (msg.rfind("predicate parse error", 0) == 0) throw;
            fail(msg);
        }
        expect(')');
        return out;
    }

    std::string_view text_;
    const NameTable& states_;
    std::size_t pos_ = 0;
};

}  // namespace

Formula parse_predicate(std::string_view text, const NameTable& states) { return Parser(text, states).parse(); }

ScsoPredicate::ScsoPredicate(StateSet secrets, StateSet nonsecrets)
    : secrets_(std::move(secrets)), nonsecrets_(std::move(nonsecrets)) {
    if (!secrets_.intersect(nonsecrets_).empty()) throw ValidationError("secret and non-secret states overlap");
}

bool ScsoPredicate::evaluate(const std::vector<Pair>& X) const {
    for (const auto& [q, r] : X) {
        if (r || !secrets_.contains(q)) continue;
        bool shadowed = std::any_of(X.begin(), X.end(), [&](const Pair& p) {
            return p.first == q && p.second && nonsecrets_.contains(*p.second);
        });
        if (!shadowed) return false;
    }
    return true;
}

namespace builtin {

Formula cso(const StateSet& secrets) { return Formula::not_subset_of(secrets); }

Formula critical_observability(const StateSet& critical, std::size_t num_states) {
    std::vector<StateId> rest;
    for (StateId q = 0; q < num_states; ++q) {
        if (!critical.contains(q)) rest.push_back(q);
    }
    return Formula::disj({Formula::subset_of(critical), Formula::subset_of(StateSet(std::move(rest)))});
}

Formula determinism() { return Formula::card_eq(1); }

Formula t_det(const std::vector<StateSet>& t) {
    return Formula::conj({Formula::forall(Formula::nonempty()), Formula::exists(Formula::superset_any_of(t))});
}

Formula hoo_a(const std::vector<StateSet>& t_spec) { return t_det(t_spec); }

Formula hoo_b() {
    return Formula::conj({Formula::forall(Formula::nonempty()), Formula::exists(Formula::card_ge(2))});
}

Formula hoo_c(std::size_t num_states) {
    std::vector<Formula> parts{Formula::forall(Formula::nonempty())};
    for (StateId q = 0; q < num_states; ++q) {
        parts.push_back(Formula::exists(Formula::negation(Formula::equals(StateSet{q}))));
    }
    return Formula::conj(std::move(parts));
}

Formula order3_cso() { return Formula::forall(Formula::exists(Formula::card_ge(2))); }

Formula order_n_t_det(const std::vector<StateSet>& t, std::size_t n) {
    if (n < 2) throw ValidationError("order-n T_Det needs n >= 2");
    Formula f = t_det(t);
    for (std::size_t i = 2; i < n; ++i) f = Formula::forall(f);
    return f;
}

ScsoPredicate scso(const StateSet& secrets, std::size_t num_states) {
    std::vector<StateId> rest;
    for (StateId q = 0; q < num_states; ++q) {
        if (!secrets.contains(q)) rest.push_back(q);
    }
    return ScsoPredicate(secrets, StateSet(std::move(rest)));
}

}  // namespace builtin

namespace {

bool monotone_core_atom(const Formula& a) {
    switch (a.kind()) {
        case Kind::superset_any_of:
        case Kind::nonempty:
            return true;
        case Kind::card_ge:
            return a.count() == 1 || a.count() == 2;
        default:
            return false;
    }
}

bool is_exists_core(const Formula& f) {
    return f.kind() == Kind::exists && monotone_core_atom(f.children().front());
}

bool is_forall_nonempty(const Formula& f) {
    return f.kind() == Kind::forall && f.children().front().kind() == Kind::nonempty;
}

}  // namespace

bool detector_stage_eligible(const Formula& p, std::size_t order) {
    if (order < 2 || p.level() != static_cast<int>(order)) return false;
    const Formula* f = &p;
    for (std::size_t i = 2; i < order; ++i) {
        if (f->kind() != Kind::forall) return false;
        f = &f->children().front();
    }
    if (is_exists_core(*f)) return true;
    if (f->kind() != Kind::conj || f->children().size() != 2) return false;
    const auto& a = f->children()[0];
    const auto& b = f->children()[1];
    return (is_forall_nonempty(a) && is_exists_core(b)) || (is_forall_nonempty(b) && is_exists_core(a));
}

}  // namespace hoobs
