#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hoobs/nested.hpp"

namespace hoobs {

/// Leveled boolean formula over flattened estimates. Atoms evaluate on a base
/// set (level 1); each Exists/Forall adds one level.
class Formula {
public:
    enum class Kind {
        nonempty,
        subset_of,
        not_subset_of,
        equals,
        card_eq,
        card_ge,
        card_le,
        superset_any_of,
        exists,
        forall,
        conj,
        disj,
        negation,
    };

    static Formula nonempty();
    static Formula subset_of(StateSet a);
    static Formula not_subset_of(StateSet a);
    static Formula equals(StateSet a);
    static Formula card_eq(std::size_t k);
    static Formula card_ge(std::size_t k);
    static Formula card_le(std::size_t k);
    /// Members must have one or two elements.
    static Formula superset_any_of(std::vector<StateSet> family);
    static Formula exists(Formula f);
    static Formula forall(Formula f);
    /// Children must share one level; at least one child.
    static Formula conj(std::vector<Formula> fs);
    static Formula disj(std::vector<Formula> fs);
    static Formula negation(Formula f);

    Kind kind() const;
    int level() const;
    const StateSet& set() const;
    std::size_t count() const;
    const std::vector<StateSet>& family() const;
    const std::vector<Formula>& children() const;
    bool is_atom() const;

    /// Throws ValidationError if level() != v.depth().
    bool evaluate(const Estimate& v) const;
    bool evaluate_base(const StateSet& X) const;

    /// Largest state id referenced by an atom, if any.
    std::optional<StateId> max_state() const;

private:
    struct Node;
    explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

bool evaluate(const Formula& p, const Estimate& v);

/// Prefix s-expression form, e.g. "(forall (exists (card>= 2)))".
std::string to_string(const Formula& p, const NameTable& states);

/// Parses the s-expression grammar; state names resolve against `states`.
/// Errors carry the byte offset of the problem.
Formula parse_predicate(std::string_view text, const NameTable& states);

/// Strong-CSO predicate over observer states of CC(S, S_NS^<>). A pair's second
/// component is nullopt for <>.
class ScsoPredicate {
public:
    using Pair = std::pair<StateId, std::optional<StateId>>;

    ScsoPredicate(StateSet secrets, StateSet nonsecrets);
    const StateSet& secrets() const { return secrets_; }
    const StateSet& nonsecrets() const { return nonsecrets_; }
    /// If some secret q has (q,<>) in X, some non-secret q' has (q,q') in X.
    bool evaluate(const std::vector<Pair>& X) const;

private:
    StateSet secrets_;
    StateSet nonsecrets_;
};

namespace builtin {

Formula cso(const StateSet& secrets);
/// X inside Q_c or inside Q \ Q_c.
Formula critical_observability(const StateSet& critical, std::size_t num_states);
Formula determinism();
/// Forall(Nonempty) and Exists(SupersetAnyOf(T)).
Formula t_det(const std::vector<StateSet>& t);
Formula hoo_a(const std::vector<StateSet>& t_spec);
/// Forall(Nonempty) and Exists(CardGe(2)).
Formula hoo_b();
/// Forall(Nonempty) and, for every q, Exists(Not(Equals({q}))).
Formula hoo_c(std::size_t num_states);
/// Forall(Exists(CardGe(2))).
Formula order3_cso();
/// t_det(T) under n-2 Forall wrappers; n >= 2.
Formula order_n_t_det(const std::vector<StateSet>& t, std::size_t n);
ScsoPredicate scso(const StateSet& secrets, std::size_t num_states);

}  // namespace builtin

/// True when the predicate may be checked on the detector-first pipeline: after
/// stripping order-2 Forall wrappers, it is Exists(A) or Forall(Nonempty) and
/// Exists(A), where A is SupersetAnyOf(T), CardGe(1), CardGe(2) or Nonempty.
bool detector_stage_eligible(const Formula& p, std::size_t order);

}  // namespace hoobs
