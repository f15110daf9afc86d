#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

#include "kstar/propset.hpp"
#include "kstar/signature.hpp"

namespace kstar {

enum class Connective { constant_true, constant_false, atom, negation, conjunction, disjunction, implication, equivalence };

/// Immutable propositional formula. Nodes are shared, so copies are cheap.
class Formula {
public:
    static Formula truth();
    static Formula falsity();
    static Formula atom(std::size_t index);
    static Formula negation(Formula operand);
    static Formula conjunction(Formula lhs, Formula rhs);
    static Formula disjunction(Formula lhs, Formula rhs);
    static Formula implication(Formula lhs, Formula rhs);
    static Formula equivalence(Formula lhs, Formula rhs);

    Connective connective() const noexcept { return node_->connective; }
    bool is_binary() const noexcept;
    /// Atom index; only meaningful for Connective::atom.
    std::size_t atom_index() const noexcept { return node_->atom; }
    /// Operand of a negation, or left operand of a binary connective.
    const Formula& lhs() const { return *node_->lhs; }
    const Formula& rhs() const { return *node_->rhs; }

    /// Structural equality.
    friend bool operator==(const Formula& a, const Formula& b);

private:
    struct Node {
        Connective connective;
        std::size_t atom = 0;
        std::shared_ptr<const Formula> lhs;
        std::shared_ptr<const Formula> rhs;
    };

    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    static Formula make(Connective c, Formula lhs, Formula rhs);

    std::shared_ptr<const Node> node_;
};

/// Parses the formula grammar
///
///     formula := iff
///     iff     := imp ("<->" imp)*
///     imp     := or ("->" or)*
///     or      := and ("|" and)*
///     and     := unary ("&" unary)*
///     unary   := "!" unary | "(" formula ")" | "true" | "false" | atom
///
/// `&` and `|` associate to the left, `->` and `<->` to the right.
/// Throws ParseError or UnknownAtomError.
Formula parse_formula(std::string_view text, const Signature& sig);

/// Truth-table semantics: the valuations under which `f` is true.
PropSet models_of(const Formula& f, const Signature& sig);

/// Renders `f` in the input grammar. Operands of a different binary
/// connective are parenthesised, so a DNF prints as `(!p & !q) | (p & q)`.
std::string to_string(const Formula& f, const Signature& sig);

/// Full DNF of `s`: one minterm per member valuation in ascending order,
/// `false` for the empty set and `true` for the full set.
Formula canonical_formula(const PropSet& s, const Signature& sig);

/// to_string(canonical_formula(s, sig), sig)
std::string canonical_text(const PropSet& s, const Signature& sig);

/// Convenience: models_of(parse_formula(text, sig), sig).
PropSet parse_propset(std::string_view text, const Signature& sig);

} // namespace kstar
