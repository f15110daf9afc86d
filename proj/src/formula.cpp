#include "kstar/formula.hpp"

#include <cctype>
#include <optional>
#include <sstream>
#include <vector>

#include "kstar/error.hpp"

namespace kstar {

Formula Formula::make(Connective c, Formula lhs, Formula rhs)
{
    auto node = std::make_shared<Node>();
    node->connective = c;
    node->lhs = std::make_shared<const Formula>(std::move(lhs));
    node->rhs = std::make_shared<const Formula>(std::move(rhs));
    return Formula{std::move(node)};
}

Formula Formula::truth()
{
    static const Formula f{std::make_shared<const Node>(Node{Connective::constant_true, 0, nullptr, nullptr})};
    return f;
}

Formula Formula::falsity()
{
    static const Formula f{std::make_shared<const Node>(Node{Connective::constant_false, 0, nullptr, nullptr})};
    return f;
}

Formula Formula::atom(std::size_t index)
{
    return Formula{std::make_shared<const Node>(Node{Connective::atom, index, nullptr, nullptr})};
}

Formula Formula::negation(Formula operand)
{
    auto node = std::make_shared<Node>();
    node->connective = Connective::negation;
    node->lhs = std::make_shared<const Formula>(std::move(operand));
    return Formula{std::move(node)};
}

Formula Formula::conjunction(Formula lhs, Formula rhs) { return make(Connective::conjunction, std::move(lhs), std::move(rhs)); }
Formula Formula::disjunction(Formula lhs, Formula rhs) { return make(Connective::disjunction, std::move(lhs), std::move(rhs)); }
Formula Formula::implication(Formula lhs, Formula rhs) { return make(Connective::implication, std::move(lhs), std::move(rhs)); }
Formula Formula::equivalence(Formula lhs, Formula rhs) { return make(Connective::equivalence, std::move(lhs), std::move(rhs)); }

bool Formula::is_binary() const noexcept
{
    switch (connective()) {
    case Connective::conjunction:
    case Connective::disjunction:
    case Connective::implication:
    case Connective::equivalence:
        return true;
    default:
        return false;
    }
}

bool operator==(const Formula& a, const Formula& b)
{
    if (a.node_ == b.node_)
        return true;
    if (a.connective() != b.connective())
        return false;
    switch (a.connective()) {
    case Connective::constant_true:
    case Connective::constant_false:
        return true;
    case Connective::atom:
        return a.atom_index() == b.atom_index();
    case Connective::negation:
        return a.lhs() == b.lhs();
    default:
        return a.lhs() == b.lhs() && a.rhs() == b.rhs();
    }
}

// ---------------------------------------------------------------------------
// Parser

namespace {

enum class Tok { end, lparen, rparen, bang, amp, bar, arrow, iff, ident };

struct Token {
    Tok kind;
    std::size_t pos;
    std::string text;
};

std::vector<Token> tokenize(std::string_view s)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        switch (c) {
        case '(': out.push_back({Tok::lparen, start, "("}); ++i; continue;
        case ')': out.push_back({Tok::rparen, start, ")"}); ++i; continue;
        case '!': out.push_back({Tok::bang, start, "!"}); ++i; continue;
        case '&': out.push_back({Tok::amp, start, "&"}); ++i; continue;
        case '|': out.push_back({Tok::bar, start, "|"}); ++i; continue;
        default: break;
        }
        if (s.substr(i, 2) == "->") {
            out.push_back({Tok::arrow, start, "->"});
            i += 2;
            continue;
        }
        if (s.substr(i, 3) == "<->") {
            out.push_back({Tok::iff, start, "<->"});
            i += 3;
            continue;
        }
        if (c >= 'a' && c <= 'z') {
            while (i < s.size() && (std::islower(static_cast<unsigned char>(s[i]))
                                    || std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '_'))
                ++i;
            out.push_back({Tok::ident, start, std::string(s.substr(start, i - start))});
            continue;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
    out.push_back({Tok::end, s.size(), ""});
    return out;
}

class Parser {
public:
    Parser(std::string_view text, const Signature& sig) : tokens_(tokenize(text)), sig_(sig) {}

    Formula parse()
    {
        Formula f = parse_iff();
        if (peek().kind != Tok::end)
            throw ParseError("unexpected '" + peek().text + "'", peek().pos);
        return f;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& advance() { return tokens_[pos_++]; }

    Formula parse_iff()
    {
        Formula lhs = parse_imp();
        if (peek().kind == Tok::iff) {
            advance();
            return Formula::equivalence(std::move(lhs), parse_iff());
        }
        return lhs;
    }

    Formula parse_imp()
    {
        Formula lhs = parse_or();
        if (peek().kind == Tok::arrow) {
            advance();
            return Formula::implication(std::move(lhs), parse_imp());
        }
        return lhs;
    }

    Formula parse_or()
    {
        Formula f = parse_and();
        while (peek().kind == Tok::bar) {
            advance();
            f = Formula::disjunction(std::move(f), parse_and());
        }
        return f;
    }

    Formula parse_and()
    {
        Formula f = parse_unary();
        while (peek().kind == Tok::amp) {
            advance();
            f = Formula::conjunction(std::move(f), parse_unary());
        }
        return f;
    }

    Formula parse_unary()
    {
        const Token& t = advance();
        switch (t.kind) {
        case Tok::bang:
            return Formula::negation(parse_unary());
        case Tok::lparen: {
            Formula f = parse_iff();
            if (peek().kind != Tok::rparen)
                throw ParseError("expected ')'", peek().pos);
            advance();
            return f;
        }
        case Tok::ident:
            if (t.text == "true")
                return Formula::truth();
            if (t.text == "false")
                return Formula::falsity();
            if (auto idx = sig_.index_of(t.text))
                return Formula::atom(*idx);
            throw UnknownAtomError(t.text);
        case Tok::end:
            throw ParseError("unexpected end of input", t.pos);
        default:
            throw ParseError("unexpected '" + t.text + "'", t.pos);
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    const Signature& sig_;
};

} // namespace

Formula parse_formula(std::string_view text, const Signature& sig) { return Parser{text, sig}.parse(); }

// ---------------------------------------------------------------------------
// Semantics

namespace {

PropSet atom_models(std::size_t atom, const Signature& sig)
{
    PropSet::word_type bits = 0;
    for (std::size_t v = 0; v < sig.valuation_count(); ++v)
        if (sig.holds(v, atom))
            bits |= PropSet::word_type{1} << v;
    return {sig.size(), bits};
}

} // namespace

PropSet models_of(const Formula& f, const Signature& sig)
{
    const std::size_t n = sig.size();
    switch (f.connective()) {
    case Connective::constant_true: return PropSet::full(n);
    case Connective::constant_false: return PropSet::empty(n);
    case Connective::atom: return atom_models(f.atom_index(), sig);
    case Connective::negation: return ~models_of(f.lhs(), sig);
    case Connective::conjunction: return models_of(f.lhs(), sig) & models_of(f.rhs(), sig);
    case Connective::disjunction: return models_of(f.lhs(), sig) | models_of(f.rhs(), sig);
    case Connective::implication: return implies(models_of(f.lhs(), sig), models_of(f.rhs(), sig));
    case Connective::equivalence: {
        const PropSet a = models_of(f.lhs(), sig);
        const PropSet b = models_of(f.rhs(), sig);
        return (a & b) | (~a & ~b);
    }
    }
    return PropSet::empty(n);
}

PropSet parse_propset(std::string_view text, const Signature& sig) { return models_of(parse_formula(text, sig), sig); }

// ---------------------------------------------------------------------------
// Printing

namespace {

const char* symbol(Connective c)
{
    switch (c) {
    case Connective::conjunction: return " & ";
    case Connective::disjunction: return " | ";
    case Connective::implication: return " -> ";
    case Connective::equivalence: return " <-> ";
    default: return "";
    }
}

void print(std::ostream& os, const Formula& f, const Signature& sig);

void print_operand(std::ostream& os, const Formula& child, Connective parent, bool right, const Signature& sig)
{
    bool parens = false;
    if (child.is_binary()) {
        if (child.connective() != parent)
            parens = true;
        else if (parent == Connective::implication || parent == Connective::equivalence)
            parens = !right;
    }
    if (parens)
        os << '(';
    print(os, child, sig);
    if (parens)
        os << ')';
}

void print(std::ostream& os, const Formula& f, const Signature& sig)
{
    switch (f.connective()) {
    case Connective::constant_true: os << "true"; return;
    case Connective::constant_false: os << "false"; return;
    case Connective::atom: os << sig.atom(f.atom_index()); return;
    case Connective::negation:
        os << '!';
        if (f.lhs().is_binary()) {
            os << '(';
            print(os, f.lhs(), sig);
            os << ')';
        } else {
            print(os, f.lhs(), sig);
        }
        return;
    default:
        print_operand(os, f.lhs(), f.connective(), false, sig);
        os << symbol(f.connective());
        print_operand(os, f.rhs(), f.connective(), true, sig);
        return;
    }
}

Formula minterm(std::size_t valuation, const Signature& sig)
{
    auto literal = [&](std::size_t i) {
        Formula a = Formula::atom(i);
        return sig.holds(valuation, i) ? a : Formula::negation(a);
    };
    Formula f = literal(0);
    for (std::size_t i = 1; i < sig.size(); ++i)
        f = Formula::conjunction(std::move(f), literal(i));
    return f;
}

} // namespace

std::string to_string(const Formula& f, const Signature& sig)
{
    std::ostringstream os;
    print(os, f, sig);
    return os.str();
}

Formula canonical_formula(const PropSet& s, const Signature& sig)
{
    if (s.is_empty())
        return Formula::falsity();
    if (s.is_full())
        return Formula::truth();
    std::optional<Formula> out;
    for (std::size_t v = 0; v < sig.valuation_count(); ++v) {
        if (!s.contains(v))
            continue;
        Formula m = minterm(v, sig);
        out = out ? Formula::disjunction(std::move(*out), std::move(m)) : std::move(m);
    }
    return *out;
}

std::string canonical_text(const PropSet& s, const Signature& sig) { return to_string(canonical_formula(s, sig), sig); }

} // namespace kstar
