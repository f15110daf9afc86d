#include <doctest.h>

#include "helpers.hpp"
#include "kstar/error.hpp"
#include "kstar/propset.hpp"
#include "kstar/signature.hpp"

using namespace kstar;
using test::cn;
using test::pq;
using test::set;

TEST_CASE("signature validates atom names")
{
    CHECK(Signature::with_default_names(3).atoms() == std::vector<std::string>{"p", "q", "r"});
    CHECK_THROWS_AS(Signature({"p", "p"}), Error);
    CHECK_THROWS_AS(Signature({"true"}), Error);
    CHECK_THROWS_AS(Signature({"P"}), Error);
    CHECK_THROWS_AS(Signature(std::vector<std::string>{}), Error);
    CHECK_THROWS_AS(Signature::with_default_names(max_atoms + 1), DomainTooLargeError);
    CHECK(pq().bits(2) == "10");
    CHECK(pq().holds(2, 0));
    CHECK_FALSE(pq().holds(2, 1));
}

TEST_CASE("parse_formula builds the expected trees")
{
    const Formula f = parse_formula("p & !q", pq());
    CHECK(f == Formula::conjunction(Formula::atom(0), Formula::negation(Formula::atom(1))));
    CHECK(parse_formula("true", pq()) == Formula::truth());
    CHECK(parse_formula("p -> (q <-> p)", pq())
          == Formula::implication(Formula::atom(0), Formula::equivalence(Formula::atom(1), Formula::atom(0))));
    // -> is right-associative, & left-associative.
    CHECK(parse_formula("p -> q -> p", pq())
          == Formula::implication(Formula::atom(0), Formula::implication(Formula::atom(1), Formula::atom(0))));
    CHECK(parse_formula("p & q & p", pq())
          == Formula::conjunction(Formula::conjunction(Formula::atom(0), Formula::atom(1)), Formula::atom(0)));
}

TEST_CASE("parse errors carry positions")
{
    CHECK_THROWS_AS(parse_formula("p &", pq()), ParseError);
    CHECK_THROWS_AS(parse_formula("(p", pq()), ParseError);
    CHECK_THROWS_AS(parse_formula("p q", pq()), ParseError);
    CHECK_THROWS_AS(parse_formula("r", pq()), UnknownAtomError);
    try {
        parse_formula("p & & q", pq());
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }
}

TEST_CASE("models_of")
{
    CHECK(to_bit_list(set("p"), pq()) == "{10,11}");
    CHECK(set("false").is_empty());
    CHECK(to_bit_list(set("p -> q"), pq()) == "{00,01,11}");
    CHECK(set("p <-> q") == set("(p & q) | (!p & !q)"));
}

TEST_CASE("models_of agrees with a truth-table oracle on random formulas")
{
    // Evaluate each random formula valuation by valuation and compare.
    const Signature sig = Signature::with_default_names(3);
    const char* ops[] = {" & ", " | ", " -> ", " <-> "};
    std::uint64_t state = 12345;
    auto next = [&] { return state = state * 6364136223846793005ULL + 1442695040888963407ULL, state >> 33; };
    std::function<std::pair<std::string, std::function<bool(unsigned)>>(int)> gen = [&](int depth) {
        const auto pick = next() % (depth == 0 ? 3 : 6);
        if (pick < 3) {
            const auto a = static_cast<unsigned>(pick);
            return std::pair{sig.atoms()[a], std::function<bool(unsigned)>([a](unsigned v) { return ((v >> (2 - a)) & 1U) != 0; })};
        }
        if (pick == 3) {
            auto [t, f] = gen(depth - 1);
            return std::pair{"!(" + t + ")", std::function<bool(unsigned)>([f](unsigned v) { return !f(v); })};
        }
        const auto op = next() % 4;
        auto [lt, lf] = gen(depth - 1);
        auto [rt, rf] = gen(depth - 1);
        std::function<bool(unsigned)> fn = [=](unsigned v) {
            const bool a = lf(v), b = rf(v);
            switch (op) {
            case 0: return a && b;
            case 1: return a || b;
            case 2: return !a || b;
            default: return a == b;
            }
        };
        return std::pair{"(" + lt + ops[op] + rt + ")", fn};
    };
    for (int i = 0; i < 300; ++i) {
        auto [text, fn] = gen(4);
        const PropSet s = parse_propset(text, sig);
        for (unsigned v = 0; v < 8; ++v)
            REQUIRE_MESSAGE(s.contains(v) == fn(v), text);
    }
}

TEST_CASE("canonical_formula")
{
    CHECK(canonical_text(PropSet::empty(2), pq()) == "false");
    CHECK(canonical_text(PropSet::full(2), pq()) == "true");
    CHECK(canonical_text(set("p & q"), pq()) == "p & q");
    CHECK(canonical_text(set("p <-> q"), pq()) == "(!p & !q) | (p & q)");
}

TEST_CASE("canonical formula round trips every model set up to three atoms")
{
    for (std::size_t n = 1; n <= 3; ++n) {
        const Signature sig = Signature::with_default_names(n);
        for_each_propset(n, [&](const PropSet& s) {
            REQUIRE(models_of(canonical_formula(s, sig), sig) == s);
            REQUIRE(parse_propset(canonical_text(s, sig), sig) == s);
        });
    }
}

TEST_CASE("printer output reparses to the same tree")
{
    const Signature sig = Signature::with_default_names(3);
    for (const char* text : {"p -> q -> r", "(p -> q) -> r", "!(p | q) & r", "p <-> (q <-> r)", "(p <-> q) <-> r",
                             "!!p", "p & (q | r)", "(p & q) | r"}) {
        const Formula f = parse_formula(text, sig);
        CHECK_MESSAGE(parse_formula(to_string(f, sig), sig) == f, text);
    }
}

TEST_CASE("propset and bit lists")
{
    CHECK(parse_bit_list("{01,11}", pq()) == set("q"));
    CHECK(to_bit_list(PropSet::empty(2), pq()) == "{}");
    CHECK((~set("p")) == set("!p"));
    CHECK(implies(set("p"), set("q")) == set("p -> q"));
    CHECK_THROWS_AS(parse_bit_list("{1}", pq()), Error);
}

TEST_CASE("theory operations")
{
    CHECK(cn_with(cn("q"), set("p")) == cn("p & q"));
    CHECK(cn_with(Theory::bottom(2), set("p")) == Theory::bottom(2));
    CHECK(cn_with(cn("p | q"), PropSet::full(2)) == cn("p | q"));

    CHECK(theory_contains(cn("!q"), set("!q")));
    CHECK_FALSE(theory_contains(cn("p"), set("!q")));
    CHECK(theory_contains(Theory::bottom(2), PropSet::empty(2)));

    CHECK(theory_intersect(cn("!q"), cn("!p")) == cn("!(p & q)"));
    CHECK(theory_intersect(cn("p"), Theory::bottom(2)) == cn("p"));
    CHECK(theory_intersect(cn("p"), cn("p")) == cn("p"));

    CHECK(theory_subset(cn("p"), cn("p & q")));
    CHECK(theory_subset(cn("p"), Theory::bottom(2)));
    CHECK_FALSE(theory_subset(cn("p & q"), cn("p")));
}
