#include <doctest.h>

#include "helpers.hpp"
#include "kstar/consequence.hpp"
#include "kstar/error.hpp"
#include "kstar/revision.hpp"

using namespace kstar;
using test::cn;
using test::pq;
using test::r0;
using test::set;

namespace {

Revision ranked_r0() { return Revision::ranked(r0()); }

oracle::Bits bits(const Theory& t) { return static_cast<oracle::Bits>(t.models().bits()); }

} // namespace

TEST_CASE("ranked revision of the running example")
{
    const Revision rv = ranked_r0();
    CHECK(rv.kind() == RevisionKind::ranked);
    CHECK(rv.revise(cn("!q"), set("q")) == cn("p & q"));
    CHECK(severity(cn("!q"), set("q")) == Severity::severe);
    CHECK(rv.revise(cn("p"), set("q")) == cn("p & q"));
    CHECK(severity(cn("p"), set("q")) == Severity::mild);
    for_each_propset(2, [&](const PropSet& k) {
        CHECK(rv.revise(Theory{k}, PropSet::empty(2)) == Theory::bottom(2));
        if (!k.is_empty())
            CHECK(rv.revise(Theory{k}, PropSet::full(2)) == Theory{k});
    });
}

TEST_CASE("ranked revision matches the min-rank oracle everywhere")
{
    for (const auto& r : enumerate_rank_functions(pq())) {
        const Revision rv = Revision::ranked(r);
        const auto raw = test::raw(r);
        for_each_propset(2, [&](const PropSet& k) {
            for_each_propset(2, [&](const PropSet& f) {
                REQUIRE(bits(rv.revise(Theory{k}, f)) == oracle::ranked_revise(raw, static_cast<oracle::Bits>(k.bits()), static_cast<oracle::Bits>(f.bits())));
            });
        });
    }
}

TEST_CASE("relation_of_revision")
{
    const Revision rv = ranked_r0();
    CHECK(relation_of_revision(rv, Theory::bottom(2)) == relation_of(r0()));

    const ConsequenceRelation c = relation_of_revision(rv, cn("!q"));
    CHECK(c.consequences(PropSet::full(2)) == cn("!q"));
    CHECK(c.consequences(set("q")) == cn("p & q"));

    for_each_propset(2, [&](const PropSet& base) {
        CHECK(check_rationality(relation_of_revision(rv, Theory{base}), pq()).all_pass());
    });
}

TEST_CASE("table revisions and the bijection")
{
    const Revision rv = ranked_r0();
    const RevisionTable t = RevisionTable::tabulate(rv);
    const Revision tv = Revision::table(t);
    CHECK(tv.kind() == RevisionKind::table);
    CHECK(tv.rank_function() == nullptr);
    CHECK(same_revision(rv, tv));

    const Revision back = revision_from_relation(relation_of(r0()));
    CHECK(same_revision(back, rv));

    const RevisionTable changed = t.with_cell(cn("!q"), set("q"), cn("q"));
    CHECK(changed.revise(cn("!q"), set("q")) == cn("q"));
    CHECK_FALSE(same_revision(Revision::table(changed), rv));

    CHECK_THROWS_AS(RevisionTable(2, std::vector<std::uint8_t>(3)), Error);
}

TEST_CASE("theory-first ranking")
{
    const RankFunction mk = prepend_theory_level(r0(), cn("!q"));
    // 00 -> 0, 01 -> 2, 10 -> 0, 11 -> 1
    CHECK(mk == RankFunction(2, {0, 2, 0, 1}));
    CHECK(prepend_theory_level(r0(), Theory::bottom(2)) == r0());
    for (const auto& r : enumerate_rank_functions(pq()))
        CHECK(prepend_theory_level(r, Theory::tautologies(2)) == RankFunction(2, {0, 0, 0, 0}));
}

TEST_CASE("revision is the relation of the theory-first ranking")
{
    for (const auto& r : enumerate_rank_functions(pq())) {
        const Revision rv = Revision::ranked(r);
        for_each_propset(2, [&](const PropSet& k) {
            const Theory theory{k};
            const RankFunction mk = prepend_theory_level(r, theory);
            const RankFunction flat = flatten_theory_models(mk, theory);
            for_each_propset(2, [&](const PropSet& f) {
                REQUIRE(rv.revise(theory, f) == consequences_of(mk, f));
                REQUIRE(consequences_of(flat, f) == consequences_of(mk, f));
            });
        });
    }
}

TEST_CASE("conservative extension")
{
    const Revision rv = ranked_r0();
    const Revision ext = conservative_extension(rv, cn("!q"));
    CHECK(ext.kind() == RevisionKind::conservative);
    for_each_propset(2, [&](const PropSet& f) { CHECK(ext.revise(cn("!q"), f) == rv.revise(cn("!q"), f)); });
    // Severe revisions elsewhere copy the anchor's row.
    CHECK(ext.revise(cn("q"), set("!q")) == rv.revise(cn("!q"), set("!q")));
    CHECK(ext.revise(Theory::bottom(2), set("q")) == cn("p & q"));
    // Mild revisions expand.
    CHECK(ext.revise(cn("p"), set("q")) == cn("p & q"));

    // Extending from K_bot reproduces the ranked revision.
    CHECK(same_revision(conservative_extension(rv, Theory::bottom(2)), rv));
}

TEST_CASE("iterate")
{
    const Revision rv = ranked_r0();
    const PropSet p = set("p");
    const PropSet q = set("q");

    const std::vector<PropSet> pq_steps{p, q};
    const auto steps = iterate(rv, cn("!q"), pq_steps);
    REQUIRE(steps.size() == 2);
    CHECK(steps[0] == RevisionStep{cn("!q"), p, cn("p & !q"), Severity::mild});
    CHECK(steps[1] == RevisionStep{cn("p & !q"), q, cn("p & q"), Severity::severe});

    CHECK(iterate(rv, cn("!q"), {}).empty());

    const std::vector<PropSet> qq{q, q};
    const auto twice = iterate(rv, cn("!q"), qq);
    CHECK(twice[1].severity == Severity::mild);
    CHECK(twice[1].input == cn("p & q"));
    CHECK(twice[1].output == cn("p & q"));

    CHECK(format_step(steps[1], pq()) == "p & !q * (!p & q) | (p & q) => p & q [severe]");
}

TEST_CASE("Paris scenario")
{
    const ScenarioTrace t = example_paris();
    const Signature& sig = t.signature;
    REQUIRE(t.steps.size() == 3);

    const RevisionStep& no_clouds = t.steps[0];
    CHECK(no_clouds.input == Theory{parse_propset("rp & ro & (!c -> !ro)", sig)});
    CHECK(theory_contains(no_clouds.output, parse_propset("!rp", sig)));
    CHECK(theory_contains(no_clouds.output, parse_propset("!ro", sig)));
    CHECK(no_clouds.severity == Severity::severe);

    const RevisionStep& clouds = t.steps[1];
    CHECK(clouds.severity == Severity::mild);
    CHECK(clouds.output == cn_with(clouds.input, parse_propset("c", sig)));

    const RevisionStep& from_bottom = t.steps[2];
    CHECK(from_bottom.input == Theory::bottom(3));
    CHECK(from_bottom.severity == Severity::severe);
    CHECK(from_bottom.output == no_clouds.output);
}
