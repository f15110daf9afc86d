#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "kstar/error.hpp"
#include "kstar/postulates.hpp"

using namespace kstar;
using test::cn;
using test::pq;
using test::r0;
using test::set;

namespace {

Revision ranked_r0() { return Revision::ranked(r0()); }

const std::vector<PostulateId> agm = parse_postulate_list("K1..K9");

// A ranked table with a few cells replaced by random subsets of the formula
// (so K1 and K2 still hold) or by arbitrary sets.
RevisionTable perturbed_table(std::mt19937_64& rng, int cells, bool keep_k2)
{
    const RankFunction r = random_rank_function(pq(), 4, rng());
    const RevisionTable base = RevisionTable::tabulate(Revision::ranked(r));
    std::vector<std::uint8_t> raw(base.cells().begin(), base.cells().end());
    for (int i = 0; i < cells; ++i) {
        const std::size_t index = rng() % raw.size();
        const auto f = static_cast<std::uint8_t>(index & 0xF);
        const auto pick = static_cast<std::uint8_t>(rng() & 0xF);
        raw[index] = keep_k2 ? static_cast<std::uint8_t>(pick & f) : pick;
    }
    return RevisionTable{2, raw};
}

} // namespace

TEST_CASE("postulate ids and lists")
{
    CHECK(to_string(PostulateId::K9_2P) == "K9_2P");
    CHECK(parse_postulate_id("K9.2'") == PostulateId::K9_2P);
    CHECK(parse_postulate_id("C2'") == PostulateId::C2P);
    CHECK_FALSE(parse_postulate_id("K10"));
    CHECK(agm.size() == 9);
    CHECK(parse_postulate_list("K1..K3,U8_2")
          == std::vector<PostulateId>{PostulateId::K1, PostulateId::K2, PostulateId::K3, PostulateId::U8_2});
    CHECK(parse_postulate_list("all").size() == all_postulates.size());
    CHECK_THROWS_AS(parse_postulate_list("K1..X"), FormatError);
    for (const auto id : all_postulates) {
        CHECK(parse_postulate_id(to_string(id)) == id);
        CHECK_FALSE(statement(id).empty());
    }
}

TEST_CASE("running example: single postulates")
{
    const Revision rv = ranked_r0();
    CHECK_FALSE(check_postulate(rv, PostulateId::K2, pq()));
    CHECK_FALSE(check_postulate(rv, PostulateId::P_GEN, pq()));

    // K = Cn(!q), phi = q: p is in K*q and (K*p)*q = Cn(p & q) = K*q.
    CHECK(theory_contains(rv.revise(cn("!q"), set("q")), set("p")));
    CHECK(rv.revise(rv.revise(cn("!q"), set("p")), set("q")) == cn("p & q"));
}

TEST_CASE("running example: U8_1 violation")
{
    const Revision rv = ranked_r0();
    const auto v = check_postulate(rv, PostulateId::U8_1, pq());
    REQUIRE(v);
    CHECK(replays(rv, *v));

    // The hand witness: Cn(!p & !q) within K_bot, phi = true.
    const Bindings hand{cn("!p & !q"), Theory::bottom(2), PropSet::full(2), std::nullopt};
    const auto at_hand = check_binding(rv, PostulateId::U8_1, hand);
    REQUIRE(at_hand);
    CHECK(theory_contains(at_hand->observed, set("!p")));
    CHECK_FALSE(theory_contains(rv.revise(Theory::bottom(2), PropSet::full(2)), set("!p")));

    // Lexicographic search meets phi = !p before phi = true.
    CHECK(v->bindings.k == cn("!p & !q"));
    CHECK(v->bindings.k_prime == Theory::bottom(2));
    CHECK(v->bindings.phi == set("!p"));
}

TEST_CASE("running example: C2 violation")
{
    const Revision rv = ranked_r0();
    const auto v = check_postulate(rv, PostulateId::C2, pq());
    REQUIRE(v);
    CHECK(replays(rv, *v));

    const Bindings hand{cn("!p & !q"), std::nullopt, PropSet::full(2), PropSet::empty(2)};
    const auto at_hand = check_binding(rv, PostulateId::C2, hand);
    REQUIRE(at_hand);
    CHECK(at_hand->observed == cn("p & q"));
    CHECK(rv.revise(cn("!p & !q"), PropSet::full(2)) == cn("!p & !q"));

    CHECK(v->bindings.k == cn("!p & !q"));
    CHECK(v->bindings.phi == set("!p"));
    CHECK(v->bindings.psi == PropSet::empty(2));
}

TEST_CASE("running example: suites")
{
    const Revision rv = ranked_r0();
    const SuiteReport agm_report = run_suite(rv, agm, pq());
    CHECK(agm_report.all_pass());
    CHECK(agm_report.domain_size == 16);
    CHECK(agm_report.results.size() == 9);

    const auto derived = parse_postulate_list("U8_2,P_KM1,C1,C2P,C3,C4");
    CHECK(run_suite(rv, derived, pq()).all_pass());
}

TEST_CASE("a perturbed severe cell breaks K9 at that cell")
{
    const Revision rv = ranked_r0();
    const Theory k = cn("!q");
    const PropSet phi = set("q");
    REQUIRE(severity(k, phi) == Severity::severe);
    const RevisionTable t = RevisionTable::tabulate(rv).with_cell(k, phi, cn("!p & q"));
    const Revision bad = Revision::table(t);

    CHECK_FALSE(check_postulate(bad, PostulateId::K2, pq()));
    const auto v = check_postulate(bad, PostulateId::K9, pq());
    REQUIRE(v);
    CHECK(v->bindings.phi == phi);
    CHECK((v->bindings.k == k || v->bindings.k_prime == k));
    CHECK(replays(bad, *v));
}

TEST_CASE("violations always replay")
{
    std::mt19937_64 rng{11};
    for (int i = 0; i < 40; ++i) {
        const Revision rv = Revision::table(perturbed_table(rng, 3, true));
        for (const auto id : all_postulates)
            if (const auto v = check_postulate(rv, id, pq()))
                REQUIRE(replays(rv, *v));
    }
}

TEST_CASE("AGM verdicts agree with the sentence-level oracle")
{
    std::mt19937_64 rng{5};
    int failing = 0;
    for (int i = 0; i < 120; ++i) {
        const RevisionTable t = perturbed_table(rng, i % 3, i % 2 == 0);
        const Revision rv = Revision::table(t);
        const bool lib = run_suite(rv, agm, pq()).all_pass();
        const bool ref = oracle::first_agm_failure(
                             [&](oracle::Bits k, oracle::Bits f) {
                                 return static_cast<oracle::Bits>(t.revise(Theory{PropSet{2, k}}, PropSet{2, f}).models().bits());
                             },
                             2)
                             .empty();
        CHECK(lib == ref);
        failing += lib ? 0 : 1;
    }
    CHECK(failing > 10);
}

TEST_CASE("sampled mode")
{
    const Revision rv = ranked_r0();
    SuiteOptions opts{SuiteMode::sampled, 42, 3000};
    const SuiteReport a = run_suite(rv, parse_postulate_list("K1..K9,U8_1,C2"), pq(), opts);
    const SuiteReport b = run_suite(rv, parse_postulate_list("K1..K9,U8_1,C2"), pq(), opts);
    CHECK(a.seed == 42);
    for (std::size_t i = 0; i < 9; ++i)
        CHECK(a.results[i].passed());
    // Sampling finds the known failures and is reproducible.
    REQUIRE_FALSE(a.results[9].passed());
    REQUIRE_FALSE(a.results[10].passed());
    CHECK(a.results[9].violation->bindings == b.results[9].violation->bindings);
    CHECK(replays(rv, *a.results[10].violation));

    // Heavy clauses need sampled mode beyond two atoms.
    const Signature three = Signature::with_default_names(3);
    const Revision r3 = Revision::ranked(random_rank_function(three, 8, 1));
    CHECK_THROWS_AS(check_postulate(r3, PostulateId::K7, three), DomainTooLargeError);
    CHECK_FALSE(check_postulate(r3, PostulateId::K9, three));
    CHECK_FALSE(check_postulate_sampled(r3, PostulateId::K7, three, 1, 2000));
}

TEST_CASE("9.2' implies 9.2")
{
    CHECK_FALSE(check_implication_9p_to_92(ranked_r0(), pq()));

    // K2 fails, so the conditional holds vacuously.
    const RevisionTable constant{2, std::vector<std::uint8_t>(256, 0xF)};
    const Revision no_k2 = Revision::table(constant);
    REQUIRE(check_postulate(no_k2, PostulateId::K2, pq()));
    CHECK_FALSE(check_implication_9p_to_92(no_k2, pq()));

    std::mt19937_64 rng{9};
    for (int i = 0; i < 100; ++i)
        CHECK_FALSE(check_implication_9p_to_92(Revision::table(perturbed_table(rng, 2, true)), pq()));
}

TEST_CASE("impossibility witnesses")
{
    const Revision rv = ranked_r0();
    const Violation u = find_impossibility_witness(rv, ImpossibilityKind::u8_1_vs_k4k5, pq());
    CHECK(u.postulate == PostulateId::U8_1);
    CHECK(u.bindings == Bindings{cn("!p & !q"), Theory::bottom(2), PropSet::full(2), std::nullopt});
    CHECK(replays(rv, u));

    const Violation c = find_impossibility_witness(rv, ImpossibilityKind::c2_vs_k1k4, pq());
    CHECK(c.postulate == PostulateId::C2);
    CHECK(c.bindings == Bindings{cn("!p & !q"), std::nullopt, PropSet::full(2), PropSet::empty(2)});
    CHECK(c.observed == cn("p & q"));
    CHECK(replays(rv, c));

    const RevisionTable constant{2, std::vector<std::uint8_t>(256, 0xF)};
    CHECK_THROWS_AS(find_impossibility_witness(Revision::table(constant), ImpossibilityKind::c2_vs_k1k4, pq()),
                    PreconditionError);
}

TEST_CASE("under-determination")
{
    const auto found = dynamic_underdetermination(pq(), cn("p & q"));
    REQUIRE(found);
    const Revision a = Revision::ranked(found->first);
    const Revision b = Revision::ranked(found->second);
    for_each_propset(2, [&](const PropSet& f) { CHECK(a.revise(cn("p & q"), f) == b.revise(cn("p & q"), f)); });
    CHECK(a.revise(a.revise(cn("p & q"), found->psi), found->phi)
          != b.revise(b.revise(cn("p & q"), found->psi), found->phi));
    CHECK(to_string(found->first) == "(0,0,0,0)");
    CHECK(to_string(found->second) == "(0,0,0,1)");

    CHECK_FALSE(dynamic_underdetermination(pq(), Theory::bottom(2)));

    // Full universe: recorded result.
    const auto full = dynamic_underdetermination(pq(), Theory::tautologies(2));
    REQUIRE(full);
    CHECK(to_string(full->first) == "(0,0,0,0)");
    CHECK(to_string(full->second) == "(0,0,0,1)");
    CHECK(full->psi == PropSet::empty(2));
    CHECK(full->phi == set("!p & !q | p & q"));

    CHECK_THROWS_AS(dynamic_underdetermination(Signature::with_default_names(3), Theory::bottom(3)),
                    DomainTooLargeError);
}
