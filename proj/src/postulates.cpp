#include "kstar/postulates.hpp"

#include <cctype>
#include <random>

#include "kstar/error.hpp"

namespace kstar {

namespace {

enum Slot : unsigned { slot_k2 = 1U, slot_psi = 2U };

unsigned slots(PostulateId id)
{
    switch (id) {
    case PostulateId::K7:
    case PostulateId::K8:
    case PostulateId::K9_2P:
    case PostulateId::C1:
    case PostulateId::C2:
    case PostulateId::C2P:
    case PostulateId::C3:
    case PostulateId::C4:
    case PostulateId::P_PHIANDPSI:
    case PostulateId::P_PSI:
    case PostulateId::P_GEN:
        return slot_psi;
    case PostulateId::K9:
    case PostulateId::U8:
    case PostulateId::U8_1:
    case PostulateId::U8_2:
    case PostulateId::P_KM1:
    case PostulateId::P_K9U8_1:
        return slot_k2;
    default:
        return 0;
    }
}

struct Name {
    PostulateId id;
    std::string_view name;
    std::string_view statement;
};

constexpr std::array<Name, all_postulates.size()> names = {{
    {PostulateId::K1, "K1", "K*phi is a theory"},
    {PostulateId::K2, "K2", "phi in K*phi"},
    {PostulateId::K3, "K3", "K*phi subset of Cn(K, phi)"},
    {PostulateId::K4, "K4", "if ~phi not in K then Cn(K, phi) subset of K*phi"},
    {PostulateId::K5, "K5", "if K*phi is inconsistent then phi is a contradiction"},
    {PostulateId::K6, "K6", "if phi <-> psi is valid then K*phi = K*psi"},
    {PostulateId::K7, "K7", "K*(phi & psi) subset of Cn(K*phi, psi)"},
    {PostulateId::K8, "K8", "if ~psi not in K*phi then Cn(K*phi, psi) subset of K*(phi & psi)"},
    {PostulateId::K9, "K9", "if ~phi in K and ~phi in K' then K*phi = K'*phi"},
    {PostulateId::K9_1, "K9_1", "if ~phi in K then K*phi subset of Kbot*phi"},
    {PostulateId::K9_2, "K9_2", "if ~phi in K then Kbot*phi subset of K*phi"},
    {PostulateId::K9_2P, "K9_2P", "if psi in K and psi in Kbot*phi then psi in K*phi"},
    {PostulateId::U8, "U8", "(K meet K')*phi = K*phi meet K'*phi"},
    {PostulateId::U8_1, "U8_1", "if K subset of K' then K*phi subset of K'*phi"},
    {PostulateId::U8_2, "U8_2", "K*phi meet K'*phi subset of (K meet K')*phi"},
    {PostulateId::C1, "C1", "if phi |= psi then (K*psi)*phi = K*phi"},
    {PostulateId::C2, "C2", "if phi |= ~psi then (K*psi)*phi = K*phi"},
    {PostulateId::C2P, "C2P", "if ~phi in K and phi |= ~psi then (K*psi)*phi = K*phi"},
    {PostulateId::C3, "C3", "if psi in K*phi then psi in (K*psi)*phi"},
    {PostulateId::C4, "C4", "if ~psi not in K*phi then ~psi not in (K*psi)*phi"},
    {PostulateId::P_PHIANDPSI, "P_PHIANDPSI", "if ~phi not in K*psi then (K*psi)*phi = K*(psi & phi)"},
    {PostulateId::P_PSI, "P_PSI", "if ~phi in K*(psi | phi) then (K*psi)*phi = K*phi"},
    {PostulateId::P_GEN, "P_GEN", "if psi in K*phi then (K*psi)*phi = K*phi"},
    {PostulateId::P_KM1, "P_KM1", "if ~phi not in K and ~phi not in K' then (K meet K')*phi = K*phi meet K'*phi"},
    {PostulateId::P_K9U8_1, "P_K9U8_1", "if ~phi in K and ~phi in K' then (K meet K')*phi = K*phi meet K'*phi"},
}};

// Model-set reading of each clause. `rev` maps (theory, formula) to the
// revised theory; `observed` receives the result the clause constrains.
template <typename Rev>
bool clause_holds(PostulateId id, const Rev& rev, const Theory& k, const Theory& k2, const PropSet& phi,
                  const PropSet& psi, Theory& observed)
{
    const std::size_t n = phi.atoms();
    switch (id) {
    case PostulateId::K1: {
        observed = rev(k, phi);
        return observed.atoms() == n;
    }
    case PostulateId::K2:
        observed = rev(k, phi);
        return observed.models().subset_of(phi);
    case PostulateId::K3:
        observed = rev(k, phi);
        return (k.models() & phi).subset_of(observed.models());
    case PostulateId::K4:
        observed = rev(k, phi);
        return contains_negation(k, phi) || observed.models().subset_of(k.models() & phi);
    case PostulateId::K5:
        observed = rev(k, phi);
        return observed.is_consistent() || phi.is_empty();
    case PostulateId::K6:
        // Formulas are equivalence classes, so equivalent formulas are one argument.
        observed = rev(k, phi);
        return true;
    case PostulateId::K7: {
        const PropSet expanded = rev(k, phi).models() & psi;
        observed = rev(k, phi & psi);
        return expanded.subset_of(observed.models());
    }
    case PostulateId::K8: {
        const PropSet expanded = rev(k, phi).models() & psi;
        observed = rev(k, phi & psi);
        return expanded.is_empty() || observed.models().subset_of(expanded);
    }
    case PostulateId::K9:
        observed = rev(k2, phi);
        return !(contains_negation(k, phi) && contains_negation(k2, phi)) || rev(k, phi) == observed;
    case PostulateId::K9_1:
        observed = rev(k, phi);
        return !contains_negation(k, phi) || rev(Theory::bottom(n), phi).models().subset_of(observed.models());
    case PostulateId::K9_2:
        observed = rev(k, phi);
        return !contains_negation(k, phi) || observed.models().subset_of(rev(Theory::bottom(n), phi).models());
    case PostulateId::K9_2P:
        observed = rev(k, phi);
        return !(theory_contains(k, psi) && theory_contains(rev(Theory::bottom(n), phi), psi))
            || theory_contains(observed, psi);
    case PostulateId::U8:
    case PostulateId::U8_2:
    case PostulateId::P_KM1:
    case PostulateId::P_K9U8_1: {
        if (id == PostulateId::P_KM1 && (contains_negation(k, phi) || contains_negation(k2, phi))) {
            observed = rev(theory_intersect(k, k2), phi);
            return true;
        }
        if (id == PostulateId::P_K9U8_1 && !(contains_negation(k, phi) && contains_negation(k2, phi))) {
            observed = rev(theory_intersect(k, k2), phi);
            return true;
        }
        const PropSet meet = rev(k, phi).models() | rev(k2, phi).models();
        observed = rev(theory_intersect(k, k2), phi);
        if (id == PostulateId::U8_2)
            return observed.models().subset_of(meet);
        return observed.models() == meet;
    }
    case PostulateId::U8_1:
        observed = rev(k, phi);
        return !theory_subset(k, k2) || rev(k2, phi).models().subset_of(observed.models());
    case PostulateId::C1:
    case PostulateId::C2:
    case PostulateId::C2P:
    case PostulateId::C3:
    case PostulateId::C4:
    case PostulateId::P_PHIANDPSI:
    case PostulateId::P_PSI:
    case PostulateId::P_GEN: {
        const Theory first = rev(k, psi);
        observed = rev(first, phi);
        switch (id) {
        case PostulateId::C1:
            return !phi.subset_of(psi) || observed == rev(k, phi);
        case PostulateId::C2:
            return phi.intersects(psi) || observed == rev(k, phi);
        case PostulateId::C2P:
            return !(contains_negation(k, phi) && !phi.intersects(psi)) || observed == rev(k, phi);
        case PostulateId::C3:
            return !theory_contains(rev(k, phi), psi) || theory_contains(observed, psi);
        case PostulateId::C4:
            return contains_negation(rev(k, phi), psi) || !contains_negation(observed, psi);
        case PostulateId::P_PHIANDPSI:
            return contains_negation(first, phi) || observed == rev(k, psi & phi);
        case PostulateId::P_PSI:
            return !contains_negation(rev(k, psi | phi), phi) || observed == rev(k, phi);
        default: // P_GEN
            return !theory_contains(rev(k, phi), psi) || observed == rev(k, phi);
        }
    }
    }
    return true;
}

Violation make_violation(PostulateId id, const Theory& k, const Theory& k2, const PropSet& phi, const PropSet& psi,
                         const Theory& observed)
{
    const unsigned s = slots(id);
    Bindings b{k, std::nullopt, phi, std::nullopt};
    if (s & slot_k2)
        b.k_prime = k2;
    if (s & slot_psi)
        b.psi = psi;
    return Violation{id, b, observed, std::string(statement(id))};
}

std::size_t index_of(PostulateId id) { return static_cast<std::size_t>(id); }

void require_exhaustive_domain(PostulateId id, const Signature& sig)
{
    const std::size_t limit = is_heavy(id) ? 2 : max_exhaustive_atoms;
    if (sig.size() > limit)
        throw DomainTooLargeError(std::string(to_string(id)) + " is exhaustive only up to " + std::to_string(limit)
                                  + " atoms; use sampled mode");
}

std::string upper(std::string_view s)
{
    std::string out(s);
    for (auto& c : out)
        c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return out;
}

} // namespace

std::string_view to_string(PostulateId id) { return names[index_of(id)].name; }
std::string_view statement(PostulateId id) { return names[index_of(id)].statement; }

std::optional<PostulateId> parse_postulate_id(std::string_view text)
{
    const std::string wanted = upper(text);
    for (const auto& n : names)
        if (n.name == wanted)
            return n.id;
    // K*9.2' style spellings
    if (wanted == "K9.1")
        return PostulateId::K9_1;
    if (wanted == "K9.2")
        return PostulateId::K9_2;
    if (wanted == "K9.2'" || wanted == "K9_2'")
        return PostulateId::K9_2P;
    if (wanted == "U8.1")
        return PostulateId::U8_1;
    if (wanted == "U8.2")
        return PostulateId::U8_2;
    if (wanted == "C2'")
        return PostulateId::C2P;
    return std::nullopt;
}

std::vector<PostulateId> parse_postulate_list(std::string_view text)
{
    std::vector<PostulateId> out;
    auto add_unique = [&](PostulateId id) {
        for (auto existing : out)
            if (existing == id)
                return;
        out.push_back(id);
    };

    std::string token;
    auto flush = [&] {
        if (token.empty())
            return;
        if (upper(token) == "ALL") {
            for (auto id : all_postulates)
                add_unique(id);
        } else if (const auto dots = token.find(".."); dots != std::string::npos) {
            const auto from = parse_postulate_id(token.substr(0, dots));
            const auto to = parse_postulate_id(token.substr(dots + 2));
            if (!from || !to || index_of(*from) > index_of(*to))
                throw FormatError("bad postulate range '" + token + "'");
            for (std::size_t i = index_of(*from); i <= index_of(*to); ++i)
                add_unique(all_postulates[i]);
        } else if (const auto id = parse_postulate_id(token)) {
            add_unique(*id);
        } else {
            throw FormatError("unknown postulate '" + token + "'");
        }
        token.clear();
    };
    for (char c : text) {
        if (c == ',' || std::isspace(static_cast<unsigned char>(c)))
            flush();
        else
            token += c;
    }
    flush();
    if (out.empty())
        throw FormatError("empty postulate list");
    return out;
}

bool is_heavy(PostulateId id)
{
    switch (id) {
    case PostulateId::K7:
    case PostulateId::K8:
    case PostulateId::P_GEN:
    case PostulateId::P_PHIANDPSI:
    case PostulateId::P_PSI:
    case PostulateId::C1:
    case PostulateId::C2:
    case PostulateId::C3:
    case PostulateId::C4:
        return true;
    default:
        return false;
    }
}

std::optional<Violation> check_binding(const Revision& rv, PostulateId id, const Bindings& b)
{
    const auto rev = [&](const Theory& k, const PropSet& f) { return rv.revise(k, f); };
    const Theory k2 = b.k_prime.value_or(b.k);
    const PropSet psi = b.psi.value_or(b.phi);
    Theory observed;
    if (clause_holds(id, rev, b.k, k2, b.phi, psi, observed))
        return std::nullopt;
    return make_violation(id, b.k, k2, b.phi, psi, observed);
}

bool replays(const Revision& rv, const Violation& v)
{
    const auto again = check_binding(rv, v.postulate, v.bindings);
    return again && again->observed == v.observed;
}

std::optional<Violation> check_postulate(const Revision& rv, PostulateId id, const Signature& sig)
{
    if (rv.atoms() != sig.size())
        throw PreconditionError("revision and signature disagree on the atom count");
    require_exhaustive_domain(id, sig);

    const std::size_t n = sig.size();
    const RevisionTable table = RevisionTable::tabulate(rv);
    const auto rev = [&](const Theory& k, const PropSet& f) { return table.revise(k, f); };

    const std::uint64_t count = sig.propset_count();
    const unsigned s = slots(id);
    const std::uint64_t k2_count = (s & slot_k2) ? count : 1;
    const std::uint64_t psi_count = (s & slot_psi) ? count : 1;

    Theory observed;
    for (std::uint64_t a = 0; a < count; ++a) {
        const Theory k{PropSet{n, a}};
        for (std::uint64_t b = 0; b < k2_count; ++b) {
            const Theory k2{PropSet{n, b}};
            for (std::uint64_t c = 0; c < count; ++c) {
                const PropSet phi{n, c};
                for (std::uint64_t d = 0; d < psi_count; ++d) {
                    const PropSet psi{n, d};
                    if (!clause_holds(id, rev, k, k2, phi, psi, observed))
                        return make_violation(id, k, k2, phi, psi, observed);
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<Violation> check_postulate_sampled(const Revision& rv, PostulateId id, const Signature& sig,
                                                 std::uint64_t seed, std::size_t samples)
{
    if (rv.atoms() != sig.size())
        throw PreconditionError("revision and signature disagree on the atom count");
    const std::size_t n = sig.size();
    const auto mask = PropSet::universe_mask(n);

    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index_of(id))};
    std::mt19937_64 engine{seq};
    auto draw = [&] { return PropSet{n, engine() & mask}; };

    auto run = [&](const auto& rev) -> std::optional<Violation> {
        Theory observed;
        for (std::size_t i = 0; i < samples; ++i) {
            const Theory k{draw()};
            const Theory k2{draw()};
            const PropSet phi = draw();
            const PropSet psi = draw();
            if (!clause_holds(id, rev, k, k2, phi, psi, observed))
                return make_violation(id, k, k2, phi, psi, observed);
        }
        return std::nullopt;
    };

    if (n <= max_exhaustive_atoms) {
        const RevisionTable table = RevisionTable::tabulate(rv);
        return run([&](const Theory& k, const PropSet& f) { return table.revise(k, f); });
    }
    return run([&](const Theory& k, const PropSet& f) { return rv.revise(k, f); });
}

std::string_view to_string(SuiteMode m) { return m == SuiteMode::exhaustive ? "exhaustive" : "sampled"; }

bool SuiteReport::all_pass() const
{
    for (const auto& r : results)
        if (!r.passed())
            return false;
    return true;
}

SuiteReport run_suite(const Revision& rv, std::span<const PostulateId> ids, const Signature& sig,
                      const SuiteOptions& options)
{
    SuiteReport report;
    report.atoms = sig.size();
    report.domain_size = sig.propset_count();
    report.mode = options.mode;
    if (options.mode == SuiteMode::sampled) {
        report.seed = options.seed;
        report.samples = options.samples;
    } else {
        for (auto id : ids)
            require_exhaustive_domain(id, sig);
    }
    for (auto id : ids) {
        auto v = options.mode == SuiteMode::exhaustive
            ? check_postulate(rv, id, sig)
            : check_postulate_sampled(rv, id, sig, options.seed, options.samples);
        report.results.push_back({id, std::move(v)});
    }
    return report;
}

std::optional<Violation> check_implication_9p_to_92(const Revision& rv, const Signature& sig)
{
    if (sig.size() > 2)
        throw DomainTooLargeError("the K9_2P => K9_2 check is exhaustive only up to 2 atoms");
    for (auto id : {PostulateId::K1, PostulateId::K2, PostulateId::K9_2P})
        if (check_postulate(rv, id, sig))
            return std::nullopt;
    return check_postulate(rv, PostulateId::K9_2, sig);
}

Violation find_impossibility_witness(const Revision& rv, ImpossibilityKind which, const Signature& sig)
{
    const std::size_t n = sig.size();
    const std::vector<PostulateId> companions = which == ImpossibilityKind::u8_1_vs_k4k5
        ? std::vector{PostulateId::K4, PostulateId::K5}
        : std::vector{PostulateId::K1, PostulateId::K2, PostulateId::K3, PostulateId::K4};
    for (auto id : companions)
        if (check_postulate(rv, id, sig))
            throw PreconditionError("revision violates " + std::string(to_string(id))
                                    + "; the impossibility argument does not apply");

    const PropSet truth = PropSet::full(n);
    const std::uint64_t count = sig.propset_count();
    for (std::uint64_t a = 1; a < count; ++a) {
        const Theory consistent{PropSet{n, a}};
        const Bindings b = which == ImpossibilityKind::u8_1_vs_k4k5
            ? Bindings{consistent, Theory::bottom(n), truth, std::nullopt}
            : Bindings{consistent, std::nullopt, truth, PropSet::empty(n)};
        const PostulateId id = which == ImpossibilityKind::u8_1_vs_k4k5 ? PostulateId::U8_1 : PostulateId::C2;
        if (auto v = check_binding(rv, id, b))
            return *v;
    }
    throw ExhaustionError("no impossibility witness found; the revision or the checker is broken");
}

std::optional<Underdetermination> dynamic_underdetermination(const Signature& sig, const Theory& k)
{
    if (sig.size() > 2)
        throw DomainTooLargeError("under-determination search is exhaustive only up to 2 atoms");
    const std::size_t n = sig.size();
    const std::uint64_t count = sig.propset_count();

    const auto ranks = enumerate_rank_functions(sig);
    std::vector<RevisionTable> tables;
    tables.reserve(ranks.size());
    for (const auto& r : ranks)
        tables.push_back(RevisionTable::tabulate(Revision::ranked(r)));

    auto same_row = [&](const RevisionTable& a, const RevisionTable& b) {
        for (std::uint64_t c = 0; c < count; ++c)
            if (a.revise(k, PropSet{n, c}) != b.revise(k, PropSet{n, c}))
                return false;
        return true;
    };

    for (std::size_t i = 0; i < tables.size(); ++i)
        for (std::size_t j = 0; j < tables.size(); ++j) {
            if (i == j || !same_row(tables[i], tables[j]))
                continue;
            for (std::uint64_t p = 0; p < count; ++p) {
                const PropSet psi{n, p};
                const Theory after = tables[i].revise(k, psi);
                for (std::uint64_t f = 0; f < count; ++f) {
                    const PropSet phi{n, f};
                    if (tables[i].revise(after, phi) != tables[j].revise(after, phi))
                        return Underdetermination{ranks[i], ranks[j], psi, phi};
                }
            }
        }
    return std::nullopt;
}

} // namespace kstar
