#include "kstar/consequence.hpp"

#include "kstar/error.hpp"

namespace kstar {

ConsequenceRelation::ConsequenceRelation(std::size_t atoms, std::vector<Theory> consequences)
    : atoms_(atoms), table_(std::move(consequences))
{
    if (atoms == 0 || atoms > max_exhaustive_atoms)
        throw DomainTooLargeError("consequence relations are tabulated for at most "
                                  + std::to_string(max_exhaustive_atoms) + " atoms");
    if (table_.size() != (std::size_t{1} << (std::size_t{1} << atoms)))
        throw FormatError("consequence table has the wrong size");
}

ConsequenceRelation ConsequenceRelation::tabulate(std::size_t atoms, const std::function<Theory(const PropSet&)>& c)
{
    if (atoms == 0 || atoms > max_exhaustive_atoms)
        throw DomainTooLargeError("consequence relations are tabulated for at most "
                                  + std::to_string(max_exhaustive_atoms) + " atoms");
    std::vector<Theory> table;
    table.reserve(std::size_t{1} << (std::size_t{1} << atoms));
    for_each_propset(atoms, [&](const PropSet& f) { table.push_back(c(f)); });
    return ConsequenceRelation{atoms, std::move(table)};
}

ConsequenceRelation relation_of(const RankFunction& r)
{
    return ConsequenceRelation::tabulate(r.atoms(), [&](const PropSet& f) { return consequences_of(r, f); });
}

RankFunction rank_function_of(const ConsequenceRelation& c)
{
    const std::size_t n = c.atoms();
    std::vector<RankFunction::rank_type> ranks(std::size_t{1} << n, 0);
    PropSet rest = PropSet::full(n);
    for (RankFunction::rank_type level = 0; !rest.is_empty(); ++level) {
        const PropSet lowest = c.consequences(rest).models() & rest;
        if (lowest.is_empty())
            throw PreconditionError("relation is not consistency-preserving; cannot extract a ranking");
        for (std::size_t v = 0; v < ranks.size(); ++v)
            if (lowest.contains(v))
                ranks[v] = level;
        rest = rest - lowest;
    }
    return RankFunction{n, std::move(ranks)};
}

std::string_view short_name(RationalProperty p)
{
    switch (p) {
    case RationalProperty::reflexivity: return "REF";
    case RationalProperty::left_logical_equivalence: return "LLE";
    case RationalProperty::right_weakening: return "RW";
    case RationalProperty::and_rule: return "AND";
    case RationalProperty::or_rule: return "OR";
    case RationalProperty::cautious_monotonicity: return "CM";
    case RationalProperty::rational_monotonicity: return "RM";
    case RationalProperty::conditionalization: return "S";
    case RationalProperty::consistency_preservation: return "CP";
    }
    return "?";
}

bool RationalityReport::all_pass() const
{
    for (const auto& f : failures)
        if (f)
            return false;
    return true;
}

namespace {

bool unary(RationalProperty p)
{
    return p == RationalProperty::reflexivity || p == RationalProperty::consistency_preservation;
}

// Whether the property's clause holds at one binding.
bool holds(const ConsequenceRelation& c, RationalProperty p, const PropSet& phi, const PropSet& psi,
           const PropSet& chi)
{
    auto nm = [&](const PropSet& a, const PropSet& b) { return c.entails(a, b); };
    switch (p) {
    case RationalProperty::reflexivity:
        return nm(phi, phi);
    case RationalProperty::left_logical_equivalence:
        return true;
    case RationalProperty::right_weakening:
        return !(nm(phi, psi) && psi.subset_of(chi)) || nm(phi, chi);
    case RationalProperty::and_rule:
        return !(nm(phi, psi) && nm(phi, chi)) || nm(phi, psi & chi);
    case RationalProperty::or_rule:
        return !(nm(phi, chi) && nm(psi, chi)) || nm(phi | psi, chi);
    case RationalProperty::cautious_monotonicity:
        return !(nm(phi, psi) && nm(phi, chi)) || nm(phi & psi, chi);
    case RationalProperty::rational_monotonicity:
        return !(nm(phi, chi) && !nm(phi, ~psi)) || nm(phi & psi, chi);
    case RationalProperty::conditionalization:
        return !nm(phi & psi, chi) || nm(phi, implies(psi, chi));
    case RationalProperty::consistency_preservation:
        return !nm(phi, PropSet::empty(phi.atoms())) || phi.is_empty();
    }
    return true;
}

std::optional<RationalityCounterexample> first_failure(const ConsequenceRelation& c, RationalProperty p)
{
    const std::size_t n = c.atoms();
    std::optional<RationalityCounterexample> out;
    if (p == RationalProperty::left_logical_equivalence)
        return out;
    const std::uint64_t count = std::uint64_t{1} << (std::size_t{1} << n);
    if (unary(p)) {
        for (std::uint64_t a = 0; a < count; ++a) {
            const PropSet phi{n, a};
            if (!holds(c, p, phi, phi, phi))
                return RationalityCounterexample{p, phi, std::nullopt, std::nullopt};
        }
        return out;
    }
    for (std::uint64_t a = 0; a < count; ++a)
        for (std::uint64_t b = 0; b < count; ++b)
            for (std::uint64_t d = 0; d < count; ++d) {
                const PropSet phi{n, a}, psi{n, b}, chi{n, d};
                if (!holds(c, p, phi, psi, chi))
                    return RationalityCounterexample{p, phi, psi, chi};
            }
    return out;
}

} // namespace

RationalityReport check_rationality(const ConsequenceRelation& c, const Signature& sig)
{
    if (sig.size() != c.atoms())
        throw PreconditionError("signature does not match the relation");
    RationalityReport report;
    for (auto p : all_rational_properties)
        report.failures[static_cast<std::size_t>(p)] = first_failure(c, p);
    return report;
}

bool replays(const ConsequenceRelation& c, const RationalityCounterexample& cx)
{
    return !holds(c, cx.property, cx.phi, cx.psi.value_or(cx.phi), cx.chi.value_or(cx.phi));
}

} // namespace kstar
