#include "kstar/revision.hpp"

#include "kstar/error.hpp"
#include "kstar/formula.hpp"

namespace kstar {

namespace {

void require_tabulable(std::size_t atoms)
{
    if (atoms == 0 || atoms > max_exhaustive_atoms)
        throw DomainTooLargeError("revision tables require at most " + std::to_string(max_exhaustive_atoms)
                                  + " atoms");
}

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

} // namespace

RevisionTable::RevisionTable(std::size_t atoms, std::vector<std::uint8_t> results)
    : atoms_(atoms), results_(std::move(results))
{
    require_tabulable(atoms);
    const std::size_t sets = std::size_t{1} << (std::size_t{1} << atoms);
    if (results_.size() != sets * sets)
        throw FormatError("revision table has the wrong size");
    const auto mask = static_cast<std::uint8_t>(PropSet::universe_mask(atoms));
    for (auto& r : results_)
        if ((r & ~mask) != 0)
            throw FormatError("revision table cell outside the valuation universe");
}

RevisionTable RevisionTable::tabulate(const Revision& rv)
{
    const std::size_t n = rv.atoms();
    require_tabulable(n);
    const std::size_t sets = std::size_t{1} << (std::size_t{1} << n);
    std::vector<std::uint8_t> results(sets * sets);
    for (std::size_t k = 0; k < sets; ++k)
        for (std::size_t f = 0; f < sets; ++f)
            results[(k << (std::size_t{1} << n)) | f] = static_cast<std::uint8_t>(
                rv.revise(Theory{PropSet{n, k}}, PropSet{n, f}).models().bits());
    return RevisionTable{n, std::move(results)};
}

RevisionTable RevisionTable::with_cell(const Theory& k, const PropSet& f, const Theory& result) const
{
    RevisionTable copy = *this;
    copy.results_[index(k.models(), f)] = static_cast<std::uint8_t>(result.models().bits());
    return copy;
}

std::string_view to_string(RevisionKind k)
{
    switch (k) {
    case RevisionKind::ranked: return "ranked";
    case RevisionKind::table: return "table";
    case RevisionKind::conservative: return "conservative";
    }
    return "?";
}

std::string_view to_string(Severity s) { return s == Severity::mild ? "mild" : "severe"; }

Revision Revision::ranked(RankFunction r) { return Revision{Impl{std::move(r)}}; }
Revision Revision::table(RevisionTable t) { return Revision{Impl{std::move(t)}}; }
Revision Revision::conservative(Revision source, Theory anchor)
{
    if (source.atoms() != anchor.atoms())
        throw PreconditionError("anchor theory and revision use different signatures");
    return Revision{Impl{Conservative{std::make_shared<const Revision>(std::move(source)), anchor}}};
}

RevisionKind Revision::kind() const noexcept
{
    return static_cast<RevisionKind>(impl_->index());
}

std::size_t Revision::atoms() const noexcept
{
    return std::visit(overloaded{
                          [](const RankFunction& r) { return r.atoms(); },
                          [](const RevisionTable& t) { return t.atoms(); },
                          [](const Conservative& c) { return c.anchor.atoms(); },
                      },
                      *impl_);
}

Theory Revision::revise(const Theory& k, const PropSet& f) const
{
    return std::visit(overloaded{
                          [&](const RankFunction& r) {
                              return contains_negation(k, f) ? consequences_of(r, f) : cn_with(k, f);
                          },
                          [&](const RevisionTable& t) { return t.revise(k, f); },
                          [&](const Conservative& c) {
                              return contains_negation(k, f) ? c.source->revise(c.anchor, f) : cn_with(k, f);
                          },
                      },
                      *impl_);
}

const RankFunction* Revision::rank_function() const noexcept { return std::get_if<RankFunction>(impl_.get()); }

ConsequenceRelation relation_of_revision(const Revision& rv, const Theory& base)
{
    return ConsequenceRelation::tabulate(rv.atoms(), [&](const PropSet& f) { return rv.revise(base, f); });
}

Revision revision_from_relation(const ConsequenceRelation& c)
{
    const std::size_t n = c.atoms();
    const std::size_t width = std::size_t{1} << n;
    const std::size_t sets = std::size_t{1} << width;
    std::vector<std::uint8_t> results(sets * sets);
    for (std::size_t k = 0; k < sets; ++k)
        for (std::size_t f = 0; f < sets; ++f) {
            const Theory theory{PropSet{n, k}};
            const PropSet formula{n, f};
            const Theory out = contains_negation(theory, formula) ? c.consequences(formula) : cn_with(theory, formula);
            results[(k << width) | f] = static_cast<std::uint8_t>(out.models().bits());
        }
    return Revision::table(RevisionTable{n, std::move(results)});
}

RankFunction prepend_theory_level(const RankFunction& r, const Theory& k)
{
    std::vector<RankFunction::rank_type> ranks(r.ranks().begin(), r.ranks().end());
    for (std::size_t v = 0; v < ranks.size(); ++v)
        ranks[v] = k.models().contains(v) ? 0 : ranks[v] + 1;
    return normalize(RankFunction{r.atoms(), std::move(ranks)});
}

RankFunction flatten_theory_models(const RankFunction& r, const Theory& k)
{
    std::vector<RankFunction::rank_type> ranks(r.ranks().begin(), r.ranks().end());
    for (std::size_t v = 0; v < ranks.size(); ++v)
        if (k.models().contains(v))
            ranks[v] = 0;
    return normalize(RankFunction{r.atoms(), std::move(ranks)});
}

Revision conservative_extension(const Revision& rv, const Theory& k) { return Revision::conservative(rv, k); }

std::vector<RevisionStep> iterate(const Revision& rv, const Theory& k, std::span<const PropSet> fs)
{
    std::vector<RevisionStep> steps;
    steps.reserve(fs.size());
    Theory current = k;
    for (const auto& f : fs) {
        Theory next = rv.revise(current, f);
        steps.push_back({current, f, next, severity(current, f)});
        current = next;
    }
    return steps;
}

std::string format_step(const RevisionStep& step, const Signature& sig)
{
    return canonical_text(step.input.models(), sig) + " * " + canonical_text(step.formula, sig) + " => "
        + canonical_text(step.output.models(), sig) + " [" + std::string(to_string(step.severity)) + "]";
}

bool same_revision(const Revision& a, const Revision& b)
{
    if (a.atoms() != b.atoms())
        return false;
    return RevisionTable::tabulate(a) == RevisionTable::tabulate(b);
}

} // namespace kstar
