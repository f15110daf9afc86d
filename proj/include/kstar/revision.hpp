#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "kstar/consequence.hpp"
#include "kstar/propset.hpp"
#include "kstar/rank_function.hpp"
#include "kstar/signature.hpp"
#include "kstar/theory.hpp"

namespace kstar {

class Revision;

/// Explicit revision over the whole finite domain: one result per
/// (theory, formula) cell. Defined for n <= 3, where a model set fits a byte.
class RevisionTable {
public:
    /// `results[(k << 2^n) | f]` holds the model bits of the revision of the
    /// theory with model bits k by the formula with model bits f.
    RevisionTable(std::size_t atoms, std::vector<std::uint8_t> results);

    static RevisionTable tabulate(const Revision& rv);

    std::size_t atoms() const noexcept { return atoms_; }
    Theory revise(const Theory& k, const PropSet& f) const
    {
        return Theory{PropSet{atoms_, results_[index(k.models(), f)]}};
    }
    /// Copy with one cell replaced.
    RevisionTable with_cell(const Theory& k, const PropSet& f, const Theory& result) const;

    std::span<const std::uint8_t> cells() const noexcept { return results_; }

    friend bool operator==(const RevisionTable&, const RevisionTable&) = default;

private:
    std::size_t index(const PropSet& k, const PropSet& f) const noexcept
    {
        return (static_cast<std::size_t>(k.bits()) << (std::size_t{1} << atoms_)) | static_cast<std::size_t>(f.bits());
    }

    std::size_t atoms_;
    std::vector<std::uint8_t> results_;
};

enum class RevisionKind { ranked, table, conservative };

std::string_view to_string(RevisionKind k);

/// A two-argument revision operator (theory, formula) -> theory, total on
/// the finite domain including K_bot. Immutable; copies share state.
class Revision {
public:
    /// The operator induced by a ranked model: severe revisions return the
    /// most normal models of the formula, mild ones expand.
    static Revision ranked(RankFunction r);
    static Revision table(RevisionTable t);
    /// Agrees with `source` on the row of `anchor` for severe revisions and
    /// expands on mild ones; see conservative_extension().
    static Revision conservative(Revision source, Theory anchor);

    RevisionKind kind() const noexcept;
    std::size_t atoms() const noexcept;

    Theory revise(const Theory& k, const PropSet& f) const;

    /// The rank function of a ranked revision, otherwise null.
    const RankFunction* rank_function() const noexcept;

private:
    struct Conservative {
        std::shared_ptr<const Revision> source;
        Theory anchor;
    };
    using Impl = std::variant<RankFunction, RevisionTable, Conservative>;

    explicit Revision(Impl impl) : impl_(std::make_shared<const Impl>(std::move(impl))) {}

    std::shared_ptr<const Impl> impl_;
};

inline Theory revise(const Revision& rv, const Theory& k, const PropSet& f) { return rv.revise(k, f); }

enum class Severity { mild, severe };

std::string_view to_string(Severity s);

/// Severe iff the negation of f is in K.
inline Severity severity(const Theory& k, const PropSet& f)
{
    return contains_negation(k, f) ? Severity::severe : Severity::mild;
}

/// C(f) = revise(rv, base, f). With base = K_bot this is the relation the
/// representation bijection assigns to rv.
ConsequenceRelation relation_of_revision(const Revision& rv, const Theory& base);

/// The inverse map of the bijection: severe cells take C(f), mild cells
/// expand. Realized as a table revision.
Revision revision_from_relation(const ConsequenceRelation& c);

/// The ranked model with a new lowest level holding the models of k, then
/// normalized: rank 0 on models(k), r(v) + 1 elsewhere. For K_bot this is r.
RankFunction prepend_theory_level(const RankFunction& r, const Theory& k);

/// Re-ranks every model of k to 0 and normalizes. On the output of
/// prepend_theory_level this is the identity: states above the new level
/// that satisfy k leave no trace in the relation.
RankFunction flatten_theory_models(const RankFunction& r, const Theory& k);

/// The revision that revises `k` exactly as `rv` does and satisfies minimal
/// influence: L revised by f is rv(k, f) when the negation of f is in L,
/// Cn(L, f) otherwise.
Revision conservative_extension(const Revision& rv, const Theory& k);

struct RevisionStep {
    Theory input;
    PropSet formula;
    Theory output;
    Severity severity;

    friend bool operator==(const RevisionStep&, const RevisionStep&) = default;
};

/// Revises left to right, each step starting from the previous output.
std::vector<RevisionStep> iterate(const Revision& rv, const Theory& k, std::span<const PropSet> fs);

/// `<theory-DNF> * <formula-DNF> => <theory-DNF> [mild|severe]`
std::string format_step(const RevisionStep& step, const Signature& sig);

/// Pointwise equality over every (theory, formula) cell. Requires n <= 3.
bool same_revision(const Revision& a, const Revision& b);

} // namespace kstar
