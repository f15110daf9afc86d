#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kstar/propset.hpp"
#include "kstar/rank_function.hpp"
#include "kstar/signature.hpp"
#include "kstar/theory.hpp"

namespace kstar {

/// A nonmonotonic consequence relation, tabulated as f -> C(f), the theory
/// of everything f defeasibly entails. Defined for n <= 3 only.
class ConsequenceRelation {
public:
    /// `consequences[b]` is C of the PropSet with bitmask b.
    ConsequenceRelation(std::size_t atoms, std::vector<Theory> consequences);

    static ConsequenceRelation tabulate(std::size_t atoms, const std::function<Theory(const PropSet&)>& c);

    std::size_t atoms() const noexcept { return atoms_; }
    const Theory& consequences(const PropSet& f) const { return table_[f.bits()]; }
    /// f |~ g
    bool entails(const PropSet& f, const PropSet& g) const { return theory_contains(consequences(f), g); }

    friend bool operator==(const ConsequenceRelation&, const ConsequenceRelation&) = default;

private:
    std::size_t atoms_;
    std::vector<Theory> table_;
};

/// The relation induced by a ranked model: C(f) = consequences_of(r, f).
ConsequenceRelation relation_of(const RankFunction& r);

/// Recovers the ranked model of a rational, consistency-preserving relation:
/// level 0 is C(true), level k+1 is C of the valuations not yet ranked.
/// Throws PreconditionError when the peeling gets stuck on an empty C.
RankFunction rank_function_of(const ConsequenceRelation& c);

enum class RationalProperty {
    reflexivity,
    left_logical_equivalence,
    right_weakening,
    and_rule,
    or_rule,
    cautious_monotonicity,
    rational_monotonicity,
    conditionalization,
    consistency_preservation,
};

inline constexpr std::array all_rational_properties = {
    RationalProperty::reflexivity,           RationalProperty::left_logical_equivalence,
    RationalProperty::right_weakening,       RationalProperty::and_rule,
    RationalProperty::or_rule,               RationalProperty::cautious_monotonicity,
    RationalProperty::rational_monotonicity, RationalProperty::conditionalization,
    RationalProperty::consistency_preservation,
};

/// REF, LLE, RW, AND, OR, CM, RM, S, CP
std::string_view short_name(RationalProperty p);

/// A binding of the property's quantifiers under which it fails. Unused
/// slots are empty.
struct RationalityCounterexample {
    RationalProperty property;
    PropSet phi;
    std::optional<PropSet> psi;
    std::optional<PropSet> chi;
};

struct RationalityReport {
    std::array<std::optional<RationalityCounterexample>, all_rational_properties.size()> failures;

    bool passes(RationalProperty p) const { return !failures[static_cast<std::size_t>(p)]; }
    bool all_pass() const;
    const std::optional<RationalityCounterexample>& failure(RationalProperty p) const
    {
        return failures[static_cast<std::size_t>(p)];
    }
};

/// Checks the KLM rational properties plus consistency preservation by
/// quantifying over every PropSet pair or triple. The first failing binding
/// in lexicographic order is reported per property. LLE holds by
/// construction, since the relation is indexed by equivalence class.
RationalityReport check_rationality(const ConsequenceRelation& c, const Signature& sig);

/// Whether the bindings of `cx` still falsify its property on `c`.
bool replays(const ConsequenceRelation& c, const RationalityCounterexample& cx);

} // namespace kstar
