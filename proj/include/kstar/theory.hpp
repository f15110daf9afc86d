#pragma once

#include <compare>
#include <cstddef>

#include "kstar/propset.hpp"

namespace kstar {

/// A deductively closed set of formulas, represented by its models.
///
/// K contains a formula iff models(K) is a subset of the formula's models,
/// so a larger model set is a weaker theory. The inconsistent theory K_bot
/// has no models and contains every formula.
class Theory {
public:
    Theory() = default;
    explicit Theory(PropSet models) : models_(models) {}

    static Theory bottom(std::size_t atoms) { return Theory{PropSet::empty(atoms)}; }
    /// Cn(true): the tautologies.
    static Theory tautologies(std::size_t atoms) { return Theory{PropSet::full(atoms)}; }

    const PropSet& models() const noexcept { return models_; }
    std::size_t atoms() const noexcept { return models_.atoms(); }
    bool is_consistent() const noexcept { return !models_.is_empty(); }

    friend bool operator==(const Theory&, const Theory&) = default;
    friend auto operator<=>(const Theory&, const Theory&) = default;

private:
    PropSet models_;
};

/// Cn(K, f): models(K) & f.
inline Theory cn_with(const Theory& k, const PropSet& f) { return Theory{k.models() & f}; }

/// f is an element of K.
inline bool theory_contains(const Theory& k, const PropSet& f) { return k.models().subset_of(f); }

/// The negation of f is an element of K, i.e. K and f have no common model.
/// This is the severity test for a revision of K by f.
inline bool contains_negation(const Theory& k, const PropSet& f) { return !k.models().intersects(f); }

/// Intersection of the formula sets, i.e. the union of the model sets.
inline Theory theory_intersect(const Theory& k, const Theory& k2) { return Theory{k.models() | k2.models()}; }

/// K is a subset of K2 as formula sets.
inline bool theory_subset(const Theory& k, const Theory& k2) { return k2.models().subset_of(k.models()); }

} // namespace kstar
