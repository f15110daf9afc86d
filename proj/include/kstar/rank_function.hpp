#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kstar/propset.hpp"
#include "kstar/signature.hpp"
#include "kstar/theory.hpp"

namespace kstar {

/// Total ranking of the valuations of a signature; lower is more normal.
///
/// This is the finite form of a ranked model in which every valuation labels
/// some state, i.e. of a rational, consistency-preserving relation. Only the
/// lowest state per label is observable, so one rank per valuation suffices.
class RankFunction {
public:
    using rank_type = std::uint32_t;

    /// `ranks[v]` is the rank of valuation index v; there must be 2^atoms of
    /// them. Ranks need not be contiguous.
    RankFunction(std::size_t atoms, std::vector<rank_type> ranks);

    std::size_t atoms() const noexcept { return atoms_; }
    std::span<const rank_type> ranks() const noexcept { return ranks_; }
    rank_type rank(std::size_t valuation) const { return ranks_.at(valuation); }

    /// Ranks used are exactly 0..h.
    bool is_normalized() const noexcept;

    /// Valuations grouped by rank, lowest rank first; empty ranks skipped.
    const std::vector<PropSet>& levels() const noexcept { return levels_; }

    friend bool operator==(const RankFunction& a, const RankFunction& b) { return a.ranks_ == b.ranks_; }

private:
    std::size_t atoms_;
    std::vector<rank_type> ranks_;
    std::vector<PropSet> levels_;
};

/// Order-preserving relabelling onto 0..h.
RankFunction normalize(const RankFunction& r);

/// The minimum-rank members of `f`, as a theory; K_bot when `f` is empty.
/// `f |~ g` holds iff the result contains `g`.
Theory consequences_of(const RankFunction& r, const PropSet& f);

/// Rank vector as "(0,1,1,2)".
std::string to_string(const RankFunction& r);

/// Yields every normalized rank function over 2^n valuations exactly once,
/// in lexicographic order of the rank vector. Requires n <= 3.
class RankFunctionEnumerator {
public:
    explicit RankFunctionEnumerator(const Signature& sig);

    std::optional<RankFunction> next();

private:
    bool advance();

    std::size_t atoms_;
    std::vector<RankFunction::rank_type> current_;
    bool started_ = false;
    bool done_ = false;
};

/// Drains a RankFunctionEnumerator.
std::vector<RankFunction> enumerate_rank_functions(const Signature& sig);

/// Each valuation drawn independently from 0..levels-1 with a
/// std::mt19937_64 seeded by `seed` (draw = engine() % levels, valuations in
/// index order), then normalized. Requires levels >= 1.
RankFunction random_rank_function(const Signature& sig, std::size_t levels, std::uint64_t seed);

} // namespace kstar
