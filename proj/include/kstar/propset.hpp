#pragma once

#include <bit>
#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>

#include "kstar/signature.hpp"

namespace kstar {

/// A set of valuations over a signature of `atoms` atoms, stored as a
/// bitmask: bit v is set iff valuation index v is a member.
///
/// A PropSet is the canonical form of a formula modulo logical equivalence.
/// It also serves as the model set of a theory.
class PropSet {
public:
    using word_type = std::uint64_t;

    PropSet() = default;
    PropSet(std::size_t atoms, word_type bits) : bits_(bits & universe_mask(atoms)), atoms_(atoms)
    {
        assert(atoms <= max_atoms);
    }

    static PropSet empty(std::size_t atoms) { return {atoms, 0}; }
    static PropSet full(std::size_t atoms) { return {atoms, universe_mask(atoms)}; }
    static PropSet singleton(std::size_t atoms, std::size_t valuation)
    {
        return {atoms, word_type{1} << valuation};
    }

    static constexpr word_type universe_mask(std::size_t atoms) noexcept
    {
        const std::size_t width = std::size_t{1} << atoms;
        return width >= 64 ? ~word_type{0} : (word_type{1} << width) - 1;
    }

    word_type bits() const noexcept { return bits_; }
    std::size_t atoms() const noexcept { return atoms_; }
    std::size_t universe_size() const noexcept { return std::size_t{1} << atoms_; }

    bool is_empty() const noexcept { return bits_ == 0; }
    bool is_full() const noexcept { return bits_ == universe_mask(atoms_); }
    std::size_t count() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
    bool contains(std::size_t valuation) const noexcept { return ((bits_ >> valuation) & 1U) != 0; }

    bool subset_of(const PropSet& other) const noexcept
    {
        assert(atoms_ == other.atoms_);
        return (bits_ & ~other.bits_) == 0;
    }
    bool intersects(const PropSet& other) const noexcept
    {
        assert(atoms_ == other.atoms_);
        return (bits_ & other.bits_) != 0;
    }

    PropSet complement() const noexcept { return {atoms_, ~bits_}; }

    friend PropSet operator&(const PropSet& a, const PropSet& b) noexcept
    {
        assert(a.atoms_ == b.atoms_);
        return {a.atoms_, a.bits_ & b.bits_};
    }
    friend PropSet operator|(const PropSet& a, const PropSet& b) noexcept
    {
        assert(a.atoms_ == b.atoms_);
        return {a.atoms_, a.bits_ | b.bits_};
    }
    friend PropSet operator-(const PropSet& a, const PropSet& b) noexcept
    {
        assert(a.atoms_ == b.atoms_);
        return {a.atoms_, a.bits_ & ~b.bits_};
    }
    PropSet operator~() const noexcept { return complement(); }

    /// Material implication a -> b as a set: complement(a) | b.
    friend PropSet implies(const PropSet& a, const PropSet& b) noexcept { return ~a | b; }

    friend bool operator==(const PropSet&, const PropSet&) = default;
    /// Numeric order of the bitmask; this is the lexicographic order used by
    /// every exhaustive search.
    friend auto operator<=>(const PropSet& a, const PropSet& b) noexcept
    {
        if (auto c = a.atoms_ <=> b.atoms_; c != 0)
            return c;
        return a.bits_ <=> b.bits_;
    }

private:
    word_type bits_ = 0;
    std::size_t atoms_ = 0;
};

/// Valuations of `s` written as bit strings, e.g. "{01,11}".
std::string to_bit_list(const PropSet& s, const Signature& sig);

/// Parses "{01,11}" style lists (braces optional, separators `,` or blanks).
PropSet parse_bit_list(std::string_view text, const Signature& sig);

/// Visits every PropSet over `atoms` atoms in ascending bitmask order.
/// Requires atoms <= max_exhaustive_atoms.
template <typename Fn>
void for_each_propset(std::size_t atoms, Fn&& fn)
{
    assert(atoms <= max_exhaustive_atoms);
    const std::uint64_t count = std::uint64_t{1} << (std::size_t{1} << atoms);
    for (std::uint64_t b = 0; b < count; ++b)
        fn(PropSet{atoms, b});
}

} // namespace kstar
