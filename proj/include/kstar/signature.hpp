#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kstar {

/// Largest supported atom count. A PropSet is one 64-bit word, so at most
/// 2^6 valuations.
inline constexpr std::size_t max_atoms = 6;

/// Largest atom count for which the exhaustive suites and dense revision
/// tables are defined.
inline constexpr std::size_t max_exhaustive_atoms = 3;

/// Ordered list of propositional atoms. The first atom is the most
/// significant bit of a valuation index.
class Signature {
public:
    explicit Signature(std::vector<std::string> atoms);

    /// `p q r s t u`, truncated to `n`.
    static Signature with_default_names(std::size_t n);

    std::size_t size() const noexcept { return atoms_.size(); }
    const std::vector<std::string>& atoms() const noexcept { return atoms_; }
    const std::string& atom(std::size_t i) const { return atoms_.at(i); }

    std::optional<std::size_t> index_of(std::string_view name) const;

    /// 2^n
    std::size_t valuation_count() const noexcept { return std::size_t{1} << atoms_.size(); }

    /// 2^(2^n): number of PropSets, hence of theories and formula classes.
    /// Returns 0 at n = 6, where the count does not fit.
    std::uint64_t propset_count() const noexcept;

    /// Valuation index rendered as a bit string in atom order, e.g. "10".
    std::string bits(std::size_t valuation) const;
    /// Inverse of bits(); throws FormatError on malformed input.
    std::size_t parse_bits(std::string_view text) const;

    /// Whether atom i is true under the given valuation index.
    bool holds(std::size_t valuation, std::size_t atom) const noexcept
    {
        return ((valuation >> (atoms_.size() - 1 - atom)) & 1U) != 0;
    }

    friend bool operator==(const Signature&, const Signature&) = default;

private:
    std::vector<std::string> atoms_;
};

} // namespace kstar
