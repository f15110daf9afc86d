#include "kstar/rank_function.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>

#include "kstar/error.hpp"

namespace kstar {

RankFunction::RankFunction(std::size_t atoms, std::vector<rank_type> ranks) : atoms_(atoms), ranks_(std::move(ranks))
{
    if (atoms == 0 || atoms > max_atoms)
        throw DomainTooLargeError("rank function atom count out of range");
    if (ranks_.size() != (std::size_t{1} << atoms))
        throw FormatError("rank function needs " + std::to_string(std::size_t{1} << atoms) + " ranks, got "
                          + std::to_string(ranks_.size()));

    std::map<rank_type, PropSet::word_type> by_rank;
    for (std::size_t v = 0; v < ranks_.size(); ++v)
        by_rank[ranks_[v]] |= PropSet::word_type{1} << v;
    levels_.reserve(by_rank.size());
    for (const auto& [rank, bits] : by_rank)
        levels_.emplace_back(atoms_, bits);
}

bool RankFunction::is_normalized() const noexcept
{
    const auto top = *std::max_element(ranks_.begin(), ranks_.end());
    return levels_.size() == static_cast<std::size_t>(top) + 1;
}

RankFunction normalize(const RankFunction& r)
{
    std::vector<RankFunction::rank_type> sorted(r.ranks().begin(), r.ranks().end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    std::vector<RankFunction::rank_type> out;
    out.reserve(r.ranks().size());
    for (auto rank : r.ranks())
        out.push_back(static_cast<RankFunction::rank_type>(std::lower_bound(sorted.begin(), sorted.end(), rank)
                                                           - sorted.begin()));
    return RankFunction{r.atoms(), std::move(out)};
}

Theory consequences_of(const RankFunction& r, const PropSet& f)
{
    for (const auto& level : r.levels()) {
        const PropSet lowest = level & f;
        if (!lowest.is_empty())
            return Theory{lowest};
    }
    return Theory::bottom(r.atoms());
}

std::string to_string(const RankFunction& r)
{
    std::string out = "(";
    for (std::size_t v = 0; v < r.ranks().size(); ++v) {
        if (v)
            out += ',';
        out += std::to_string(r.ranks()[v]);
    }
    return out + ")";
}

// ---------------------------------------------------------------------------
// Enumeration
//
// A normalized vector uses every value of 0..max. A prefix is completable iff
// the values of 0..max it has not used yet fit in the remaining positions.

namespace {

using rank_type = RankFunction::rank_type;

struct PrefixState {
    std::uint32_t used = 0;   // bit k set iff value k appears
    int max = -1;
};

std::size_t missing(const PrefixState& s)
{
    const std::uint32_t all = s.max < 0 ? 0U : ((std::uint32_t{1} << (s.max + 1)) - 1);
    return static_cast<std::size_t>(std::popcount(all & ~s.used));
}

PrefixState with_value(PrefixState s, rank_type v)
{
    s.used |= std::uint32_t{1} << v;
    s.max = std::max(s.max, static_cast<int>(v));
    return s;
}

PrefixState state_of(const std::vector<rank_type>& a, std::size_t len)
{
    PrefixState s;
    for (std::size_t i = 0; i < len; ++i)
        s = with_value(s, a[i]);
    return s;
}

// Lexicographically smallest completion of positions [from, size).
void fill_smallest(std::vector<rank_type>& a, std::size_t from, PrefixState s)
{
    for (std::size_t i = from; i < a.size(); ++i) {
        const std::size_t remaining = a.size() - i - 1;
        for (rank_type v = 0;; ++v) {
            const PrefixState next = with_value(s, v);
            if (missing(next) <= remaining) {
                a[i] = v;
                s = next;
                break;
            }
        }
    }
}

} // namespace

RankFunctionEnumerator::RankFunctionEnumerator(const Signature& sig) : atoms_(sig.size())
{
    if (atoms_ > max_exhaustive_atoms)
        throw DomainTooLargeError("rank function enumeration requires at most "
                                  + std::to_string(max_exhaustive_atoms) + " atoms");
    current_.assign(sig.valuation_count(), 0);
}

bool RankFunctionEnumerator::advance()
{
    const std::size_t size = current_.size();
    for (std::size_t i = size; i-- > 0;) {
        const PrefixState prefix = state_of(current_, i);
        const std::size_t remaining = size - i - 1;
        const auto limit = static_cast<rank_type>(size - 1);
        for (rank_type v = current_[i] + 1; v <= limit; ++v) {
            const PrefixState next = with_value(prefix, v);
            if (missing(next) <= remaining) {
                current_[i] = v;
                fill_smallest(current_, i + 1, next);
                return true;
            }
        }
    }
    return false;
}

std::optional<RankFunction> RankFunctionEnumerator::next()
{
    if (done_)
        return std::nullopt;
    if (!started_) {
        started_ = true;
        fill_smallest(current_, 0, PrefixState{});
    } else if (!advance()) {
        done_ = true;
        return std::nullopt;
    }
    return RankFunction{atoms_, current_};
}

std::vector<RankFunction> enumerate_rank_functions(const Signature& sig)
{
    std::vector<RankFunction> out;
    RankFunctionEnumerator e{sig};
    while (auto r = e.next())
        out.push_back(std::move(*r));
    return out;
}

RankFunction random_rank_function(const Signature& sig, std::size_t levels, std::uint64_t seed)
{
    if (levels == 0)
        throw PreconditionError("random_rank_function needs at least one level");
    std::mt19937_64 engine{seed};
    std::vector<rank_type> ranks(sig.valuation_count());
    for (auto& r : ranks)
        r = static_cast<rank_type>(engine() % levels);
    return normalize(RankFunction{sig.size(), std::move(ranks)});
}

} // namespace kstar
