#pragma once

#include <string_view>

#include "kstar/formula.hpp"
#include "kstar/rank_function.hpp"
#include "kstar/rank_io.hpp"
#include "kstar/scenarios.hpp"
#include "kstar/theory.hpp"
#include "oracles.hpp"

namespace test {

inline const kstar::Signature& pq()
{
    static const kstar::Signature sig{{"p", "q"}};
    return sig;
}

inline kstar::PropSet set(std::string_view formula, const kstar::Signature& sig = pq())
{
    return kstar::parse_propset(formula, sig);
}

inline kstar::Theory cn(std::string_view formula, const kstar::Signature& sig = pq())
{
    return kstar::Theory{set(formula, sig)};
}

inline kstar::RankFunction r0() { return kstar::parse_rank_file(kstar::running_example_rank_text()).rank; }

inline oracle::Ranks raw(const kstar::RankFunction& r) { return {r.ranks().begin(), r.ranks().end()}; }

} // namespace test
