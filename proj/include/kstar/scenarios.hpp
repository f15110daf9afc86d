#pragma once

#include <string_view>
#include <vector>

#include "kstar/rank_function.hpp"
#include "kstar/revision.hpp"
#include "kstar/signature.hpp"
#include "kstar/theory.hpp"

namespace kstar {

/// Rank file of the running two-atom example: 11 < {01, 10} < 00.
/// Identical to fixtures/r0.rnk.
std::string_view running_example_rank_text();

/// Rank file of the weather scenario over (c, rp, ro): clouds in Paris,
/// rain in Paris, rain in Orleans. Every cloudy world is normal; a
/// cloudless world is pushed up one level per rain it has, so the default
/// "no clouds in Paris, no rain in Orleans" outranks a believed rain in
/// Orleans. Identical to fixtures/paris.rnk.
std::string_view paris_rank_text();

struct ScenarioTrace {
    Signature signature;
    RankFunction rank;
    Theory theory;
    std::vector<RevisionStep> steps;
};

/// K = Cn(rp & ro & (!c -> !ro)) revised by !c, by c, and K_bot revised by
/// !c, each as a single step from its own starting theory.
ScenarioTrace example_paris();

} // namespace kstar
