#include "kstar/scenarios.hpp"

#include "kstar/formula.hpp"
#include "kstar/rank_io.hpp"

namespace kstar {

std::string_view running_example_rank_text()
{
    return "atoms: p q\n"
           "0: 11\n"
           "1: 01 10\n"
           "2: 00\n";
}

std::string_view paris_rank_text()
{
    return "atoms: c rp ro\n"
           "0: 000 100 101 110 111\n"
           "1: 001 010\n"
           "2: 011\n";
}

ScenarioTrace example_paris()
{
    RankFile file = parse_rank_file(paris_rank_text());
    const Signature& sig = file.signature;
    const Revision rv = Revision::ranked(file.rank);

    const Theory k{parse_propset("rp & ro & (!c -> !ro)", sig)};
    const PropSet no_clouds = parse_propset("!c", sig);
    const PropSet clouds = parse_propset("c", sig);
    const Theory bottom = Theory::bottom(sig.size());

    ScenarioTrace trace{sig, file.rank, k, {}};
    for (const auto& [start, f] : {std::pair{k, no_clouds}, std::pair{k, clouds}, std::pair{bottom, no_clouds}}) {
        const auto step = iterate(rv, start, std::span{&f, 1});
        trace.steps.push_back(step.front());
    }
    return trace;
}

} // namespace kstar
