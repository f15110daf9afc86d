#include "kstar/cli.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "kstar/consequence.hpp"
#include "kstar/error.hpp"
#include "kstar/formula.hpp"
#include "kstar/postulates.hpp"
#include "kstar/rank_io.hpp"
#include "kstar/report.hpp"
#include "kstar/revision.hpp"
#include "kstar/scenarios.hpp"

namespace kstar::cli {

namespace {

constexpr int exit_ok = 0;
constexpr int exit_violation = 1;
constexpr int exit_usage = 2;

struct UsageError : Error {
    using Error::Error;
};

struct Options {
    std::string atoms;
    std::string rank;
    std::string theory;
    std::vector<std::string> phis;
    std::string postulates;
    std::string mode = "exhaustive";
    std::uint64_t seed = 0;
    std::size_t samples = 10000;
    bool json = false;
    std::string example;
};

Signature parse_atoms(const std::string& text)
{
    if (!text.empty() && std::all_of(text.begin(), text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        return Signature::with_default_names(std::stoul(text));
    std::vector<std::string> names;
    std::string cur;
    for (char c : text) {
        if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
            if (!cur.empty())
                names.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty())
        names.push_back(std::move(cur));
    return Signature{std::move(names)};
}

// The signature from --rank, cross-checked against --atoms when both are given.
struct Inputs {
    Signature sig;
    std::optional<RankFunction> rank;
};

Inputs load_inputs(const Options& o, bool need_rank)
{
    if (!o.rank.empty()) {
        RankFile file = read_rank_file(o.rank);
        if (!o.atoms.empty()) {
            const Signature declared = parse_atoms(o.atoms);
            const bool count_only = std::all_of(o.atoms.begin(), o.atoms.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
            if (count_only ? declared.size() != file.signature.size() : declared != file.signature)
                throw UsageError("--atoms does not match the atoms declared in " + o.rank);
        }
        return {file.signature, file.rank};
    }
    if (need_rank)
        throw UsageError("--rank is required");
    if (o.atoms.empty())
        throw UsageError("--atoms or --rank is required");
    return {parse_atoms(o.atoms), std::nullopt};
}

Theory parse_theory(const std::string& text, const Signature& sig)
{
    if (text == "bot")
        return Theory::bottom(sig.size());
    return Theory{parse_propset(text, sig)};
}

SuiteOptions suite_options(const Options& o)
{
    SuiteOptions s;
    if (o.mode == "exhaustive")
        s.mode = SuiteMode::exhaustive;
    else if (o.mode == "sampled")
        s.mode = SuiteMode::sampled;
    else
        throw UsageError("--mode must be exhaustive or sampled");
    s.seed = o.seed;
    s.samples = o.samples;
    return s;
}

int cmd_revise(const Options& o, std::ostream& out)
{
    if (o.theory.empty() || o.phis.size() != 1)
        throw UsageError("revise needs --theory and exactly one --phi");
    const Inputs in = load_inputs(o, true);
    const Theory k = parse_theory(o.theory, in.sig);
    const PropSet phi = parse_propset(o.phis.front(), in.sig);
    const Theory result = Revision::ranked(*in.rank).revise(k, phi);
    const Severity sev = severity(k, phi);
    if (o.json) {
        nlohmann::json j{{"theory", canonical_text(k.models(), in.sig)},
                         {"phi", canonical_text(phi, in.sig)},
                         {"result", canonical_text(result.models(), in.sig)},
                         {"severity", std::string(to_string(sev))}};
        out << j.dump(2) << '\n';
    } else {
        out << canonical_text(result.models(), in.sig) << " [" << to_string(sev) << "]\n";
    }
    return exit_ok;
}

int cmd_check(const Options& o, std::ostream& out)
{
    const Inputs in = load_inputs(o, true);
    const auto ids = parse_postulate_list(o.postulates.empty() ? "K1..K9" : o.postulates);
    const SuiteReport report = run_suite(Revision::ranked(*in.rank), ids, in.sig, suite_options(o));
    if (o.json)
        out << to_json(report, in.sig).dump(2) << '\n';
    else
        out << format_text(report, in.sig);
    return exit_code(report);
}

int cmd_enumerate(const Options& o, std::ostream& out)
{
    const Inputs in = load_inputs(o, false);
    const SuiteOptions s = suite_options(o);
    std::vector<RankFunction> ranks;
    if (s.mode == SuiteMode::exhaustive) {
        ranks = enumerate_rank_functions(in.sig);
    } else {
        for (std::size_t i = 0; i < s.samples; ++i)
            ranks.push_back(random_rank_function(in.sig, in.sig.valuation_count(), s.seed + i));
    }
    if (o.json) {
        nlohmann::json j;
        j["atoms"] = in.sig.atoms();
        j["count"] = ranks.size();
        auto& arr = j["rank_functions"] = nlohmann::json::array();
        for (const auto& r : ranks)
            arr.push_back(std::vector<RankFunction::rank_type>(r.ranks().begin(), r.ranks().end()));
        out << j.dump() << '\n';
    } else {
        for (const auto& r : ranks)
            out << to_string(r) << '\n';
        out << "count: " << ranks.size() << '\n';
    }
    return exit_ok;
}

int cmd_witness(const Options& o, std::ostream& out)
{
    const Inputs in = load_inputs(o, false);
    if (in.rank) {
        const auto ids = parse_postulate_list(o.postulates.empty() ? "U8_1" : o.postulates);
        if (ids.size() != 1 || (ids.front() != PostulateId::U8_1 && ids.front() != PostulateId::C2))
            throw UsageError("witness --postulates must be U8_1 or C2");
        const auto which = ids.front() == PostulateId::U8_1 ? ImpossibilityKind::u8_1_vs_k4k5 : ImpossibilityKind::c2_vs_k1k4;
        const Violation v = find_impossibility_witness(Revision::ranked(*in.rank), which, in.sig);
        if (o.json) {
            nlohmann::json j{{"postulate", std::string(to_string(v.postulate))}, {"verdict", "fail"},
                             {"witness", witness_json(v, in.sig)}};
            out << j.dump(2) << '\n';
        } else {
            out << to_string(v.postulate) << " violated: " << format_text(v, in.sig) << '\n';
        }
        return exit_ok;
    }

    if (o.theory.empty())
        throw UsageError("witness needs --rank (impossibility) or --theory (under-determination)");
    const Theory k = parse_theory(o.theory, in.sig);
    const auto found = dynamic_underdetermination(in.sig, k);
    if (!found) {
        if (o.json)
            out << nlohmann::json{{"found", false}}.dump(2) << '\n';
        else
            out << "not found: the row at " << canonical_text(k.models(), in.sig) << " determines every iterated revision\n";
        return exit_violation;
    }
    const Revision r1 = Revision::ranked(found->first);
    const Revision r2 = Revision::ranked(found->second);
    const Theory after = r1.revise(k, found->psi);
    const Theory out1 = r1.revise(after, found->phi);
    const Theory out2 = r2.revise(after, found->phi);
    if (o.json) {
        nlohmann::json j{{"found", true},
                         {"first", to_string(found->first)},
                         {"second", to_string(found->second)},
                         {"psi", canonical_text(found->psi, in.sig)},
                         {"phi", canonical_text(found->phi, in.sig)},
                         {"first_result", canonical_text(out1.models(), in.sig)},
                         {"second_result", canonical_text(out2.models(), in.sig)}};
        out << j.dump(2) << '\n';
    } else {
        out << "first:  " << to_string(found->first) << '\n'
            << "second: " << to_string(found->second) << '\n'
            << "same row at K = " << canonical_text(k.models(), in.sig) << '\n'
            << "psi = " << canonical_text(found->psi, in.sig) << "; phi = " << canonical_text(found->phi, in.sig) << '\n'
            << "(K*psi)*phi: " << canonical_text(out1.models(), in.sig) << " vs " << canonical_text(out2.models(), in.sig)
            << '\n';
    }
    return exit_ok;
}

// relation -> revision -> relation and revision -> relation -> revision.
bool roundtrip_one(const RankFunction& r, const Signature& sig, std::ostream& out)
{
    const Revision rv = Revision::ranked(r);
    const Theory bottom = Theory::bottom(sig.size());
    const ConsequenceRelation rel = relation_of_revision(rv, bottom);
    bool ok = true;
    if (!(rel == relation_of(r))) {
        out << to_string(r) << ": K_bot relation differs from the ranked relation\n";
        ok = false;
    }
    if (!same_revision(revision_from_relation(rel), rv)) {
        out << to_string(r) << ": revision rebuilt from the relation differs\n";
        ok = false;
    }
    if (!(relation_of_revision(revision_from_relation(rel), bottom) == rel)) {
        out << to_string(r) << ": relation -> revision -> relation is not the identity\n";
        ok = false;
    }
    if (!(rank_function_of(rel) == normalize(r))) {
        out << to_string(r) << ": extracted ranking differs\n";
        ok = false;
    }
    return ok;
}

int cmd_roundtrip(const Options& o, std::ostream& out)
{
    const Inputs in = load_inputs(o, false);
    std::vector<RankFunction> ranks;
    if (in.rank)
        ranks.push_back(*in.rank);
    else
        ranks = enumerate_rank_functions(in.sig);
    std::size_t failures = 0;
    for (const auto& r : ranks)
        failures += roundtrip_one(r, in.sig, out) ? 0 : 1;
    out << "roundtrip: " << ranks.size() - failures << '/' << ranks.size() << " identities hold\n";
    return failures == 0 ? exit_ok : exit_violation;
}

int cmd_trace(const Options& o, std::ostream& out)
{
    if (o.theory.empty())
        throw UsageError("trace needs --theory");
    const Inputs in = load_inputs(o, true);
    const Theory k = parse_theory(o.theory, in.sig);
    std::vector<PropSet> fs;
    for (const auto& p : o.phis)
        fs.push_back(parse_propset(p, in.sig));
    for (const auto& step : iterate(Revision::ranked(*in.rank), k, fs))
        out << format_step(step, in.sig) << '\n';
    return exit_ok;
}

int cmd_example(const Options& o, std::ostream& out)
{
    if (o.example != "paris")
        throw UsageError("unknown example '" + o.example + "' (available: paris)");
    const ScenarioTrace t = example_paris();
    out << format_rank_file(t.rank, t.signature);
    for (const auto& step : t.steps)
        out << format_step(step, t.signature) << '\n';
    return exit_ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Belief revision by rational consequence relations", "kstar"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--atoms", o.atoms, "Atom count or list, e.g. 2 or p,q");
        sub->add_option("--rank", o.rank, "Rank function file");
        sub->add_option("--theory", o.theory, "Theory: a formula (its consequences) or 'bot'");
        sub->add_option("--phi", o.phis, "Formula to revise by; repeat for a trace");
        sub->add_option("--postulates", o.postulates, "Ids and ranges, e.g. K1..K9,U8_2 or all");
        sub->add_option("--mode", o.mode, "exhaustive or sampled");
        sub->add_option("--seed", o.seed, "Seed for sampled mode");
        sub->add_option("--samples", o.samples, "Bindings per postulate (or rank functions) in sampled mode");
        sub->add_flag("--json", o.json, "Machine-readable output");
    };

    struct Command {
        const char* name;
        const char* help;
        int (*fn)(const Options&, std::ostream&);
    };
    const Command commands[] = {
        {"revise", "Revise a theory by a formula", cmd_revise},
        {"check", "Check postulates on a ranked revision", cmd_check},
        {"enumerate", "List normalized rank functions", cmd_enumerate},
        {"witness", "Impossibility or under-determination witness", cmd_witness},
        {"roundtrip", "Check the revision/relation bijection", cmd_roundtrip},
        {"trace", "Iterate revisions and print each step", cmd_trace},
        {"example", "Run a shipped scenario", cmd_example},
    };
    std::vector<std::pair<CLI::App*, const Command*>> subs;
    for (const auto& c : commands) {
        CLI::App* sub = app.add_subcommand(c.name, c.help);
        common(sub);
        if (std::string_view{c.name} == "example")
            sub->add_option("name", o.example, "Scenario name (paris)")->required();
        subs.emplace_back(sub, &c);
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "kstar: " << e.what() << '\n';
        return exit_usage;
    }

    try {
        for (const auto& [sub, cmd] : subs)
            if (sub->parsed())
                return cmd->fn(o, out);
    } catch (const ExhaustionError& e) {
        err << "kstar: " << e.what() << '\n';
        return exit_violation;
    } catch (const Error& e) {
        err << "kstar: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

} // namespace kstar::cli
