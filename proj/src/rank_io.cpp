#include "kstar/rank_io.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "kstar/error.hpp"

namespace kstar {

namespace {

std::vector<std::string> split_words(std::string_view s)
{
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    for (std::string w; in >> w;)
        out.push_back(w);
    return out;
}

std::string_view trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

} // namespace

RankFile parse_rank_file(std::string_view text)
{
    std::optional<Signature> sig;
    std::vector<RankFunction::rank_type> ranks;
    std::vector<bool> seen;
    RankFunction::rank_type expected_level = 0;

    std::istringstream in{std::string(text)};
    std::size_t line_no = 0;
    for (std::string raw; std::getline(in, raw);) {
        ++line_no;
        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#')
            continue;
        const auto colon = line.find(':');
        if (colon == std::string_view::npos)
            throw FormatError("rank file line " + std::to_string(line_no) + ": missing ':'");
        const std::string_view key = trim(line.substr(0, colon));
        const std::string_view rest = line.substr(colon + 1);

        if (!sig) {
            if (key != "atoms")
                throw FormatError("rank file must start with an 'atoms:' header");
            sig.emplace(split_words(rest));
            ranks.assign(sig->valuation_count(), 0);
            seen.assign(sig->valuation_count(), false);
            continue;
        }

        RankFunction::rank_type level = 0;
        try {
            std::size_t used = 0;
            level = static_cast<RankFunction::rank_type>(std::stoul(std::string(key), &used));
            if (used != key.size())
                throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw FormatError("rank file line " + std::to_string(line_no) + ": bad level '" + std::string(key) + "'");
        }
        if (level != expected_level)
            throw FormatError("rank file line " + std::to_string(line_no) + ": expected level "
                              + std::to_string(expected_level));
        ++expected_level;

        const auto words = split_words(rest);
        if (words.empty())
            throw FormatError("rank file line " + std::to_string(line_no) + ": empty level");
        for (const auto& w : words) {
            const std::size_t v = sig->parse_bits(w);
            if (seen[v])
                throw FormatError("rank file: valuation " + w + " listed twice");
            seen[v] = true;
            ranks[v] = level;
        }
    }

    if (!sig)
        throw FormatError("rank file is empty");
    for (std::size_t v = 0; v < seen.size(); ++v)
        if (!seen[v])
            throw FormatError("rank file: valuation " + sig->bits(v) + " has no rank");
    RankFunction r{sig->size(), std::move(ranks)};
    return RankFile{*sig, std::move(r)};
}

RankFile read_rank_file(const std::string& path)
{
    std::ifstream in{path};
    if (!in)
        throw FormatError("cannot open rank file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_rank_file(buf.str());
}

std::string format_rank_file(const RankFunction& r, const Signature& sig)
{
    std::ostringstream out;
    out << "atoms:";
    for (const auto& a : sig.atoms())
        out << ' ' << a;
    out << '\n';
    const RankFunction norm = normalize(r);
    for (std::size_t level = 0; level < norm.levels().size(); ++level) {
        out << level << ':';
        for (std::size_t v = 0; v < sig.valuation_count(); ++v)
            if (norm.levels()[level].contains(v))
                out << ' ' << sig.bits(v);
        out << '\n';
    }
    return out.str();
}

} // namespace kstar
