#include "kstar/propset.hpp"

#include <cctype>

#include "kstar/error.hpp"

namespace kstar {

std::string to_bit_list(const PropSet& s, const Signature& sig)
{
    std::string out = "{";
    bool first = true;
    for (std::size_t v = 0; v < sig.valuation_count(); ++v) {
        if (!s.contains(v))
            continue;
        if (!first)
            out += ',';
        out += sig.bits(v);
        first = false;
    }
    out += '}';
    return out;
}

PropSet parse_bit_list(std::string_view text, const Signature& sig)
{
    PropSet::word_type bits = 0;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (c == '{' || c == '}' || c == ',' || std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < text.size() && (text[j] == '0' || text[j] == '1'))
            ++j;
        if (j == i)
            throw FormatError("unexpected character in valuation list: '" + std::string(1, c) + "'");
        bits |= PropSet::word_type{1} << sig.parse_bits(text.substr(i, j - i));
        i = j;
    }
    return {sig.size(), bits};
}

} // namespace kstar
