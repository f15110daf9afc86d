#include "kstar/signature.hpp"

#include <algorithm>
#include <set>

#include "kstar/error.hpp"

namespace kstar {

namespace {

bool valid_atom_name(const std::string& name)
{
    if (name.empty() || name[0] < 'a' || name[0] > 'z')
        return false;
    return std::all_of(name.begin() + 1, name.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    });
}

} // namespace

Signature::Signature(std::vector<std::string> atoms) : atoms_(std::move(atoms))
{
    if (atoms_.empty())
        throw FormatError("signature needs at least one atom");
    if (atoms_.size() > max_atoms)
        throw DomainTooLargeError("signature has " + std::to_string(atoms_.size()) + " atoms; at most "
                                  + std::to_string(max_atoms) + " are supported");
    std::set<std::string> seen;
    for (const auto& a : atoms_) {
        if (!valid_atom_name(a))
            throw FormatError("invalid atom name '" + a + "'");
        if (a == "true" || a == "false" || a == "bot")
            throw FormatError("atom name '" + a + "' is reserved");
        if (!seen.insert(a).second)
            throw FormatError("duplicate atom '" + a + "'");
    }
}

Signature Signature::with_default_names(std::size_t n)
{
    static const char* names[] = {"p", "q", "r", "s", "t", "u"};
    if (n == 0 || n > max_atoms)
        throw DomainTooLargeError("atom count must be between 1 and " + std::to_string(max_atoms));
    return Signature{std::vector<std::string>(names, names + n)};
}

std::optional<std::size_t> Signature::index_of(std::string_view name) const
{
    auto it = std::find(atoms_.begin(), atoms_.end(), name);
    if (it == atoms_.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - atoms_.begin());
}

std::uint64_t Signature::propset_count() const noexcept
{
    const std::size_t width = valuation_count();
    return width >= 64 ? 0 : std::uint64_t{1} << width;
}

std::string Signature::bits(std::size_t valuation) const
{
    std::string out(atoms_.size(), '0');
    for (std::size_t i = 0; i < atoms_.size(); ++i)
        if (holds(valuation, i))
            out[i] = '1';
    return out;
}

std::size_t Signature::parse_bits(std::string_view text) const
{
    if (text.size() != atoms_.size())
        throw FormatError("valuation '" + std::string(text) + "' must have " + std::to_string(atoms_.size())
                          + " bits");
    std::size_t v = 0;
    for (char c : text) {
        if (c != '0' && c != '1')
            throw FormatError("valuation '" + std::string(text) + "' is not a bit string");
        v = (v << 1) | static_cast<std::size_t>(c - '0');
    }
    return v;
}

} // namespace kstar
