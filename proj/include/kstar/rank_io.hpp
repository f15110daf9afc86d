#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "kstar/rank_function.hpp"
#include "kstar/signature.hpp"

namespace kstar {

/// A rank function together with the signature its file declares.
struct RankFile {
    Signature signature;
    RankFunction rank;
};

/// Text format:
///
///     atoms: p q
///     0: 11
///     1: 01 10
///     2: 00
///
/// One line per level, lowest first, valuations as bit strings in atom
/// order. Blank lines and lines starting with '#' are ignored. Levels must
/// be contiguous from 0 and every valuation must appear exactly once.
RankFile parse_rank_file(std::string_view text);
RankFile read_rank_file(const std::string& path);

/// Writes the normalized form of `r`, valuations ascending within a level.
std::string format_rank_file(const RankFunction& r, const Signature& sig);

} // namespace kstar
