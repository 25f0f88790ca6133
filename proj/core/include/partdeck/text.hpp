#pragma once

#include <iosfwd>
#include <string_view>

#include "partdeck/deletion.hpp"
#include "partdeck/partition.hpp"

namespace partdeck {

/// Parses "4 3 1" (whitespace-separated nonnegative integers) or "-" (the
/// empty partition). Throws ParseError on other tokens and propagates
/// RejectsIncreasing / RejectsNegative from normalization.
Partition parse_partition(std::string_view text);

/// Reads a deck body: one partition per line; blank lines and lines starting
/// with '#' are ignored; k comes from the caller. Duplicate lines are
/// dropped with a warning on `diagnostics` when given. Throws EmptyDeck /
/// MixedWeights via deck construction.
DeletionDeck parse_deck(std::istream& in, std::uint64_t k,
                        std::ostream* diagnostics = nullptr);

/// One row of '#' per part; the empty partition renders as "(empty)".
/// No trailing whitespace and no trailing newline.
std::string render_ferrers(const Partition& p);

}  // namespace partdeck
