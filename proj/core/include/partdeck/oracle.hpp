#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "partdeck/deletion.hpp"
#include "partdeck/partition.hpp"

namespace partdeck {

/// DeckEquals: the candidate's complete deck is exactly the input.
/// DeckContains: every input member is a k-deletion of the candidate.
enum class MatchMode { DeckEquals, DeckContains };

/// Every partition of weight n = m + k compatible with a deck. Matches are
/// in canonical order; empty is a valid answer (inconsistent deck).
struct ConsistencyReport {
    std::uint64_t n = 0;
    std::uint64_t k = 0;
    MatchMode mode = MatchMode::DeckEquals;
    std::vector<Partition> matches;
};

/// Brute force over all superpartitions of the deck join. The independent
/// route against which reconstruction is checked.
ConsistencyReport consistent_partitions(const DeletionDeck& deck, MatchMode mode);

/// The tight family witnessing that the reconstruction bound k^2 + 2k cannot
/// be lowered: two distinct partitions of weight k^2 + 2k - 1 sharing one
/// complete k-deletion deck, together with their meet (every shared deck
/// member is a (k-1)-deletion of it). Requires k >= 1.
struct NegativeExample {
    Partition mu;      // (k+1) repeated k times, then k-1
    Partition lambda;  // (k+1) repeated k-1 times, then k, k
    Partition meet;
};

NegativeExample negative_example(std::uint64_t k);

struct SweepFailure {
    Partition lambda;
    std::string outcome;
};

/// Result of sweeping every partition of n: reconstruct must return each one
/// from its own deck ("failures" records disagreements), and distinct
/// partitions must not share decks ("ambiguous_pairs" records collisions).
struct SweepReport {
    std::uint64_t n = 0;
    std::uint64_t k = 0;
    std::uint64_t total = 0;
    std::vector<SweepFailure> failures;
    std::vector<std::pair<Partition, Partition>> ambiguous_pairs;
};

/// Header line "n=.. k=.. total=.. failures=.. ambiguous=..", then one line
/// per failure ("failure: <p> | <outcome>") and pair ("ambiguous: <a> | <b>").
std::string to_text(const SweepReport& report);

/// Runs reconstruct over the deck of every partition of n and groups decks
/// to detect ambiguity. Below the reconstruction bound a BoundNotMet outcome
/// is the documented contract and is not counted as a failure. Requires
/// k >= 1 and k <= n (KTooLarge otherwise).
SweepReport exhaustive_check(std::uint64_t n, std::uint64_t k);

}  // namespace partdeck
