#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "partdeck/partition.hpp"

namespace partdeck {

/// The complete set of k-deletions of some partition, kept in canonical
/// order (descending lexicographic), duplicate-free, all of equal weight.
/// k = 0 is allowed: such a deck holds the partition itself.
class DeletionDeck {
public:
    /// Sorts and deduplicates members. Throws EmptyDeck on an empty
    /// collection and MixedWeights when member weights disagree.
    DeletionDeck(std::uint64_t k, std::vector<Partition> members);

    std::uint64_t k() const noexcept { return k_; }
    const std::vector<Partition>& members() const noexcept { return members_; }

    /// Weight m shared by every member.
    std::uint64_t member_weight() const noexcept { return member_weight_; }

    /// Weight n = m + k of the partition the deck came from.
    std::uint64_t target_weight() const;

    friend bool operator==(const DeletionDeck&, const DeletionDeck&) = default;

private:
    std::uint64_t k_;
    std::uint64_t member_weight_;
    std::vector<Partition> members_;
};

/// True iff mu <= lambda and |lambda| - |mu| = k.
bool is_k_deletion(const Partition& mu, const Partition& lambda, std::uint64_t k) noexcept;

/// The complete deck of lambda: every mu <= lambda with |lambda/mu| = k.
/// Throws KTooLarge when k > |lambda|.
DeletionDeck k_deletions(const Partition& lambda, std::uint64_t k);

/// All partitions of n in canonical order. partitions_of(0) = { empty }.
std::vector<Partition> partitions_of(std::uint64_t n);

/// All partitions of weight n containing mu, canonical order.
/// Throws TargetTooSmall when n < |mu|.
std::vector<Partition> superpartitions(const Partition& mu, std::uint64_t n);

/// Deck file body: one canonical partition per line, each newline-terminated.
std::string to_text(const DeletionDeck& deck);

}  // namespace partdeck
