#include "partdeck/deletion.hpp"

#include <algorithm>

#include "partdeck/checked.hpp"
#include "partdeck/enumerate.hpp"

namespace partdeck {

DeletionDeck::DeletionDeck(std::uint64_t k, std::vector<Partition> members)
    : k_(k), member_weight_(0), members_(std::move(members)) {
    if (members_.empty()) throw EmptyDeck("a deck needs at least one member");
    member_weight_ = members_.front().weight();
    for (const auto& m : members_)
        if (m.weight() != member_weight_)
            throw MixedWeights("deck members must share one weight (" +
                               std::to_string(member_weight_) + " vs " +
                               std::to_string(m.weight()) + ")");
    std::sort(members_.begin(), members_.end(), canonical_less);
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

std::uint64_t DeletionDeck::target_weight() const {
    return checked_add(member_weight_, k_);
}

bool is_k_deletion(const Partition& mu, const Partition& lambda, std::uint64_t k) noexcept {
    return lambda.weight() >= mu.weight() &&
           lambda.weight() - mu.weight() == k && contains(mu, lambda);
}

DeletionDeck k_deletions(const Partition& lambda, std::uint64_t k) {
    std::vector<Partition> members;
    for_each_k_deletion(lambda, k, [&](std::span<const std::uint64_t> parts) {
        members.emplace_back(std::vector<std::uint64_t>(parts.begin(), parts.end()));
        return true;
    });
    return DeletionDeck(k, std::move(members));
}

std::vector<Partition> partitions_of(std::uint64_t n) {
    return superpartitions(Partition{}, n);
}

std::vector<Partition> superpartitions(const Partition& mu, std::uint64_t n) {
    std::vector<Partition> out;
    for_each_superpartition(mu, n, [&](std::span<const std::uint64_t> parts) {
        out.emplace_back(std::vector<std::uint64_t>(parts.begin(), parts.end()));
        return true;
    });
    return out;
}

std::string to_text(const DeletionDeck& deck) {
    std::string out;
    for (const auto& m : deck.members()) {
        out += to_text(m);
        out += '\n';
    }
    return out;
}

}  // namespace partdeck
