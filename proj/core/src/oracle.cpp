#include "partdeck/oracle.hpp"

#include <map>
#include <span>

#include "partdeck/checked.hpp"
#include "partdeck/enumerate.hpp"
#include "partdeck/reconstruct.hpp"

namespace partdeck {

ConsistencyReport consistent_partitions(const DeletionDeck& deck, MatchMode mode) {
    ConsistencyReport report;
    report.n = deck.target_weight();
    report.k = deck.k();
    report.mode = mode;

    const Partition base = deck_join(deck);
    if (base.weight() > report.n) return report;  // nothing can contain the join

    const ValidationMode validation = mode == MatchMode::DeckEquals
                                          ? ValidationMode::Strict
                                          : ValidationMode::Subset;
    for_each_superpartition(base, report.n, [&](std::span<const std::uint64_t> parts) {
        Partition candidate(std::vector<std::uint64_t>(parts.begin(), parts.end()));
        if (validate_candidate(candidate, deck, validation))
            report.matches.push_back(std::move(candidate));
        return true;
    });
    return report;
}

NegativeExample negative_example(std::uint64_t k) {
    if (k == 0) throw Error("the tight example family starts at k = 1");
    checked_add(checked_mul(k, k), checked_mul(2, k));  // keep weights in range
    NegativeExample ex;
    std::vector<std::uint64_t> parts;

    parts.assign(k, k + 1);
    parts.push_back(k - 1);  // a zero part is stripped when k = 1
    ex.mu = Partition(std::move(parts));

    parts.assign(k - 1, k + 1);
    parts.push_back(k);
    parts.push_back(k);
    ex.lambda = Partition(std::move(parts));

    parts.assign(k - 1, k + 1);
    parts.push_back(k);
    parts.push_back(k - 1);
    ex.meet = Partition(std::move(parts));
    return ex;
}

std::string to_text(const SweepReport& report) {
    std::string out = "n=" + std::to_string(report.n) +
                      " k=" + std::to_string(report.k) +
                      " total=" + std::to_string(report.total) +
                      " failures=" + std::to_string(report.failures.size()) +
                      " ambiguous=" + std::to_string(report.ambiguous_pairs.size()) +
                      "\n";
    for (const auto& f : report.failures)
        out += "failure: " + to_text(f.lambda) + " | " + f.outcome + "\n";
    for (const auto& [a, b] : report.ambiguous_pairs)
        out += "ambiguous: " + to_text(a) + " | " + to_text(b) + "\n";
    return out;
}

SweepReport exhaustive_check(std::uint64_t n, std::uint64_t k) {
    if (k == 0) throw Error("sweeps are defined for k >= 1");
    if (k > n)
        throw KTooLarge("no partition of " + std::to_string(n) +
                        " has a " + std::to_string(k) + "-deletion deck");
    SweepReport report;
    report.n = n;
    report.k = k;
    const std::uint64_t bound = checked_add(checked_mul(k, k), checked_mul(2, k));

    // Group partitions by canonical deck serialization; groups keep the
    // canonical enumeration order, so the output is deterministic.
    std::vector<std::vector<Partition>> groups;
    std::map<std::string, std::size_t> group_index;

    for (const Partition& lambda : partitions_of(n)) {
        ++report.total;
        const DeletionDeck deck = k_deletions(lambda, k);

        const auto [it, fresh] = group_index.try_emplace(to_text(deck), groups.size());
        if (fresh) groups.emplace_back();
        groups[it->second].push_back(lambda);

        try {
            const Reconstruction got = reconstruct(deck);
            if (got.lambda != lambda)
                report.failures.push_back({lambda, "returned " + to_text(got.lambda)});
        } catch (const BoundNotMet&) {
            // Expected below the bound; a disagreement only at or above it.
            if (n >= bound) report.failures.push_back({lambda, "BoundNotMet"});
        } catch (const InconsistentDeck&) {
            report.failures.push_back({lambda, "InconsistentDeck"});
        } catch (const AmbiguousDeck&) {
            report.failures.push_back({lambda, "AmbiguousDeck"});
        }
    }

    for (const auto& group : groups)
        for (std::size_t i = 0; i < group.size(); ++i)
            for (std::size_t j = i + 1; j < group.size(); ++j)
                report.ambiguous_pairs.emplace_back(group[i], group[j]);
    return report;
}

}  // namespace partdeck
