#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "partdeck/errors.hpp"
#include "partdeck/partition.hpp"

// Allocation-free enumeration kernels.
//
// Each kernel walks a search tree of nonincreasing positive sequences,
// choosing parts row by row from large to small, so results arrive in the
// canonical order (descending lexicographic) with no post-sorting. The
// visitor receives the current parts as a span valid only during the call
// and returns bool: false stops the whole enumeration early. Kernels return
// false iff a visitor stopped them.

namespace partdeck {

/// All partitions mu <= lambda with |lambda| - |mu| = k.
/// Throws KTooLarge when k exceeds |lambda|.
template <class Visitor>
bool for_each_k_deletion(const Partition& lambda, std::uint64_t k, Visitor&& visit) {
    if (k > lambda.weight())
        throw KTooLarge("cannot delete " + std::to_string(k) + " cells from weight " +
                        std::to_string(lambda.weight()));
    const auto& bound = lambda.parts();
    std::vector<std::uint64_t> stack;
    stack.reserve(bound.size());

    auto rec = [&](auto&& self, std::size_t row, std::uint64_t remaining) -> bool {
        if (remaining == 0)
            return visit(std::span<const std::uint64_t>(stack));
        if (row >= bound.size()) return true;  // dead branch
        const std::uint64_t cap = row == 0 ? bound[0] : std::min(stack.back(), bound[row]);
        for (std::uint64_t v = std::min(cap, remaining); v >= 1; --v) {
            // Largest weight still reachable below this row with parts <= v.
            std::uint64_t tail = 0;
            for (std::size_t j = row + 1; j < bound.size() && tail < remaining; ++j)
                tail += std::min(v, bound[j]);
            if (v + tail < remaining) break;  // smaller v can only be worse
            stack.push_back(v);
            const bool keep_going = self(self, row + 1, remaining - v);
            stack.pop_back();
            if (!keep_going) return false;
        }
        return true;
    };
    return rec(rec, 0, lambda.weight() - k);
}

/// All partitions lambda >= mu with |lambda| = n.
/// Throws TargetTooSmall when n < |mu|.
template <class Visitor>
bool for_each_superpartition(const Partition& mu, std::uint64_t n, Visitor&& visit) {
    if (n < mu.weight())
        throw TargetTooSmall("target weight " + std::to_string(n) +
                             " is below the base weight " + std::to_string(mu.weight()));
    const auto& floor = mu.parts();
    // suffix[i] = sum of floor[i..], the weight still owed to mu below row i.
    std::vector<std::uint64_t> suffix(floor.size() + 1, 0);
    for (std::size_t i = floor.size(); i > 0; --i)
        suffix[i - 1] = suffix[i] + floor[i - 1];
    std::vector<std::uint64_t> stack;

    auto rec = [&](auto&& self, std::size_t row, std::uint64_t remaining) -> bool {
        if (remaining == 0)
            return visit(std::span<const std::uint64_t>(stack));
        const std::uint64_t lo =
            std::max<std::uint64_t>(row < floor.size() ? floor[row] : 0, 1);
        const std::uint64_t owed = row + 1 < suffix.size() ? suffix[row + 1] : 0;
        if (owed >= remaining) return true;  // no room for a positive part here
        const std::uint64_t cap = row == 0 ? remaining : stack.back();
        const std::uint64_t hi = std::min(cap, remaining - owed);
        for (std::uint64_t v = hi; v >= lo; --v) {
            stack.push_back(v);
            const bool keep_going = self(self, row + 1, remaining - v);
            stack.pop_back();
            if (!keep_going) return false;
        }
        return true;
    };
    return rec(rec, 0, n);
}

/// All partitions of n, descending lexicographic: (n) first, all-ones last.
template <class Visitor>
bool for_each_partition(std::uint64_t n, Visitor&& visit) {
    return for_each_superpartition(Partition{}, n, std::forward<Visitor>(visit));
}

}  // namespace partdeck
