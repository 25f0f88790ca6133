#include "partdeck/reconstruct.hpp"

#include <algorithm>
#include <cassert>
#include <span>
#include <utility>
#include <vector>

#include "partdeck/checked.hpp"
#include "partdeck/enumerate.hpp"

namespace partdeck {

namespace {

std::uint64_t reconstruction_bound(std::uint64_t k) {
    return checked_add(checked_mul(k, k), checked_mul(2, k));
}

// Appends `amount` cells to row `row`, or nothing if the result would not
// be a partition.
std::optional<Partition> try_extend_row(const Partition& mu, std::uint64_t row,
                                        std::uint64_t amount) {
    if (row == 0 || row > mu.length()) return std::nullopt;
    auto parts = mu.parts();
    const std::uint64_t grown = checked_add(parts[row - 1], amount);
    if (row > 1 && parts[row - 2] < grown) return std::nullopt;
    parts[row - 1] = grown;
    return Partition(std::move(parts));
}

std::optional<Partition> try_extend_column(const Partition& mu, std::uint64_t col,
                                           std::uint64_t amount) {
    auto grown = try_extend_row(conjugate(mu), col, amount);
    if (!grown) return std::nullopt;
    return conjugate(*grown);
}

// Non-throwing add_cell: nullopt when the cell is not an append position.
std::optional<Partition> try_add_cell(const Partition& mu, std::uint64_t row,
                                      std::uint64_t col) {
    if (row == 0 || col == 0 || row > mu.length() + 1) return std::nullopt;
    if (col != checked_add(mu.part(row), 1)) return std::nullopt;
    if (row > 1 && mu.part(row - 1) < col) return std::nullopt;
    auto parts = mu.parts();
    if (row == mu.length() + 1)
        parts.push_back(1);
    else
        parts[row - 1] += 1;
    return Partition(std::move(parts));
}

}  // namespace

const char* to_string(Branch branch) noexcept {
    switch (branch) {
        case Branch::JoinComplete: return "JoinComplete";
        case Branch::FewRows: return "FewRows";
        case Branch::FewCols: return "FewCols";
        case Branch::InteriorIntersection: return "InteriorIntersection";
        case Branch::InnerCorner: return "InnerCorner";
        case Branch::Disjoint: return "Disjoint";
    }
    return "?";
}

std::string to_line(const CaseTrace& trace) {
    std::string out = "case=";
    out += to_string(trace.branch);
    out += " mu=";
    out += to_text(trace.mu);
    out += " deficit=" + std::to_string(trace.deficit);
    if (trace.r) out += " r=" + std::to_string(*trace.r);
    if (trace.c) out += " c=" + std::to_string(*trace.c);
    if (trace.extended)
        out += std::string(" extended=") +
               (*trace.extended == ExtensionAxis::Row ? "row" : "col");
    if (trace.added)
        out += " added=(" + std::to_string(trace.added->row()) + "," +
               std::to_string(trace.added->col()) + ")";
    return out;
}

Partition deck_join(const DeletionDeck& deck) {
    Partition acc = deck.members().front();
    for (std::size_t i = 1; i < deck.members().size(); ++i)
        acc = join(acc, deck.members()[i]);
    return acc;
}

ThresholdLines threshold_lines(const Partition& mu, std::uint64_t k) {
    if (k == 0) throw Error("threshold lines are defined for k >= 1");
    ThresholdLines lines;
    // Parts are nonincreasing, so rows with >= k cells form a prefix.
    std::uint64_t rows = 0;
    while (rows < mu.length() && mu.parts()[rows] >= k) ++rows;
    if (rows > 0) lines.row = rows;
    // Column j has >= k cells iff the k-th row reaches it.
    if (mu.length() >= k) lines.col = mu.part(k);
    return lines;
}

QuadrantProfile quadrant_profile(const Partition& mu, std::uint64_t k) noexcept {
    QuadrantProfile q;
    const auto& parts = mu.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] > k) q.right_of_column += parts[i] - k;
        if (i < k) q.inside_box += std::min(parts[i], k);
        if (i >= k) q.below_row += parts[i];
    }
    return q;
}

bool validate_candidate(const Partition& candidate, const DeletionDeck& deck,
                        ValidationMode mode) {
    const std::uint64_t k = deck.k();
    if (mode == ValidationMode::Subset) {
        for (const auto& m : deck.members())
            if (!is_k_deletion(m, candidate, k)) return false;
        return true;
    }
    // Strict: enumerate the candidate's deck in canonical order and match it
    // member for member against the input, stopping at the first mismatch.
    if (candidate.weight() != deck.target_weight() || k > candidate.weight())
        return false;
    const auto& members = deck.members();
    std::size_t idx = 0;
    bool matched = true;
    for_each_k_deletion(candidate, k, [&](std::span<const std::uint64_t> parts) {
        if (idx >= members.size() ||
            !std::ranges::equal(parts, members[idx].parts())) {
            matched = false;
            return false;
        }
        ++idx;
        return true;
    });
    return matched && idx == members.size();
}

Reconstruction reconstruct(const DeletionDeck& deck, ValidationMode mode) {
    const std::uint64_t k = deck.k();
    const std::uint64_t n = deck.target_weight();

    if (k == 0) {
        // A 0-deletion deck is the partition itself.
        if (deck.members().size() != 1)
            throw InconsistentDeck("a 0-deletion deck must have exactly one member");
        CaseTrace trace;
        trace.mu = deck.members().front();
        return {deck.members().front(), trace};
    }
    if (n < reconstruction_bound(k))
        throw BoundNotMet("weight " + std::to_string(n) + " is below the bound " +
                          std::to_string(reconstruction_bound(k)) + " for k=" +
                          std::to_string(k));

    const Partition mu = deck_join(deck);
    if (mu.weight() > n)
        throw InconsistentDeck("deck join outweighs the target (" +
                               std::to_string(mu.weight()) + " > " +
                               std::to_string(n) + ")");
    const std::uint64_t deficit = n - mu.weight();

    // Candidates plus the trace that would justify each; validation picks
    // the survivor.
    std::vector<std::pair<Partition, CaseTrace>> candidates;
    CaseTrace trace;
    trace.mu = mu;
    trace.deficit = deficit;

    if (deficit == 0) {
        trace.branch = Branch::JoinComplete;
        candidates.emplace_back(mu, trace);
    } else if (mu.length() < k) {
        // Fewer than k rows: every missing cell sits in the bottommost row
        // that still holds k cells.
        trace.branch = Branch::FewRows;
        const auto lines = threshold_lines(mu, k);
        if (!lines.row)
            throw InconsistentDeck("join has fewer than k rows but none with k cells");
        trace.r = lines.row;
        if (auto cand = try_extend_row(mu, *lines.row, deficit))
            candidates.emplace_back(std::move(*cand), trace);
    } else if (mu.part(1) < k) {
        // Fewer than k columns: solve the conjugate problem (depth one, the
        // conjugated join has fewer than k rows) and transpose back.
        std::vector<Partition> flipped;
        flipped.reserve(deck.members().size());
        for (const auto& m : deck.members()) flipped.push_back(conjugate(m));
        const Reconstruction inner = reconstruct(DeletionDeck(k, std::move(flipped)), mode);
        assert(inner.trace.branch == Branch::FewRows);
        trace.branch = Branch::FewCols;
        trace.c = inner.trace.r;
        return {conjugate(inner.lambda), trace};
    } else {
        const auto lines = threshold_lines(mu, k);
        assert(lines.row && lines.col);  // length >= k and part(1) >= k
        const std::uint64_t r = *lines.row;
        const std::uint64_t c = *lines.col;
        trace.r = r;
        trace.c = c;

        if (mu.part(r) >= c) {
            // Threshold row and column meet at (r, c).
            const bool corner = mu.part(r) == c && (r == mu.length() || mu.part(r + 1) < c);
            if (!corner) {
                // Case 1, interior crossing: the deck fixes both quadrants
                // beside the one outer region that holds more than k cells,
                // so the deficit extends the threshold line on that side.
                trace.branch = Branch::InteriorIntersection;
                const auto quads = quadrant_profile(mu, k);
                const bool wide = quads.right_of_column > k;
                const bool tall = quads.below_row > k;
                if (wide && tall)
                    throw InconsistentDeck(
                        "both outer quadrants exceed k cells; a complete deck "
                        "would have no cells missing");
                if (!wide && !tall)
                    throw InconsistentDeck(
                        "neither outer quadrant exceeds k cells, leaving the "
                        "missing cells nowhere to go");
                trace.extended = wide ? ExtensionAxis::Row : ExtensionAxis::Col;
                auto cand = wide ? try_extend_row(mu, r, deficit)
                                 : try_extend_column(mu, c, deficit);
                if (cand) candidates.emplace_back(std::move(*cand), trace);
            } else {
                // Case 2, crossing at an inner corner: exactly one cell is
                // missing, just right of or just below the corner.
                trace.branch = Branch::InnerCorner;
                if (deficit != 1)
                    throw InconsistentDeck(
                        "an inner-corner crossing admits exactly one missing "
                        "cell, but " + std::to_string(deficit) + " are missing");
                for (const auto& [ar, ac] :
                     {std::pair{r, c + 1}, std::pair{r + 1, c}}) {
                    if (auto cand = try_add_cell(mu, ar, ac)) {
                        CaseTrace t = trace;
                        t.added = Cell(ar, ac);
                        candidates.emplace_back(std::move(*cand), t);
                    }
                }
            }
        } else {
            // Case 3, no crossing: unless row r stops right before column c
            // and column c right above row r, the join is already forced.
            trace.branch = Branch::Disjoint;
            const std::uint64_t row_end = mu.part(r);  // rightmost column of row r
            std::uint64_t col_end = 0;                 // bottommost row of column c
            while (col_end < mu.length() && mu.parts()[col_end] >= c) ++col_end;
            if (row_end + 1 != c || col_end + 1 != r)
                throw InconsistentDeck(
                    "the deck forces its join, yet " + std::to_string(deficit) +
                    " cells are missing");
            if (deficit != 1)
                throw InconsistentDeck(
                    "only the corner cell between the threshold lines can be "
                    "added, but " + std::to_string(deficit) + " cells are missing");
            trace.added = Cell(r, c);
            if (auto cand = try_add_cell(mu, r, c))
                candidates.emplace_back(std::move(*cand), trace);
        }
    }

    std::vector<std::pair<Partition, CaseTrace>> survivors;
    for (auto& [cand, t] : candidates)
        if (validate_candidate(cand, deck, mode))
            survivors.emplace_back(std::move(cand), t);
    if (survivors.empty())
        throw InconsistentDeck("no candidate reproduces the deck");
    if (survivors.size() > 1)
        throw AmbiguousDeck("multiple candidates reproduce the deck");
    return {std::move(survivors.front().first), survivors.front().second};
}

}  // namespace partdeck
