#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "partdeck/deletion.hpp"
#include "partdeck/partition.hpp"

namespace partdeck {

/// Which arm of the case analysis produced the answer.
enum class Branch {
    JoinComplete,          // the deck join already has the target weight
    FewRows,               // join has fewer than k rows; one row absorbs the deficit
    FewCols,               // mirror image, solved on the conjugate
    InteriorIntersection,  // threshold row and column cross inside the diagram
    InnerCorner,           // they cross at an inner corner; one cell is missing
    Disjoint,              // they do not cross; only their meeting point fits
};

const char* to_string(Branch branch) noexcept;

enum class ExtensionAxis { Row, Col };

/// Audit record of a reconstruction: which branch fired and the decision
/// inputs. r is the bottommost row of mu with >= k cells and c the rightmost
/// column with >= k cells, each present only when the branch needed it.
struct CaseTrace {
    Branch branch = Branch::JoinComplete;
    Partition mu;  // the deck join
    std::uint64_t deficit = 0;
    std::optional<std::uint64_t> r;
    std::optional<std::uint64_t> c;
    std::optional<ExtensionAxis> extended;  // InteriorIntersection only
    std::optional<Cell> added;              // InnerCorner and Disjoint only
};

/// Single-line rendering, e.g.
/// "case=InnerCorner mu=4 3 deficit=1 r=2 c=3 added=(2,4)".
std::string to_line(const CaseTrace& trace);

/// Componentwise max over all members; a lower bound for the original
/// partition. Weight above target surfaces later as InconsistentDeck.
Partition deck_join(const DeletionDeck& deck);

struct ThresholdLines {
    std::optional<std::uint64_t> row;  // bottommost row with >= k cells
    std::optional<std::uint64_t> col;  // rightmost column with >= k cells
};

/// Requires k >= 1 (throws Error on k = 0, which no caller passes).
ThresholdLines threshold_lines(const Partition& mu, std::uint64_t k);

/// Cell counts of the diagram split at row k and column k. Cells right of
/// column k and below row k are counted in both outer fields, so the three
/// fields sum to the weight exactly when (k+1, k+1) is outside the diagram.
struct QuadrantProfile {
    std::uint64_t right_of_column = 0;  // col > k
    std::uint64_t inside_box = 0;       // row <= k and col <= k
    std::uint64_t below_row = 0;        // row > k
};

QuadrantProfile quadrant_profile(const Partition& mu, std::uint64_t k) noexcept;

/// Strict: the candidate's complete deck equals the input deck.
/// Subset: every input member is a k-deletion of the candidate.
enum class ValidationMode { Strict, Subset };

bool validate_candidate(const Partition& candidate, const DeletionDeck& deck,
                        ValidationMode mode);

struct Reconstruction {
    Partition lambda;
    CaseTrace trace;
};

/// Recovers the unique partition of weight m + k whose complete k-deletion
/// deck is the input. Requires m + k >= k^2 + 2k (else BoundNotMet; the
/// bound is tight). Throws InconsistentDeck when no candidate survives
/// validation and AmbiguousDeck when more than one does.
Reconstruction reconstruct(const DeletionDeck& deck,
                           ValidationMode mode = ValidationMode::Strict);

}  // namespace partdeck
