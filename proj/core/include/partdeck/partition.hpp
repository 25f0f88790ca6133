#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "partdeck/errors.hpp"

namespace partdeck {

/// 1-indexed box coordinate in a Ferrers diagram. Row 1 is the top row,
/// column 1 the leftmost column; both indices are validated to be >= 1
/// at construction.
class Cell {
public:
    Cell(std::uint64_t row, std::uint64_t col);

    std::uint64_t row() const noexcept { return row_; }
    std::uint64_t col() const noexcept { return col_; }

    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;

private:
    std::uint64_t row_;
    std::uint64_t col_;
};

/// An integer partition: a nonincreasing sequence of positive 64-bit parts.
/// Zero-length is the empty partition. Immutable after construction; the
/// weight (sum of parts) is computed once with overflow checking.
class Partition {
public:
    Partition() = default;

    /// Accepts trailing or interspersed zeros and strips them; throws
    /// RejectsIncreasing if the positive entries ever increase, Overflow if
    /// the weight exceeds 64 bits.
    explicit Partition(std::vector<std::uint64_t> parts);
    Partition(std::initializer_list<std::uint64_t> parts);

    const std::vector<std::uint64_t>& parts() const noexcept { return parts_; }

    /// 1-indexed part access; rows beyond the length read as 0.
    std::uint64_t part(std::uint64_t index) const noexcept {
        return index >= 1 && index <= parts_.size() ? parts_[index - 1] : 0;
    }

    std::uint64_t weight() const noexcept { return weight_; }
    std::uint64_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }

    /// Diagram membership: (row, col) lies in the diagram iff col <= part(row).
    bool has_cell(Cell cell) const noexcept { return cell.col() <= part(cell.row()); }

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<std::uint64_t> parts_;
    std::uint64_t weight_ = 0;
};

/// Builds a partition from possibly-signed raw input: rejects negatives,
/// strips zeros, verifies nonincreasing order.
Partition normalize(std::span<const std::int64_t> raw);

/// mu <= lambda in containment order: every row of mu fits inside lambda.
bool contains(const Partition& mu, const Partition& lambda) noexcept;

/// |lambda / mu|, the number of cells of lambda outside mu.
/// Throws NotContained unless mu <= lambda.
std::uint64_t skew_size(const Partition& lambda, const Partition& mu);

/// Componentwise max: the least partition containing both arguments.
Partition join(const Partition& a, const Partition& b);

/// Componentwise min: the greatest partition contained in both arguments.
Partition meet(const Partition& a, const Partition& b);

/// Diagram transpose. Throws Overflow when the first part is too large for
/// the conjugate's parts vector to be materialized.
Partition conjugate(const Partition& p);

/// Cells whose removal leaves a partition diagram, top row first.
std::vector<Cell> inner_corners(const Partition& p);

/// Removes one cell; the cell must be an inner corner (NotAnInnerCorner).
Partition remove_cell(const Partition& p, Cell cell);

/// Appends one cell at the end of a row (possibly a new bottom row); the
/// result must still be a partition (NotAddable).
Partition add_cell(const Partition& p, Cell cell);

/// Canonical ordering used for decks and enumeration output: descending
/// lexicographic on the parts sequences. Returns true when a sorts before b.
bool canonical_less(const Partition& a, const Partition& b) noexcept;

/// Canonical text form: parts separated by single spaces ("4 3 1");
/// the empty partition renders as "-".
std::string to_text(const Partition& p);

}  // namespace partdeck
