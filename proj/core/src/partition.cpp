#include "partdeck/partition.hpp"

#include <algorithm>

#include "partdeck/checked.hpp"

namespace partdeck {

namespace {

// Materialization limit for conjugate(): the transpose has first-part many
// rows, and a parts vector beyond this is not a desk-scale computation.
constexpr std::uint64_t kMaxConjugateLength = std::uint64_t{1} << 28;

}  // namespace

Cell::Cell(std::uint64_t row, std::uint64_t col) : row_(row), col_(col) {
    if (row == 0 || col == 0)
        throw InvalidCell("cells are 1-indexed: row and column must be >= 1");
}

Partition::Partition(std::vector<std::uint64_t> parts) {
    parts_.reserve(parts.size());
    for (std::uint64_t p : parts) {
        if (p == 0) continue;
        if (!parts_.empty() && parts_.back() < p)
            throw RejectsIncreasing("parts must be nonincreasing");
        parts_.push_back(p);
        weight_ = checked_add(weight_, p);
    }
}

Partition::Partition(std::initializer_list<std::uint64_t> parts)
    : Partition(std::vector<std::uint64_t>(parts)) {}

Partition normalize(std::span<const std::int64_t> raw) {
    std::vector<std::uint64_t> parts;
    parts.reserve(raw.size());
    for (std::int64_t v : raw) {
        if (v < 0) throw RejectsNegative("parts must be nonnegative");
        parts.push_back(static_cast<std::uint64_t>(v));
    }
    return Partition(std::move(parts));
}

bool contains(const Partition& mu, const Partition& lambda) noexcept {
    if (mu.length() > lambda.length()) return false;
    const auto& a = mu.parts();
    const auto& b = lambda.parts();
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

std::uint64_t skew_size(const Partition& lambda, const Partition& mu) {
    if (!contains(mu, lambda))
        throw NotContained("skew size needs mu <= lambda");
    return lambda.weight() - mu.weight();
}

Partition join(const Partition& a, const Partition& b) {
    const auto& x = a.parts();
    const auto& y = b.parts();
    std::vector<std::uint64_t> out(std::max(x.size(), y.size()));
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = std::max(i < x.size() ? x[i] : 0, i < y.size() ? y[i] : 0);
    return Partition(std::move(out));
}

Partition meet(const Partition& a, const Partition& b) {
    const auto& x = a.parts();
    const auto& y = b.parts();
    std::vector<std::uint64_t> out(std::min(x.size(), y.size()));
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = std::min(x[i], y[i]);
    return Partition(std::move(out));
}

Partition conjugate(const Partition& p) {
    if (p.empty()) return {};
    const std::uint64_t width = p.parts().front();
    if (width > kMaxConjugateLength)
        throw Overflow("conjugate too wide to materialize");
    std::vector<std::uint64_t> out(static_cast<std::size_t>(width));
    // out[j-1] = number of parts >= j; columns shrink as j grows, so walk
    // j downward while extending the row count.
    std::uint64_t rows = 0;
    for (std::uint64_t j = width; j >= 1; --j) {
        while (rows < p.length() && p.parts()[static_cast<std::size_t>(rows)] >= j)
            ++rows;
        out[static_cast<std::size_t>(j - 1)] = rows;
    }
    return Partition(std::move(out));
}

std::vector<Cell> inner_corners(const Partition& p) {
    std::vector<Cell> corners;
    const auto& parts = p.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const bool last_of_its_column =
            i + 1 == parts.size() || parts[i + 1] < parts[i];
        if (last_of_its_column) corners.emplace_back(i + 1, parts[i]);
    }
    return corners;
}

Partition remove_cell(const Partition& p, Cell cell) {
    const std::uint64_t row = cell.row();
    const bool is_corner =
        row <= p.length() && cell.col() == p.part(row) &&
        (row == p.length() || p.part(row + 1) < p.part(row));
    if (!is_corner)
        throw NotAnInnerCorner("cell (" + std::to_string(row) + "," +
                               std::to_string(cell.col()) + ") is not an inner corner");
    auto parts = p.parts();
    parts[static_cast<std::size_t>(row - 1)] -= 1;
    return Partition(std::move(parts));
}

Partition add_cell(const Partition& p, Cell cell) {
    const std::uint64_t row = cell.row();
    const std::uint64_t col = cell.col();
    const bool addable =
        row <= p.length() + 1 && col == checked_add(p.part(row), 1) &&
        (row == 1 || p.part(row - 1) >= col);
    if (!addable)
        throw NotAddable("cell (" + std::to_string(row) + "," +
                         std::to_string(col) + ") cannot be appended");
    auto parts = p.parts();
    if (row == p.length() + 1)
        parts.push_back(1);
    else
        parts[static_cast<std::size_t>(row - 1)] += 1;
    return Partition(std::move(parts));
}

bool canonical_less(const Partition& a, const Partition& b) noexcept {
    return a.parts() > b.parts();
}

std::string to_text(const Partition& p) {
    if (p.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < p.parts().size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(p.parts()[i]);
    }
    return out;
}

}  // namespace partdeck
