#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "partdeck/partition.hpp"
#include "support/counting.hpp"

using namespace partdeck;

TEST_CASE("partition construction strips zeros and checks order") {
    Partition empty;
    CHECK(empty.empty());
    CHECK(empty.weight() == 0);
    CHECK(empty.length() == 0);

    Partition p{4, 3, 1};
    CHECK(p.parts() == std::vector<std::uint64_t>{4, 3, 1});
    CHECK(p.weight() == 8);
    CHECK(p.length() == 3);

    CHECK(Partition{4, 0, 3, 0} == Partition{4, 3});
    CHECK(Partition{0, 0} == Partition{});
    CHECK_THROWS_AS(Partition({3, 4}), RejectsIncreasing);
    CHECK_THROWS_AS(Partition({2, 0, 3}), RejectsIncreasing);

    SUBCASE("part access is 1-indexed and zero beyond the length") {
        CHECK(p.part(1) == 4);
        CHECK(p.part(3) == 1);
        CHECK(p.part(4) == 0);
        CHECK(p.part(0) == 0);
    }
    SUBCASE("diagram membership") {
        CHECK(p.has_cell(Cell(1, 4)));
        CHECK_FALSE(p.has_cell(Cell(1, 5)));
        CHECK(p.has_cell(Cell(3, 1)));
        CHECK_FALSE(p.has_cell(Cell(4, 1)));
    }
}

TEST_CASE("cells are validated and ordered") {
    CHECK_THROWS_AS(Cell(0, 1), InvalidCell);
    CHECK_THROWS_AS(Cell(1, 0), InvalidCell);
    Cell c(2, 3);
    CHECK(c.row() == 2);
    CHECK(c.col() == 3);
    CHECK(Cell(1, 2) < Cell(2, 1));
    CHECK(Cell(2, 1) == Cell(2, 1));
}

TEST_CASE("normalize accepts signed input and rejects negatives") {
    std::vector<std::int64_t> good{4, 3, 0};
    CHECK(normalize(good) == Partition{4, 3});
    std::vector<std::int64_t> bad{3, -1};
    CHECK_THROWS_AS(normalize(bad), RejectsNegative);
}

TEST_CASE("weight overflow is a checked error") {
    const std::uint64_t half = std::uint64_t{1} << 63;
    CHECK_THROWS_AS(Partition({half, half}), Overflow);
}

TEST_CASE("conjugate transposes the diagram") {
    CHECK(conjugate(Partition{4, 3, 1}) == Partition{3, 2, 2, 1});
    CHECK(conjugate(Partition{1, 1, 1}) == Partition{3});
    CHECK(conjugate(Partition{}) == Partition{});

    SUBCASE("involution and weight preservation, exhaustively") {
        for (const Partition& p : testsupport::partitions_up_to(12)) {
            const Partition q = conjugate(p);
            CHECK(q.weight() == p.weight());
            CHECK(conjugate(q) == p);
        }
    }
    SUBCASE("a too-wide first part refuses to materialize") {
        CHECK_THROWS_AS(conjugate(Partition{(std::uint64_t{1} << 28) + 1}), Overflow);
    }
}

TEST_CASE("join and meet obey the lattice laws") {
    CHECK(join(Partition{4, 1}, Partition{3, 3}) == Partition{4, 3});
    CHECK(meet(Partition{4, 1}, Partition{3, 3}) == Partition{3, 1});
    CHECK(join(Partition{}, Partition{2, 1}) == Partition{2, 1});
    CHECK(meet(Partition{}, Partition{2, 1}) == Partition{});

    const auto all = testsupport::partitions_up_to(12);

    SUBCASE("commutative, idempotent, absorbing on all pairs") {
        for (const Partition& a : all) {
            CHECK(join(a, a) == a);
            CHECK(meet(a, a) == a);
            for (const Partition& b : all) {
                const Partition j = join(a, b);
                const Partition m = meet(a, b);
                CHECK(j == join(b, a));
                CHECK(m == meet(b, a));
                CHECK(meet(a, j) == a);
                CHECK(join(a, m) == a);
            }
        }
    }
    SUBCASE("associative on all small triples") {
        const auto small = testsupport::partitions_up_to(8);
        for (const Partition& a : small)
            for (const Partition& b : small)
                for (const Partition& c : small) {
                    CHECK(join(join(a, b), c) == join(a, join(b, c)));
                    CHECK(meet(meet(a, b), c) == meet(a, meet(b, c)));
                }
    }
}

TEST_CASE("containment, meet, and join agree about order") {
    const auto all = testsupport::partitions_up_to(12);
    for (const Partition& a : all) {
        for (const Partition& b : all) {
            const bool leq = contains(a, b);
            CHECK(leq == (meet(a, b) == a));
            CHECK(leq == (join(a, b) == b));
            CHECK(leq == contains(conjugate(a), conjugate(b)));
            if (leq) {
                CHECK(skew_size(b, a) == b.weight() - a.weight());
            }
        }
    }
    CHECK_THROWS_AS(skew_size(Partition{2, 1}, Partition{3}), NotContained);
}

TEST_CASE("inner corners are exactly the removable cells") {
    CHECK(inner_corners(Partition{4, 3, 1}) ==
          std::vector<Cell>{Cell(1, 4), Cell(2, 3), Cell(3, 1)});
    CHECK(inner_corners(Partition{3, 3}) == std::vector<Cell>{Cell(2, 3)});
    CHECK(inner_corners(Partition{1}) == std::vector<Cell>{Cell(1, 1)});
    CHECK(inner_corners(Partition{}).empty());

    for (const Partition& p : testsupport::partitions_up_to(12)) {
        const auto corners = inner_corners(p);

        std::set<std::uint64_t> distinct(p.parts().begin(), p.parts().end());
        CHECK(corners.size() == distinct.size());

        for (const Cell& corner : corners) {
            const Partition smaller = remove_cell(p, corner);
            CHECK(smaller.weight() + 1 == p.weight());
            CHECK(add_cell(smaller, corner) == p);
        }

        // every diagram cell that is not an inner corner must be refused
        for (std::uint64_t row = 1; row <= p.length(); ++row) {
            for (std::uint64_t col = 1; col <= p.part(row); ++col) {
                const Cell cell(row, col);
                const bool is_corner =
                    std::find(corners.begin(), corners.end(), cell) != corners.end();
                if (!is_corner) CHECK_THROWS_AS(remove_cell(p, cell), NotAnInnerCorner);
            }
        }
    }
}

TEST_CASE("add_cell appends only legal cells") {
    CHECK(add_cell(Partition{3, 1}, Cell(2, 2)) == Partition{3, 2});
    CHECK(add_cell(Partition{3, 1}, Cell(3, 1)) == Partition{3, 1, 1});
    CHECK(add_cell(Partition{3, 1}, Cell(1, 4)) == Partition{4, 1});
    CHECK(add_cell(Partition{}, Cell(1, 1)) == Partition{1});

    CHECK_THROWS_AS(add_cell(Partition{3, 1}, Cell(2, 3)), NotAddable);   // gap in row 2
    CHECK_THROWS_AS(add_cell(Partition{3, 1}, Cell(3, 2)), NotAddable);   // no row 3 yet
    CHECK_THROWS_AS(add_cell(Partition{3, 1}, Cell(5, 1)), NotAddable);   // skips a row
    CHECK_THROWS_AS(add_cell(Partition{3, 3}, Cell(2, 4)), NotAddable);   // exceeds row 1
}

TEST_CASE("canonical order is descending lexicographic") {
    CHECK(canonical_less(Partition{4, 2}, Partition{3, 3}));
    CHECK(canonical_less(Partition{3, 3}, Partition{3, 2, 2}));
    CHECK_FALSE(canonical_less(Partition{3, 3}, Partition{3, 3}));
    CHECK_FALSE(canonical_less(Partition{3, 2, 2}, Partition{3, 3}));
    CHECK(canonical_less(Partition{1}, Partition{}));
}

TEST_CASE("canonical text form") {
    CHECK(to_text(Partition{4, 3, 1}) == "4 3 1");
    CHECK(to_text(Partition{7}) == "7");
    CHECK(to_text(Partition{}) == "-");
}
