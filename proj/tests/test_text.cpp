#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "partdeck/partition.hpp"
#include "partdeck/text.hpp"
#include "support/counting.hpp"

using namespace partdeck;

TEST_CASE("partition text round trips") {
    CHECK(parse_partition("4 3 1") == Partition{4, 3, 1});
    CHECK(parse_partition("-") == Partition{});
    CHECK(parse_partition("  4\t3  1 ") == Partition{4, 3, 1});
    CHECK(parse_partition("0") == Partition{});
    CHECK(parse_partition("7") == Partition{7});

    for (const Partition& p : testsupport::partitions_up_to(12))
        CHECK(parse_partition(to_text(p)) == p);
}

TEST_CASE("partition parser rejects what it cannot mean") {
    CHECK_THROWS_AS(parse_partition(""), ParseError);
    CHECK_THROWS_AS(parse_partition("   "), ParseError);
    CHECK_THROWS_AS(parse_partition("4 x"), ParseError);
    CHECK_THROWS_AS(parse_partition("4 3one"), ParseError);
    CHECK_THROWS_AS(parse_partition("99999999999999999999"), ParseError);
    CHECK_THROWS_AS(parse_partition("4 -1"), RejectsNegative);
    CHECK_THROWS_AS(parse_partition("3 4"), RejectsIncreasing);
}

TEST_CASE("deck files skip blanks and comments and drop duplicates") {
    std::istringstream in("# a comment\n\n4 2\n3 3\n");
    const auto deck = parse_deck(in, 2);
    CHECK(deck.members() == std::vector<Partition>{Partition{4, 2}, Partition{3, 3}});
    CHECK(deck.k() == 2);

    SUBCASE("duplicates warn when a diagnostic stream is given") {
        std::istringstream dup("4 2\n4 2\n3 3\n");
        std::ostringstream warnings;
        const auto deduped = parse_deck(dup, 2, &warnings);
        CHECK(deduped.members().size() == 2);
        CHECK(warnings.str() == "warning: duplicate deck member ignored: 4 2\n");
    }
    SUBCASE("an empty body is refused") {
        std::istringstream blank("# nothing\n\n");
        CHECK_THROWS_AS(parse_deck(blank, 1), EmptyDeck);
    }
    SUBCASE("weights must agree") {
        std::istringstream mixed("2 1\n2\n");
        CHECK_THROWS_AS(parse_deck(mixed, 1), MixedWeights);
    }
    SUBCASE("the empty partition is a valid member") {
        std::istringstream body("-\n");
        const auto d = parse_deck(body, 3);
        CHECK(d.members() == std::vector<Partition>{Partition{}});
        CHECK(d.target_weight() == 3);
    }
}

TEST_CASE("ferrers rendering stacks one row per part") {
    CHECK(render_ferrers(Partition{4, 3, 1}) == "####\n###\n#");
    CHECK(render_ferrers(Partition{2}) == "##");
    CHECK(render_ferrers(Partition{}) == "(empty)");
}
