#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qpi/diagrams.hpp"
#include "qpi/error.hpp"

using namespace qpi;

namespace {

const char* kRef3x5 = ".#.#.\n.#...\n###..\n";

Errc code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return Errc::Io;
}

} // namespace

TEST_CASE("diagram_from_text reads rows top to bottom") {
    const Diagram d = diagram_from_text("..#\n...");
    CHECK(d.rows() == 2);
    CHECK(d.cols() == 3);
    CHECK(d.at(1, 3) == Cell::Black);
    CHECK(d.white_count() == 5);
    CHECK(d.to_text() == "..#\n...\n");
}

TEST_CASE("3x5 reference diagram has nine white boxes") {
    const Diagram d = diagram_from_text(kRef3x5);
    CHECK(d.rows() == 3);
    CHECK(d.cols() == 5);
    CHECK(d.white_count() == 9);
}

TEST_CASE("single black cell") {
    const Diagram d = diagram_from_text("#");
    CHECK(d.white_count() == 0);
    CHECK(white_labels(d).empty());
}

TEST_CASE("custom characters and CRLF input") {
    const Diagram d = diagram_from_text("WB\r\nWW\r\n", 'W', 'B');
    CHECK(d.white_count() == 3);
    CHECK(d.at(1, 2) == Cell::Black);
}

TEST_CASE("parse errors") {
    CHECK(code_of([] { diagram_from_text("..\n."); }) == Errc::RaggedRows);
    CHECK(code_of([] { diagram_from_text(".x"); }) == Errc::UnknownCharacter);
    CHECK(code_of([] { diagram_from_text(""); }) == Errc::EmptyInput);
    CHECK(code_of([] { diagram_from_text("\n\n"); }) == Errc::EmptyInput);
}

TEST_CASE("Cauchon-Le condition") {
    CHECK(is_cauchon_le(diagram_from_text(kRef3x5)));
    CHECK(is_cauchon_le(diagram_from_text("...\n...\n...")));
    CHECK_FALSE(is_cauchon_le(diagram_from_text("..\n.#")));
    CHECK(is_cauchon_le(diagram_from_text("#.\n#.")));
    CHECK(is_cauchon_le(diagram_from_text("##\n..")));
}

TEST_CASE("white labels follow reading order") {
    const auto labels = white_labels(diagram_from_text(kRef3x5));
    REQUIRE(labels.size() == 9);
    CHECK(labels[0] == Box{1, 1});
    CHECK(labels[3] == Box{2, 1});
    CHECK(labels[7] == Box{3, 4});
    CHECK(labels[8] == Box{3, 5});

    const auto square = white_labels(diagram_from_text("..\n.."));
    CHECK(square == std::vector<Box>{{1, 1}, {1, 2}, {2, 1}, {2, 2}});
    CHECK(white_labels(diagram_from_text("##\n##")).empty());
}

TEST_CASE("partitions") {
    const Partition p = make_partition({4, 3, 3, 1}, 4, 4);
    CHECK(p.size() == 11);
    CHECK(young_diagram(p).white_count() == 11);

    const Partition tight = make_partition({2, 1, 0, 0});
    CHECK(tight.parts == std::vector<int>{2, 1});
    CHECK(tight.box_m == 2);
    CHECK(tight.box_n == 2);

    CHECK(code_of([] { make_partition({1, 2}); }) == Errc::BadRange);
    CHECK(code_of([] { make_partition({5}, 1, 4); }) == Errc::ShapeOverflow);
    CHECK(code_of([] { make_partition({1, 1, 1}, 2, 3); }) == Errc::ShapeOverflow);
    CHECK(parse_partition("5,3,2").parts == std::vector<int>{5, 3, 2});
    CHECK(code_of([] { parse_partition("5,,2"); }) == Errc::BadSpec);
}

TEST_CASE("young diagram with extra black boxes embeds in its box") {
    const Partition p = make_partition({5, 3, 2}, 3, 5);
    const Diagram d = young_diagram(p, {{1, 2}, {2, 2}});
    CHECK(d.to_text() == ".#...\n.#.##\n..###\n");

    const Diagram one = young_diagram(make_partition({1}, 1, 1));
    CHECK(one.white_count() == 1);
    CHECK(code_of([&] { young_diagram(p, {{3, 3}}); }) == Errc::BoxOutsideShape);
}

TEST_CASE("determinantal diagram white count is 2nt - t^2") {
    CHECK(determinantal_diagram(3, 1).white_count() == 5);
    CHECK(determinantal_diagram(4, 2).white_count() == 12);
    CHECK(determinantal_diagram(2, 1).to_text() == "#.\n..\n");
    for (int n = 2; n <= 8; ++n)
        for (int t = 1; t < n; ++t) {
            const Diagram d = determinantal_diagram(n, t);
            CHECK(d.white_count() == 2 * n * t - t * t);
            CHECK(is_cauchon_le(d));
        }
    CHECK(code_of([] { determinantal_diagram(3, 3); }) == Errc::BadRange);
    CHECK(code_of([] { determinantal_diagram(3, 0); }) == Errc::BadRange);
}

TEST_CASE("Plucker index to partition") {
    const Partition p = partition_from_plucker(make_plucker({1, 3, 4, 7}, 8));
    CHECK(p.parts == std::vector<int>{4, 3, 3, 1});
    CHECK(p.box_m == 4);
    CHECK(p.box_n == 4);

    const Partition rect = partition_from_plucker(make_plucker({1, 2, 3}, 7));
    CHECK(rect.parts == std::vector<int>{4, 4, 4});

    const Partition empty = partition_from_plucker(make_plucker({4, 5}, 5));
    CHECK(empty.parts.empty());
    CHECK(empty.size() == 0);

    CHECK(code_of([] { make_plucker({3, 2}, 5); }) == Errc::BadRange);
    CHECK(code_of([] { make_plucker({1, 6}, 5); }) == Errc::BadRange);
}
