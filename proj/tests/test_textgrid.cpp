#include "enigme/errors.hpp"
#include "enigme/rng.hpp"
#include "enigme/textgrid.hpp"

#include <doctest.h>

using namespace enigme;

TEST_CASE("palette") {
    CHECK(kForegroundChars.size() == 38);
    CHECK(kBackgroundChars.size() == 5);
    for (char c : kBackgroundChars) {
        CHECK_FALSE(kPalette.is_foreground(c));
    }
    CHECK(kPalette.is_foreground('#'));
    CHECK_FALSE(kPalette.is_foreground('a'));
}

TEST_CASE("1-D and 2-D grids render one line per row") {
    Grid row({8, 1, 1}, '.');
    row.set({0, 0, 0}, 'X');
    CHECK(render(row) == "X.......\n");

    Grid g({3, 2, 1}, ',');
    g.set({2, 1, 0}, '#');
    CHECK(render(g) == ",,,\n,,#\n");
    CHECK(g.at({2, 1, 0}) == '#');
    CHECK(g.foreground_count() == 1);
}

TEST_CASE("3-D grids render as headed slices") {
    Grid g({2, 2, 2}, '.');
    g.set({1, 0, 1}, 'Q');
    CHECK(render(g) == "slice 0\n..\n..\n\nslice 1\n.Q\n..\n");
    CHECK(parse(render(g), '.') == g);
}

TEST_CASE("coord and index are inverse") {
    Grid g({4, 3, 2}, '.');
    for (std::size_t i = 0; i < g.cells().size(); ++i) {
        CHECK(g.index(g.coord(i)) == i);
    }
    CHECK_FALSE(g.contains({4, 0, 0}));
    CHECK_FALSE(g.contains({0, -1, 0}));
    CHECK_THROWS_AS(g.set({0, 0, 2}, 'X'), ContractError);
}

TEST_CASE("construction contracts") {
    CHECK_THROWS_AS(Grid({0, 1, 1}, '.'), ContractError);
    CHECK_THROWS_AS(Grid({2, 1, 1}, 'X'), ContractError);
    CHECK_THROWS_AS(Grid({2, 1, 1}, '.', "..."), ContractError);
    CHECK_THROWS_AS(Grid({2, 1, 1}, '.', std::string(".\t")), ContractError);
}

TEST_CASE("parse rejects malformed text") {
    CHECK_THROWS_AS(parse("", '.'), FormatError);
    CHECK_THROWS_AS(parse("...\n..\n", '.'), FormatError);
    CHECK_THROWS_AS(parse("..\x01\n", '.'), FormatError);
    CHECK_THROWS_AS(parse("..\n\n..\n", '.'), FormatError);
    // slices of different height, a bad header, a missing separator
    CHECK_THROWS_AS(parse("slice 0\n..\n..\n\nslice 1\n..\n", '.'), FormatError);
    CHECK_THROWS_AS(parse("slice 0\n..\n\nslice 2\n..\n", '.'), FormatError);
    CHECK_THROWS_AS(parse("slice 0\n..\nslice 1\n..\n", '.'), FormatError);
    CHECK_THROWS_AS(parse("slice 0\n..\n\n", '.'), FormatError);
}

TEST_CASE("parse tolerates a missing final newline") {
    CHECK(render(parse("..X\n.X.", '.')) == "..X\n.X.\n");
}

TEST_CASE("parse(render(g)) == g on random grids") {
    auto rng = make_rng(2024);
    for (int i = 0; i < 2000; ++i) {
        const Extents e{static_cast<int>(rng.draw_range(1, 9)), static_cast<int>(rng.draw_range(1, 9)),
                        static_cast<int>(rng.draw_range(1, 4))};
        const char bg = kBackgroundChars[rng.draw_index(kBackgroundChars.size())];
        std::string cells(e.cell_count(), bg);
        for (auto& c : cells) {
            if (rng.draw_chance(1, 3)) {
                c = kForegroundChars[rng.draw_index(kForegroundChars.size())];
            }
        }
        const Grid g(e, bg, cells);
        REQUIRE(parse(render(g), bg) == g);
    }
}
