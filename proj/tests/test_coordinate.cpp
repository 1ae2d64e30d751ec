#include <doctest.h>

#include <algorithm>
#include <random>

#include "irrcount/coordinate.hpp"

using namespace irrcount;

TEST_CASE("parsing the coordinate grammar") {
    Coordinate a = parseCoordinate("1");
    CHECK(a.isRational());
    CHECK(a.offset == 1);
    Coordinate b = parseCoordinate("-3/2");
    CHECK(b.offset == BigRat(-3, 2));
    Coordinate c = parseCoordinate("x");
    CHECK(c.tag == "x");
    CHECK(c.tagSign == 1);
    CHECK(c.offset == 0);
    Coordinate d = parseCoordinate("-x+3/2");
    CHECK(d.tag == "x");
    CHECK(d.tagSign == -1);
    CHECK(d.offset == BigRat(3, 2));
    Coordinate e = parseCoordinate("y-1");
    CHECK(e.tag == "y");
    CHECK(e.offset == -1);
    CHECK_THROWS_AS(parseCoordinate("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parseCoordinate("x*2"), std::invalid_argument);
    CHECK_THROWS_AS(parseCoordinate(""), std::invalid_argument);
    CHECK(formatCoordinate(parseCoordinate("-x+3/2")) == "-x+3/2");
    CHECK(formatCoordinate(parseCoordinate("5/10")) == "1/2");
}

TEST_CASE("coordinate lists") {
    auto nu = parseCoordinateList("1,1,2");
    CHECK(nu.size() == 3);
    CHECK(parseCoordinateList("").empty());
    CHECK_THROWS_AS(parseCoordinateList("1,,2"), std::invalid_argument);
}

TEST_CASE("integrality predicates") {
    auto c = [](const char* s) { return parseCoordinate(s); };
    CHECK(differenceIntegral(c("1"), c("3")));
    CHECK_FALSE(differenceIntegral(c("1"), c("1/2")));
    CHECK(differenceIntegral(c("x+1"), c("x-2")));
    CHECK_FALSE(differenceIntegral(c("x"), c("-x")));
    CHECK_FALSE(differenceIntegral(c("x"), c("y")));
    CHECK(sumIntegral(c("x"), c("-x+1")));
    CHECK_FALSE(sumIntegral(c("x"), c("x+1")));
    CHECK(sumIntegral(c("1/3"), c("2/3")));
    CHECK_FALSE(sumIntegral(c("1/3"), c("1/3")));
    CHECK(isHalfInteger(c("-3/2")));
    CHECK(isHalfInteger(c("2")));
    CHECK_FALSE(isHalfInteger(c("1/3")));
    CHECK_FALSE(isHalfInteger(c("x")));
    // Shift composes.
    CHECK(shifted(shifted(c("1"), BigRat(1, 2)), BigRat(1, 2)) == shifted(c("1"), BigRat(1)));
    CHECK(formatCoordinate(shifted(c("x+1"), BigRat(1, 2))) == "x+3/2");
}

TEST_CASE("integral blocks") {
    auto blocks = integralBlocks(parseCoordinateList("1,1,2"));
    REQUIRE(blocks.size() == 1);
    CHECK(blocks[0].mult == YoungDiagram({2, 1}));
    CHECK(blocks[0].size == 3);

    blocks = integralBlocks(parseCoordinateList("0,1/2"));
    REQUIRE(blocks.size() == 2);
    CHECK(blocks[0].mult == YoungDiagram({1}));
    CHECK(blocks[1].mult == YoungDiagram({1}));

    blocks = integralBlocks(parseCoordinateList("x,x+1,y"));
    REQUIRE(blocks.size() == 2);
    std::vector<int> sizes{blocks[0].size, blocks[1].size};
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<int>{1, 2});
}

TEST_CASE("block order is permutation invariant") {
    auto coords = parseCoordinateList("1/2,0,x,3/2,-x+1,0,7,x+2");
    auto want = integralBlocks(coords);
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 50; ++trial) {
        std::shuffle(coords.begin(), coords.end(), rng);
        auto got = integralBlocks(coords);
        REQUIRE(got.size() == want.size());
        for (size_t i = 0; i < got.size(); ++i) {
            CHECK(got[i].mult == want[i].mult);
            CHECK(got[i].coords == want[i].coords);
        }
    }
}

TEST_CASE("unitary classification of the worked example") {
    auto dec = classifyU(parseCoordinateList("1,1,2"), 2, 1);
    REQUIRE(dec.has_value());
    REQUIRE(dec->lam.has_value());
    CHECK(dec->lam->mult == YoungDiagram({2, 1}));
    CHECK_FALSE(dec->lamp.has_value());
    CHECK(dec->pairs.empty());
    CHECK(dec->pRes == 2);
    CHECK(dec->qRes == 1);
}

TEST_CASE("unitary classification of generic pairs") {
    auto dec = classifyU(parseCoordinateList("x,-x+1"), 1, 1);
    REQUIRE(dec.has_value());
    CHECK_FALSE(dec->lam.has_value());
    CHECK_FALSE(dec->lamp.has_value());
    REQUIRE(dec->pairs.size() == 1);
    CHECK(dec->pairs[0].first.size == 1);
    CHECK(dec->pRes == 0);
    CHECK(dec->qRes == 0);
}

TEST_CASE("unitary classification failure modes") {
    // 1/4 is unpairable: not in either half-integer class, 1/4+1/3 not integral.
    CHECK_FALSE(classifyU(parseCoordinateList("1/4,1/3"), 1, 1).has_value());
    // Odd-size n/2 class: n=2, class 1+Z has one member.
    CHECK_FALSE(classifyU(parseCoordinateList("1,1/2"), 1, 1).has_value());
    // Negative residual signature: an n/2 class cannot fit inside U(2,0).
    CHECK_FALSE(classifyU(parseCoordinateList("1,2"), 2, 0).has_value());
    // Unequal generic pair sizes.
    CHECK_FALSE(classifyU(parseCoordinateList("x,x+1,-x"), 2, 1).has_value());
    CHECK_THROWS_AS(classifyU(parseCoordinateList("1"), 2, 1), std::invalid_argument);
}

TEST_CASE("rational generic pairs classify like tagged ones") {
    auto dec = classifyU(parseCoordinateList("1/3,2/3"), 1, 1);
    REQUIRE(dec.has_value());
    CHECK(dec->pairs.size() == 1);
}

TEST_CASE("complex-family matching") {
    auto m = classifyGlc(parseCoordinateList("0,1"), parseCoordinateList("2,2"));
    REQUIRE(m.has_value());
    REQUIRE(m->size() == 1);
    CHECK((*m)[0].first.mult == YoungDiagram({1, 1}));
    CHECK((*m)[0].second.mult == YoungDiagram({2}));

    CHECK_FALSE(classifyGlc(parseCoordinateList("0"), parseCoordinateList("1/2")).has_value());
    CHECK(classifyGlc(parseCoordinateList("x"), parseCoordinateList("x")).has_value());
    CHECK_FALSE(classifyGlc(parseCoordinateList("x,x"), parseCoordinateList("x,y")).has_value());
    CHECK_THROWS_AS(classifyGlc(parseCoordinateList("0"), parseCoordinateList("0,1")),
                    std::invalid_argument);
}
