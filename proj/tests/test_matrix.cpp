#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sympl/matrix.hpp"

using namespace sympl;

TEST_CASE("rref and rank") {
    Mat m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
    CHECK(rank(m) == 2);
    Mat id = Mat::identity(3);
    CHECK(rank(id) == 3);
    CHECK(rank(Mat(0, 0)) == 0);
    CHECK(rank(Mat(3, 0)) == 0);
}

TEST_CASE("kernel is exact") {
    Mat m{{1, 2, 3}, {2, 4, 6}};
    Mat k = kernel(m);
    CHECK(k.cols() == 2);
    CHECK((m * k).is_zero());

    // full-rank square matrix has trivial kernel
    Mat inv{{1, 1}, {0, 1}};
    CHECK(kernel(inv).cols() == 0);
}

TEST_CASE("solve") {
    Mat m{{2, 0}, {0, 4}};
    auto x = solve(m, {Rat(1), Rat(2)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == rat(1, 2));
    CHECK((*x)[1] == rat(1, 2));

    Mat sing{{1, 1}, {1, 1}};
    CHECK(!solve(sing, {Rat(0), Rat(1)}).has_value());
    CHECK(solve(sing, {Rat(1), Rat(1)}).has_value());
}

TEST_CASE("inverse") {
    Mat m{{1, 2}, {3, 5}};
    auto inv = inverse(m);
    REQUIRE(inv.has_value());
    CHECK(*inv * m == Mat::identity(2));
    CHECK(!inverse(Mat{{1, 2}, {2, 4}}).has_value());
}

TEST_CASE("rationals parse and print") {
    CHECK(parse_rat("3/4") == rat(3, 4));
    CHECK(parse_rat("-2") == rat(-2));
    CHECK(rat_str(rat(6, 8)) == "3/4");
    CHECK(rat_str(rat(-2)) == "-2");
    CHECK_THROWS(parse_rat("1/0"));
    CHECK_THROWS(parse_rat(""));
}

TEST_CASE("zero-dimensional edge cases") {
    Mat e(0, 0);
    CHECK((e * e) == e);
    Mat tall(3, 0);
    Mat wide(0, 3);
    CHECK((tall * wide).rows() == 3);
    CHECK((tall * wide).is_zero());
    CHECK(kernel(wide).cols() == 3);
}
