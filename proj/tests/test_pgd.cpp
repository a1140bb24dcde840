#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "spgenus/errors.hpp"
#include "spgenus/pgd.hpp"

using namespace spgenus;

namespace {
GenusDistribution gd(std::vector<long> v) {
    std::vector<BigInt> big(v.begin(), v.end());
    return GenusDistribution{std::move(big)};
}
} // namespace

TEST_CASE("canonical form strips trailing zeros") {
    CHECK(gd({1, 0, 0}).size() == 1);
    CHECK(gd({0, 1, 0}).size() == 2);
    CHECK(gd({}).empty());
    CHECK(gd({0, 0}).empty());
    CHECK(gd({1, 0, 0}) == gd({1}));
}

TEST_CASE("accessors") {
    const GenusDistribution d = gd({0, 4, 12});
    CHECK(d.at(0) == 0);
    CHECK(d.at(1) == 4);
    CHECK(d.at(2) == 12);
    CHECK(d.at(99) == 0); // out of range reads as zero, no throw
    CHECK(d.total() == 16);
    CHECK(d.min_genus() == 1);
    CHECK(d.max_genus() == 2);
    CHECK(d.support_is_consecutive());

    CHECK_FALSE(gd({2, 0, 2}).support_is_consecutive());
    CHECK(gd({}).support_is_consecutive()); // vacuously
    CHECK(gd({5}).min_genus() == 0);
}

TEST_CASE("negative counts are a bug, not data") {
    CHECK_THROWS_AS(gd({1, -1}), InternalError);
}

TEST_CASE("convolution") {
    CHECK(gd_convolve(gd({1, 1}), gd({1, 1})) == gd({1, 2, 1}));
    CHECK(gd_convolve(gd({2, 2}), gd({1})) == gd({2, 2}));
    CHECK(gd_convolve(gd({3}), gd({0, 5})) == gd({0, 15}));
    CHECK(gd_convolve(gd({}), gd({7, 7})).empty());
    // totals multiply
    const GenusDistribution a = gd({1, 4, 6, 4, 1});
    const GenusDistribution b = gd({0, 3, 3});
    CHECK(gd_convolve(a, b).total() == a.total() * b.total());
    // commutative
    CHECK(gd_convolve(a, b) == gd_convolve(b, a));
}

TEST_CASE("pointwise sum, scaling, shifting") {
    CHECK(gd_add(gd({1, 2}), gd({0, 1, 5})) == gd({1, 3, 5}));
    CHECK(gd_scale(gd({1, 2}), BigInt(4)) == gd({4, 8}));
    CHECK(gd_scale(gd({1, 2}), BigInt(0)).empty());
    CHECK(gd_shift(gd({3, 1}), 2) == gd({0, 0, 3, 1}));
    CHECK(gd_shift(gd({3, 1}), 0) == gd({3, 1}));
    CHECK(gd_shift(gd({}), 3).empty());
}

TEST_CASE("big counts survive the arithmetic") {
    BigInt huge = 1;
    huge <<= 100;
    GenusDistribution d{std::vector<BigInt>{huge, huge}};
    const GenusDistribution sq = gd_convolve(d, d);
    CHECK(sq.total() == d.total() * d.total());
    const auto strs = sq.to_decimal_strings();
    REQUIRE(strs.size() == 3);
    CHECK(strs[0] == BigInt(huge * huge).str());
    CHECK(strs[1] == BigInt(huge * huge * 2).str());
}

TEST_CASE("decimal rendering") {
    CHECK(gd({512, 10752}).to_decimal_strings() ==
          std::vector<std::string>{"512", "10752"});
    CHECK(gd({}).to_decimal_strings().empty());
}

TEST_CASE("root partials") {
    UUPartials p;
    p.dot = gd({2});
    p.prime = gd({0, 4});
    CHECK(p.total() == 6);
    CHECK(p.gd() == gd({2, 4}));

    ClosurePartials c;
    c.ss_dot = gd({1});
    c.ss_prime = gd({0, 2});
    c.dd_dprime = gd({3});
    CHECK(c.total() == 6);
}

TEST_CASE("streaming for test diagnostics") {
    std::ostringstream os;
    os << gd({2, 2});
    CHECK(os.str() == "[2, 2]");
    UUPartials p;
    p.prime = gd({1});
    std::ostringstream ps;
    ps << p;
    CHECK(ps.str().find("uu_prime") != std::string::npos);
}
