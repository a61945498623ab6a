#include <doctest.h>

#include "psicong/series.hpp"

using namespace psicong;

TEST_CASE("series basics and geometric division") {
    // (1+z)^{-1} mod 3 to degree 3: 1, 2, 1, 2
    TruncSeries one = TruncSeries::one(1, 3);
    TruncSeries inv = one.div_one_plus(1, 1);
    CHECK(inv.at(0) == 1);
    CHECK(inv.at(1) == 2);
    CHECK(inv.at(2) == 1);
    CHECK(inv.at(3) == 2);

    // z^{-2}: Laurent order preserved
    TruncSeries mono = TruncSeries::monomial(1, -2, 1, 0);
    CHECK(mono.min_deg() == -2);
    CHECK(mono.at(-2) == 1);

    // (1-z)^{-1} mod 9: all ones
    TruncSeries geo = TruncSeries::one(2, 3).div_one_plus(-1, 1);
    for (int d = 0; d <= 3; ++d) CHECK(geo.at(d) == 1);

    // dividing back multiplies out exactly
    TruncSeries prod = inv.mul_sparse({{0, 1}, {1, 1}});
    CHECK(prod.truncated(3).agrees_with(TruncSeries::one(1, 3), 3));
}

TEST_CASE("series product and derivative") {
    TruncSeries a(2, 0, 5), b(2, 0, 5);
    a.set(0, 1);
    a.set(1, 2);
    a.set(3, 5);
    b.set(0, 4);
    b.set(2, 7);
    TruncSeries p = a * b;
    CHECK(p.at(0) == 4);
    CHECK(p.at(1) == 8);
    CHECK(p.at(2) == 7);
    CHECK(p.at(3) == (5 * 4 + 2 * 7) % 9);
    TruncSeries d = a.derivative();
    CHECK(d.at(0) == 2);
    CHECK(d.at(2) == (3 * 5) % 9);
    // negative degrees differentiate with the ring image of the exponent
    TruncSeries m = TruncSeries::monomial(2, -2, 1, 0).derivative();
    CHECK(m.at(-3) == 7);  // -2 mod 9
}

TEST_CASE("series comparison helpers") {
    TruncSeries a(1, 0, 10), b(1, 0, 10);
    a.set(4, 2);
    b.set(4, 2);
    b.set(7, 1);
    CHECK(a.agrees_with(b, 6));
    CHECK(!a.agrees_with(b, 7));
    CHECK(a.first_difference(b, 10) == 7);
    CHECK(a.reduced_mod(1).agrees_with(a, 10));
    CHECK(!a.is_zero_up_to(10));
    CHECK(a.is_zero_up_to(3));
}
