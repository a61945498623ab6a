#include <doctest.h>

#include "psicong/digits.hpp"
#include "psicong/psi.hpp"
#include "psicong/sequences.hpp"

using namespace psicong;

TEST_CASE("trit strings and statistics") {
    TritString s = TritString::of(BigInt(25));
    CHECK(s.msb_string() == "221");
    CHECK(TritString::parse_msb("221").digit(0) == 1);
    CHECK(TritString::parse_msb("0221").msb_string() == "221");  // leading zeros canonicalized

    DigitStats a = digit_stats(TritString::parse_msb("022"));
    CHECK(a.occ022 == 1);  // counted through the padded leading zero

    DigitStats b = digit_stats(TritString::parse_msb("0110"));
    CHECK(b.estring == 1);
    CHECK(b.iso2 == 0);  // the position-3 zero has a zero left-neighbour

    TritString c = TritString::parse_msb("10");
    CHECK(digit_stats(c).estring == 1);
    CHECK(ends_with(c, "10"));
    CHECK(!ends_with(c, "01"));
}

TEST_CASE("coefficients of the third power, spot values") {
    CHECK(psi_power_coeff(3, 2, BigInt(0)).v == 1);
    CHECK(psi_power_coeff(3, 2, BigInt(1)).v == 3);
    CHECK(psi_power_coeff(3, 2, BigInt(5)).v == 0);  // [z^5] is 9, divisible by 9
    CHECK(psi3_coeff_via_lemma(BigInt(0)).v == 1);
    CHECK(psi3_coeff_via_lemma(BigInt(2)).v == 3);
    CHECK_THROWS_AS(psi_power_coeff(5, 1, BigInt(1)), Untabulated);
    CHECK_THROWS_AS(psi_power_coeff(7, 2, BigInt(1)), Untabulated);
    // power 1 at any modulus: support of the basic series
    CHECK(psi_power_coeff(1, 3, BigInt(4)).v == 1);
    CHECK(psi_power_coeff(1, 3, BigInt(5)).v == 0);
    CHECK(psi_power_coeff(1, 2, BigInt("1000000000000000000000")).v ==
          (TritString::of(BigInt("1000000000000000000000")).msb_string().find('2') == std::string::npos ? 1 : 0));
}

TEST_CASE("digit rules agree with truncated series") {
    const int N = 2187;
    TruncSeries psi = psi_series_plain(3, N);
    TruncSeries p2 = (psi * psi).truncated(N);
    TruncSeries p3 = (p2 * psi).truncated(N);
    TruncSeries p5 = (p3 * p2).truncated(N);
    for (int n = 0; n < N; ++n) {
        BigInt bn(n);
        CHECK(psi_power_coeff(1, 3, bn).v == psi.at(n));
        CHECK(psi_power_coeff(3, 2, bn).v == p3.at(n) % 9);
        CHECK(psi_power_coeff(3, 3, bn).v == p3.at(n));
        CHECK(psi_power_coeff(5, 2, bn).v == p5.at(n) % 9);
        CHECK(psi_power_coeff(5, 3, bn).v == p5.at(n));
        CHECK(psi3_coeff_via_lemma(bn).v == p3.at(n));
    }
    // the mod-27 table refines the mod-9 one; classes never hit 2 mod 3
    for (int n = 0; n < N; ++n) {
        CHECK(psi_power_coeff(3, 2, BigInt(n)).v == psi_power_coeff(3, 3, BigInt(n)).v % 9);
        CHECK(psi_power_coeff(3, 3, BigInt(n)).v % 3 != 2);
    }
}

TEST_CASE("free-subgroup classifiers, spot values") {
    CHECK(free_class(BigInt(1), 1).v == 2);
    CHECK(free_class(BigInt(3), 2).v == 7);
    CHECK(free_class(BigInt(4), 2).v == 3);  // the lambda = 0 mod 4 clause
    CHECK(free_class(BigInt(1), 2).v == 5);
    CHECK(free27_is_one(BigInt(9)));
    CHECK(!free27_is_one(BigInt(1)));
    CHECK_THROWS_AS(free_class(BigInt(1), 3), Untabulated);
}

TEST_CASE("free-subgroup classifiers against the recurrence oracle") {
    const int L = 2000;
    TruncSeries o3 = oracle_terms({Seq::free_subgroups, 1}, L + 1, 1);
    TruncSeries o9 = oracle_terms({Seq::free_subgroups, 1}, L + 1, 2);
    TruncSeries o27 = oracle_terms({Seq::free_subgroups, 1}, L + 1, 3);
    for (int n = 1; n <= L; ++n) {
        CHECK(free_class(BigInt(n), 1).v == o3.at(n));
        CHECK(free_class(BigInt(n), 2).v == o9.at(n));
        CHECK(free_class(BigInt(n), 2).v % 3 == free_class(BigInt(n), 1).v);
        CHECK(free27_is_one(BigInt(n)) == (o27.at(n) == 1));
    }
    // the two printed-reading toggles each break the match; the resolved
    // defaults are the empirically correct combination
    Free27Options printed;
    printed.clause12_use_estring = true;
    printed.clause7_requires_two = false;
    int printed_bad = 0, resolved_bad = 0;
    for (int n = 1; n <= L; ++n) {
        if (free27_is_one(BigInt(n), printed) != (o27.at(n) == 1)) ++printed_bad;
        if (free27_is_one(BigInt(n)) != (o27.at(n) == 1)) ++resolved_bad;
    }
    CHECK(printed_bad > 0);
    CHECK(resolved_bad == 0);
}

TEST_CASE("conjectured apery classes, spot values and oracle scan") {
    CHECK(apery_class(2, BigInt(0)).v == 1);
    CHECK(apery_class(2, BigInt(1)).v == 3);
    CHECK(apery_class(3, BigInt(0)).v == 1);
    for (int kind : {2, 3}) {
        SequenceId id{kind == 2 ? Seq::apery_zeta2 : Seq::apery_zeta3};
        TruncSeries o = oracle_terms(id, 2188, 2);
        for (int n = 0; n <= 2187; ++n) CHECK(apery_class(kind, BigInt(n)).v == o.at(n));
    }
}
