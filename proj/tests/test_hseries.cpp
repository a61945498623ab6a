#include <doctest.h>

#include "psicong/hseries.hpp"

using namespace psicong;

TEST_CASE("nested series basics") {
    // H~_1 starts at z^1 with coefficient 1
    TruncSeries h1 = h_tilde_series(HIndex{{1}}, 20, 3);
    CHECK(h1.at(0) == 0);
    CHECK(h1.at(1) == 1);

    // H~_{1,1} has order 3+1 = 4
    TruncSeries h11 = h_tilde_series(HIndex{{1, 1}}, 20, 3);
    for (int n = 0; n < 4; ++n) CHECK(h11.at(n) == 0);
    CHECK(h11.at(4) != 0);

    // (1+z) Psi^2 - 1 - 3 H~_1 - 9 H~_{1,1} == 0 mod 27 to degree 200
    TruncSeries psi = psi_series_plain(3, 220);
    TruncSeries lhs = (psi * psi).truncated(220).mul_sparse({{0, 1}, {1, 1}}).truncated(200);
    lhs = lhs - TruncSeries::one(3, 200) - h_tilde_series(HIndex{{1}}, 200, 3).scaled(3) -
          h_tilde_series(HIndex{{1, 1}}, 200, 3).scaled(9);
    CHECK(lhs.is_zero_up_to(200));
}

TEST_CASE("purity and ranks") {
    CHECK(HIndex{{1, 2, 4}}.pure());
    CHECK(!HIndex{{1, 3}}.pure());
    ReductionRank a = ReductionRank::of(HIndex{{3, 1}}, 0);
    CHECK(a.s == 2);
    CHECK(a.i == 1);
    CHECK(a.t == 1);
    ReductionRank b = ReductionRank::of(HIndex{{1, 1}}, 0);
    CHECK(b < a);
    // higher coefficient valuation orders lower
    CHECK(ReductionRank::of(HIndex{{3, 1}}, 1) < a);
    // larger 3-valuation of the flagged entry orders higher
    CHECK(a < ReductionRank::of(HIndex{{9, 1}}, 0));
}

TEST_CASE("power expansion into the nested basis") {
    // (1+z) Psi^2 = 1 + 3 H~_1 mod 9
    PsiPowerExpansion e2 = psi_power_h_expansion(1, false, 2);
    REQUIRE(e2.comb.terms.size() == 1);
    CHECK(e2.comb.terms.begin()->first == HIndex{{1}});
    CHECK(e2.comb.terms.begin()->second == LaurentCoeff::constant(LaurentCtx{1, 1, 2}, 3));

    // mod 27 adds 9 H~_{1,1}
    PsiPowerExpansion e3 = psi_power_h_expansion(1, false, 3);
    CHECK(e3.comb.terms.size() == 2);
    CHECK(e3.comb.terms.count(HIndex{{1, 1}}) == 1);
    CHECK(e3.comb.terms.at(HIndex{{1, 1}}) == LaurentCoeff::constant(LaurentCtx{1, 1, 3}, 9));

    // K = 2 mod 27: coefficient 6 on H~_1 and 9 on H~_2
    PsiPowerExpansion k2 = psi_power_h_expansion(2, false, 3);
    CHECK(k2.comb.terms.at(HIndex{{1}}) == LaurentCoeff::constant(LaurentCtx{1, 1, 3}, 6));
    CHECK(k2.comb.terms.at(HIndex{{2}}) == LaurentCoeff::constant(LaurentCtx{1, 1, 3}, 9));

    // series check for even and odd powers
    for (auto [K, odd] : {std::pair{1, false}, std::pair{1, true}, std::pair{2, false}, std::pair{2, true}}) {
        PsiPowerExpansion ex = psi_power_h_expansion(K, odd, 3);
        TruncSeries want = TruncSeries::one(3, 320);
        TruncSeries psi = psi_series_plain(3, 320);
        int pw = 2 * K + (odd ? 1 : 0);
        for (int i = 0; i < pw; ++i) want = (want * psi).truncated(320);
        CHECK(ex.to_series(300).agrees_with(want.truncated(300), 300));
    }
}

TEST_CASE("reduction onto pure indices") {
    // pure index unchanged
    HCombination id = reduce_h(HIndex{{1}}, 3);
    CHECK(id.constant.is_zero());
    REQUIRE(id.terms.size() == 1);
    CHECK(id.terms.begin()->first == HIndex{{1}});

    // H~_3 mod 3 = H~_1 - z(1+z)/(1+z^3)
    HCombination r3 = reduce_h(HIndex{{3}}, 1);
    CHECK(r3.all_pure());
    REQUIRE(r3.terms.count(HIndex{{1}}) == 1);
    CHECK(r3.terms.at(HIndex{{1}}) == LaurentCoeff::constant(LaurentCtx{1, 1, 1}, 1));
    // constant part: -z(1+z)/(1+z)^3 = -z/(1+z)^2 mod 3
    LaurentCoeff expect_const =
        LaurentCoeff::monomial(LaurentCtx{1, 1, 1}, 1, -1).mul_den_base_pow(-2);
    CHECK(r3.constant == expect_const);

    // the reduction is series-exact for every index with s <= 2, entries <= 9
    for (int e = 1; e <= 3; ++e) {
        const int N = 400;
        for (int a1 = 1; a1 <= 9; ++a1) {
            HIndex idx{{a1}};
            HCombination red = reduce_h(idx, e);
            CHECK(red.all_pure());
            CHECK(red.to_series(N).agrees_with(h_tilde_series(idx, N, e), N));
        }
        for (int a1 = 1; a1 <= 9; ++a1)
            for (int a2 = 1; a2 <= 9; ++a2) {
                HIndex idx{{a1, a2}};
                HCombination red = reduce_h(idx, e);
                CHECK(red.all_pure());
                TruncSeries got = red.to_series(N);
                TruncSeries want = h_tilde_series(idx, N, e);
                CHECK(got.agrees_with(want, N));
            }
    }
}

TEST_CASE("mod 3 the nested series composes through z/(1+z)^2") {
    // H~_idx(z) == H_idx(z/(1+z)^2) mod 3 for pure indices, s <= 2
    const int N = 250;
    TruncSeries sub = TruncSeries::monomial(1, 1, 1, N).div_one_plus(1, 1).div_one_plus(1, 1);
    std::vector<TruncSeries> pw;
    pw.push_back(TruncSeries::one(1, N));
    for (int m = 1; m <= N; ++m) pw.push_back((pw.back() * sub).truncated(N));
    auto H1 = [&](int a) {
        TruncSeries acc = TruncSeries::zero(1, N);
        for (long long p = 1; a * p <= N; p *= 3) acc = acc + pw[static_cast<std::size_t>(a * p)];
        return acc;
    };
    auto H2 = [&](int a1, int a2) {
        TruncSeries acc = TruncSeries::zero(1, N);
        for (long long p2 = 1; a2 * p2 <= N; p2 *= 3)
            for (long long p1 = 3 * p2; a1 * p1 + a2 * p2 <= N; p1 *= 3)
                acc = acc + pw[static_cast<std::size_t>(a1 * p1 + a2 * p2)];
        return acc;
    };
    for (int a1 : {1, 2, 4, 5}) {
        CHECK(h_tilde_series(HIndex{{a1}}, N, 1).agrees_with(H1(a1), N));
    }
    for (auto [a1, a2] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 1}, std::pair{4, 2}}) {
        CHECK(h_tilde_series(HIndex{{a1, a2}}, N, 1).agrees_with(H2(a1, a2), N));
    }
}

TEST_CASE("cube of the first nested series mod 3") {
    // H~_1^3 == H~_1 - z(1+z)/(1+z^3) mod 3
    const int N = 300;
    TruncSeries h1 = h_tilde_series(HIndex{{1}}, N, 1);
    TruncSeries lhs = (h1 * h1 * h1).truncated(N);
    TruncSeries corr = TruncSeries::monomial(1, 1, 1, N).mul_sparse({{0, 1}, {1, 1}}).truncated(N).div_one_plus(1, 3);
    TruncSeries rhs = h1 - corr;
    CHECK(lhs.agrees_with(rhs, N));
    // matches the reduction of H~_3 as well
    CHECK(lhs.agrees_with(h_tilde_series(HIndex{{3}}, N, 1), N));
}
