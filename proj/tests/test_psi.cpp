#include <doctest.h>

#include <algorithm>
#include <random>

#include "psicong/psi.hpp"

using namespace psicong;

namespace {
LaurentCoeff random_lc(LaurentCtx ctx, std::mt19937& rng) {
    std::uniform_int_distribution<int> dterm(1, 3), dexp(-2, 5), dden(0, 1);
    std::uniform_int_distribution<long long> dval(-30, 30);
    std::vector<std::pair<int, long long>> terms;
    int k = dterm(rng);
    for (int i = 0; i < k; ++i) terms.emplace_back(dexp(rng), dval(rng));
    return LaurentCoeff::from_terms(ctx, terms, dden(rng));
}

PsiPoly random_psipoly(PsiContext ctx, std::mt19937& rng) {
    PsiPoly p(ctx);
    std::uniform_int_distribution<int> pick(0, 2);
    for (int i = 0; i < ctx.psi_dim(); ++i)
        if (pick(rng) == 0) p.set_coeff(i, random_lc(ctx.lctx(), rng));
    return p;
}
}  // namespace

TEST_CASE("basic series support and signs") {
    PsiContext ctx{1, 1, 1, 1};
    TruncSeries s = psi_series(ctx, 9);
    const std::uint64_t want[10] = {1, 1, 0, 1, 1, 0, 0, 0, 0, 1};
    for (int n = 0; n <= 9; ++n) CHECK(s.at(n) == want[n]);

    PsiContext neg{-1, 1, 1, 1};
    CHECK(psi_series(neg, 2).at(1) == 2);

    // (1+z) Psi(z)^2 == 1 mod 3 out to large degree
    TruncSeries p = psi_series(ctx, 600);
    TruncSeries sq = (p * p).truncated(600).mul_sparse({{0, 1}, {1, 1}}).truncated(600);
    CHECK(sq.agrees_with(TruncSeries::one(1, 600), 600));
}

TEST_CASE("product reduction by the defining relation") {
    PsiContext ctx{1, 1, 1, 3};
    PsiPoly one = PsiPoly::one(ctx);
    PsiPoly psi3 = PsiPoly::term(ctx, 3, LaurentCoeff::constant(ctx.lctx(), 1));
    CHECK((one * psi3).coeff_equal(psi3));

    // Psi^3 * Psi^3 = 3(1+z)^{-1} Psi^4 - 3(1+z)^{-2} Psi^2 + (1+z)^{-3}
    PsiPoly prod = psi3 * psi3;
    PsiPoly expect(ctx);
    expect.set_coeff(4, LaurentCoeff::constant(ctx.lctx(), 3).mul_den_base_pow(-1));
    expect.set_coeff(2, LaurentCoeff::constant(ctx.lctx(), -3).mul_den_base_pow(-2));
    expect.set_coeff(0, LaurentCoeff::constant(ctx.lctx(), 1).mul_den_base_pow(-3));
    CHECK(prod.coeff_equal(expect));

    // mod 3 the relation collapses: Psi^5 * Psi = (1+z)^{-3}
    PsiContext ctx1{1, 1, 1, 1};
    PsiPoly p5 = PsiPoly::term(ctx1, 5, LaurentCoeff::constant(ctx1.lctx(), 1));
    PsiPoly p1 = PsiPoly::term(ctx1, 1, LaurentCoeff::constant(ctx1.lctx(), 1));
    PsiPoly got = p5 * p1;
    PsiPoly expect1(ctx1);
    expect1.set_coeff(0, LaurentCoeff::constant(ctx1.lctx(), 1).mul_den_base_pow(-3));
    CHECK(got.coeff_equal(expect1));
}

TEST_CASE("products agree with series multiplication on random inputs") {
    std::mt19937 rng(4242);
    for (auto [eps, gamma] : {std::pair{1, 1}, std::pair{-1, 1}, std::pair{1, 2}}) {
        PsiContext ctx{eps, gamma, 1, 3};
        for (int trial = 0; trial < 12; ++trial) {
            PsiPoly a = random_psipoly(ctx, rng), b = random_psipoly(ctx, rng);
            TruncSeries lhs = (a * b).to_series(300);
            TruncSeries rhs = (a.to_series(320) * b.to_series(320)).truncated(300);
            CHECK(lhs.agrees_with(rhs, 280));
        }
    }
}

TEST_CASE("derivative") {
    PsiContext ctx1{1, 1, 1, 1};
    PsiPoly psi = PsiPoly::term(ctx1, 1, LaurentCoeff::constant(ctx1.lctx(), 1));
    PsiPoly d = psi.derivative();
    PsiPoly expect(ctx1);
    expect.set_coeff(1, LaurentCoeff::constant(ctx1.lctx(), 1).mul_den_base_pow(-1));
    CHECK(d.coeff_equal(expect));

    PsiContext ctx{1, 1, 1, 2};
    PsiPoly c = PsiPoly::term(ctx, 0, LaurentCoeff::from_terms(ctx.lctx(), {{2, 5}}, 1));
    CHECK(c.derivative().coeff_equal(
        PsiPoly::term(ctx, 0, LaurentCoeff::from_terms(ctx.lctx(), {{2, 5}}, 1).derivative())));

    PsiPoly psi9 = PsiPoly::term(ctx, 1, LaurentCoeff::constant(ctx.lctx(), 1));
    TruncSeries lhs = psi9.derivative().to_series(100);
    TruncSeries rhs = psi9.to_series(101).derivative();
    CHECK(lhs.agrees_with(rhs, 100));

    std::mt19937 rng(777);
    for (auto [eps, gamma] : {std::pair{1, 1}, std::pair{-1, 1}, std::pair{1, 2}, std::pair{-1, 2}}) {
        PsiContext c3{eps, gamma, 1, 3};
        for (int trial = 0; trial < 8; ++trial) {
            PsiPoly p = random_psipoly(c3, rng);
            TruncSeries dl = p.derivative().to_series(300);
            TruncSeries dr = p.to_series(301).derivative();
            int horizon = std::min(dl.trunc_deg(), dr.trunc_deg());
            CHECK(dl.agrees_with(dr, horizon));
        }
    }
}

TEST_CASE("powers of the mod-3 relation vanish at their exact level") {
    for (int d : {1, 2, 3}) {
        MinPolyFixture f{"X^d", d, 0, 0, d, 2 * d};
        CHECK(minpoly_eval(f, d, 300).is_zero_up_to(300));
        CHECK(!minpoly_eval(f, d + 1, 300).is_zero_up_to(300));
    }
    MinPolyFixture a1{"A1", 0, 1, 0, 4, 6};
    CHECK(minpoly_eval(a1, 4, 300).is_zero_up_to(300));
}

TEST_CASE("tabulated minimal-polynomial rows vanish; negative control fails") {
    for (auto& fix : minpoly_table()) CHECK(check_minpoly(fix, 500));
    MinPolyFixture a0_bad{"A0", 1, 0, 0, 2, 2};
    CHECK(!check_minpoly(a0_bad, 500));
}

TEST_CASE("deep vanishing of the top row") {
    MinPolyFixture a2 = minpoly_table().back();
    REQUIRE(a2.pow_a2 == 1);
    CHECK(minpoly_eval(a2, 13, 2000).is_zero_up_to(2000));
}
