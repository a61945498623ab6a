#include <doctest.h>

#include <random>

#include "psicong/laurent.hpp"

using namespace psicong;

namespace {

LaurentCoeff random_lc(LaurentCtx ctx, std::mt19937& rng) {
    std::uniform_int_distribution<int> dterm(1, 4), dexp(-4, 6), dden(0, 2);
    std::uniform_int_distribution<long long> dval(-40, 40);
    std::vector<std::pair<int, long long>> terms;
    int k = dterm(rng);
    for (int i = 0; i < k; ++i) terms.emplace_back(dexp(rng), dval(rng));
    return LaurentCoeff::from_terms(ctx, terms, dden(rng));
}

}  // namespace

TEST_CASE("reciprocal pair and exact division") {
    LaurentCtx ctx{1, 1, 2};
    // (z^{-1}(1+z)) * (z * (1+z)^{-1}) == 1
    LaurentCoeff a = LaurentCoeff::from_terms(ctx, {{-1, 1}, {0, 1}});
    LaurentCoeff b = LaurentCoeff::monomial(ctx, 1, 1).mul_den_base_pow(-1);
    LaurentCoeff p = a * b;
    CHECK(p == LaurentCoeff::constant(ctx, 1));

    // 3z + 6z^2 divided by 3
    LaurentCoeff c = LaurentCoeff::from_terms(ctx, {{1, 3}, {2, 6}});
    LaurentCoeff q = c.exact_div_pow3(1);
    CHECK(q == LaurentCoeff::from_terms(ctx, {{1, 1}, {2, 2}}));
    CHECK_THROWS_AS(LaurentCoeff::from_terms(ctx, {{0, 4}}).exact_div_pow3(1), DivideNotExact);
}

TEST_CASE("derivative of the denominator base") {
    // d/dz (1+z)^{-1} = -(1+z)^{-2}
    for (int e : {1, 2, 3}) {
        LaurentCtx ctx{1, 1, e};
        LaurentCoeff inv = LaurentCoeff::constant(ctx, 1).mul_den_base_pow(-1);
        LaurentCoeff d = inv.derivative();
        LaurentCoeff expect = LaurentCoeff::constant(ctx, -1).mul_den_base_pow(-2);
        CHECK(d == expect);
    }
    // quotient rule against series differentiation on random elements
    std::mt19937 rng(12345);
    for (int e : {1, 3}) {
        LaurentCtx ctx{e == 1 ? 1 : -1, e == 1 ? 1 : 2, e};
        for (int trial = 0; trial < 30; ++trial) {
            LaurentCoeff x = random_lc(ctx, rng);
            TruncSeries lhs = x.derivative().to_series(60);
            TruncSeries rhs = x.to_series(61).derivative();
            CHECK(lhs.agrees_with(rhs, 60));
        }
    }
}

TEST_CASE("canonical form is idempotent and minimal") {
    LaurentCtx ctx{1, 1, 3};
    // (1+z)^2 / (1+z)^3 must normalize to den_pow 1
    LaurentCoeff x = LaurentCoeff::from_terms(ctx, {{0, 1}, {1, 2}, {2, 1}}, 3);
    CHECK(x.den_pow() == 1);
    CHECK(x.num() == LaurentCoeff::constant(ctx, 1).num());
    // already-canonical stays put
    LaurentCoeff y = LaurentCoeff::from_terms(ctx, {{0, 1}, {1, 1}}, 0);
    LaurentCoeff y2 = y + LaurentCoeff::zero(ctx);
    CHECK(y == y2);
}

TEST_CASE("ring laws checked through series expansion") {
    std::mt19937 rng(99);
    for (auto [eps, gamma] : {std::pair{1, 1}, std::pair{-1, 1}, std::pair{1, 2}, std::pair{-1, 2}}) {
        LaurentCtx ctx{eps, gamma, 2};
        for (int trial = 0; trial < 40; ++trial) {
            LaurentCoeff a = random_lc(ctx, rng), b = random_lc(ctx, rng), c = random_lc(ctx, rng);
            const int N = 200;
            TruncSeries sa = a.to_series(N), sb = b.to_series(N), sc = c.to_series(N);
            CHECK(((a * b) * c).to_series(N).agrees_with(((sa * sb).truncated(N) * sc).truncated(N), N - 20));
            CHECK((a * (b + c)).to_series(N).agrees_with((sa * (sb + sc)).truncated(N), N - 20));
            CHECK((a * b).to_series(N).agrees_with((b * a).to_series(N), N));
            CHECK((a + b).to_series(N).agrees_with(sa + sb, N));
            CHECK((a - a).is_zero());
        }
    }
}

TEST_CASE("rewriting 1/(1+z^(3^j))^alpha onto the (1+z) base") {
    // base case is exact
    LaurentCoeff base = rewrite_inv_1pz3j(0, 1, 3, 3);
    CHECK(base == LaurentCoeff::constant(LaurentCtx{1, 1, 3}, 1).mul_den_base_pow(-1));

    // (1+z)^3 == 1+z^3 mod 3
    LaurentCoeff j1b1 = rewrite_inv_1pz3j(1, 1, 1, 1);
    CHECK(j1b1 == LaurentCoeff::constant(LaurentCtx{1, 1, 1}, 1).mul_den_base_pow(-3));

    // mod 9: (1+z)^{-3} + 3z(1+z)^{-5}; checked by multiplying back
    LaurentCoeff j1b2 = rewrite_inv_1pz3j(1, 1, 2, 2);
    LaurentCoeff expect = LaurentCoeff::constant(LaurentCtx{1, 1, 2}, 1).mul_den_base_pow(-3) +
                          LaurentCoeff::monomial(LaurentCtx{1, 1, 2}, 1, 3).mul_den_base_pow(-5);
    CHECK(j1b2 == expect);

    // product with (1+z^(3^j))^alpha is 1 mod 3^beta
    for (int j = 0; j <= 4; ++j) {
        long long pj = 1;
        for (int i = 0; i < j; ++i) pj *= 3;
        int N = 27;
        for (long long t = pj; t <= 27 * pj && t <= 2187; t *= 3) N = static_cast<int>(27 * pj);
        N = static_cast<int>(std::min<long long>(2187, 27 * pj));
        for (int alpha : {1, 2, 5, 9}) {
            for (int beta = 1; beta <= 3; ++beta) {
                LaurentCoeff r = rewrite_inv_1pz3j(j, alpha, beta, beta);
                TruncSeries lhs = r.to_series(N);
                TruncSeries pw = TruncSeries::one(beta, N);
                for (int i = 0; i < alpha; ++i)
                    pw = pw.mul_sparse({{0, 1}, {static_cast<int>(pj), 1}}).truncated(N);
                CHECK((lhs * pw).truncated(N).agrees_with(TruncSeries::one(beta, N), N));
            }
        }
    }
}

TEST_CASE("substitution into the equation variable") {
    LaurentCtx unit{1, 1, 2};
    LaurentCtx target{-1, 2, 2};
    LaurentCoeff x = LaurentCoeff::from_terms(unit, {{1, 1}, {2, 5}}, 1);
    LaurentCoeff y = substitute_unit_var(x, target);
    // z -> -z^2: z becomes -z^2, z^2 becomes z^4, base becomes 1-z^2
    LaurentCoeff expect = LaurentCoeff::from_terms(target, {{2, -1}, {4, 5}}, 1);
    CHECK(y == expect);
}
