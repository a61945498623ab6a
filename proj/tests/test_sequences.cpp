#include <doctest.h>

#include "psicong/sequences.hpp"

using namespace psicong;

namespace {
void check_prefix(Seq kind, std::initializer_list<std::uint64_t> want, int e = 3) {
    TruncSeries s = oracle_terms({kind}, static_cast<int>(want.size()), e);
    int n = 0;
    for (auto w : want) CHECK(s.at(n++) == w % pow3(e));
}
}  // namespace

TEST_CASE("oracle prefixes") {
    check_prefix(Seq::motzkin, {1, 1, 2, 4, 9, 21});
    check_prefix(Seq::motzkin_prefix, {1, 2, 5, 13, 35});
    check_prefix(Seq::riordan, {1, 0, 1, 1, 3, 6, 15, 36});
    check_prefix(Seq::central_trinomial, {1, 1, 3, 7, 19, 51});
    check_prefix(Seq::central_binomial, {1, 2, 6, 20, 70});
    check_prefix(Seq::central_binomial_sums, {1, 3, 9, 29, 99});
    check_prefix(Seq::catalan, {1, 1, 2, 5, 14, 42});
    check_prefix(Seq::almost_central_binomial, {1, 4, 15, 56, 210});
    check_prefix(Seq::delannoy, {1, 3, 13, 63, 321});
    check_prefix(Seq::schroeder, {1, 2, 6, 22, 90});
    check_prefix(Seq::hex_tree, {1, 3, 10, 36, 137});
    check_prefix(Seq::apery_zeta2, {1, 3, 19, 147});
    check_prefix(Seq::apery_zeta3, {1, 5, 73, 1445});
    // free subgroup counts of the base lift: 1, 5, 60, ...
    TruncSeries fs = oracle_terms({Seq::free_subgroups, 1}, 3, 3);
    CHECK(fs.at(0) == 1);
    CHECK(fs.at(1) == 5);
    CHECK(fs.at(2) == 60 % 27);
}

TEST_CASE("apery oracles: recurrence equals the binomial double sums") {
    for (int kind : {2, 3}) {
        SequenceId id{kind == 2 ? Seq::apery_zeta2 : Seq::apery_zeta3};
        TruncSeries rec = oracle_terms(id, 501, 3);
        for (int n = 0; n <= 500; n += (n < 40 ? 1 : 23))
            CHECK(rec.at(n) == apery_sum_exact(kind, n).mod_u64(27));
    }
}

TEST_CASE("eulerian oracle: exact values and symmetry") {
    CHECK(eulerian_Ank_exact(6, 4).to_int64() == 302);
    CHECK(eulerian_Ank_exact(4, 3).to_int64() == 11);
    CHECK(eulerian_Ank_exact(0, 1).to_int64() == 1);
    // symmetry A(2n,n) == A(2n,n+1) runs inside the oracle for n <= 200
    TruncSeries even = eulerian_central_oracle(1, 220, 3, 200);
    CHECK(even.at(0) == 1);
    CHECK(even.at(1) == 1);
    CHECK(even.at(2) == 11);
    CHECK(even.at(3) == 302 % 27);
    TruncSeries odd = eulerian_central_oracle(2, 10, 3);
    CHECK(odd.at(0) == 0);
    CHECK(odd.at(1) == 1);
    CHECK(odd.at(2) == eulerian_Ank_exact(3, 2).mod_u64(27));
    CHECK(odd.at(3) == eulerian_Ank_exact(5, 3).mod_u64(27));
}

TEST_CASE("eulerian kernels") {
    CHECK(euler_kernel(1, 1).p.empty());
    auto k12 = euler_kernel(1, 2);
    REQUIRE(k12.p.size() == 2);
    CHECK(k12.p[1].to_int64() == 12);
    auto k13 = euler_kernel(1, 3);
    REQUIRE(k13.p.size() == 3);
    CHECK(k13.p[1].to_int64() == 60);
    CHECK(k13.p[2].to_int64() == 360);
    auto k22 = euler_kernel(2, 2);
    REQUIRE(k22.p.size() == 2);
    CHECK(k22.p[1].to_int64() == 6);
    auto k23 = euler_kernel(2, 3);
    REQUIRE(k23.p.size() == 3);
    CHECK(k23.p[1].to_int64() == 30);
    CHECK(k23.p[2].to_int64() == 120);
    auto k24 = euler_kernel(2, 4);
    REQUIRE(k24.p.size() == 4);
    CHECK(k24.p[1].to_int64() == 126);
    CHECK(k24.p[2].to_int64() == 1680);
    CHECK(k24.p[3].to_int64() == 5040);
    // integrality, 3-divisibility and vanishing at 0 are asserted inside;
    // exercise the full range
    for (int kind : {1, 2})
        for (int s = 1; s <= 10; ++s) CHECK_NOTHROW(euler_kernel(kind, s));
}

TEST_CASE("fixtures match oracles") {
    const int N = 243;
    for (auto& id : sequence_catalog()) {
        for (int e : {2, 3}) {
            if (id.kind == Seq::apery_zeta2 || id.kind == Seq::apery_zeta3) continue;
            if (!has_fixture(id, e)) continue;
            TruncSeries fx = fixture_rep(id, e).to_series(N);
            TruncSeries want = oracle_terms(id, N + 1, e);
            int fd = fx.first_difference(want, N);
            if (id.kind == Seq::eulerian_even && e == 2) {
                // the printed mod-9 table misses the small-index correction:
                // its constant term is 4 while the sequence value is 1;
                // every other coefficient agrees
                CHECK(fd == 0);
                CHECK(fx.at(0) == 4);
                CHECK(want.at(0) == 1);
                TruncSeries adjusted = fx;
                adjusted.set(0, 1);
                CHECK(adjusted.agrees_with(want, N));
            } else if (id.kind == Seq::hex_tree && e == 2) {
                // the printed mod-9 table has no odd-exponent content at
                // all, yet odd-index values are not all divisible by 9; the
                // even part agrees, and reducing the (verified) mod-27
                // table gives the full correct form
                CHECK(fd == 1);
                for (int n = 0; n <= N; n += 2) CHECK(fx.at(n) == want.at(n));
                TruncSeries h27 = fixture_rep(id, 3).to_series(N).reduced_mod(2);
                CHECK(h27.agrees_with(want, N));
            } else {
                CHECK(fd > N);
            }
        }
    }
    // the free-subgroup fixtures cover every unit residue of the parameter
    for (int m : {2, 4, 5, 7}) {
        SequenceId id{Seq::free_subgroups, m};
        for (int e : {2, 3}) {
            TruncSeries fx = fixture_rep(id, e).to_series(200);
            TruncSeries want = oracle_terms(id, 201, e);
            if (e == 3 && m % 3 == 2) {
                // printed table for the 2-mod-3 lifts is off by multiples
                // of 9 (a constant block at n in {-1,0,1} and an m-linear
                // pattern vanishing at m = 2); it still reduces correctly
                // mod 9, which is what the acceptance sweep relies on
                for (int n = -1; n <= 200; ++n) {
                    std::uint64_t d = (want.at(n) + 27 - fx.at(n)) % 27;
                    CHECK(d % 9 == 0);
                    if (m == 2 && (n < -1 || n > 1)) CHECK(d == 0);
                }
            } else {
                CHECK(fx.agrees_with(want, 200));
            }
        }
    }
    CHECK_THROWS_AS(fixture_rep({Seq::apery_zeta2}, 3), NoFixture);
}

TEST_CASE("derivation equals fixtures as series") {
    for (auto kind : {Seq::catalan, Seq::motzkin, Seq::delannoy}) {
        SequenceId id{kind};
        PsiPoly rep = derive_sequence(id, 1, 3);
        PsiPoly fx = fixture_rep(id, 3);
        CHECK(rep.to_series(243).agrees_with(fx.to_series(243), 243));
    }
}

TEST_CASE("eulerian assembly mod 9 and mod 27") {
    for (int kind : {1, 2}) {
        for (int beta : {2, 3}) {
            PsiPoly rep = derive_eulerian(kind, beta);
            TruncSeries got = rep.to_series(200);
            TruncSeries want = eulerian_central_oracle(kind, 201, beta);
            CHECK(got.agrees_with(want, 200));
        }
    }
}
