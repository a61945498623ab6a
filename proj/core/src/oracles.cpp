#include <cassert>
#include <stdexcept>

#include "psicong/sequences.hpp"

namespace psicong {

namespace {

// lattice paths with steps U/H/D, never below the axis
// mode 0: end at height 0 (Motzkin)
// mode 1: end anywhere (Motzkin prefix)
// mode 2: end at 0, H forbidden on the axis (Riordan)
TruncSeries motzkin_like(int N, int e, int mode) {
    std::uint64_t m = pow3(e);
    TruncSeries out(e, 0, N - 1);
    std::vector<std::uint64_t> dp(static_cast<std::size_t>(N + 2), 0), nx = dp;
    dp[0] = 1;
    for (int n = 0; n < N; ++n) {
        if (mode == 1) {
            std::uint64_t s = 0;
            for (int h = 0; h <= n; ++h) s = (s + dp[static_cast<std::size_t>(h)]) % m;
            out.set(n, s);
        } else {
            out.set(n, dp[0]);
        }
        std::fill(nx.begin(), nx.end(), 0);
        for (int h = 0; h <= n; ++h) {
            std::uint64_t c = dp[static_cast<std::size_t>(h)];
            if (!c) continue;
            if (!(mode == 2 && h == 0)) nx[static_cast<std::size_t>(h)] = (nx[static_cast<std::size_t>(h)] + c) % m;
            nx[static_cast<std::size_t>(h + 1)] = (nx[static_cast<std::size_t>(h + 1)] + c) % m;
            if (h > 0) nx[static_cast<std::size_t>(h - 1)] = (nx[static_cast<std::size_t>(h - 1)] + c) % m;
        }
        std::swap(dp, nx);
    }
    return out;
}

TruncSeries central_trinomial_oracle(int N, int e) {
    std::uint64_t m = pow3(e);
    TruncSeries out(e, 0, N - 1);
    // free walks with steps -1/0/+1; offset by N
    std::vector<std::uint64_t> dp(static_cast<std::size_t>(2 * N + 1), 0), nx = dp;
    dp[static_cast<std::size_t>(N)] = 1;
    for (int n = 0; n < N; ++n) {
        out.set(n, dp[static_cast<std::size_t>(N)]);
        std::fill(nx.begin(), nx.end(), 0);
        for (int h = N - n; h <= N + n; ++h) {
            std::uint64_t c = dp[static_cast<std::size_t>(h)];
            if (!c) continue;
            for (int d = -1; d <= 1; ++d)
                nx[static_cast<std::size_t>(h + d)] = (nx[static_cast<std::size_t>(h + d)] + c) % m;
        }
        std::swap(dp, nx);
    }
    return out;
}

TruncSeries delannoy_oracle(int N, int e) {
    std::uint64_t m = pow3(e);
    TruncSeries out(e, 0, N - 1);
    std::vector<std::uint64_t> row(static_cast<std::size_t>(N), 0), prev(static_cast<std::size_t>(N), 0);
    for (int i = 0; i < N; ++i) {
        for (int j = 0; j < N; ++j) {
            if (i == 0 || j == 0)
                row[static_cast<std::size_t>(j)] = 1;
            else
                row[static_cast<std::size_t>(j)] =
                    (prev[static_cast<std::size_t>(j)] + row[static_cast<std::size_t>(j - 1)] +
                     prev[static_cast<std::size_t>(j - 1)]) % m;
        }
        out.set(i, row[static_cast<std::size_t>(i)]);
        std::swap(row, prev);
    }
    return out;
}

TruncSeries schroeder_oracle(int N, int e) {
    std::uint64_t m = pow3(e);
    TruncSeries out(e, 0, N - 1);
    // dp[x][h] over x = 0..2N; steps (1,+1), (1,-1), (2,0); never below axis
    int W = 2 * N;
    std::vector<std::vector<std::uint64_t>> dp(
        static_cast<std::size_t>(W + 1), std::vector<std::uint64_t>(static_cast<std::size_t>(N + 2), 0));
    dp[0][0] = 1;
    for (int x = 1; x <= W; ++x) {
        for (int h = 0; h <= N; ++h) {
            std::uint64_t acc = 0;
            if (h > 0) acc += dp[static_cast<std::size_t>(x - 1)][static_cast<std::size_t>(h - 1)];
            acc += dp[static_cast<std::size_t>(x - 1)][static_cast<std::size_t>(h + 1)];
            if (x >= 2) acc += dp[static_cast<std::size_t>(x - 2)][static_cast<std::size_t>(h)];
            dp[static_cast<std::size_t>(x)][static_cast<std::size_t>(h)] = acc % m;
        }
    }
    for (int n = 0; n < N; ++n) out.set(n, dp[static_cast<std::size_t>(2 * n)][0]);
    return out;
}

TruncSeries hex_tree_oracle(int N, int e) {
    std::uint64_t m = pow3(e);
    TruncSeries out(e, 0, N - 1);
    // root decomposition: empty, one child in 3 flavors, or left+right pair
    std::vector<std::uint64_t> h(static_cast<std::size_t>(N), 0);
    h[0] = 1;
    for (int n = 1; n < N; ++n) {
        std::uint64_t acc = mulmod(3, h[static_cast<std::size_t>(n - 1)], m);
        for (int i = 0; i + 2 <= n; ++i)
            acc = (acc + mulmod(h[static_cast<std::size_t>(i)], h[static_cast<std::size_t>(n - 2 - i)], m)) % m;
        h[static_cast<std::size_t>(n)] = acc % m;
    }
    for (int n = 0; n < N; ++n) out.set(n, h[static_cast<std::size_t>(n)]);
    return out;
}

TruncSeries free_subgroups_oracle(int N, int e, long long m_par) {
    std::uint64_t m = pow3(e);
    TruncSeries out(e, 0, N - 1);
    std::vector<std::uint64_t> f(static_cast<std::size_t>(N), 0);
    f[0] = 1;
    auto red = [&](long long v) {
        long long r = v % static_cast<long long>(m);
        if (r < 0) r += static_cast<long long>(m);
        return static_cast<std::uint64_t>(r);
    };
    for (int n = 1; n < N; ++n) {
        std::uint64_t acc = 0;
        for (int i = 0; i + 1 <= n; ++i)
            acc = (acc + mulmod(f[static_cast<std::size_t>(i)], f[static_cast<std::size_t>(n - 1 - i)], m)) % m;
        std::uint64_t lin = red(6 * m_par - 2 + 6 * m_par * (n - 1));
        acc = (acc + mulmod(lin, f[static_cast<std::size_t>(n - 1)], m)) % m;
        if (n == 1) acc = (acc + red(1 - 6 * m_par + 5 * m_par * m_par)) % m;
        f[static_cast<std::size_t>(n)] = acc;
    }
    for (int n = 0; n < N; ++n) out.set(n, f[static_cast<std::size_t>(n)]);
    return out;
}

// exact binomial-formula oracles
TruncSeries central_binomial_oracle(int N, int e, bool partial_sums) {
    std::uint64_t m = pow3(e);
    TruncSeries out(e, 0, N - 1);
    BigInt b(1), sum(1);
    for (int n = 0; n < N; ++n) {
        out.set(n, partial_sums ? sum.mod_u64(m) : b.mod_u64(m));
        b.mul_small(2 * (2 * n + 1));
        b.exact_div(n + 1);
        sum += b;
    }
    return out;
}

TruncSeries catalan_oracle(int N, int e) {
    std::uint64_t m = pow3(e);
    TruncSeries out(e, 0, N - 1);
    BigInt c(1);
    for (int n = 0; n < N; ++n) {
        out.set(n, c.mod_u64(m));
        c.mul_small(2 * (2 * n + 1));
        c.exact_div(n + 2);
    }
    return out;
}

TruncSeries almost_central_binomial_oracle(int N, int e) {
    std::uint64_t m = pow3(e);
    TruncSeries out(e, 0, N - 1);
    BigInt b(1);  // binom(2n+2, n) at n = 0
    for (int n = 0; n < N; ++n) {
        out.set(n, b.mod_u64(m));
        b.mul_small(2 * n + 3);
        b.mul_small(2 * n + 4);
        b.exact_div(n + 1);
        b.exact_div(n + 3);
    }
    return out;
}

TruncSeries apery_oracle(int kind, int N, int e) {
    std::uint64_t m = pow3(e);
    TruncSeries out(e, 0, N - 1);
    BigInt a0(1), a1(kind == 2 ? 3 : 5);
    if (N > 0) out.set(0, a0.mod_u64(m));
    if (N > 1) out.set(1, a1.mod_u64(m));
    for (long long n = 0; n + 2 < N; ++n) {
        BigInt nxt;
        if (kind == 2) {
            BigInt t1 = a1;
            t1.mul_small(11 * n * n + 33 * n + 25);
            BigInt t0 = a0;
            t0.mul_small((n + 1) * (n + 1));
            nxt = t1 + t0;
            nxt.exact_div(n + 2);
            nxt.exact_div(n + 2);
        } else {
            BigInt t1 = a1;
            t1.mul_small(2 * n + 3);
            t1.mul_small(17 * n * n + 51 * n + 39);
            BigInt t0 = a0;
            t0.mul_small(n + 1);
            t0.mul_small(n + 1);
            t0.mul_small(n + 1);
            nxt = t1 - t0;
            nxt.exact_div(n + 2);
            nxt.exact_div(n + 2);
            nxt.exact_div(n + 2);
        }
        out.set(static_cast<int>(n + 2), nxt.mod_u64(m));
        a0 = std::move(a1);
        a1 = std::move(nxt);
    }
    return out;
}

}  // namespace

BigInt apery_sum_exact(int kind, int n) {
    BigInt acc;
    BigInt bnk(1);   // binom(n,k)
    BigInt bnpk(1);  // binom(n+k,k)
    for (int k = 0; k <= n; ++k) {
        BigInt term = bnk * bnk * bnpk;
        if (kind == 3) term = term * bnpk;
        acc += term;
        if (k < n) {
            bnk.mul_small(n - k);
            bnk.exact_div(k + 1);
            bnpk.mul_small(n + k + 1);
            bnpk.exact_div(k + 1);
        }
    }
    return acc;
}

BigInt eulerian_Ank_exact(long long n, long long k) {
    // A(n,k) = sum_{j=1}^{k} (-1)^(k-j) C(n+1, k-j) j^n
    BigInt acc;
    for (long long j = 1; j <= k; ++j) {
        BigInt t = BigInt(j).pow(static_cast<unsigned>(n)) * BigInt::binomial(n + 1, k - j);
        if ((k - j) % 2) acc -= t;
        else acc += t;
    }
    return acc;
}

TruncSeries eulerian_central_oracle(int kind, int N, int e, int check_symmetry_to) {
    std::uint64_t m = pow3(e);
    TruncSeries out(e, 0, N - 1);
    // pw[j] tracks j^(2n) (kind 1) or j^(2n-1) (kind 2), updated by j^2
    std::vector<BigInt> pw;
    pw.reserve(static_cast<std::size_t>(N + 2));
    pw.emplace_back(0);
    for (int n = 0; n < N; ++n) {
        int jmax = kind == 1 ? n + 1 : n;
        long long top = kind == 1 ? 2 * n + 1 : 2 * n;
        while (static_cast<int>(pw.size()) <= jmax) {
            long long j = static_cast<long long>(pw.size());
            unsigned exp0 = kind == 1 ? static_cast<unsigned>(2 * n) : static_cast<unsigned>(2 * n - 1);
            pw.push_back(BigInt(j).pow(exp0));
        }
        BigInt acc;
        BigInt c(1);  // C(top, jmax - j), starting with j = jmax
        for (long long j = jmax; j >= 1; --j) {
            BigInt term = c * pw[static_cast<std::size_t>(j)];
            if ((jmax - j) % 2) acc -= term;
            else acc += term;
            long long t = jmax - j;
            c.mul_small(top - t);
            c.exact_div(t + 1);
        }
        if (kind == 1 && check_symmetry_to >= 1 && n >= 1 && n <= check_symmetry_to) {
            BigInt acc_left;  // A(2n, n), same powers, shifted binomials
            BigInt c2(1);
            for (long long j = n; j >= 1; --j) {
                BigInt term = c2 * pw[static_cast<std::size_t>(j)];
                if ((n - j) % 2) acc_left -= term;
                else acc_left += term;
                long long t = n - j;
                c2.mul_small(top - t);
                c2.exact_div(t + 1);
            }
            if (!(acc_left == acc))
                throw std::logic_error("central Eulerian symmetry failed at n=" + std::to_string(n));
        }
        out.set(n, acc.mod_u64(m));
        // advance powers to the next column
        for (std::size_t j = 1; j < pw.size(); ++j)
            pw[j] = pw[j] * BigInt(static_cast<long long>(j * j));
    }
    return out;
}

TruncSeries oracle_terms(const SequenceId& id, int N, int e) {
    switch (id.kind) {
        case Seq::motzkin: return motzkin_like(N, e, 0);
        case Seq::motzkin_prefix: return motzkin_like(N, e, 1);
        case Seq::riordan: return motzkin_like(N, e, 2);
        case Seq::central_trinomial: return central_trinomial_oracle(N, e);
        case Seq::central_binomial: return central_binomial_oracle(N, e, false);
        case Seq::central_binomial_sums: return central_binomial_oracle(N, e, true);
        case Seq::catalan: return catalan_oracle(N, e);
        case Seq::almost_central_binomial: return almost_central_binomial_oracle(N, e);
        case Seq::delannoy: return delannoy_oracle(N, e);
        case Seq::schroeder: return schroeder_oracle(N, e);
        case Seq::hex_tree: return hex_tree_oracle(N, e);
        case Seq::free_subgroups: return free_subgroups_oracle(N, e, id.m);
        case Seq::eulerian_even: return eulerian_central_oracle(1, N, e);
        case Seq::eulerian_odd: return eulerian_central_oracle(2, N, e);
        case Seq::apery_zeta2: return apery_oracle(2, N, e);
        case Seq::apery_zeta3: return apery_oracle(3, N, e);
    }
    throw UnsupportedId("oracle_terms: unknown id");
}

std::vector<std::uint64_t> oracle_anchor(const SequenceId& id, int e, int len) {
    TruncSeries s = oracle_terms(id, len, e);
    std::vector<std::uint64_t> a(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) a[static_cast<std::size_t>(i)] = s.at(i);
    return a;
}

}  // namespace psicong
