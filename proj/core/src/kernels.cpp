#include <cassert>

#include "psicong/sequences.hpp"

namespace psicong {

namespace {

using BPoly = std::vector<BigInt>;

void btrim(BPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

BPoly badd(const BPoly& a, const BPoly& b) {
    BPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] += b[i];
    }
    btrim(r);
    return r;
}

BPoly bmul(const BPoly& a, const BPoly& b) {
    if (a.empty() || b.empty()) return {};
    BPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    btrim(r);
    return r;
}

BPoly bscale(BPoly p, const BigInt& c) {
    for (auto& x : p) x = x * c;
    btrim(p);
    return p;
}

}  // namespace

EulerKernel euler_kernel(int kind, int s) {
    assert((kind == 1 || kind == 2) && s >= 1);
    const int P = kind == 1 ? 2 * s : 2 * s - 1;  // power-sum exponent
    const int M = P;                              // top index of the m-sum

    // a_m = sum_{k=1}^m (-1)^(m-k) C(m,k) k^P
    std::vector<BigInt> a(static_cast<std::size_t>(M + 1));
    for (int m = 1; m <= M; ++m) {
        BigInt acc;
        for (int k = 1; k <= m; ++k) {
            BigInt t = BigInt(k).pow(static_cast<unsigned>(P)) * BigInt::binomial(m, k);
            if ((m - k) % 2) acc -= t;
            else acc += t;
        }
        a[static_cast<std::size_t>(m)] = acc;
    }

    // Q(x) = 2^(M-1) sum_m a_m ((x-1)/2)^(m-1), integer coefficients
    BPoly Q;
    for (int m = 1; m <= M; ++m) {
        BPoly xm1{BigInt(1)};  // (x-1)^(m-1)
        for (int i = 0; i < m - 1; ++i) xm1 = bmul(xm1, BPoly{BigInt(-1), BigInt(1)});
        BigInt scale = BigInt(2).pow(static_cast<unsigned>(M - m)) * a[static_cast<std::size_t>(m)];
        Q = badd(Q, bscale(xm1, scale));
    }

    // parity of Q decides how sqrt(1+4z) cancels:
    //   kind 1: Q odd  -> (1+p) = sum_{i odd} Q_i (1+4z)^((i-1)/2) / 2^(M-1)
    //   kind 2: Q even -> (1+p) = sum_{i even} Q_i (1+4z)^(i/2) / 2^(M-1)
    const int keep = kind == 1 ? 1 : 0;
    for (std::size_t i = 0; i < Q.size(); ++i)
        if (static_cast<int>(i % 2) != keep && !Q[i].is_zero())
            throw KernelIntegrity("euler_kernel: parity violated at x^" + std::to_string(i));

    BPoly onep;  // 2^(M-1) * (1 + p(z))
    for (std::size_t i = static_cast<std::size_t>(keep); i < Q.size(); i += 2) {
        if (Q[i].is_zero()) continue;
        int half = (static_cast<int>(i) - keep) / 2;
        BPoly w{BigInt(1)};
        for (int t = 0; t < half; ++t) w = bmul(w, BPoly{BigInt(1), BigInt(4)});
        onep = badd(onep, bscale(w, Q[i]));
    }
    BigInt den = BigInt(2).pow(static_cast<unsigned>(M - 1));
    for (auto& c : onep) {
        BigInt q = c;
        long long d = den.to_int64();
        while (d > 1) {
            // divide stepwise by 2; exactness asserted inside
            q.exact_div(2);
            d /= 2;
        }
        c = q;
    }
    if (onep.empty() || !(onep[0] == BigInt(1)))
        throw KernelIntegrity("euler_kernel: constant term is not 1");
    EulerKernel out;
    out.kind = kind;
    out.s = s;
    out.p.assign(onep.begin(), onep.end());
    out.p[0] = BigInt(0);  // p = (1+p) - 1
    for (std::size_t i = 1; i < out.p.size(); ++i)
        if (out.p[i].mod_u64(3) != 0)
            throw KernelIntegrity("euler_kernel: coefficient of z^" + std::to_string(i) +
                                  " not divisible by 3");
    btrim(out.p);
    return out;
}

FunctionalEq euler_equation(int kind, int s) {
    EulerKernel k = euler_kernel(kind, s);
    BPoly onep = k.p;
    if (onep.empty()) onep.assign(1, BigInt(0));
    onep[0] += BigInt(1);
    FunctionalEq q;
    q.eps = 1;
    q.gamma = 1;
    if (kind == 1) {
        // E^2 - (1+p) E - z (1+p)^2 = 0
        q.name = "eulerian_even_s" + std::to_string(s);
        BPoly a0 = bmul(onep, onep);
        a0.insert(a0.begin(), BigInt(0));
        q.A = {bscale(a0, BigInt(-1)), bscale(onep, BigInt(-1)), {BigInt(1)}};
    } else {
        // (1+4z) E^2 - z^2 (1+p)^2 = 0
        q.name = "eulerian_odd_s" + std::to_string(s);
        BPoly a0 = bmul(onep, onep);
        a0.insert(a0.begin(), BigInt(0));
        a0.insert(a0.begin(), BigInt(0));
        q.A = {bscale(a0, BigInt(-1)), {}, {BigInt(1), BigInt(4)}};
    }
    return q;
}

}  // namespace psicong
