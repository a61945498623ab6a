#include "psicong/solver.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace psicong {

std::vector<BigInt> FunctionalEq::poly(const std::vector<long long>& asc) {
    std::vector<BigInt> p;
    p.reserve(asc.size());
    for (long long v : asc) p.emplace_back(v);
    return p;
}

namespace {

using Poly3 = std::vector<std::uint8_t>;  // ascending GF(3) coefficients

Poly3 to_poly3(const std::vector<BigInt>& p) {
    Poly3 r(p.size(), 0);
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = static_cast<std::uint8_t>(p[i].mod_u64(3));
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

Poly3 mul3(const Poly3& a, const Poly3& b) {
    if (a.empty() || b.empty()) return {};
    Poly3 r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint8_t>((r[i + j] + a[i] * b[j]) % 3);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

Poly3 sub3(const Poly3& a, const Poly3& b) {
    Poly3 r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        int x = (i < a.size() ? a[i] : 0) - (i < b.size() ? b[i] : 0);
        r[i] = static_cast<std::uint8_t>(((x % 3) + 3) % 3);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

Poly3 neg3(const Poly3& a) { return sub3({}, a); }

int low_deg(const Poly3& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i]) return static_cast<int>(i);
    return -1;
}

// exact division by (1 + s*z^g) with s in {1,2}; nullopt when not exact
std::optional<Poly3> div_one_plus3(const Poly3& p, int s, int g) {
    if (p.empty()) return Poly3{};
    if (static_cast<int>(p.size()) <= g) return std::nullopt;
    Poly3 q(p.size() - static_cast<std::size_t>(g), 0);
    Poly3 rem = p;
    for (std::size_t i = 0; i < q.size(); ++i) {
        q[i] = rem[i];
        if (q[i]) {
            std::size_t j = i + static_cast<std::size_t>(g);
            rem[j] = static_cast<std::uint8_t>(((rem[j] - s * q[i]) % 3 + 3) % 3);
        }
    }
    for (std::size_t i = q.size(); i < rem.size(); ++i)
        if (rem[i]) return std::nullopt;
    return q;
}

// square root of a GF(3) polynomial with r[0] == 1; nullopt if none
std::optional<Poly3> sqrt3(const Poly3& r) {
    if (r.empty() || r[0] != 1) return std::nullopt;
    if (r.size() % 2 == 0) return std::nullopt;
    Poly3 u((r.size() + 1) / 2, 0);
    u[0] = 1;
    for (std::size_t k = 1; k < u.size(); ++k) {
        int acc = k < r.size() ? r[k] : 0;
        for (std::size_t j = 1; j < k; ++j) acc -= u[j] * u[k - j];
        // 2*u0*uk = acc  =>  uk = acc * inverse(2) = acc * 2 (mod 3)
        u[k] = static_cast<std::uint8_t>((((acc * 2) % 3) + 3) % 3);
    }
    // verify (catches non-squares)
    Poly3 sq = mul3(u, u);
    if (sq.size() != r.size()) return std::nullopt;
    for (std::size_t i = 0; i < r.size(); ++i)
        if (sq[i] != r[i]) return std::nullopt;
    return u;
}

}  // namespace

EquationShape validate_equation(const FunctionalEq& eqn) {
    if (eqn.A.size() < 3) throw ShapeMismatch(eqn.name + ": no quadratic term");
    Poly3 c0 = eqn.A.size() > 0 ? to_poly3(eqn.A[0]) : Poly3{};
    Poly3 c1 = eqn.A.size() > 1 ? to_poly3(eqn.A[1]) : Poly3{};
    Poly3 c2 = to_poly3(eqn.A[2]);
    for (std::size_t j = 3; j < eqn.A.size(); ++j)
        if (!to_poly3(eqn.A[j]).empty())
            throw ShapeMismatch(eqn.name + ": F^" + std::to_string(j) + " term not divisible by 3");
    for (std::size_t k = 1; k < eqn.D.size(); ++k)
        if (!to_poly3(eqn.D[k]).empty())
            throw ShapeMismatch(eqn.name + ": derivative term not divisible by 3");
    if (c2.empty()) throw ShapeMismatch(eqn.name + ": c2 vanishes mod 3");

    EquationShape out;
    out.e1 = low_deg(c2);
    if (c2[static_cast<std::size_t>(out.e1)] == 2) {
        out.negated = true;
        c0 = neg3(c0);
        c1 = neg3(c1);
        c2 = neg3(c2);
    }
    // c2 / z^e1 must be (1+eps z^gamma)^e2
    Poly3 body(c2.begin() + out.e1, c2.end());
    int s = eqn.eps == 1 ? 1 : 2;
    out.e2 = 0;
    while (body.size() > 1) {
        auto q = div_one_plus3(body, s, eqn.gamma);
        if (!q) throw ShapeMismatch(eqn.name + ": c2 mod 3 is not z^e1 (1+eps z^gamma)^e2");
        body = *q;
        ++out.e2;
    }
    if (body != Poly3{1}) throw ShapeMismatch(eqn.name + ": c2 mod 3 has a non-unit residue");

    Poly3 w = sub3(mul3(c1, c1), mul3(c0, c2));
    if (w.empty()) throw ShapeMismatch(eqn.name + ": c1^2 - c0 c2 vanishes mod 3");
    int lw = low_deg(w);
    if (lw % 2 != 0) throw ShapeMismatch(eqn.name + ": odd z-order in c1^2 - c0 c2");
    out.f1 = lw / 2;
    Poly3 v(w.begin() + lw, w.end());
    int b = 0;
    for (;;) {
        auto q = div_one_plus3(v, s, eqn.gamma);
        if (!q) break;
        v = *q;
        ++b;
    }
    if (b % 2 != 1)
        throw ShapeMismatch(eqn.name + ": even power of (1+eps z^gamma) in c1^2 - c0 c2");
    out.f2 = (b - 1) / 2;
    auto u = sqrt3(v);
    if (!u) throw ShapeMismatch(eqn.name + ": residual factor of c1^2 - c0 c2 is not a square mod 3");
    out.u = *u;
    out.c1_mod3 = c1;
    return out;
}

namespace {

struct RowEvaluator {
    std::uint64_t M;
    int N;
    std::vector<std::vector<std::uint64_t>> A;  // reduced mod M
    std::vector<std::vector<std::uint64_t>> D;
    int maxj;
    int K = 0;  // lookahead: row n fully determined once f[0..n+K] are set
    std::vector<std::uint64_t> f, p2, p3, p4;

    RowEvaluator(const FunctionalEq& eqn, int e, int n) : M(pow3(e)), N(n) {
        auto reduce = [&](const std::vector<BigInt>& p) {
            std::vector<std::uint64_t> r(p.size());
            for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[i].mod_u64(M);
            while (!r.empty() && r.back() == 0) r.pop_back();
            return r;
        };
        for (auto& p : eqn.A) A.push_back(reduce(p));
        for (auto& p : eqn.D) D.push_back(reduce(p));
        maxj = static_cast<int>(A.size()) - 1;
        for (std::size_t k = 1; k < D.size(); ++k) {
            if (D[k].empty()) continue;
            int lo = 0;
            while (D[k][static_cast<std::size_t>(lo)] == 0) ++lo;
            K = std::max(K, static_cast<int>(k) - lo);
        }
        f.assign(static_cast<std::size_t>(N + K + 1), 0);
        p2 = p3 = p4 = f;
    }

    void assign(int t, std::uint64_t v) {
        f[static_cast<std::size_t>(t)] = v;
        std::uint64_t s2 = 0, s3 = 0, s4 = 0;
        for (int i = 0; i <= t; ++i) {
            s2 = (s2 + mulmod(f[static_cast<std::size_t>(i)], f[static_cast<std::size_t>(t - i)], M)) % M;
        }
        p2[static_cast<std::size_t>(t)] = s2;
        if (maxj >= 3) {
            for (int i = 0; i <= t; ++i)
                s3 = (s3 + mulmod(f[static_cast<std::size_t>(i)], p2[static_cast<std::size_t>(t - i)], M)) % M;
            p3[static_cast<std::size_t>(t)] = s3;
        }
        if (maxj >= 4) {
            for (int i = 0; i <= t; ++i)
                s4 = (s4 + mulmod(p2[static_cast<std::size_t>(i)], p2[static_cast<std::size_t>(t - i)], M)) % M;
            p4[static_cast<std::size_t>(t)] = s4;
        }
    }

    // falling factorial x(x-1)..(x-k+1) mod M
    std::uint64_t falling(long long x, int k) const {
        std::uint64_t r = 1;
        for (int i = 0; i < k; ++i) {
            long long t = (x - i) % static_cast<long long>(M);
            if (t < 0) t += static_cast<long long>(M);
            r = mulmod(r, static_cast<std::uint64_t>(t), M);
        }
        return r;
    }

    // coefficient of z^n in the equation applied to the current prefix
    std::uint64_t row(int n) const {
        std::uint64_t acc = 0;
        auto addpoly = [&](const std::vector<std::uint64_t>& p, const std::vector<std::uint64_t>& pw) {
            for (std::size_t i = 0; i < p.size(); ++i) {
                if (!p[i] || static_cast<int>(i) > n) continue;
                acc = (acc + mulmod(p[i], pw[static_cast<std::size_t>(n - static_cast<int>(i))], M)) % M;
            }
        };
        if (!A.empty() && !A[0].empty() && n < static_cast<int>(A[0].size())) acc = A[0][static_cast<std::size_t>(n)] % M;
        if (A.size() > 1) addpoly(A[1], f);
        if (A.size() > 2) addpoly(A[2], p2);
        if (A.size() > 3) addpoly(A[3], p3);
        if (A.size() > 4) addpoly(A[4], p4);
        for (std::size_t k = 1; k < D.size(); ++k) {
            for (std::size_t i = 0; i < D[k].size(); ++i) {
                if (!D[k][i] || static_cast<int>(i) > n + static_cast<int>(k)) continue;
                long long src = n - static_cast<int>(i) + static_cast<int>(k);
                if (src < 0 || src >= static_cast<long long>(f.size())) continue;
                std::uint64_t term = mulmod(f[static_cast<std::size_t>(src)], falling(src, static_cast<int>(k)), M);
                acc = (acc + mulmod(D[k][i], term, M)) % M;
            }
        }
        return acc;
    }
};

struct Search {
    RowEvaluator ev;
    const std::vector<std::uint64_t>& anchor;
    int N;      // prefix length whose determination is probed
    int depth;  // assignments go this deep so delayed constraints bind
    long long budget = 5000000;

    Search(const FunctionalEq& eqn, int e, int n, const std::vector<std::uint64_t>& a)
        : ev(eqn, e, 2 * n), anchor(a), N(n), depth(2 * n + ev.K) {}

    bool row_ok(int t) { return t - ev.K < 0 || ev.row(t - ev.K) == 0; }

    // find any completion from position t; out != null captures f[0..N]
    bool dfs(int t, std::vector<std::uint64_t>* out) {
        if (--budget < 0)
            throw SolverError("series-uniqueness probe exceeded its search budget; "
                              "reduce the requested prefix length");
        if (t > depth) {
            if (out) out->assign(ev.f.begin(), ev.f.begin() + N + 1);
            return true;
        }
        std::uint64_t lo = 0, hi = ev.M - 1;
        if (t < static_cast<int>(anchor.size())) lo = hi = anchor[static_cast<std::size_t>(t)] % ev.M;
        for (std::uint64_t v = lo; v <= hi; ++v) {
            ev.assign(t, v);
            if (!row_ok(t)) continue;
            if (dfs(t + 1, out)) return true;
        }
        return false;
    }
};

}  // namespace

UniqueSeriesResult unique_series_solution(const FunctionalEq& eqn, int e, int N,
                                          const std::vector<std::uint64_t>& anchor) {
    Search s(eqn, e, N, anchor);
    std::vector<std::uint64_t> sol;
    if (!s.dfs(0, &sol))
        throw Inconsistent(eqn.name + ": no power-series solution mod 3^" + std::to_string(e));
    UniqueSeriesResult r;
    // earliest index where a different value also extends to the horizon
    for (int t = static_cast<int>(anchor.size()); t <= N; ++t) {
        for (int i = 0; i < t; ++i) s.ev.assign(i, sol[static_cast<std::size_t>(i)]);
        for (std::uint64_t v = 0; v < s.ev.M; ++v) {
            if (v == sol[static_cast<std::size_t>(t)]) continue;
            s.ev.assign(t, v);
            if (!s.row_ok(t)) continue;
            if (s.dfs(t + 1, nullptr)) {
                r.nonunique_index = t;
                return r;
            }
        }
    }
    TruncSeries out(e, 0, N);
    for (int i = 0; i <= N; ++i) out.set(i, sol[static_cast<std::size_t>(i)]);
    r.series = out;
    return r;
}

PsiPoly eval_equation(const FunctionalEq& eqn, const PsiPoly& f) {
    const PsiContext& ctx = f.ctx();
    LaurentCtx lc = ctx.lctx();
    std::uint64_t m = pow3(ctx.e);
    auto to_lc = [&](const std::vector<BigInt>& p) {
        std::vector<std::pair<int, long long>> terms;
        for (std::size_t i = 0; i < p.size(); ++i) {
            std::uint64_t v = p[i].mod_u64(m);
            if (v) terms.emplace_back(static_cast<int>(i), static_cast<long long>(v));
        }
        return LaurentCoeff::from_terms(lc, terms);
    };

    PsiPoly acc = PsiPoly::zero(ctx);
    PsiPoly pw = PsiPoly::one(ctx);
    for (std::size_t j = 0; j < eqn.A.size(); ++j) {
        if (j > 0) pw = pw * f;
        LaurentCoeff cj = to_lc(eqn.A[j]);
        if (!cj.is_zero()) acc = acc + pw.scaled(cj);
    }
    if (!eqn.D.empty()) {
        PsiPoly der = f;
        for (std::size_t k = 1; k < eqn.D.size(); ++k) {
            der = der.derivative();
            LaurentCoeff ck = to_lc(eqn.D[k]);
            if (!ck.is_zero()) acc = acc + der.scaled(ck);
        }
    }
    return acc;
}

namespace {

// exact division of the numerator by a unit polynomial u over GF(3)
LaurentCoeff lc_div_unit_poly(const LaurentCoeff& x, const Poly3& u, const std::string& what) {
    if (u.size() <= 1) return x;  // u == 1
    assert(x.ctx().e == 1);
    std::map<int, std::uint64_t> rem = x.num();
    std::map<int, std::uint64_t> q;
    if (rem.empty()) return x;
    int top = rem.rbegin()->first;
    while (!rem.empty()) {
        auto [d, c] = *rem.begin();
        if (d > top) throw DivisibilityFailure(what + ": numerator not divisible by the unit factor");
        q[d] = c;
        rem.erase(rem.begin());
        for (std::size_t i = 1; i < u.size(); ++i) {
            if (!u[i]) continue;
            int dd = d + static_cast<int>(i);
            std::uint64_t sub = (c * u[i]) % 3;
            auto [it, fresh] = rem.try_emplace(dd, 0);
            it->second = (it->second + 3 - sub) % 3;
            if (it->second == 0) rem.erase(it);
        }
    }
    return lc_unsafe(x.ctx(), std::move(q), x.den_pow());
}

}  // namespace

SolveReport solve_mod3k(const FunctionalEq& eqn, int alpha, int e_target,
                        const std::vector<std::uint64_t>& anchor) {
    EquationShape sh = validate_equation(eqn);
    PsiContext ctx{eqn.eps, eqn.gamma, alpha, e_target};
    const int dim = ctx.psi_dim();
    const int half = dim / 2;  // 3^alpha
    LaurentCtx lc = ctx.lctx();

    const int prefix = 2 * half * 9;  // 2*3^(alpha+2)
    UniqueSeriesResult uniq = unique_series_solution(eqn, e_target, prefix, anchor);
    if (!uniq.unique())
        throw SolverError(eqn.name + ": no unique series solution mod 3^" + std::to_string(e_target) +
                          " (first free index " + std::to_string(uniq.nonunique_index) + ")");

    // base step, lifted from GF(3)
    std::vector<std::pair<int, long long>> c1_terms;
    for (std::size_t i = 0; i < sh.c1_mod3.size(); ++i)
        if (sh.c1_mod3[i]) c1_terms.emplace_back(static_cast<int>(i), sh.c1_mod3[i]);
    LaurentCoeff a0 = LaurentCoeff::from_terms(lc, c1_terms)
                          .mul_monomial(1, -sh.e1)
                          .mul_den_base_pow(-sh.e2);
    std::vector<std::pair<int, long long>> u_terms;
    for (std::size_t i = 0; i < sh.u.size(); ++i)
        if (sh.u[i]) u_terms.emplace_back(static_cast<int>(i), sh.u[i]);
    LaurentCoeff atop_base = LaurentCoeff::from_terms(lc, u_terms)
                                 .mul_monomial(1, sh.f1 - sh.e1)
                                 .mul_den_base_pow(sh.f2 - sh.e2 + (half + 1) / 2);

    const int g_low = sh.f2 + (half + 1) / 2;   // divisor exponent for b_j, j < 3^alpha
    const int g_high = sh.f2 - (half - 1) / 2;  // for j >= 3^alpha

    SolveReport picked;
    int matches = 0;
    for (int sign : {+1, -1}) {
        PsiPoly F(ctx);
        F.set_coeff(0, a0);
        F.set_coeff(half, sign == 1 ? atop_base : -atop_base);
        bool dead = false;
        for (int beta = 1; beta < e_target && !dead; ++beta) {
            PsiPoly resid;
            try {
                resid = eval_equation(eqn, F).exact_div_pow3(beta);
            } catch (const DivideNotExact& ex) {
                throw DivisibilityFailure(eqn.name + ": residual at level " + std::to_string(beta) +
                                          " not divisible by 3^" + std::to_string(beta));
            }
            PsiPoly B(ctx);
            for (int j = 0; j < dim; ++j) {
                int src = (j + half) % dim;
                int g = j < half ? g_low : g_high;
                LaurentCoeff rat = resid.coeff(src).reduced_mod(1);
                if (rat.is_zero()) continue;
                LaurentCoeff b = rat.mul_monomial(sign, -sh.f1).mul_den_base_pow(-g);
                b = lc_div_unit_poly(b, sh.u, eqn.name);
                B.set_coeff(j, b.lifted_to(e_target).scaled(static_cast<long long>(pow3(beta))));
            }
            // b solves resid + (c1 + 2 c2 F) b == 0 mod 3, where
            // (c1 + 2 c2 F) == -c2 a_top Psi^(3^alpha) mod 3
            F = F + B;
        }
        if (dead) continue;
        TruncSeries got = F.to_series(prefix);
        if (got.min_deg() <= -1 && !got.is_zero_up_to(-1)) continue;  // Laurent branch
        if (got.agrees_with(*uniq.series, prefix)) {
            picked.representation = F;
            picked.branch = sign;
            picked.verified_prefix = prefix;
            ++matches;
        }
    }
    if (matches == 0)
        throw SolverError(eqn.name + ": neither sign branch matches the series solution");
    if (matches > 1) throw BranchAmbiguous(eqn.name + ": both sign branches match the oracle prefix");
    return picked;
}

PsiPoly m_section(const PsiPoly& p, const std::vector<int>& residues, int beta) {
    const PsiContext& c = p.ctx();
    if (c.gamma != 1 || c.eps != 1)
        throw SectionDenominator("m_section requires a Psi(z) context with eps=+1");
    assert(beta >= 2);
    int gp = 1;
    for (int i = 0; i < beta - 1; ++i) gp *= 3;  // 3^(beta-1)
    const int e = c.e;
    std::uint64_t m = pow3(e);
    LaurentCtx target{1, gp, e};

    // (1+z)^gp = (1 + z^gp) + 3*S(z); then
    // 1/(1+z)^gp = sum_k (-3 S)^k / (1+z^gp)^(k+1) mod 3^e.
    LaurentCoeff S(target);
    {
        std::vector<std::pair<int, long long>> sterms;
        for (int i = 1; i < gp; ++i) {
            BigInt b = BigInt::binomial(gp, i);
            b.exact_div_small(3);
            std::uint64_t v = b.mod_u64(m);
            if (v) sterms.emplace_back(i, static_cast<long long>(v));
        }
        S = LaurentCoeff::from_terms(target, sterms);
    }
    LaurentCoeff T = LaurentCoeff::zero(target);
    LaurentCoeff spow = LaurentCoeff::constant(target, 1);
    for (int k = 0; k < e; ++k) {
        long long scale = (k % 2 == 0) ? 1 : -1;
        std::uint64_t p3k = pow3(k) % m;
        T = T + spow.scaled(scale * static_cast<long long>(p3k)).mul_den_base_pow(-(k + 1));
        spow = spow * S;
    }
    // image of 1/(1+z): (1+z)^(gp-1) * T
    std::vector<std::pair<int, long long>> onepz;
    for (int i = 0; i <= gp - 1; ++i)
        onepz.emplace_back(i, static_cast<long long>(BigInt::binomial(gp - 1, i).mod_u64(m)));
    LaurentCoeff U = LaurentCoeff::from_terms(target, onepz) * T;

    // Pi = prod_{j=0}^{beta-2} (1+z^(3^j))
    LaurentCoeff Pi = LaurentCoeff::constant(target, 1);
    for (int j = 0, pj = 1; j < beta - 1; ++j, pj *= 3) {
        LaurentCoeff fac = LaurentCoeff::from_terms(target, {{0, 1}, {pj, 1}});
        Pi = Pi * fac;
    }

    PsiContext out_ctx{1, gp, c.alpha, e};
    PsiPoly out(out_ctx);
    LaurentCoeff pipow = LaurentCoeff::constant(target, 1);
    for (int i = 0; i < c.psi_dim(); ++i) {
        if (i > 0) pipow = pipow * Pi;
        const LaurentCoeff& ai = p.coeff(i);
        if (ai.is_zero()) continue;
        // move the numerator into the new ring, then apply U^den_pow
        std::vector<std::pair<int, long long>> nt;
        for (auto& [d, v] : ai.num()) nt.emplace_back(d, static_cast<long long>(v));
        LaurentCoeff mapped = LaurentCoeff::from_terms(target, nt);
        for (int l = 0; l < ai.den_pow(); ++l) mapped = mapped * U;
        mapped = mapped * pipow;
        out.set_coeff(i, mapped.filter_exponents_mod(gp, residues));
    }
    return out;
}

}  // namespace psicong
