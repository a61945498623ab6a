#include "psicong/hseries.hpp"

#include <cassert>
#include <mutex>

#include "psicong/bigint.hpp"

namespace psicong {

bool HIndex::pure() const {
    for (int x : a)
        if (x % 3 == 0) return false;
    return true;
}

std::string HIndex::to_string() const {
    std::string s = "H~(";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(a[i]);
    }
    return s + ")";
}

HCombination HCombination::zero(int e) {
    HCombination c;
    c.e = e;
    c.constant = LaurentCoeff::zero(LaurentCtx{1, 1, e});
    return c;
}

void HCombination::add_constant(const LaurentCoeff& c) { constant = constant + c; }

void HCombination::add_term(const HIndex& idx, const LaurentCoeff& c) {
    auto it = terms.find(idx);
    if (it == terms.end()) {
        if (!c.is_zero()) terms.emplace(idx, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms.erase(it);
}

HCombination& HCombination::operator+=(const HCombination& o) {
    assert(e == o.e);
    add_constant(o.constant);
    for (auto& [idx, c] : o.terms) add_term(idx, c);
    return *this;
}

HCombination HCombination::scaled_lc(const LaurentCoeff& c) const {
    HCombination r = zero(e);
    r.constant = constant * c;
    for (auto& [idx, v] : terms) {
        LaurentCoeff w = v * c;
        if (!w.is_zero()) r.terms.emplace(idx, w);
    }
    return r;
}

HCombination HCombination::lifted_to(int new_e) const {
    HCombination r = zero(new_e);
    r.constant = constant.lifted_to(new_e);
    for (auto& [idx, v] : terms) r.terms.emplace(idx, v.lifted_to(new_e));
    return r;
}

bool HCombination::all_pure() const {
    for (auto& [idx, c] : terms)
        if (!idx.pure()) return false;
    return true;
}

TruncSeries HCombination::to_series(int trunc_deg) const {
    TruncSeries s = constant.to_series(trunc_deg);
    for (auto& [idx, c] : terms)
        s = s + c.to_series(trunc_deg) * h_tilde_series(idx, trunc_deg, e);
    return s;
}

ReductionRank ReductionRank::of(const HIndex& idx, long coeff_val3) {
    ReductionRank r;
    r.s = idx.size();
    r.v = coeff_val3;
    for (int p = idx.size(); p-- > 0;) {
        if (idx.a[static_cast<std::size_t>(p)] % 3 == 0) {
            r.i = p + 1;
            r.t = v3_u64(static_cast<std::uint64_t>(idx.a[static_cast<std::size_t>(p)]));
            break;
        }
    }
    return r;
}

bool ReductionRank::operator<(const ReductionRank& o) const {
    if (s != o.s) return s < o.s;
    if (v != o.v) return v > o.v;  // higher coefficient valuation is smaller
    if (i != o.i) return i < o.i;
    return t < o.t;
}

TruncSeries r_factor_series(int k, int a, int trunc_deg, int e) {
    long long p = 1;
    for (int i = 0; i < k; ++i) p *= 3;
    TruncSeries r(e, 0, trunc_deg);
    if (p <= trunc_deg) r.set(static_cast<int>(p), 1);
    if (2 * p <= trunc_deg) r.set(static_cast<int>(2 * p), 1);
    if (3 * p <= trunc_deg) r = r.div_one_plus(1, static_cast<int>(3 * p));
    TruncSeries out = TruncSeries::one(e, trunc_deg);
    for (int i = 0; i < a; ++i) out = (out * r).truncated(trunc_deg);
    return out;
}

namespace {
void h_tilde_rec(const HIndex& idx, int pos, int k_min, long long budget, const TruncSeries& partial,
                 TruncSeries& acc, int trunc_deg, int e) {
    if (pos < 0) {
        acc = acc + partial;
        return;
    }
    int a = idx.a[static_cast<std::size_t>(pos)];
    long long p = 1;
    for (int k = k_min;; ++k, p *= 3) {
        long long order = static_cast<long long>(a) * p;  // order of R(k)^a
        if (order > budget) break;
        TruncSeries next = (partial * r_factor_series(k, a, trunc_deg, e)).truncated(trunc_deg);
        h_tilde_rec(idx, pos - 1, k + 1, budget - order, next, acc, trunc_deg, e);
    }
}
}  // namespace

TruncSeries h_tilde_series(const HIndex& idx, int trunc_deg, int e) {
    TruncSeries acc = TruncSeries::zero(e, trunc_deg);
    // assign k from the last (smallest) position upward
    h_tilde_rec(idx, idx.size() - 1, 0, trunc_deg, TruncSeries::one(e, trunc_deg), acc, trunc_deg, e);
    return acc;
}

namespace {
void psi_pow_supports(int K, int e, std::vector<int>& cur, long cur_val, long long cur_coeff,
                      HCombination& out) {
    if (!cur.empty()) {
        HIndex idx{cur};
        out.add_term(idx, LaurentCoeff::constant(LaurentCtx{1, 1, e}, cur_coeff));
    }
    for (int a = 1; a <= K; ++a) {
        BigInt b = BigInt::binomial(K, a);
        long val = a + v3(b);
        if (cur_val + val >= e) continue;
        long long coeff = static_cast<long long>(
            mulmod(mulmod(static_cast<std::uint64_t>(cur_coeff), pow3(a), pow3(e)), b.mod_u64(pow3(e)),
                   pow3(e)));
        cur.push_back(a);
        psi_pow_supports(K, e, cur, cur_val + val, coeff, out);
        cur.pop_back();
    }
}
}  // namespace

PsiPowerExpansion psi_power_h_expansion(int K, bool odd, int e) {
    PsiPowerExpansion r;
    r.K = K;
    r.odd = odd;
    r.comb = HCombination::zero(e);
    r.comb.add_constant(LaurentCoeff::constant(LaurentCtx{1, 1, e}, 1));
    std::vector<int> cur;
    psi_pow_supports(K, e, cur, 0, 1, r.comb);
    return r;
}

TruncSeries PsiPowerExpansion::to_series(int trunc_deg) const {
    TruncSeries s = comb.to_series(trunc_deg);
    for (int i = 0; i < K; ++i) s = s.div_one_plus(1, 1);
    if (odd) s = (s * psi_series_plain(comb.e, trunc_deg)).truncated(trunc_deg);
    return s;
}

namespace {

struct UVTerm {
    int sum_u = 0;
    int sum_v = 0;
    long long coeff = 1;  // exact integer product of the binomials
    long val = 0;         // v3 of 3^(sum_u+sum_v) * coeff
};

long long ibinom(long long n, long long k) {
    return BigInt::binomial(n, k).to_int64();
}

// binom(-n, b) = (-1)^b binom(n+b-1, b)
long long neg_binom(long long n, long long b) {
    long long v = ibinom(n + b - 1, b);
    return (b % 2 == 0) ? v : -v;
}

void gen_uv_rec(int u_prev, int e, UVTerm cur, std::vector<UVTerm>& out) {
    out.push_back(cur);  // all-zero tail from here on
    if (u_prev == 0) return;
    for (int u = 0; u <= u_prev; ++u) {
        for (int v = 0;; ++v) {
            if (u == 0 && v == 0) continue;
            long base_val = cur.val + u + v;
            if (base_val >= e) break;
            long long c = ibinom(u_prev, u) * neg_binom(u_prev, v);
            if (c == 0) { if (v > e) break; continue; }
            UVTerm next = cur;
            next.sum_u += u;
            next.sum_v += v;
            next.coeff *= c;
            next.val = base_val + v3(BigInt(c));
            if (next.val >= e) continue;
            gen_uv_rec(u, e, next, out);
        }
    }
}

// All (u,v)-vector pairs with u_0 = m and coefficient valuation < e.
std::vector<UVTerm> gen_uv(int m, int e) {
    std::vector<UVTerm> out;
    gen_uv_rec(m, e, UVTerm{}, out);
    return out;
}

// (z(1+z)/(1+z^3))^p in the (+1,1,e) ring, correct mod 3^beta.
LaurentCoeff boundary_pow(int p, int beta, int e) {
    if (p == 0) return LaurentCoeff::constant(LaurentCtx{1, 1, e}, 1);
    LaurentCtx ctx{1, 1, e};
    LaurentCoeff num = LaurentCoeff::monomial(ctx, p, 1).mul_den_base_pow(p);
    // mul_den_base_pow(p) with p>0 multiplies the NUMERATOR by (1+z)^p
    return num * rewrite_inv_1pz3j(1, p, beta, e);
}

struct MemoKey {
    HIndex idx;
    int e;
    bool operator<(const MemoKey& o) const {
        if (e != o.e) return e < o.e;
        return idx < o.idx;
    }
};

std::map<MemoKey, HCombination> g_reduce_memo;
std::mutex g_reduce_mutex;

}  // namespace

HCombination reduce_h(const HIndex& idx, int e) {
    {
        std::lock_guard<std::mutex> lock(g_reduce_mutex);
        if (auto it = g_reduce_memo.find(MemoKey{idx, e}); it != g_reduce_memo.end()) return it->second;
    }
    HCombination out = HCombination::zero(e);
    LaurentCtx ctx{1, 1, e};
    if (idx.pure()) {
        out.add_term(idx, LaurentCoeff::constant(ctx, 1));
        {
            std::lock_guard<std::mutex> lock(g_reduce_mutex);
            g_reduce_memo.emplace(MemoKey{idx, e}, out);
        }
        return out;
    }

    const int s = idx.size();
    int h = 0;  // 1-based maximal 3-divisible position
    for (int p = s; p-- > 0;)
        if (idx.a[static_cast<std::size_t>(p)] % 3 == 0) { h = p + 1; break; }
    assert(h >= 1);
    const int bp = idx.a[static_cast<std::size_t>(h - 1)] / 3;
    const ReductionRank parent = ReductionRank::of(idx, 0);

    // child accumulation: coefficient (Laurent) times H~ of a smaller index.
    // A coefficient with 3-valuation v only needs the child reduced mod
    // 3^(e-v); this is also what makes the descent terminate when the
    // rewritten index does not shrink.
    auto add_child = [&](const std::vector<int>& child, const LaurentCoeff& c, long cval) {
        if (c.is_zero() || cval >= e) return;
        if (child.empty()) {
            out.add_constant(c);
            return;
        }
        HIndex ci{child};
        ReductionRank rank = ReductionRank::of(ci, cval);
        assert(cval > 0 || rank < parent);
        (void)rank;
        out += reduce_h(ci, e - static_cast<int>(cval)).lifted_to(e).scaled_lc(c);
    };

    std::uint64_t m = pow3(e);
    auto lc_int = [&](long long v) { return LaurentCoeff::constant(ctx, v); };

    // sum over b with 3^b * C(-bp, b)
    for (int b = 0; b < e; ++b) {
        long long nb = neg_binom(bp, b);
        if (nb == 0) continue;
        long bval = b + v3(BigInt(nb));
        if (bval >= e) continue;
        long long c3b = static_cast<long long>(mulmod(pow3(b), BigInt(nb).mod_u64(m), m));
        LaurentCoeff cb = lc_int(c3b);

        // term A: position h becomes bp + b
        {
            std::vector<int> child = idx.a;
            child[static_cast<std::size_t>(h - 1)] = bp + b;
            add_child(child, cb, bval);
        }
        // term B (h > 1): merge into position h-1
        if (h > 1) {
            std::vector<int> child = idx.a;
            child[static_cast<std::size_t>(h - 2)] += bp + b;
            child.erase(child.begin() + (h - 1));
            add_child(child, cb, bval);
        }
        // term C: the boundary / descent correction
        if (h == s) {
            // minus (z(1+z)/(1+z^3))^(bp+b) times H~ of the prefix
            LaurentCoeff c = -(cb * boundary_pow(bp + b, e - b, e));
            std::vector<int> child(idx.a.begin(), idx.a.end() - 1);
            add_child(child, c, bval);
        } else {
            // minus sum over (u,v) descending the power to level k_{h+1}
            for (const UVTerm& t : gen_uv(bp + b, e - static_cast<int>(bval))) {
                long tval = bval + t.val;
                if (tval >= e) continue;
                std::uint64_t cc = mulmod(mulmod(static_cast<std::uint64_t>(c3b), pow3(t.sum_u + t.sum_v), m),
                                          BigInt(t.coeff).mod_u64(m), m);
                LaurentCoeff c = -lc_int(static_cast<long long>(cc));
                std::vector<int> child = idx.a;
                child[static_cast<std::size_t>(h - 1)] =
                    3 * (bp + b + t.sum_u) + t.sum_v + idx.a[static_cast<std::size_t>(h)];
                child.erase(child.begin() + h);
                add_child(child, c, tval);
            }
        }
    }

    // the a>=1 double sum: position h becomes 3(sum_s + bp + b) + sum_t + a
    for (int a = 1; a < e; ++a) {
        long long ba = ibinom(bp, a);
        if (ba == 0) continue;
        for (int b = 0; a + b < e; ++b) {
            long long nb = neg_binom(bp, b);
            if (nb == 0) continue;
            long abval = a + b + v3(BigInt(ba * nb));
            if (abval >= e) continue;
            for (const UVTerm& t : gen_uv(bp + b, e - static_cast<int>(abval))) {
                long tval = abval + t.val;
                if (tval >= e) continue;
                long long prod = ba * nb * t.coeff;
                std::uint64_t cc =
                    mulmod(pow3(a + b + t.sum_u + t.sum_v), BigInt(prod).mod_u64(m), m);
                std::vector<int> child = idx.a;
                child[static_cast<std::size_t>(h - 1)] = 3 * (t.sum_u + bp + b) + t.sum_v + a;
                add_child(child, lc_int(static_cast<long long>(cc)), tval);
            }
        }
    }

    {
        std::lock_guard<std::mutex> lock(g_reduce_mutex);
        g_reduce_memo.emplace(MemoKey{idx, e}, out);
    }
    return out;
}

}  // namespace psicong
