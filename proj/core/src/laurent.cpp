#include "psicong/laurent.hpp"

#include <cassert>
#include <tuple>

#include "psicong/bigint.hpp"

namespace psicong {

namespace {
std::uint64_t norm_ll(long long v, std::uint64_t m) {
    long long r = v % static_cast<long long>(m);
    if (r < 0) r += static_cast<long long>(m);
    return static_cast<std::uint64_t>(r);
}
}  // namespace

LaurentCoeff lc_unsafe(LaurentCtx ctx, std::map<int, std::uint64_t> num, int den) {
    LaurentCoeff r(ctx);
    r.num_ = std::move(num);
    r.den_ = den;
    for (auto it = r.num_.begin(); it != r.num_.end();) {
        it->second %= pow3(ctx.e);
        it = it->second == 0 ? r.num_.erase(it) : std::next(it);
    }
    r.normalize();
    return r;
}

LaurentCoeff LaurentCoeff::constant(LaurentCtx ctx, long long v) { return monomial(ctx, 0, v); }

LaurentCoeff LaurentCoeff::monomial(LaurentCtx ctx, int deg, long long v) {
    std::map<int, std::uint64_t> n;
    std::uint64_t w = norm_ll(v, pow3(ctx.e));
    if (w) n[deg] = w;
    return lc_unsafe(ctx, std::move(n), 0);
}

LaurentCoeff LaurentCoeff::from_poly(LaurentCtx ctx, const std::vector<long long>& asc) {
    std::map<int, std::uint64_t> n;
    for (std::size_t i = 0; i < asc.size(); ++i) {
        std::uint64_t w = norm_ll(asc[i], pow3(ctx.e));
        if (w) n[static_cast<int>(i)] = w;
    }
    return lc_unsafe(ctx, std::move(n), 0);
}

LaurentCoeff LaurentCoeff::from_terms(LaurentCtx ctx, const std::vector<std::pair<int, long long>>& terms,
                                      int den_pow) {
    std::map<int, std::uint64_t> n;
    for (auto& [d, v] : terms) {
        std::uint64_t w = norm_ll(v, pow3(ctx.e));
        if (w) n[d] = (n.count(d) ? (n[d] + w) % pow3(ctx.e) : w);
    }
    return lc_unsafe(ctx, std::move(n), den_pow);
}

void LaurentCoeff::add_term(int deg, std::uint64_t v) {
    std::uint64_t m = pow3(ctx_.e);
    v %= m;
    if (!v) return;
    auto [it, fresh] = num_.try_emplace(deg, 0);
    it->second = (it->second + v) % m;
    if (it->second == 0) num_.erase(it);
}

void LaurentCoeff::normalize() {
    if (num_.empty()) { den_ = 0; return; }
    std::uint64_t m = pow3(ctx_.e);
    std::uint64_t eps = ctx_.eps == 1 ? 1 : m - 1;
    while (den_ > 0) {
        // try num / (1 + eps*z^gamma), building the quotient from the bottom
        std::map<int, std::uint64_t> q;
        std::map<int, std::uint64_t> rem = num_;
        int top = rem.rbegin()->first;
        bool ok = true;
        while (!rem.empty()) {
            auto [deg, c] = *rem.begin();
            if (deg > top) { ok = false; break; }
            q[deg] = c;
            rem.erase(rem.begin());
            // subtract c*z^deg * eps*z^gamma
            std::uint64_t sub = mulmod(c, eps, m);
            int d2 = deg + ctx_.gamma;
            auto [it, fresh] = rem.try_emplace(d2, 0);
            it->second = (it->second + m - sub) % m;
            if (it->second == 0) rem.erase(it);
        }
        if (!ok) break;
        num_ = std::move(q);
        --den_;
    }
}

namespace {
// Raw numerator times (1 + eps*z^gamma)^k, k >= 0; no canonicalization.
std::map<int, std::uint64_t> num_times_base_pow(const LaurentCtx& ctx,
                                                const std::map<int, std::uint64_t>& num, int k) {
    if (k == 0) return num;
    std::uint64_t m = pow3(ctx.e);
    std::map<int, std::uint64_t> out;
    for (int i = 0; i <= k; ++i) {
        std::uint64_t b = BigInt::binomial(k, i).mod_u64(m);
        if (ctx.eps == -1 && (i & 1)) b = (m - b) % m;
        if (!b) continue;
        for (auto& [d, v] : num) {
            auto [it, fresh] = out.try_emplace(d + i * ctx.gamma, 0);
            it->second = (it->second + mulmod(v, b, m)) % m;
            if (it->second == 0) out.erase(it);
        }
    }
    return out;
}
}  // namespace

LaurentCoeff LaurentCoeff::operator+(const LaurentCoeff& o) const {
    assert(ctx_ == o.ctx_);
    // bring both over the common denominator power
    int den = std::max(den_, o.den_);
    std::map<int, std::uint64_t> an = num_times_base_pow(ctx_, num_, den - den_);
    std::map<int, std::uint64_t> bn = num_times_base_pow(ctx_, o.num_, den - o.den_);
    LaurentCoeff r(ctx_);
    r.num_ = std::move(an);
    r.den_ = den;
    for (auto& [d, v] : bn) r.add_term(d, v);
    r.normalize();
    return r;
}

LaurentCoeff LaurentCoeff::operator-(const LaurentCoeff& o) const { return *this + (-o); }

LaurentCoeff LaurentCoeff::operator-() const {
    std::uint64_t m = pow3(ctx_.e);
    LaurentCoeff r(ctx_);
    r.den_ = den_;
    for (auto& [d, v] : num_) r.num_[d] = m - v;
    return r;
}

LaurentCoeff LaurentCoeff::operator*(const LaurentCoeff& o) const {
    assert(ctx_ == o.ctx_);
    std::uint64_t m = pow3(ctx_.e);
    LaurentCoeff r(ctx_);
    r.den_ = den_ + o.den_;
    for (auto& [d1, v1] : num_)
        for (auto& [d2, v2] : o.num_) r.add_term(d1 + d2, mulmod(v1, v2, m));
    r.normalize();
    return r;
}

LaurentCoeff LaurentCoeff::scaled(long long c) const { return mul_monomial(c, 0); }

LaurentCoeff LaurentCoeff::mul_monomial(long long c, int deg) const {
    std::uint64_t m = pow3(ctx_.e);
    std::uint64_t w = norm_ll(c, m);
    LaurentCoeff r(ctx_);
    r.den_ = den_;
    if (w)
        for (auto& [d, v] : num_) r.num_[d + deg] = mulmod(v, w, m);
    r.normalize();
    return r;
}

LaurentCoeff LaurentCoeff::mul_den_base_pow(int k) const {
    if (k == 0 || is_zero()) return *this;
    if (k < 0) {
        LaurentCoeff r = *this;
        r.den_ += -k;
        // no normalize: we just made the denominator deeper on purpose
        return r;
    }
    // multiply numerator by (1 + eps*z^gamma)^k
    std::uint64_t m = pow3(ctx_.e);
    LaurentCoeff r(ctx_);
    r.den_ = den_;
    for (int i = 0; i <= k; ++i) {
        std::uint64_t b = BigInt::binomial(k, i).mod_u64(m);
        if (ctx_.eps == -1 && (i & 1)) b = (m - b) % m;
        if (!b) continue;
        for (auto& [d, v] : num_) r.add_term(d + i * ctx_.gamma, mulmod(v, b, m));
    }
    r.normalize();
    return r;
}

LaurentCoeff LaurentCoeff::exact_div_pow3(int t) const {
    std::uint64_t p = pow3(t);
    LaurentCoeff r(ctx_);
    r.den_ = den_;
    for (auto& [d, v] : num_) {
        if (v % p != 0)
            throw DivideNotExact("exact_div_pow3: coefficient at z^" + std::to_string(d) +
                                 " not divisible by 3^" + std::to_string(t));
        r.num_[d] = v / p;
    }
    r.normalize();
    return r;
}

LaurentCoeff LaurentCoeff::derivative() const {
    std::uint64_t m = pow3(ctx_.e);
    // (num/D^L)' = (num'*D - L*eps*gamma*z^(gamma-1)*num) / D^(L+1)
    LaurentCoeff np(ctx_);
    for (auto& [d, v] : num_) {
        std::uint64_t k = norm_ll(d, m);
        std::uint64_t w = mulmod(v, k, m);
        if (w) np.num_[d - 1] = w;
    }
    if (den_ == 0) {
        np.normalize();
        return np;
    }
    LaurentCoeff a = np.mul_den_base_pow(1);
    long long lc = -static_cast<long long>(den_) * ctx_.eps * ctx_.gamma;
    LaurentCoeff b = mul_monomial(lc, ctx_.gamma - 1);
    LaurentCoeff r(ctx_);
    r.den_ = den_ + 1;
    for (auto& [d, v] : a.num_) r.add_term(d, v);
    for (auto& [d, v] : b.num_) r.add_term(d, v);
    r.normalize();
    return r;
}

LaurentCoeff LaurentCoeff::reduced_mod(int e) const {
    assert(e <= ctx_.e);
    LaurentCtx c2 = ctx_;
    c2.e = e;
    std::map<int, std::uint64_t> n;
    for (auto& [d, v] : num_) {
        std::uint64_t w = v % pow3(e);
        if (w) n[d] = w;
    }
    return lc_unsafe(c2, std::move(n), den_);
}

LaurentCoeff LaurentCoeff::lifted_to(int e) const {
    assert(e >= ctx_.e);
    LaurentCtx c2 = ctx_;
    c2.e = e;
    return lc_unsafe(c2, num_, den_);
}

LaurentCoeff LaurentCoeff::filter_exponents_mod(int m, const std::vector<int>& residues) const {
    std::map<int, std::uint64_t> n;
    for (auto& [d, v] : num_) {
        int r = ((d % m) + m) % m;
        for (int want : residues)
            if (r == ((want % m) + m) % m) { n[d] = v; break; }
    }
    return lc_unsafe(ctx_, std::move(n), den_);
}

long LaurentCoeff::min_val3() const {
    long best = kV3Infinite;
    for (auto& [d, v] : num_) {
        long w = v3_u64(v);
        if (w < best) best = w;
    }
    return best;
}

TruncSeries LaurentCoeff::to_series(int trunc_deg) const {
    int lo = num_.empty() ? 0 : std::min(num_.begin()->first, 0);
    TruncSeries s(ctx_.e, lo, trunc_deg);
    for (auto& [d, v] : num_)
        if (d <= trunc_deg) s.add_at(d, v);
    for (int i = 0; i < den_; ++i) s = s.div_one_plus(ctx_.eps, ctx_.gamma);
    return s;
}

std::string LaurentCoeff::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (auto& [d, v] : num_) {
        if (!s.empty()) s += " + ";
        s += std::to_string(v);
        if (d != 0) s += "*z^" + std::to_string(d);
    }
    if (den_ > 0) {
        std::string base = ctx_.eps == 1 ? "1+z" : "1-z";
        if (ctx_.gamma != 1) base = (ctx_.eps == 1 ? "1+z^" : "1-z^") + std::to_string(ctx_.gamma);
        s = "(" + s + ")/(" + base + ")^" + std::to_string(den_);
    }
    return s;
}

namespace {
struct InvKey {
    int j, alpha, beta, e;
    bool operator<(const InvKey& o) const {
        return std::tie(j, alpha, beta, e) < std::tie(o.j, o.alpha, o.beta, o.e);
    }
};
}  // namespace

LaurentCoeff rewrite_inv_1pz3j(int j, int alpha, int beta, int e) {
    assert(j >= 0 && alpha >= 1 && e >= beta);
    static std::map<InvKey, LaurentCoeff> memo;
    LaurentCtx ctx{1, 1, e};
    if (beta <= 0) return LaurentCoeff::zero(ctx);
    InvKey key{j, alpha, beta, e};
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    LaurentCoeff res(ctx);
    if (j == 0) {
        res = LaurentCoeff::constant(ctx, 1).mul_den_base_pow(-alpha);
    } else {
        // 1/(1+z^(3^j))^a = 1/(1+z^(3^(j-1)))^(3a)
        //   + sum_l C(a,l) 3^l z^(l*3^(j-1)) / ((1+z^(3^(j-1)))^(3a-l) (1+z^(3^j))^l)
        res = rewrite_inv_1pz3j(j - 1, 3 * alpha, beta, e);
        std::uint64_t m = pow3(e);
        int p = 1;
        for (int i = 0; i < j - 1; ++i) p *= 3;  // 3^(j-1)
        for (int l = 1; l <= alpha && l < beta; ++l) {
            std::uint64_t c = mulmod(BigInt::binomial(alpha, l).mod_u64(m), pow3(l) % m, m);
            if (!c) continue;
            LaurentCoeff t = rewrite_inv_1pz3j(j - 1, 3 * alpha - l, beta - l, e) *
                             rewrite_inv_1pz3j(j, l, beta - l, e);
            res = res + t.mul_monomial(static_cast<long long>(c), l * p);
        }
    }
    memo[key] = res;
    return res;
}

LaurentCoeff substitute_unit_var(const LaurentCoeff& a, LaurentCtx target) {
    assert(a.ctx().eps == 1 && a.ctx().gamma == 1 && a.ctx().e == target.e);
    std::uint64_t m = pow3(target.e);
    std::map<int, std::uint64_t> n;
    for (auto& [d, v] : a.num()) {
        std::uint64_t w = v;
        if (target.eps == -1 && (((d % 2) + 2) % 2) == 1) w = (m - w) % m;
        n[d * target.gamma] = w;
    }
    return lc_unsafe(target, std::move(n), a.den_pow());
}

}  // namespace psicong
