#include "psicong/psi.hpp"

#include <algorithm>
#include <cassert>

#include "psicong/bigint.hpp"

namespace psicong {

int PsiContext::psi_dim() const {
    int p = 2;
    for (int i = 0; i < alpha; ++i) p *= 3;
    return p;
}

TruncSeries psi_series(const PsiContext& ctx, int trunc_deg) {
    TruncSeries s = TruncSeries::one(ctx.e, trunc_deg);
    std::uint64_t m = pow3(ctx.e);
    for (long long step = ctx.gamma; step <= trunc_deg; step *= 3) {
        std::uint64_t sign = ctx.eps == 1 ? 1 : m - 1;
        s = s.mul_sparse({{0, 1}, {static_cast<int>(step), sign}});
    }
    return s;
}

TruncSeries psi_series_plain(int e, int trunc_deg) {
    return psi_series(PsiContext{1, 1, 1, e}, trunc_deg);
}

PsiPoly::PsiPoly(PsiContext ctx) : ctx_(ctx) {
    coeffs_.assign(static_cast<std::size_t>(ctx_.psi_dim()), LaurentCoeff(ctx_.lctx()));
}

PsiPoly PsiPoly::one(PsiContext ctx) {
    PsiPoly p(ctx);
    p.coeffs_[0] = LaurentCoeff::constant(ctx.lctx(), 1);
    return p;
}

PsiPoly PsiPoly::term(PsiContext ctx, int i, LaurentCoeff c) {
    PsiPoly p(ctx);
    p.set_coeff(i, std::move(c));
    return p;
}

void PsiPoly::set_coeff(int i, LaurentCoeff c) {
    assert(i >= 0 && i < ctx_.psi_dim());
    assert(c.ctx() == ctx_.lctx());
    coeffs_[static_cast<std::size_t>(i)] = std::move(c);
}

bool PsiPoly::is_zero() const {
    for (auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

PsiPoly PsiPoly::operator+(const PsiPoly& o) const {
    assert(ctx_ == o.ctx_);
    PsiPoly r(ctx_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    return r;
}

PsiPoly PsiPoly::operator-(const PsiPoly& o) const {
    assert(ctx_ == o.ctx_);
    PsiPoly r(ctx_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i] - o.coeffs_[i];
    return r;
}

PsiPoly PsiPoly::operator-() const {
    PsiPoly r(ctx_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = -coeffs_[i];
    return r;
}

namespace {
// Replacement for Psi^(2*3^alpha) on even powers Psi^(2k), k < 3^alpha:
//   Psi^(2*3^a) = sum_k (-1)^k C(3^a,k) (1+eps z^g)^{-(3^a-k)} Psi^(2k)
std::vector<LaurentCoeff> reduction_row(const PsiContext& ctx) {
    int half = ctx.psi_dim() / 2;  // 3^alpha
    std::vector<LaurentCoeff> rep;
    rep.reserve(static_cast<std::size_t>(half));
    for (int k = 0; k < half; ++k) {
        long long b = BigInt::binomial(half, k).mod_u64(pow3(ctx.e));
        LaurentCoeff c = LaurentCoeff::constant(ctx.lctx(), (k % 2 == 0) ? b : -b);
        rep.push_back(c.mul_den_base_pow(-(half - k)));
    }
    return rep;
}
}  // namespace

PsiPoly PsiPoly::operator*(const PsiPoly& o) const {
    assert(ctx_ == o.ctx_);
    int dim = ctx_.psi_dim();
    std::vector<LaurentCoeff> tmp(static_cast<std::size_t>(2 * dim - 1), LaurentCoeff(ctx_.lctx()));
    for (int i = 0; i < dim; ++i) {
        if (coeffs_[static_cast<std::size_t>(i)].is_zero()) continue;
        for (int j = 0; j < dim; ++j) {
            if (o.coeffs_[static_cast<std::size_t>(j)].is_zero()) continue;
            tmp[static_cast<std::size_t>(i + j)] =
                tmp[static_cast<std::size_t>(i + j)] +
                coeffs_[static_cast<std::size_t>(i)] * o.coeffs_[static_cast<std::size_t>(j)];
        }
    }
    std::vector<LaurentCoeff> rep = reduction_row(ctx_);
    for (int d = 2 * dim - 2; d >= dim; --d) {
        LaurentCoeff c = tmp[static_cast<std::size_t>(d)];
        if (c.is_zero()) continue;
        tmp[static_cast<std::size_t>(d)] = LaurentCoeff(ctx_.lctx());
        for (int k = 0; k < dim / 2; ++k) {
            int target = d - dim + 2 * k;
            tmp[static_cast<std::size_t>(target)] =
                tmp[static_cast<std::size_t>(target)] + c * rep[static_cast<std::size_t>(k)];
        }
    }
    PsiPoly r(ctx_);
    for (int i = 0; i < dim; ++i) r.coeffs_[static_cast<std::size_t>(i)] = tmp[static_cast<std::size_t>(i)];
    return r;
}

PsiPoly PsiPoly::scaled(const LaurentCoeff& c) const {
    PsiPoly r(ctx_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i] * c;
    return r;
}

PsiPoly PsiPoly::scaled_int(long long c) const {
    PsiPoly r(ctx_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i].scaled(c);
    return r;
}

PsiPoly PsiPoly::derivative() const {
    // log-derivative factor of Psi(eps z^gamma):
    //   D(z) = sum_{j<e} 3^j gamma eps z^(gamma 3^j - 1) / (1 + eps z^(gamma 3^j))
    LaurentCtx lc = ctx_.lctx();
    LaurentCoeff D(lc);
    long long p3j = 1;
    for (int j = 0; j < ctx_.e; ++j, p3j *= 3) {
        LaurentCoeff inv =
            j == 0 ? LaurentCoeff::constant(lc, 1).mul_den_base_pow(-1)
                   : substitute_unit_var(rewrite_inv_1pz3j(j, 1, ctx_.e - j, ctx_.e), lc);
        long long scale = static_cast<long long>(pow3(j)) * ctx_.gamma * ctx_.eps;
        D = D + inv.mul_monomial(scale, static_cast<int>(ctx_.gamma * p3j) - 1);
    }
    PsiPoly r(ctx_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        LaurentCoeff c = coeffs_[i].derivative();
        if (i > 0) c = c + coeffs_[i] * D.scaled(static_cast<long long>(i));
        r.coeffs_[i] = c;
    }
    return r;
}

PsiPoly PsiPoly::exact_div_pow3(int t) const {
    PsiPoly r(ctx_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i].exact_div_pow3(t);
    return r;
}

PsiPoly PsiPoly::reduced_mod(int e) const {
    PsiContext c2 = ctx_;
    c2.e = e;
    PsiPoly r(c2);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i].reduced_mod(e);
    return r;
}

TruncSeries PsiPoly::to_series(int trunc_deg) const {
    // slack absorbs negative Laurent exponents so the requested truncation
    // degree is fully valid in the result
    int slack = 0;
    for (auto& c : coeffs_)
        if (!c.is_zero()) slack = std::max(slack, -c.num().begin()->first);
    const int N = trunc_deg + slack;
    TruncSeries psi = psi_series(ctx_, N);
    TruncSeries pw = TruncSeries::one(ctx_.e, N);
    TruncSeries acc = TruncSeries::zero(ctx_.e, N);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i > 0) pw = (pw * psi).truncated(N);
        if (coeffs_[i].is_zero()) continue;
        acc = acc + coeffs_[i].to_series(N) * pw;
    }
    return acc.truncated(trunc_deg);
}

bool PsiPoly::series_equal(const PsiPoly& o, int trunc_deg) const {
    return to_series(trunc_deg).agrees_with(o.to_series(trunc_deg), trunc_deg);
}

bool PsiPoly::coeff_equal(const PsiPoly& o) const {
    return ctx_ == o.ctx_ && coeffs_ == o.coeffs_;
}

std::string PsiPoly::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + coeffs_[i].to_string() + ")";
        if (i > 0) s += "*Psi^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
}

const std::vector<MinPolyFixture>& minpoly_table() {
    static const std::vector<MinPolyFixture> rows = {
        {"A0", 1, 0, 0, 1, 2},        {"A0^2", 2, 0, 0, 2, 4},
        {"A0^3", 3, 0, 0, 3, 6},      {"A1", 0, 1, 0, 4, 6},
        {"A0*A1", 1, 1, 0, 5, 8},     {"A0^2*A1", 2, 1, 0, 6, 10},
        {"A1^2", 0, 2, 0, 7, 12},     {"A1^2", 0, 2, 0, 8, 12},
        {"A0*A1^2", 1, 2, 0, 9, 14},  {"A0^2*A1^2", 2, 2, 0, 10, 16},
        {"A1^3", 0, 3, 0, 11, 18},    {"A1^3", 0, 3, 0, 12, 18},
        {"A2", 0, 0, 1, 13, 18},
    };
    return rows;
}

namespace {
TruncSeries inv_one_plus_z_pow(int e, int k, int trunc_deg) {
    TruncSeries s = TruncSeries::one(e, trunc_deg);
    for (int i = 0; i < k; ++i) s = s.div_one_plus(1, 1);
    return s;
}
}  // namespace

TruncSeries minpoly_eval(const MinPolyFixture& fix, int mod_exp, int trunc_deg) {
    int e = mod_exp;
    std::uint64_t m = pow3(e);
    TruncSeries psi = psi_series_plain(e, trunc_deg);
    TruncSeries X = (psi * psi).truncated(trunc_deg) - inv_one_plus_z_pow(e, 1, trunc_deg);

    TruncSeries a1 = TruncSeries::zero(e, trunc_deg);
    if (fix.pow_a1 > 0 || fix.pow_a2 > 0) {
        TruncSeries x3 = (X * X * X).truncated(trunc_deg);
        a1 = x3 - (X * inv_one_plus_z_pow(e, 2, trunc_deg)).scaled(9 % m) +
             inv_one_plus_z_pow(e, 5, trunc_deg).shifted(1).truncated(trunc_deg).scaled(27 % m);
    }

    TruncSeries acc = TruncSeries::one(e, trunc_deg);
    for (int i = 0; i < fix.pow_a0; ++i) acc = (acc * X).truncated(trunc_deg);
    for (int i = 0; i < fix.pow_a1; ++i) acc = (acc * a1).truncated(trunc_deg);
    if (fix.pow_a2 > 0) {
        TruncSeries a2 = (a1 * a1 * a1).truncated(trunc_deg);
        a2 = a2 - (a1 * inv_one_plus_z_pow(e, 6, trunc_deg)).scaled(pow3(8) % m);
        a2 = a2 + (X * X * inv_one_plus_z_pow(e, 9, trunc_deg))
                      .mul_sparse({{1, pow3(10) % m}})
                      .truncated(trunc_deg);
        TruncSeries z_1pz2 = TruncSeries::monomial(e, 1, 1, trunc_deg) + TruncSeries::monomial(e, 3, 1, trunc_deg);
        a2 = a2 - (X * z_1pz2 * inv_one_plus_z_pow(e, 12, trunc_deg)).truncated(trunc_deg).scaled(pow3(11) % m);
        a2 = a2 + inv_one_plus_z_pow(e, 17, trunc_deg).shifted(4).truncated(trunc_deg).scaled(pow3(12) % m);
        for (int i = 0; i < fix.pow_a2; ++i) acc = (acc * a2).truncated(trunc_deg);
    }
    return acc;
}

bool check_minpoly(const MinPolyFixture& fix, int trunc_deg) {
    return minpoly_eval(fix, fix.mod_exp, trunc_deg).is_zero_up_to(trunc_deg);
}

}  // namespace psicong
