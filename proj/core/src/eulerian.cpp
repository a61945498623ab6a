#include <cassert>

#include "psicong/sequences.hpp"

namespace psicong {

namespace {

// first two coefficients of E_s, straight from the defining sums:
//   kind 1: E_s(0) = 1, [z^1] = 2^(2s) - 3
//   kind 2: E_s(0) = 0, [z^1] = 1
std::vector<std::uint64_t> euler_anchor(int kind, int s, int e) {
    std::uint64_t m = pow3(e);
    if (kind == 2) return {0, 1};
    std::uint64_t t = BigInt(2).pow(static_cast<unsigned>(2 * s)).mod_u64(m);
    return {1, (t + m - 3 % m) % m};
}

}  // namespace

PsiPoly derive_eulerian(int kind, int beta, int alpha) {
    assert(beta == 2 || beta == 3);
    const int e = beta;
    const int gp = beta == 2 ? 3 : 9;  // 3^(beta-1)
    // window floors: the power-sum exponent must kill multiples of 3 mod
    // 3^beta, so 2s >= beta - 1 for the even kind and 2s - 1 >= beta for
    // the odd kind (s = 1 demonstrably fails the odd kind at beta = 2)
    const int s_lo = kind == 1 ? beta / 2 : (beta + 2) / 2;
    const int floor_n = s_lo;

    PsiContext out_ctx{1, gp, alpha, e};
    PsiPoly assembled = PsiPoly::zero(out_ctx);
    for (int s = s_lo; s < s_lo + gp; ++s) {
        FunctionalEq eq = euler_equation(kind, s);
        SolveReport rep = solve_mod3k(eq, alpha, e, euler_anchor(kind, s, e));
        PsiPoly sec = m_section(rep.representation, {s % gp}, beta);
        assembled = assembled + sec;
    }

    // correction polynomial: indices below the floor where the congruence
    // window does not apply are fixed against the oracle; any discrepancy
    // at or above the floor is a hard failure
    const int probe = 2 * gp;
    TruncSeries got = assembled.to_series(probe - 1);
    TruncSeries want = eulerian_central_oracle(kind, probe, e);
    std::uint64_t m = pow3(e);
    std::vector<std::pair<int, long long>> corr;
    for (int n = 0; n < probe; ++n) {
        std::uint64_t diff = (want.at(n) + m - got.at(n)) % m;
        if (!diff) continue;
        if (n >= floor_n)
            throw SolverError("derive_eulerian: section sum deviates from the oracle at n=" +
                              std::to_string(n) + " (>= floor " + std::to_string(floor_n) + ")");
        corr.emplace_back(n, static_cast<long long>(diff));
    }
    if (!corr.empty()) {
        LaurentCoeff c = LaurentCoeff::from_terms(out_ctx.lctx(), corr);
        assembled.set_coeff(0, assembled.coeff(0) + c);
    }

    // re-express over Psi(z): Psi(z^gp) = Psi(z) / prod_{j<beta-1} (1+z^(3^j))
    PsiContext final_ctx{1, 1, alpha, e};
    LaurentCtx flc = final_ctx.lctx();
    PsiPoly out(final_ctx);
    for (int i = 0; i < out_ctx.psi_dim(); ++i) {
        const LaurentCoeff& ai = assembled.coeff(i);
        if (ai.is_zero()) continue;
        std::vector<std::pair<int, long long>> terms;
        for (auto& [d, v] : ai.num()) terms.emplace_back(d, static_cast<long long>(v));
        LaurentCoeff mapped = LaurentCoeff::from_terms(flc, terms);
        if (ai.den_pow() > 0) mapped = mapped * rewrite_inv_1pz3j(beta - 1, ai.den_pow(), e, e);
        // times prod_j (1+z^(3^j))^(-i)
        if (i > 0) {
            mapped = mapped.mul_den_base_pow(-i);
            for (int j = 1; j < beta - 1; ++j) mapped = mapped * rewrite_inv_1pz3j(j, i, e, e);
        }
        out.set_coeff(i, mapped);
    }
    return out;
}

}  // namespace psicong
