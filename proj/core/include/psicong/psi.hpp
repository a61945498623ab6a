#pragma once

#include <string>
#include <vector>

#include "psicong/laurent.hpp"

namespace psicong {

// Context for polynomials in Psi(eps*z^gamma) reduced by the relation
// (Psi^2 - 1/(1+eps*z^gamma))^(3^alpha) == 0 mod 3^(3^alpha).
// e <= 3^alpha is required for that relation to be valid.
struct PsiContext {
    int eps = 1;
    int gamma = 1;
    int alpha = 1;
    int e = 3;  // modulus exponent

    int psi_dim() const;  // 2*3^alpha
    LaurentCtx lctx() const { return LaurentCtx{eps, gamma, e}; }
    bool operator==(const PsiContext&) const = default;
};

// Series of Psi(eps*z^gamma) = prod_j (1 + eps*z^(gamma*3^j)) mod 3^e.
TruncSeries psi_series(const PsiContext& ctx, int trunc_deg);
// Plain Psi(z) mod 3^e.
TruncSeries psi_series_plain(int e, int trunc_deg);

// Sum_{i < 2*3^alpha} a_i(z) * Psi^i(eps*z^gamma), reduced eagerly.
class PsiPoly {
public:
    PsiPoly() = default;
    explicit PsiPoly(PsiContext ctx);

    static PsiPoly zero(PsiContext ctx) { return PsiPoly(ctx); }
    static PsiPoly one(PsiContext ctx);
    // c(z) * Psi^i
    static PsiPoly term(PsiContext ctx, int i, LaurentCoeff c);

    const PsiContext& ctx() const { return ctx_; }
    const std::vector<LaurentCoeff>& coeffs() const { return coeffs_; }
    const LaurentCoeff& coeff(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
    void set_coeff(int i, LaurentCoeff c);
    bool is_zero() const;

    PsiPoly operator+(const PsiPoly& o) const;
    PsiPoly operator-(const PsiPoly& o) const;
    PsiPoly operator*(const PsiPoly& o) const;
    PsiPoly operator-() const;
    PsiPoly scaled(const LaurentCoeff& c) const;
    PsiPoly scaled_int(long long c) const;

    // d/dz; uses Psi'(u) = Psi(u) * sum_j 3^j u^(3^j-1)/(1+u^(3^j)) at
    // u = eps*z^gamma, the sum truncated mod 3^e.
    PsiPoly derivative() const;

    PsiPoly exact_div_pow3(int t) const;
    PsiPoly reduced_mod(int e) const;

    TruncSeries to_series(int trunc_deg) const;

    // Series comparison to the given degree (representations are not
    // unique, so this is the default notion of equality).
    bool series_equal(const PsiPoly& o, int trunc_deg = 2187) const;
    // Strict coefficient-wise comparison of canonical forms.
    bool coeff_equal(const PsiPoly& o) const;

    std::string to_string() const;

private:
    PsiContext ctx_;
    std::vector<LaurentCoeff> coeffs_;
};

// Multiplication entry point named for the spec surface; same as operator*.
inline PsiPoly psipoly_mul(const PsiPoly& a, const PsiPoly& b) { return a * b; }

// Minimal-polynomial rows: products of the printed generators
//   A0 = X, A1 = X^3 - 9(1+z)^{-2} X + 27 z(1+z)^{-5},
//   A2 = A1^3 - 3^8(1+z)^{-6} A1 + 3^10 z(1+z)^{-9} A0^2
//        - 3^11 z(1+z^2)(1+z)^{-12} A0 + 3^12 z^4 (1+z)^{-17},
// where X = t^2 - 1/(1+z).
struct MinPolyFixture {
    std::string name;   // e.g. "A0^2*A1"
    int pow_a0 = 0;
    int pow_a1 = 0;
    int pow_a2 = 0;
    int mod_exp = 1;    // target modulus 3^mod_exp
    int degree = 0;     // degree in t
};

// The thirteen tabulated rows for moduli 3^1..3^13, in order.
const std::vector<MinPolyFixture>& minpoly_table();

// Substitutes the truncated Psi(z) for t and checks vanishing mod
// 3^(fix.mod_exp) through degree trunc_deg.
bool check_minpoly(const MinPolyFixture& fix, int trunc_deg);

// The series the fixture evaluates to (for negative controls/tests).
TruncSeries minpoly_eval(const MinPolyFixture& fix, int mod_exp, int trunc_deg);

}  // namespace psicong
