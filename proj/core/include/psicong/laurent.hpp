#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "psicong/series.hpp"

namespace psicong {

struct DivideNotExact : std::runtime_error {
    explicit DivideNotExact(const std::string& what) : std::runtime_error(what) {}
};

// Coefficient-ring context: denominators are powers of (1 + eps*z^gamma),
// values live in Z/3^e.
struct LaurentCtx {
    int eps = 1;      // +1 or -1
    int gamma = 1;    // >= 1
    int e = 1;        // modulus exponent
    bool operator==(const LaurentCtx&) const = default;
};

// An element num / (1 + eps*z^gamma)^den_pow with num a sparse Laurent
// polynomial over Z/3^e. Canonical form keeps den_pow minimal; zero is the
// empty numerator with den_pow 0.
class LaurentCoeff {
public:
    LaurentCoeff() = default;
    explicit LaurentCoeff(LaurentCtx ctx) : ctx_(ctx) {}

    static LaurentCoeff zero(LaurentCtx ctx) { return LaurentCoeff(ctx); }
    static LaurentCoeff constant(LaurentCtx ctx, long long v);
    static LaurentCoeff monomial(LaurentCtx ctx, int deg, long long v);
    // From integer polynomial coefficients, ascending from z^0.
    static LaurentCoeff from_poly(LaurentCtx ctx, const std::vector<long long>& asc);
    static LaurentCoeff from_terms(LaurentCtx ctx, const std::vector<std::pair<int, long long>>& terms,
                                   int den_pow = 0);

    const LaurentCtx& ctx() const { return ctx_; }
    const std::map<int, std::uint64_t>& num() const { return num_; }
    int den_pow() const { return den_; }
    bool is_zero() const { return num_.empty(); }

    LaurentCoeff operator+(const LaurentCoeff& o) const;
    LaurentCoeff operator-(const LaurentCoeff& o) const;
    LaurentCoeff operator*(const LaurentCoeff& o) const;
    LaurentCoeff operator-() const;
    bool operator==(const LaurentCoeff& o) const { return ctx_ == o.ctx_ && den_ == o.den_ && num_ == o.num_; }

    LaurentCoeff scaled(long long c) const;
    LaurentCoeff mul_monomial(long long c, int deg) const;  // times c*z^deg
    // Multiplies by (1 + eps*z^gamma)^k, any integer k.
    LaurentCoeff mul_den_base_pow(int k) const;

    // Division by 3^t; every numerator residue must be divisible.
    // The result is meaningful mod 3^(e-t).
    LaurentCoeff exact_div_pow3(int t) const;

    // d/dz, quotient rule; den_pow grows by at most one.
    LaurentCoeff derivative() const;

    LaurentCoeff reduced_mod(int e) const;
    // Lift values unchanged into a larger modulus.
    LaurentCoeff lifted_to(int e) const;

    // Keep only numerator monomials with exponent in the residue set mod m.
    LaurentCoeff filter_exponents_mod(int m, const std::vector<int>& residues) const;

    long min_val3() const;  // min 3-adic valuation over numerator entries

    TruncSeries to_series(int trunc_deg) const;
    std::string to_string() const;

private:
    LaurentCtx ctx_;
    std::map<int, std::uint64_t> num_;
    int den_ = 0;

    void add_term(int deg, std::uint64_t v);
    void normalize();
    friend LaurentCoeff lc_unsafe(LaurentCtx, std::map<int, std::uint64_t>, int);
};

// Internal constructor that normalizes the given raw parts.
LaurentCoeff lc_unsafe(LaurentCtx ctx, std::map<int, std::uint64_t> num, int den);

// P with P == 1/(1+z^(3^j))^alpha mod 3^beta as formal series, expressed in
// the (eps=+1, gamma=1, e) coefficient ring. Requires beta <= e.
LaurentCoeff rewrite_inv_1pz3j(int j, int alpha, int beta, int e);

// Substitute z -> eps*z^gamma: maps elements of the (1, 1, e) ring into the
// (eps, gamma, e) ring; the denominator base (1+z) becomes (1+eps*z^gamma).
LaurentCoeff substitute_unit_var(const LaurentCoeff& a, LaurentCtx target);

}  // namespace psicong
