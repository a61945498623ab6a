#pragma once

#include <map>
#include <vector>

#include "psicong/laurent.hpp"
#include "psicong/psi.hpp"

namespace psicong {

// Index tuple (a_1,...,a_s) of the nested auxiliary series
//   H~_{a_1..a_s}(z) = sum_{k_1>...>k_s>=0} prod_j R(k_j)^(a_j),
//   R(k) = z^(3^k) (1+z^(3^k)) / (1+z^(3^(k+1))).
// "Pure" means no entry divisible by 3; pure indices form the basis the
// reduction targets.
struct HIndex {
    std::vector<int> a;

    bool pure() const;
    int size() const { return static_cast<int>(a.size()); }
    bool operator<(const HIndex& o) const { return a < o.a; }
    bool operator==(const HIndex& o) const = default;
    std::string to_string() const;
};

// constant + sum of coeff * H~_idx, coefficients in the (+1, 1, e) ring.
struct HCombination {
    int e = 1;
    LaurentCoeff constant;
    std::map<HIndex, LaurentCoeff> terms;

    static HCombination zero(int e);
    void add_constant(const LaurentCoeff& c);
    void add_term(const HIndex& idx, const LaurentCoeff& c);
    HCombination& operator+=(const HCombination& o);
    HCombination scaled_lc(const LaurentCoeff& c) const;
    HCombination lifted_to(int new_e) const;

    // All indices pure (reduced form).
    bool all_pure() const;

    TruncSeries to_series(int trunc_deg) const;
};

// Quadruple (s, v, i, t) ordering the reduction: length, coefficient
// valuation, last 3-divisible position (1-based, 0 if pure), valuation of
// that entry. Strictly decreases along every recursion step.
struct ReductionRank {
    int s = 0;
    long v = 0;
    int i = 0;
    long t = 0;

    static ReductionRank of(const HIndex& idx, long coeff_val3);
    // The total order: smaller-rank terms are closer to reduced form.
    bool operator<(const ReductionRank& o) const;
};

// Truncated series of H~_idx mod 3^e.
TruncSeries h_tilde_series(const HIndex& idx, int trunc_deg, int e);

// Series of R(k)^a, truncated.
TruncSeries r_factor_series(int k, int a, int trunc_deg, int e);

// Expansion of Psi^(2K) (even) or Psi^(2K+1) (odd, with a Psi(z) prefactor)
// as (1+z)^(-K) times a combination of H~ series: the coefficient of the
// support (a_1..a_r) is prod_j 3^(a_j) C(K, a_j); terms whose coefficient
// valuation reaches e are dropped.
struct PsiPowerExpansion {
    int K = 0;
    bool odd = false;  // carries one explicit Psi(z) prefactor
    HCombination comb;

    TruncSeries to_series(int trunc_deg) const;
};

PsiPowerExpansion psi_power_h_expansion(int K, bool odd, int e);

// Expresses H~_idx as a combination of 1 and pure-index H~ series over
// Z/3^e[z,(1+z)^{-1}], by the four-case recursion on the maximal
// 3-divisible position. Memoized; termination by ReductionRank.
HCombination reduce_h(const HIndex& idx, int e);

}  // namespace psicong
