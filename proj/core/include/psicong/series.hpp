#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "psicong/ring3.hpp"

namespace psicong {

// A power/Laurent series mod 3^e, truncated at an explicit degree N.
// Coefficients are stored for degrees min_deg..N. This is the universal
// comparison medium: every representation is checked by expanding here.
class TruncSeries {
public:
    TruncSeries() = default;
    TruncSeries(int e, int min_deg, int trunc_deg);
    static TruncSeries zero(int e, int trunc_deg) { return TruncSeries(e, 0, trunc_deg); }
    static TruncSeries one(int e, int trunc_deg);
    static TruncSeries monomial(int e, int deg, std::uint64_t coeff, int trunc_deg);

    int mod_exp() const { return e_; }
    std::uint64_t modulus() const { return pow3(e_); }
    int min_deg() const { return min_deg_; }
    int trunc_deg() const { return trunc_; }

    std::uint64_t at(int deg) const;
    void set(int deg, std::uint64_t v);
    void add_at(int deg, std::uint64_t v);

    TruncSeries operator+(const TruncSeries& o) const;
    TruncSeries operator-(const TruncSeries& o) const;
    TruncSeries operator*(const TruncSeries& o) const;
    TruncSeries scaled(std::uint64_t c) const;
    TruncSeries shifted(int k) const;  // times z^k
    TruncSeries derivative() const;

    // Multiplication by a sparse factor given as (degree, coeff) pairs.
    TruncSeries mul_sparse(const std::vector<std::pair<int, std::uint64_t>>& f) const;

    // Divides by (1 + sign*z^g), sign = +-1; the constant term 1 is a unit,
    // so this is exact on truncated series.
    TruncSeries div_one_plus(int sign, int g) const;

    TruncSeries reduced_mod(int e) const;  // reduce to a smaller exponent
    TruncSeries truncated(int trunc_deg) const;

    bool is_zero_up_to(int deg) const;
    // Equality of coefficients for all degrees <= deg (both must cover it).
    bool agrees_with(const TruncSeries& o, int deg) const;
    // First degree <= deg where the two differ, or min_deg-1 if none.
    int first_difference(const TruncSeries& o, int deg) const;

    std::string to_string(int max_terms = 12) const;

private:
    int e_ = 1;
    int min_deg_ = 0;
    int trunc_ = 0;
    std::vector<std::uint64_t> c_;  // c_[i] = coefficient of z^(min_deg_+i)
};

}  // namespace psicong
