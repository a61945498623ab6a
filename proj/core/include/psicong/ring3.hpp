#pragma once

#include <cstdint>
#include <limits>

#include "psicong/bigint.hpp"

namespace psicong {

// Largest e with 3^e representable in uint64.
inline constexpr int kMaxPow3Exp = 40;

// 3^e as uint64, e in [0, kMaxPow3Exp].
std::uint64_t pow3(int e);

// Sentinel for v3(0): larger than any finite valuation that can occur.
inline constexpr long kV3Infinite = std::numeric_limits<long>::max();

// 3-adic valuation. v3(0) = kV3Infinite, so divisibility filters
// ("drop when valuation >= e") treat vanishing entries uniformly.
long v3(const BigInt& n);
long v3_u64(std::uint64_t n);

// v3(d!) = (d - s3(d))/2 where s3 is the ternary digit sum
// (Legendre's formula collapsed along base-3 digits).
long long v3_factorial(long long d);

// Least even bound 2d on the degree of a monic polynomial relation for the
// basic series modulo 3^gamma: d minimal with d + v3(d!) >= gamma.
long long min_degree_bound(long long gamma);

// An element of Z/3^e. The exponent travels with the value: mixing
// exponents is a programming error, checked, never coerced.
struct Residue {
    std::uint64_t v = 0;
    int e = 1;

    Residue() = default;
    Residue(std::uint64_t value, int exponent);
    static Residue from_int(long long value, int exponent);

    std::uint64_t modulus() const { return pow3(e); }

    Residue operator+(const Residue& o) const;
    Residue operator-(const Residue& o) const;
    Residue operator*(const Residue& o) const;
    Residue operator-() const;
    bool operator==(const Residue& o) const = default;

    bool is_zero() const { return v == 0; }
    long val3() const { return v == 0 ? kV3Infinite : v3_u64(v); }

    // Inverse of a unit (v not divisible by 3).
    Residue inverse() const;
};

// a*b mod m without overflow.
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);

}  // namespace psicong
