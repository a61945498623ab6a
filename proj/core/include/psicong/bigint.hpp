#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace psicong {

// Arbitrary-precision signed integer, sign + magnitude in base 10^9.
// Covers what the combinatorial oracles need: exact binomials, alternating
// sums, polynomial-coefficient recurrences with exact division.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);
    explicit BigInt(const std::string& decimal);

    bool is_zero() const { return limbs_.empty(); }
    bool is_negative() const { return neg_; }
    int sign() const { return is_zero() ? 0 : (neg_ ? -1 : 1); }

    BigInt operator-() const;
    BigInt& operator+=(const BigInt& o);
    BigInt& operator-=(const BigInt& o);
    BigInt operator+(const BigInt& o) const { BigInt r = *this; return r += o; }
    BigInt operator-(const BigInt& o) const { BigInt r = *this; return r -= o; }
    BigInt operator*(const BigInt& o) const;
    BigInt& operator*=(const BigInt& o) { *this = *this * o; return *this; }

    BigInt& mul_small(long long v);
    // Divides by d > 0, returns remainder in [0, d); requires d < 2^32.
    std::uint32_t divmod_small(std::uint32_t d);
    // Division that must leave no remainder (asserts otherwise).
    BigInt& exact_div_small(std::uint32_t d);
    // Exact division by d of any size, d != 0, via repeated small factors.
    BigInt& exact_div(long long d);

    BigInt pow(unsigned e) const;

    // Value mod m (m fits in uint64), result in [0, m).
    std::uint64_t mod_u64(std::uint64_t m) const;

    // Base-3 digits, least significant first; empty for zero.
    std::vector<std::uint8_t> trits() const;

    // 3-adic valuation; -1 encodes "infinite" (the zero input).
    long val3() const;

    int cmp(const BigInt& o) const;
    bool operator==(const BigInt& o) const { return cmp(o) == 0; }
    bool operator!=(const BigInt& o) const { return cmp(o) != 0; }
    bool operator<(const BigInt& o) const { return cmp(o) < 0; }
    bool operator<=(const BigInt& o) const { return cmp(o) <= 0; }

    bool fits_int64() const;
    long long to_int64() const;
    std::string to_string() const;

    static BigInt binomial(long long n, long long k);
    static BigInt factorial(long long n);

private:
    static constexpr std::uint32_t kBase = 1000000000u;
    bool neg_ = false;
    std::vector<std::uint32_t> limbs_;  // little-endian base 10^9

    void trim();
    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static void add_mag(std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    // a -= b, requires |a| >= |b|
    static void sub_mag(std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
};

}  // namespace psicong
