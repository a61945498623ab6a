#include "psicong/ring3.hpp"

#include <array>
#include <cassert>
#include <stdexcept>

namespace psicong {

namespace {
std::array<std::uint64_t, kMaxPow3Exp + 1> make_pow3() {
    std::array<std::uint64_t, kMaxPow3Exp + 1> t{};
    t[0] = 1;
    for (int i = 1; i <= kMaxPow3Exp; ++i) t[i] = t[i - 1] * 3;
    return t;
}
const auto kPow3 = make_pow3();
}  // namespace

std::uint64_t pow3(int e) {
    assert(e >= 0 && e <= kMaxPow3Exp);
    return kPow3[static_cast<std::size_t>(e)];
}

long v3(const BigInt& n) {
    long v = n.val3();
    return v < 0 ? kV3Infinite : v;
}

long v3_u64(std::uint64_t n) {
    if (n == 0) return kV3Infinite;
    long v = 0;
    while (n % 3 == 0) { n /= 3; ++v; }
    return v;
}

long long v3_factorial(long long d) {
    assert(d >= 0);
    long long s = 0, t = d;
    while (t) { s += t % 3; t /= 3; }
    return (d - s) / 2;
}

long long min_degree_bound(long long gamma) {
    assert(gamma >= 1);
    for (long long d = 1;; ++d)
        if (d + v3_factorial(d) >= gamma) return 2 * d;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

Residue::Residue(std::uint64_t value, int exponent) : v(value), e(exponent) {
    assert(e >= 1 && e <= kMaxPow3Exp);
    v %= pow3(e);
}

Residue Residue::from_int(long long value, int exponent) {
    std::uint64_t m = pow3(exponent);
    long long r = value % static_cast<long long>(m);
    if (r < 0) r += static_cast<long long>(m);
    return Residue(static_cast<std::uint64_t>(r), exponent);
}

Residue Residue::operator+(const Residue& o) const {
    assert(e == o.e);
    std::uint64_t m = modulus(), r = v + o.v;
    if (r >= m) r -= m;
    return Residue(r, e);
}

Residue Residue::operator-(const Residue& o) const {
    assert(e == o.e);
    std::uint64_t m = modulus();
    return Residue(v >= o.v ? v - o.v : v + m - o.v, e);
}

Residue Residue::operator*(const Residue& o) const {
    assert(e == o.e);
    return Residue(mulmod(v, o.v, modulus()), e);
}

Residue Residue::operator-() const {
    return Residue(v == 0 ? 0 : modulus() - v, e);
}

Residue Residue::inverse() const {
    if (v % 3 == 0) throw std::domain_error("Residue::inverse: not a unit mod 3^e");
    // Newton lift of the inverse mod 3 up to mod 3^e.
    std::uint64_t m = modulus();
    std::uint64_t x = (v % 3 == 1) ? 1 : 2;  // inverse mod 3
    for (int bits = 1; bits < e; bits *= 2) {
        // x <- x*(2 - v*x) doubles the precision each round
        std::uint64_t t = mulmod(v, x, m);
        std::uint64_t two_minus = (2 >= t) ? 2 - t : m - (t - 2);
        x = mulmod(x, two_minus, m);
    }
    return Residue(x, e);
}

}  // namespace psicong
