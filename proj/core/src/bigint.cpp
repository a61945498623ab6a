#include "psicong/bigint.hpp"

#include <cassert>
#include <stdexcept>

namespace psicong {

BigInt::BigInt(long long v) {
    if (v < 0) { neg_ = true; }
    unsigned long long a = neg_ ? -static_cast<unsigned long long>(v) : static_cast<unsigned long long>(v);
    while (a) {
        limbs_.push_back(static_cast<std::uint32_t>(a % kBase));
        a /= kBase;
    }
}

BigInt::BigInt(const std::string& s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) { neg_ = s[i] == '-'; ++i; }
    if (i == s.size()) throw std::invalid_argument("BigInt: empty literal");
    BigInt acc;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit");
        acc.mul_small(10);
        acc += BigInt(s[i] - '0');
    }
    limbs_ = std::move(acc.limbs_);
    if (limbs_.empty()) neg_ = false;
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) neg_ = false;
}

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

void BigInt::add_mag(std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    std::uint32_t carry = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t t = static_cast<std::uint64_t>(a[i]) + (i < b.size() ? b[i] : 0) + carry;
        a[i] = static_cast<std::uint32_t>(t % kBase);
        carry = static_cast<std::uint32_t>(t / kBase);
    }
    if (carry) a.push_back(carry);
}

void BigInt::sub_mag(std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t t = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (t < 0) { t += kBase; borrow = 1; } else borrow = 0;
        a[i] = static_cast<std::uint32_t>(t);
    }
    assert(borrow == 0);
    while (!a.empty() && a.back() == 0) a.pop_back();
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    if (!r.is_zero()) r.neg_ = !r.neg_;
    return r;
}

BigInt& BigInt::operator+=(const BigInt& o) {
    if (neg_ == o.neg_) {
        add_mag(limbs_, o.limbs_);
    } else if (cmp_mag(limbs_, o.limbs_) >= 0) {
        sub_mag(limbs_, o.limbs_);
    } else {
        std::vector<std::uint32_t> t = o.limbs_;
        sub_mag(t, limbs_);
        limbs_ = std::move(t);
        neg_ = o.neg_;
    }
    trim();
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) { return *this += -o; }

BigInt BigInt::operator*(const BigInt& o) const {
    if (is_zero() || o.is_zero()) return BigInt();
    BigInt r;
    r.neg_ = neg_ != o.neg_;
    r.limbs_.assign(limbs_.size() + o.limbs_.size(), 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        unsigned __int128 carry = 0;
        for (std::size_t j = 0; j < o.limbs_.size() || carry; ++j) {
            unsigned __int128 cur = r.limbs_[i + j] + carry;
            if (j < o.limbs_.size())
                cur += static_cast<unsigned __int128>(limbs_[i]) * o.limbs_[j];
            r.limbs_[i + j] = static_cast<std::uint32_t>(cur % kBase);
            carry = cur / kBase;
        }
    }
    r.trim();
    return r;
}

BigInt& BigInt::mul_small(long long v) {
    if (v == 0 || is_zero()) { limbs_.clear(); neg_ = false; return *this; }
    if (v < 0) { neg_ = !neg_; v = -v; }
    if (v >= kBase) {
        bool n = neg_;
        neg_ = false;
        *this = *this * BigInt(v);
        neg_ = n;
        return *this;
    }
    std::uint64_t m = static_cast<std::uint64_t>(v), carry = 0;
    for (auto& limb : limbs_) {
        std::uint64_t t = limb * m + carry;
        limb = static_cast<std::uint32_t>(t % kBase);
        carry = t / kBase;
    }
    while (carry) {
        limbs_.push_back(static_cast<std::uint32_t>(carry % kBase));
        carry /= kBase;
    }
    return *this;
}

std::uint32_t BigInt::divmod_small(std::uint32_t d) {
    assert(d != 0);
    std::uint64_t rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        std::uint64_t cur = rem * kBase + limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(cur / d);
        rem = cur % d;
    }
    trim();
    return static_cast<std::uint32_t>(rem);
}

BigInt& BigInt::exact_div_small(std::uint32_t d) {
    std::uint32_t r = divmod_small(d);
    assert(r == 0);
    (void)r;
    return *this;
}

BigInt& BigInt::exact_div(long long d) {
    assert(d != 0);
    if (d < 0) { neg_ = !neg_; d = -d; }
    while (d > 0xFFFFFFFFLL) {
        // peel a factor that fits; exactness of every step follows from
        // exactness of the whole quotient
        exact_div_small(1u << 16);
        d >>= 16;
    }
    return exact_div_small(static_cast<std::uint32_t>(d));
}

BigInt BigInt::pow(unsigned e) const {
    BigInt r(1), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

std::uint64_t BigInt::mod_u64(std::uint64_t m) const {
    assert(m != 0);
    unsigned __int128 rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;)
        rem = (rem * kBase + limbs_[i]) % m;
    std::uint64_t r = static_cast<std::uint64_t>(rem);
    if (neg_ && r != 0) r = m - r;
    return r;
}

std::vector<std::uint8_t> BigInt::trits() const {
    assert(!neg_);
    std::vector<std::uint8_t> out;
    BigInt t = *this;
    while (!t.is_zero()) {
        // 3^18 fits in a uint32 divisor? 3^18 = 387420489 < 2^32, gives 18 trits a pop
        std::uint32_t chunk = t.divmod_small(387420489u);
        for (int i = 0; i < 18; ++i) {
            out.push_back(static_cast<std::uint8_t>(chunk % 3));
            chunk /= 3;
        }
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

long BigInt::val3() const {
    if (is_zero()) return -1;
    long v = 0;
    BigInt t = *this;
    for (;;) {
        BigInt q = t;
        if (q.divmod_small(3) != 0) return v;
        t = std::move(q);
        ++v;
    }
}

int BigInt::cmp(const BigInt& o) const {
    if (neg_ != o.neg_) return neg_ ? -1 : 1;
    int c = cmp_mag(limbs_, o.limbs_);
    return neg_ ? -c : c;
}

bool BigInt::fits_int64() const { return limbs_.size() <= 2 || (limbs_.size() == 3 && limbs_[2] <= 9u); }

long long BigInt::to_int64() const {
    long long r = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) r = r * kBase + limbs_[i];
    return neg_ ? -r : r;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    std::string s = neg_ ? "-" : "";
    s += std::to_string(limbs_.back());
    for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
        std::string part = std::to_string(limbs_[i]);
        s += std::string(9 - part.size(), '0') + part;
    }
    return s;
}

BigInt BigInt::binomial(long long n, long long k) {
    if (k < 0 || k > n) return BigInt();
    if (k > n - k) k = n - k;
    BigInt r(1);
    for (long long i = 1; i <= k; ++i) {
        r.mul_small(n - k + i);
        r.exact_div(i);
    }
    return r;
}

BigInt BigInt::factorial(long long n) {
    BigInt r(1);
    for (long long i = 2; i <= n; ++i) r.mul_small(i);
    return r;
}

}  // namespace psicong
