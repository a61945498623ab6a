#include "psicong/series.hpp"

#include <algorithm>
#include <cassert>

namespace psicong {

TruncSeries::TruncSeries(int e, int min_deg, int trunc_deg)
    : e_(e), min_deg_(min_deg), trunc_(trunc_deg) {
    assert(trunc_ >= min_deg_ - 1);
    c_.assign(static_cast<std::size_t>(trunc_ - min_deg_ + 1), 0);
}

TruncSeries TruncSeries::one(int e, int trunc_deg) {
    TruncSeries s(e, 0, trunc_deg);
    s.set(0, 1);
    return s;
}

TruncSeries TruncSeries::monomial(int e, int deg, std::uint64_t coeff, int trunc_deg) {
    TruncSeries s(e, std::min(deg, 0), trunc_deg);
    s.set(deg, coeff);
    return s;
}

std::uint64_t TruncSeries::at(int deg) const {
    if (deg < min_deg_ || deg > trunc_) return 0;
    return c_[static_cast<std::size_t>(deg - min_deg_)];
}

void TruncSeries::set(int deg, std::uint64_t v) {
    assert(deg >= min_deg_ && deg <= trunc_);
    c_[static_cast<std::size_t>(deg - min_deg_)] = v % modulus();
}

void TruncSeries::add_at(int deg, std::uint64_t v) {
    assert(deg >= min_deg_ && deg <= trunc_);
    auto& slot = c_[static_cast<std::size_t>(deg - min_deg_)];
    slot = (slot + v % modulus()) % modulus();
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
    assert(e_ == o.e_);
    TruncSeries r(e_, std::min(min_deg_, o.min_deg_), std::min(trunc_, o.trunc_));
    for (int d = r.min_deg_; d <= r.trunc_; ++d) r.set(d, (at(d) + o.at(d)) % modulus());
    return r;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const {
    assert(e_ == o.e_);
    std::uint64_t m = modulus();
    TruncSeries r(e_, std::min(min_deg_, o.min_deg_), std::min(trunc_, o.trunc_));
    for (int d = r.min_deg_; d <= r.trunc_; ++d) r.set(d, (at(d) + m - o.at(d)) % m);
    return r;
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
    assert(e_ == o.e_);
    std::uint64_t m = modulus();
    // valid truncation of the product: min over the two "one factor full,
    // other at its order" bounds
    int trunc = std::min(trunc_ + o.min_deg_, o.trunc_ + min_deg_);
    TruncSeries r(e_, min_deg_ + o.min_deg_, trunc);
    for (int i = min_deg_; i <= trunc_; ++i) {
        std::uint64_t a = at(i);
        if (!a) continue;
        int jmax = std::min(o.trunc_, trunc - i);
        for (int j = o.min_deg_; j <= jmax; ++j) {
            std::uint64_t b = o.at(j);
            if (b) r.add_at(i + j, mulmod(a, b, m));
        }
    }
    return r;
}

TruncSeries TruncSeries::scaled(std::uint64_t c) const {
    std::uint64_t m = modulus();
    c %= m;
    TruncSeries r(e_, min_deg_, trunc_);
    for (int d = min_deg_; d <= trunc_; ++d) r.set(d, mulmod(at(d), c, m));
    return r;
}

TruncSeries TruncSeries::shifted(int k) const {
    TruncSeries r(e_, min_deg_ + k, trunc_ + k);
    r.c_ = c_;
    return r;
}

TruncSeries TruncSeries::derivative() const {
    std::uint64_t m = modulus();
    TruncSeries r(e_, min_deg_ - 1, trunc_ - 1);
    for (int d = min_deg_; d <= trunc_; ++d) {
        long long k = d;
        std::uint64_t kk = static_cast<std::uint64_t>(((k % static_cast<long long>(m)) + static_cast<long long>(m)) % static_cast<long long>(m));
        r.set(d - 1, mulmod(at(d), kk, m));
    }
    return r;
}

TruncSeries TruncSeries::mul_sparse(const std::vector<std::pair<int, std::uint64_t>>& f) const {
    std::uint64_t m = modulus();
    int fmin = 0, fmax = 0;
    if (!f.empty()) { fmin = f.front().first; fmax = f.front().first; }
    for (auto& [d, v] : f) { fmin = std::min(fmin, d); fmax = std::max(fmax, d); }
    TruncSeries r(e_, min_deg_ + fmin, trunc_ + fmin);
    for (auto& [fd, fv] : f) {
        if (!fv) continue;
        for (int d = min_deg_; d <= trunc_; ++d) {
            int out = d + fd;
            if (out < r.min_deg_ || out > r.trunc_) continue;
            std::uint64_t a = at(d);
            if (a) r.add_at(out, mulmod(a, fv % m, m));
        }
    }
    return r;
}

TruncSeries TruncSeries::div_one_plus(int sign, int g) const {
    assert(g >= 1 && (sign == 1 || sign == -1));
    std::uint64_t m = modulus();
    TruncSeries r(e_, min_deg_, trunc_);
    // q = p / (1 + sign*z^g): q_d = p_d - sign*q_{d-g}
    for (int d = min_deg_; d <= trunc_; ++d) {
        std::uint64_t prev = (d - g >= min_deg_) ? r.at(d - g) : 0;
        std::uint64_t sub = (sign == 1) ? prev : (m - prev) % m;
        r.set(d, (at(d) + m - sub) % m);
    }
    return r;
}

TruncSeries TruncSeries::reduced_mod(int e) const {
    assert(e <= e_);
    std::uint64_t m = pow3(e);
    TruncSeries r(e, min_deg_, trunc_);
    for (int d = min_deg_; d <= trunc_; ++d) r.set(d, at(d) % m);
    return r;
}

TruncSeries TruncSeries::truncated(int trunc_deg) const {
    assert(trunc_deg <= trunc_);
    TruncSeries r(e_, min_deg_, trunc_deg);
    for (int d = min_deg_; d <= trunc_deg; ++d) r.set(d, at(d));
    return r;
}

bool TruncSeries::is_zero_up_to(int deg) const {
    assert(deg <= trunc_);
    for (int d = min_deg_; d <= deg; ++d)
        if (at(d) != 0) return false;
    return true;
}

bool TruncSeries::agrees_with(const TruncSeries& o, int deg) const {
    return first_difference(o, deg) > deg;
}

int TruncSeries::first_difference(const TruncSeries& o, int deg) const {
    assert(e_ == o.e_);
    assert(deg <= trunc_ && deg <= o.trunc_);
    int lo = std::min(min_deg_, o.min_deg_);
    for (int d = lo; d <= deg; ++d)
        if (at(d) != o.at(d)) return d;
    return deg + 1;
}

std::string TruncSeries::to_string(int max_terms) const {
    std::string s;
    int shown = 0;
    for (int d = min_deg_; d <= trunc_ && shown < max_terms; ++d) {
        if (!at(d)) continue;
        if (!s.empty()) s += " + ";
        s += std::to_string(at(d));
        if (d != 0) s += "*z^" + std::to_string(d);
        ++shown;
    }
    if (s.empty()) s = "0";
    return s + " (mod 3^" + std::to_string(e_) + ", O(z^" + std::to_string(trunc_ + 1) + "))";
}

}  // namespace psicong
