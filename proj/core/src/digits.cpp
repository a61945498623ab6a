#include "psicong/digits.hpp"

#include <algorithm>
#include <cassert>

namespace psicong {

TritString TritString::of_u64(std::uint64_t n) {
    TritString s;
    while (n) {
        s.d.push_back(static_cast<std::uint8_t>(n % 3));
        n /= 3;
    }
    return s;
}

TritString TritString::parse_msb(const std::string& str) {
    TritString s;
    for (auto it = str.rbegin(); it != str.rend(); ++it) s.d.push_back(static_cast<std::uint8_t>(*it - '0'));
    while (!s.d.empty() && s.d.back() == 0) s.d.pop_back();
    return s;
}

std::string TritString::msb_string() const {
    if (d.empty()) return "0";
    std::string out;
    for (int p = len() - 1; p >= 0; --p) out += static_cast<char>('0' + digit(p));
    return out;
}

bool ends_with(const TritString& s, const std::string& msb_pattern) {
    int L = static_cast<int>(msb_pattern.size());
    for (int i = 0; i < L; ++i)
        if (s.digit(L - 1 - i) != msb_pattern[static_cast<std::size_t>(i)] - '0') return false;
    return true;
}

namespace {

// digits at positions >= lo all lie in {0,1}
bool all01_from(const TritString& s, int lo) {
    for (int p = std::max(lo, 0); p < s.len(); ++p)
        if (s.digit(p) == 2) return false;
    return true;
}

bool all02_from(const TritString& s, int lo) {
    for (int p = std::max(lo, 0); p < s.len(); ++p)
        if (s.digit(p) == 1) return false;
    return true;
}

// number of maximal runs of `letter` fully inside positions [lo, len)
long runs_from(const TritString& s, int lo, int letter) {
    long r = 0;
    for (int p = std::max(lo, 0); p < s.len(); ++p)
        if (s.digit(p) == letter && s.digit(p + 1) != letter) ++r;
    return r;
}

// runs of `letter` inside [lo, hi] treating hi+1 as a boundary
long runs_in(const TritString& s, int lo, int hi, int letter) {
    long r = 0;
    for (int p = std::max(lo, 0); p <= hi; ++p)
        if (s.digit(p) == letter && (p == hi || s.digit(p + 1) != letter)) ++r;
    return r;
}

std::vector<int> positions_of(const TritString& s, int letter) {
    std::vector<int> out;
    for (int p = 0; p < s.len(); ++p)
        if (s.digit(p) == letter) out.push_back(p);
    return out;
}

int trailing_zeros(const TritString& s) {
    int c = 0;
    while (c < s.len() && s.digit(c) == 0) ++c;
    return c;
}

long mod3(long x) { return ((x % 3) + 3) % 3; }

// floor((2E - r)/3) for the unique r in the clause family; callers pass the
// already-divisible numerator
long exact_third(long numerator) {
    assert(numerator % 3 == 0);
    return numerator / 3;
}

}  // namespace

DigitStats digit_stats(const TritString& s) {
    DigitStats st;
    int L = s.len();
    auto occ3 = [&](int a, int b, int c, int min_p) {
        long r = 0;
        for (int p = min_p; p <= L; ++p)
            if (s.digit(p + 2) == a && s.digit(p + 1) == b && s.digit(p) == c) ++r;
        return r;
    };
    auto occ2 = [&](int a, int b) {
        long r = 0;
        for (int p = 0; p <= L; ++p)
            if (s.digit(p + 1) == a && s.digit(p) == b) ++r;
        return r;
    };
    st.estring = runs_from(s, 0, 1);
    st.eestring = runs_from(s, 0, 2);
    for (int p = 2; p < L; ++p) {
        int d = s.digit(p);
        if ((d == 0 || d == 1) && s.digit(p - 1) != d && s.digit(p + 1) != d) {
            ++st.iso2;
            if (p >= 3) ++st.iso3;
        }
    }
    for (int p = 3; p < L; ++p) {
        int d = s.digit(p);
        if ((d == 0 || d == 2) && s.digit(p - 1) != d && s.digit(p + 1) != d) ++st.iso3_02;
    }
    st.occ011 = occ3(0, 1, 1, 0);
    st.occ100_1 = occ3(1, 0, 0, 1);
    st.occ020 = occ3(0, 2, 0, 0);
    st.occ021 = occ3(0, 2, 1, 0);
    st.occ102 = occ3(1, 0, 2, 0);
    st.occ10 = occ2(1, 0);
    st.occ01 = occ2(0, 1);
    st.occ022 = occ3(0, 2, 2, 0);
    st.occ200 = occ3(2, 0, 0, 0);
    st.occ201 = occ3(2, 0, 1, 0);
    st.occ21 = occ2(2, 1);
    return st;
}

namespace {

// ---- coefficients of Psi^3 ----------------------------------------------

std::uint64_t psi3_mod9(const TritString& s) {
    auto twos = positions_of(s, 2);
    if (twos.empty()) {
        int d0 = s.digit(0), d1 = s.digit(1);
        long E = runs_from(s, 0, 1);
        if (d0 == 0 && d1 == 1) {
            static const std::uint64_t v[3] = {7, 4, 1};  // E mod 3 = 0,1,2
            return v[mod3(E)];
        }
        if (d0 == 0 && d1 == 0) {
            static const std::uint64_t v[3] = {1, 7, 4};
            return v[mod3(E)];
        }
        if (d0 == 1 && d1 == 0) return 3;
        return 0;
    }
    if (twos.size() == 1) {
        int p = twos[0];
        if (p == 0) return s.digit(1) == 0 ? 3 : 0;
        if (s.digit(p + 1) != 0) return 0;
        return s.digit(0) == 0 ? 6 : 0;
    }
    return 0;
}

std::uint64_t psi3_mod27(const TritString& s) {
    if (s.len() <= 1) {
        if (s.digit(0) == 0) return 1;  // n = 0
        return 3;                       // n = 1 or 2
    }
    auto twos = positions_of(s, 2);
    DigitStats st = digit_stats(s);
    long E = st.estring;
    long r = mod3(E);

    auto ones_block_value = [&](bool ends10) -> std::uint64_t {
        // table over (ending, E mod 3, Q)
        long t = ends10 ? exact_third(2 * E - (r == 2 ? 1 : (r == 1 ? 2 : 3)))
                        : exact_third(2 * E - (r == 0 ? 0 : (r == 2 ? 1 : 2)));
        long Q = mod3(t - st.iso2 + st.occ011 + st.occ100_1);
        static const std::uint64_t tri_a[3] = {1, 10, 19};
        static const std::uint64_t tri_b[3] = {4, 13, 22};
        static const std::uint64_t tri_c[3] = {16, 25, 7};
        if (ends10) {
            if (r == 2) return tri_a[Q];
            if (r == 1) return tri_b[Q];
            return tri_c[Q];
        }
        if (r == 0) return tri_a[Q];
        if (r == 2) return tri_b[Q];
        return tri_c[Q];
    };

    // one digit 1 or 2 at the bottom with a 0 above it: suffix families
    auto low_families = [&]() -> std::uint64_t {
        // suffix (s1,s0) = (0,1) or (0,2); digits above position 1 in {0,1}
        long Ea = runs_from(s, 2, 1);
        static const std::uint64_t tri[3] = {3, 12, 21};
        if (s.digit(2) == 1) return tri[mod3(2 - Ea)];
        if (Ea >= 1) return tri[mod3(-Ea)];
        return 0;
    };

    if (twos.empty()) {
        if (s.digit(0) == 0) return ones_block_value(s.digit(1) == 1);
        if (s.digit(1) == 1) return s.digit(2) == 0 ? 9 : 0;  // suffix 011 / 111
        return low_families();                                 // suffix 01
    }
    if (twos.size() == 1) {
        int p = twos[0];
        if (p == 0) {
            if (s.digit(1) == 0) return low_families();                     // suffix 02
            return s.digit(2) == 0 ? 9 : 0;                                 // 012 / 112
        }
        if (p == 1) {
            if (s.digit(2) == 1)  // 012-window over the trailing 0
                return (s.digit(3) == 0 && s.digit(0) == 0) ? 18 : 0;
            if (s.digit(2) != 0) return 0;
            if (s.digit(0) == 1) return 9;  // suffix 021
            // suffix 020
            long W = mod3(st.occ020 + st.occ021 + st.occ102 - st.occ01 - st.occ10);
            static const std::uint64_t tri[3] = {24, 6, 15};  // W = 0,1,2
            return tri[W];
        }
        // p >= 2
        if (s.digit(p + 1) == 1)
            return (s.digit(p + 2) == 0 && s.digit(0) == 0) ? 18 : 0;  // 012-window + trailing 0
        if (s.digit(p + 1) != 0) return 0;
        long W = mod3(st.occ020 + st.occ021 + st.occ102 - st.occ01 - st.occ10);
        if (s.digit(0) == 0 && s.digit(1) == 0) {
            static const std::uint64_t tri[3] = {6, 15, 24};
            return tri[W];
        }
        if (s.digit(0) == 0 && s.digit(1) == 1) {
            static const std::uint64_t tri[3] = {15, 24, 6};  // shifted by one
            return tri[W];
        }
        if (s.digit(0) == 1 && s.digit(1) == 0) return 18;
        return 0;
    }
    if (twos.size() == 2) {
        int p1 = twos[1], p2 = twos[0];
        if (p2 >= 1 && s.digit(0) == 0 && s.digit(p1 + 1) == 0 && s.digit(p2 + 1) == 0) return 9;
        if (p2 == 0 && p1 == 1) return s.digit(2) == 0 ? 9 : 0;  // suffix 022
        if (p2 == 0 && s.digit(1) == 0 && p1 >= 2 && s.digit(p1 + 1) == 0) return 18;
        if (p1 == p2 + 1 && p2 >= 1 && s.digit(p1 + 1) == 0 && s.digit(0) == 0) return 18;  // 022-window
        return 0;
    }
    return 0;
}

// ---- coefficients of Psi^5 mod 27 ----------------------------------------
//
// assembled from the nested expansion
//   Psi^5 = (1+z)^{-2} Psi (1 + 6 sum_k R(k) + 9 sum_{k1>k2} R(k1)R(k2)
//                             + 9 sum_k R(k)^2)  mod 27,
// with one digit-pattern table per factor shape. Patterns are written
// msb-first; windows sit at fixed positions with 0/1 wildcards elsewhere.

bool window_match(const TritString& s, int lo, const std::string& msb_pat);
bool wild01_outside(const TritString& s, const std::vector<std::pair<int, int>>& windows);

namespace psi5 {

using W = std::vector<std::pair<int, int>>;

int match1(const TritString& s, int lo, std::initializer_list<const char*> plus,
           std::initializer_list<const char*> minus, const W& windows) {
    if (!wild01_outside(s, windows)) return 0;
    for (auto* p : plus)
        if (window_match(s, lo, p)) return 1;
    for (auto* p : minus)
        if (window_match(s, lo, p)) return -1;
    return 0;
}

// (1+z)^{-2} Psi
int piece_base(const TritString& s) {
    return match1(s, 0, {"00", "02"}, {"01"}, {{0, 2}});
}

//  (1+z)^{-2} Psi R(k)
int piece_single(const TritString& s, int k) {
    if (k == 0) return match1(s, 0, {"01"}, {}, {{0, 2}});
    if (k == 1) return match1(s, 0, {"010", "012", "020", "022"}, {"011", "021"}, {{0, 3}});
    if (!wild01_outside(s, {{k, 2}, {0, 2}})) return 0;
    int top = window_match(s, k, "01") || window_match(s, k, "10") ? 1
              : window_match(s, k, "02")                           ? 2
                                                                   : 0;
    if (!top) return 0;
    int bot = window_match(s, 0, "00") || window_match(s, 0, "02") ? 1
              : window_match(s, 0, "01")                           ? -1
                                                                   : 0;
    return top * bot;
}

// (1+z)^{-2} Psi R(k+1)R(k), adjacent pair
int piece_adjacent(const TritString& s, int k) {
    if (k == 0) return match1(s, 0, {"011", "021"}, {}, {{0, 3}});
    if (k == 1)
        return match1(s, 0, {"0110", "0112", "0120", "0122", "0210", "0212", "0220", "0222"},
                      {"0111", "0121", "0211", "0221"}, {{0, 4}});
    if (!wild01_outside(s, {{k, 3}, {0, 2}})) return 0;
    int top = 0;
    for (auto* p : {"011", "020", "021", "100"})
        if (window_match(s, k, p)) top = 1;
    for (auto* p : {"012", "022"})
        if (window_match(s, k, p)) top = 2;
    if (!top) return 0;
    int bot = window_match(s, 0, "00") || window_match(s, 0, "02") ? 1
              : window_match(s, 0, "01")                           ? -1
                                                                   : 0;
    return top * bot;
}

// (1+z)^{-2} Psi R(k1)R(k2), k1 - 1 > k2
int piece_pair(const TritString& s, int k1, int k2) {
    auto top_of = [&](int lo) {
        return window_match(s, lo, "01") || window_match(s, lo, "10") ? 1
               : window_match(s, lo, "02")                            ? 2
                                                                      : 0;
    };
    if (k2 == 0) {
        if (!wild01_outside(s, {{k1, 2}, {0, 2}})) return 0;
        int top = top_of(k1);
        if (!top || !window_match(s, 0, "01")) return 0;
        return top;
    }
    if (k2 == 1) {
        if (!wild01_outside(s, {{k1, 2}, {0, 3}})) return 0;
        int top = top_of(k1);
        if (!top) return 0;
        int bot = 0;
        for (auto* p : {"010", "012", "020", "022"})
            if (window_match(s, 0, p)) bot = 1;
        for (auto* p : {"011", "021"})
            if (window_match(s, 0, p)) bot = -1;
        return top * bot;
    }
    if (!wild01_outside(s, {{k1, 2}, {k2, 2}, {0, 2}})) return 0;
    int top = top_of(k1), mid = top_of(k2);
    if (!top || !mid) return 0;
    int bot = window_match(s, 0, "00") || window_match(s, 0, "02") ? 1
              : window_match(s, 0, "01")                           ? -1
                                                                   : 0;
    return top * mid * bot;
}

// (1+z)^{-2} Psi R(k)^2
int piece_square(const TritString& s, int k) {
    if (k == 0) return match1(s, 0, {"002", "010", "022", "100"}, {"012", "020"}, {{0, 3}});
    if (k == 1)
        return match1(s, 0,
                      {"0020", "0022", "0110", "0112", "0121", "0211", "0220", "0222", "1010", "1012"},
                      {"0021", "0111", "0120", "0122", "0210", "0212", "0221", "1011"}, {{0, 4}}) +
               2 * match1(s, 0, {"0100", "0102", "0201", "1000", "1002"},
                          {"0101", "0200", "0202", "1001"}, {{0, 4}});
    if (!wild01_outside(s, {{k, 3}, {0, 2}})) return 0;
    int bot = window_match(s, 0, "00") || window_match(s, 0, "02") ? 1
              : window_match(s, 0, "01")                           ? -1
                                                                   : 0;
    if (!bot) return 0;
    for (auto* p : {"002", "102"})
        if (window_match(s, k, p)) return bot;
    for (auto* p : {"010", "011", "100", "101"})
        if (window_match(s, k, p)) return 3 * bot;
    for (auto* p : {"020", "021"})
        if (window_match(s, k, p)) return -3 * bot;
    return 0;
}

}  // namespace psi5

std::uint64_t psi5_mod27(const TritString& s) {
    const long long M = 27;
    long long acc = psi5::piece_base(s);
    int L = s.len() + 2;
    for (int k = 0; k <= L; ++k) acc += 6LL * psi5::piece_single(s, k);
    for (int k1 = 1; k1 <= L; ++k1)
        for (int k2 = 0; k2 < k1; ++k2)
            acc += 9LL * (k1 == k2 + 1 ? psi5::piece_adjacent(s, k2) : psi5::piece_pair(s, k1, k2));
    for (int k = 0; k <= L; ++k) acc += 9LL * psi5::piece_square(s, k);
    return static_cast<std::uint64_t>(((acc % M) + M) % M);
}

}  // namespace

Residue psi_power_coeff(int power, int mod_exp, const BigInt& n) {
    TritString s = TritString::of(n);
    if (power == 1) {
        bool in = all01_from(s, 0);
        return Residue(in ? 1 : 0, mod_exp);
    }
    if (power == 3 && mod_exp == 2) return Residue(psi3_mod9(s), 2);
    if (power == 3 && mod_exp == 3) return Residue(psi3_mod27(s), 3);
    if (power == 5 && mod_exp == 3) return Residue(psi5_mod27(s), 3);
    if (power == 5 && mod_exp == 2) return Residue(psi5_mod27(s) % 9, 2);
    throw Untabulated("psi_power_coeff: (power, mod_exp) = (" + std::to_string(power) + ", " +
                      std::to_string(mod_exp) + ") is not tabulated");
}

namespace {

// contribution tables for the nested expansion of Psi^3 mod 27

bool window_match(const TritString& s, int lo, const std::string& msb_pat) {
    int L = static_cast<int>(msb_pat.size());
    for (int i = 0; i < L; ++i)
        if (s.digit(lo + L - 1 - i) != msb_pat[static_cast<std::size_t>(i)] - '0') return false;
    return true;
}

// all digits in {0,1} except inside the listed windows [lo, lo+len)
bool wild01_outside(const TritString& s, const std::vector<std::pair<int, int>>& windows) {
    for (int p = 0; p < s.len(); ++p) {
        bool inside = false;
        for (auto& [lo, len] : windows)
            if (p >= lo && p < lo + len) inside = true;
        if (!inside && s.digit(p) == 2) return false;
    }
    return true;
}

int lemma_single(const TritString& s, int k1) {
    if (k1 == 0) {
        // z/(1+z^3) * Psi: patterns {0,1}*X, X in {01, 02}
        if (!wild01_outside(s, {{0, 2}})) return 0;
        if (window_match(s, 0, "01")) return 1;
        if (window_match(s, 0, "02")) return 1;
        return 0;
    }
    // {0,1}*X{0,1}^(k1-1)0 with X in {01,10} -> 1, X = 02 -> 2
    if (s.digit(0) != 0) return 0;
    if (!wild01_outside(s, {{k1, 2}})) return 0;
    if (window_match(s, k1, "01") || window_match(s, k1, "10")) return 1;
    if (window_match(s, k1, "02")) return 2;
    return 0;
}

int lemma_adjacent(const TritString& s, int k2) {
    if (k2 == 0) {
        if (!wild01_outside(s, {{0, 3}})) return 0;
        for (const char* x : {"011", "012", "021", "022"})
            if (window_match(s, 0, x)) return 1;
        return 0;
    }
    if (s.digit(0) != 0) return 0;
    if (!wild01_outside(s, {{k2, 3}})) return 0;
    for (const char* x : {"011", "020", "021", "100"})
        if (window_match(s, k2, x)) return 1;
    for (const char* x : {"012", "022"})
        if (window_match(s, k2, x)) return 2;
    return 0;
}

int lemma_pair(const TritString& s, int k1, int k2) {
    if (k2 == 0) {
        if (!wild01_outside(s, {{k1, 2}, {0, 2}})) return 0;
        bool topX = window_match(s, k1, "01") || window_match(s, k1, "10");
        bool top02 = window_match(s, k1, "02");
        bool botY = window_match(s, 0, "01") || window_match(s, 0, "02");
        if (topX && botY) return 1;
        if (top02 && botY) return 2;
        return 0;
    }
    if (s.digit(0) != 0) return 0;
    if (!wild01_outside(s, {{k1, 2}, {k2, 2}})) return 0;
    bool topX = window_match(s, k1, "01") || window_match(s, k1, "10");
    bool top02 = window_match(s, k1, "02");
    bool botX = window_match(s, k2, "01") || window_match(s, k2, "10");
    bool bot02 = window_match(s, k2, "02");
    if (topX && botX) return 1;
    if ((top02 && botX) || (topX && bot02)) return 2;
    if (top02 && bot02) return 4;
    return 0;
}

}  // namespace

Residue psi3_coeff_via_lemma(const BigInt& n) {
    TritString s = TritString::of(n);
    const std::uint64_t M = 27;
    std::uint64_t acc = 0;
    // base: support of Psi(z^3)
    if (s.digit(0) == 0 && all01_from(s, 0)) acc = 1;
    int L = s.len() + 2;
    for (int k1 = 0; k1 <= L; ++k1) {
        int c = lemma_single(s, k1);
        if (c) acc = (acc + 3ull * static_cast<std::uint64_t>(c)) % M;
    }
    for (int k1 = 1; k1 <= L; ++k1) {
        for (int k2 = 0; k2 < k1; ++k2) {
            int c = (k1 == k2 + 1) ? lemma_adjacent(s, k2) : lemma_pair(s, k1, k2);
            if (c) acc = (acc + 9ull * static_cast<std::uint64_t>(c)) % M;
        }
    }
    return Residue(acc, 3);
}

namespace {

// ---- free-subgroup classes ------------------------------------------------

std::uint64_t free_mod3(const TritString& s) {
    auto ones = positions_of(s, 1);
    if (ones.size() != 1) return 0;
    int p = ones[0];
    if (p == 0) return 2;
    bool below0 = true, below2 = true;
    for (int q = 0; q < p; ++q) {
        if (s.digit(q) != 0) below0 = false;
        if (s.digit(q) != 2) below2 = false;
    }
    return (below0 || below2) ? 1 : 0;
}

std::uint64_t free_mod9(const TritString& s, const BigInt& lambda) {
    auto ones = positions_of(s, 1);

    // items with a single 1 over a uniform tail
    if (ones.size() == 1) {
        int p = ones[0];
        bool below0 = true, below2 = true;
        for (int q = 0; q < p; ++q) {
            if (s.digit(q) != 0) below0 = false;
            if (s.digit(q) != 2) below2 = false;
        }
        int endA = s.digit(p + 1);
        long EE = runs_from(s, p + 1, 2);
        long r = mod3(EE);
        if (p == 0) {
            if (endA == 0) {
                static const std::uint64_t v[3] = {5, 8, 2};  // EE = 0,1,2
                return v[r];
            }
            static const std::uint64_t v[3] = {8, 2, 5};
            return v[r];
        }
        if (below0) {
            if (p == 1) {
                static const std::uint64_t v[3] = {7, 4, 1};
                return v[r];
            }
            static const std::uint64_t v[3] = {1, 7, 4};
            return v[r];
        }
        if (below2) {
            if (p == 1) {  // suffix 12
                if (endA == 2) {
                    static const std::uint64_t v[3] = {1, 7, 4};
                    return v[r];
                }
                static const std::uint64_t v[3] = {7, 4, 1};
                return v[r];
            }
            // suffix 12..2 with >= 2 trailing twos
            if (endA == 2) {
                static const std::uint64_t v[3] = {4, 1, 7};
                return v[r];
            }
            static const std::uint64_t v[3] = {1, 7, 4};
            return v[r];
        }
        // mixed tail: may still be one of the class-6 shapes below
    }

    std::uint64_t lam4 = lambda.mod_u64(4);
    if (lam4 == 0) return 3;
    if (lam4 == 2) return 6;

    // three 1s: adjacent pair above a lone 1
    if (ones.size() == 3 && ones[2] == ones[1] + 1 && ones[1] > ones[0]) {
        int a = ones[0];
        if (a == 0) return 3;  // {0,2}*11{0,2}*1
        bool below0 = true, below2 = true;
        for (int q = 0; q < a; ++q) {
            if (s.digit(q) != 0) below0 = false;
            if (s.digit(q) != 2) below2 = false;
        }
        if (below0 || below2) return 6;  // {0,2}*11{0,2}*100*/122*
    }
    // single 1 over 0-then-2s or 2-then-0s
    if (ones.size() == 1) {
        int p = ones[0];
        if (p >= 2) {
            bool tail2 = true;
            for (int q = 0; q < p - 1; ++q)
                if (s.digit(q) != 2) tail2 = false;
            if (tail2 && s.digit(p - 1) == 0) return 6;  // {0,2}*1022*
            bool tail0 = true;
            for (int q = 0; q < p - 1; ++q)
                if (s.digit(q) != 0) tail0 = false;
            if (tail0 && s.digit(p - 1) == 2) return 6;  // {0,2}*1200*
        }
    }
    return 0;
}

}  // namespace

Residue free_class(const BigInt& lambda, int mod_exp) {
    TritString s = TritString::of(lambda);
    if (mod_exp == 1) return Residue(free_mod3(s), 1);
    if (mod_exp == 2) return Residue(free_mod9(s, lambda), 2);
    throw Untabulated("free_class: mod_exp must be 1 or 2");
}

bool free27_is_one(const BigInt& lambda, const Free27Options& opt) {
    TritString s = TritString::of(lambda);
    DigitStats st = digit_stats(s);
    long EE = st.eestring;
    long E = st.estring;

    auto base_stat = [&](long t) { return t - st.iso3_02 + st.occ022 + st.occ200; };

    auto suffix_clean = [&](int above_from) {
        for (int p = above_from; p < s.len(); ++p)
            if (s.digit(p) == 1) return false;
        return true;
    };

    // clause 1..4: lone 1 with trailing zeros
    if (ends_with(s, "0100") && suffix_clean(4) && mod3(EE) == 0 &&
        mod3(base_stat(exact_third(2 * EE)) + st.occ201) == 0)
        return true;
    if (ends_with(s, "2100") && suffix_clean(4) && mod3(EE) == 0 &&
        mod3(base_stat(exact_third(2 * EE))) == 1)
        return true;
    {
        int tz = trailing_zeros(s);
        if (tz >= 4 && s.digit(tz) == 1 && suffix_clean(tz + 1) && mod3(EE) == 0 &&
            mod3(base_stat(exact_third(2 * EE)) - st.occ21 + st.occ201) == 2)
            return true;
        if (tz == 3 && s.digit(3) == 1 && suffix_clean(4) && mod3(EE) == 0 &&
            mod3(base_stat(exact_third(2 * EE)) - st.occ21 + st.occ201) == 1)
            return true;
    }
    // clauses 5..8: suffix -10
    if (ends_with(s, "2210") && suffix_clean(4) && mod3(EE) == 2 &&
        mod3(base_stat(exact_third(2 * EE - 1))) == 0)
        return true;
    if (ends_with(s, "0210") && suffix_clean(4) && mod3(EE) == 2 &&
        mod3(base_stat(exact_third(2 * EE - 1))) == 1)
        return true;
    if (!opt.clause7_requires_two) {
        if (ends_with(s, "010") && suffix_clean(3) && mod3(EE) == 2 &&
            mod3(base_stat(exact_third(2 * EE - 1))) == 2)
            return true;
    } else {
        if (ends_with(s, "2010") && suffix_clean(4) && mod3(EE) == 2 &&
            mod3(base_stat(exact_third(2 * EE - 1))) == 2)
            return true;
    }
    if (ends_with(s, "0010") && suffix_clean(4) && mod3(EE) == 2 &&
        mod3(base_stat(exact_third(2 * EE - 1))) == 0)
        return true;
    // clauses 9..12: suffix -12
    if (ends_with(s, "0012") && suffix_clean(4) && mod3(EE) == 0 &&
        mod3(base_stat(exact_third(2 * EE - 3))) == 0)
        return true;
    if (ends_with(s, "0212") && suffix_clean(4) && mod3(EE) == 1 &&
        mod3(base_stat(exact_third(2 * EE - 2))) == 0)
        return true;
    if (ends_with(s, "2012") && suffix_clean(4) && mod3(EE) == 0 &&
        mod3(base_stat(exact_third(2 * EE - 3))) == 1)
        return true;
    if (ends_with(s, "2212") && suffix_clean(4)) {
        long X = opt.clause12_use_estring ? E : EE;
        if (mod3(X) == 1 && mod3(base_stat(exact_third(2 * X - 2))) == 1) return true;
    }
    // clauses 13..16: suffix -122 / -2122 / -1222 variants
    if (ends_with(s, "0122") && suffix_clean(4) && mod3(EE) == 1 &&
        mod3(base_stat(exact_third(2 * EE - 2))) == 0)
        return true;
    if (ends_with(s, "2122") && suffix_clean(4) && mod3(EE) == 2 &&
        mod3(base_stat(exact_third(2 * EE - 4)) - st.occ021) == 2)
        return true;
    if (ends_with(s, "01222") && suffix_clean(5) && mod3(EE) == 1 &&
        mod3(base_stat(exact_third(2 * EE - 2))) == 2)
        return true;
    if (ends_with(s, "21222") && suffix_clean(5) && mod3(EE) == 2 &&
        mod3(base_stat(exact_third(2 * EE - 1)) - st.occ021) == 2)
        return true;
    // clauses 17, 18: a 1 over a run of >= 4 twos
    {
        int c = 0;
        while (c < s.len() && s.digit(c) == 2) ++c;
        if (c >= 4 && s.digit(c) == 1 && suffix_clean(c + 2)) {
            if (s.digit(c + 1) == 0 && mod3(EE) == 1 &&
                mod3(base_stat(exact_third(2 * EE - 2))) == 2)
                return true;
            if (s.digit(c + 1) == 2 && mod3(EE) == 2 &&
                mod3(base_stat(exact_third(2 * EE - 1)) - st.occ021) == 2)
                return true;
        }
    }
    return false;
}

Residue apery_class(int kind, const BigInt& n) {
    TritString s = TritString::of(n);
    auto ones = positions_of(s, 1);
    if (kind == 2) {
        if (ones.empty()) return Residue(1, 2);
        if (ones.size() == 1) {
            int above = s.digit(ones[0] + 1);
            if (above == 0) return Residue(3, 2);
            if (above == 2) return Residue(6, 2);
        }
        return Residue(0, 2);
    }
    if (kind == 3) {
        static const std::uint64_t v[6] = {1, 5, 7, 8, 4, 2};
        return Residue(v[ones.size() % 6], 2);
    }
    throw Untabulated("apery_class: kind must be 2 or 3");
}

}  // namespace psicong
