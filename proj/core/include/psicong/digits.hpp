#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "psicong/bigint.hpp"
#include "psicong/ring3.hpp"

namespace psicong {

struct Untabulated : std::runtime_error {
    explicit Untabulated(const std::string& w) : std::runtime_error(w) {}
};

// Base-3 digits, least significant first, conceptually padded with 0s on
// the most-significant side. digit(p) is total: any p >= 0 is valid.
struct TritString {
    std::vector<std::uint8_t> d;

    static TritString of(const BigInt& n) { return TritString{n.trits()}; }
    static TritString of_u64(std::uint64_t n);
    static TritString parse_msb(const std::string& s);  // e.g. "1020"

    int len() const { return static_cast<int>(d.size()); }
    int digit(int p) const { return p >= 0 && p < len() ? d[static_cast<std::size_t>(p)] : 0; }
    std::string msb_string() const;
};

// The string statistics the digit rules are phrased in. All are computed on
// the padded string; "isolated" means both neighbours differ from the
// letter; exclusion windows skip the lowest positions as indicated.
struct DigitStats {
    long estring = 0;    // maximal runs of 1s
    long eestring = 0;   // maximal runs of 2s
    long iso2 = 0;       // isolated 0s and 1s, excluding s0, s1
    long iso3 = 0;       // isolated 0s and 1s, excluding s0, s1, s2
    long iso3_02 = 0;    // isolated 0s and 2s, excluding s0, s1, s2
    long occ011 = 0;     // substring occurrences, patterns written msb-first
    long occ100_1 = 0;   // "100" occurrences not involving s0
    long occ020 = 0;
    long occ021 = 0;
    long occ102 = 0;
    long occ10 = 0;
    long occ01 = 0;
    long occ022 = 0;
    long occ200 = 0;
    long occ201 = 0;
    long occ21 = 0;
};

DigitStats digit_stats(const TritString& s);

// 1 when s ends (least-significant side) with the msb-first written word.
bool ends_with(const TritString& s, const std::string& msb_pattern);

// Coefficient of z^n in Psi^power mod 3^mod_exp by the tabulated digit
// rules. Tabulated: (1, any), (3, 2), (3, 3), (5, 2), (5, 3).
Residue psi_power_coeff(int power, int mod_exp, const BigInt& n);

// Independent route for [z^n] Psi^3 mod 27: assembles the per-(k1)[,k2]
// contributions of the nested expansion, 1 + 3*sum + 9*sum over pairs.
Residue psi3_coeff_via_lemma(const BigInt& n);

// Congruence class of the free-subgroup count f_lambda (lift parameter 1)
// mod 3 (mod_exp 1) or mod 9 (mod_exp 2).
Residue free_class(const BigInt& lambda, int mod_exp);

struct Free27Options {
    // The printed clause for suffix 2212 counts 1-runs where all its
    // neighbours count 2-runs; the default takes the 2-run reading, which
    // is the one that matches the recurrence oracle.
    bool clause12_use_estring = false;
    // The printed clause for suffix 010 subsumes the 0010 clause; the
    // default requires a 2 above (suffix 2010), which matches the oracle.
    bool clause7_requires_two = true;
};

// The eighteen-clause predicate for f_lambda == 1 mod 27.
bool free27_is_one(const BigInt& lambda, const Free27Options& opt = {});

// Conjectured Apery classes mod 9; kind 2 = zeta(2), 3 = zeta(3).
Residue apery_class(int kind, const BigInt& n);

}  // namespace psicong
