#pragma once

#include <optional>
#include <string>
#include <vector>

#include "psicong/solver.hpp"

namespace psicong {

struct UnsupportedId : std::runtime_error {
    explicit UnsupportedId(const std::string& w) : std::runtime_error(w) {}
};
struct NoFixture : std::runtime_error {
    explicit NoFixture(const std::string& w) : std::runtime_error(w) {}
};
struct KernelIntegrity : std::runtime_error {
    explicit KernelIntegrity(const std::string& w) : std::runtime_error(w) {}
};

enum class Seq {
    almost_central_binomial,
    motzkin,
    motzkin_prefix,
    riordan,
    central_trinomial,
    central_binomial,
    central_binomial_sums,
    catalan,
    delannoy,
    schroeder,
    hex_tree,
    free_subgroups,
    eulerian_even,
    eulerian_odd,
    apery_zeta2,
    apery_zeta3,
};

struct SequenceId {
    Seq kind = Seq::catalan;
    int m = 1;  // lift parameter for free_subgroups; requires 3 not dividing m

    std::string to_string() const;
    static std::optional<SequenceId> parse(const std::string& s);
};

// All catalog sequences in canonical order.
const std::vector<SequenceId>& sequence_catalog();

// The functional equation behind a catalog id (not for the Eulerian or
// Apery ids, which have dedicated pipelines).
FunctionalEq catalog(const SequenceId& id);

// Counterexample equations for the uniqueness guard: a linear ODE (the
// shifted zeta(2) Apery recurrence) that has no unique solution even mod 3,
// and the squared Catalan equation, unique mod 3 but not mod 9.
FunctionalEq apery_shifted_ode();
FunctionalEq catalan_squared_eq();

// First N terms of the sequence's generating function mod 3^e, computed
// from independent combinatorial definitions (lattice-path DP, exact
// binomial sums, convolution recurrences, exact big-integer recurrences).
TruncSeries oracle_terms(const SequenceId& id, int N, int e);

// Oracle prefix used to anchor the series-uniqueness probe.
std::vector<std::uint64_t> oracle_anchor(const SequenceId& id, int e, int len = 2);

// Exact Apery numbers via the binomial double sums (cross-check for the
// recurrence-based oracle); kind 2 = zeta(2), 3 = zeta(3).
BigInt apery_sum_exact(int kind, int n);

// Central Eulerian oracle via exact alternating binomial sums, reduced mod
// 3^e afterwards. kind 1: A(2n,n+1); kind 2: A(2n-1,n). When
// check_symmetry_to >= 1, also verifies A(2n,n) == A(2n,n+1) exactly for
// 1 <= n <= check_symmetry_to (kind 1 only).
TruncSeries eulerian_central_oracle(int kind, int N, int e, int check_symmetry_to = 0);

// Eulerian number A(n,k) as an exact integer (alternating binomial sum).
BigInt eulerian_Ank_exact(long long n, long long k);

// Kernel polynomial for the sectioned Eulerian equations: kind 1 pairs with
// exponent 2s, kind 2 with 2s-1. p has integer coefficients, all divisible
// by 3, p(0) = 0.
struct EulerKernel {
    int kind = 1;
    int s = 1;
    std::vector<BigInt> p;  // ascending, p[0] == 0
};

EulerKernel euler_kernel(int kind, int s);

// The functional equation satisfied by the weighted central-column series
// E_s for the given kind.
FunctionalEq euler_equation(int kind, int s);

// Assembles the central Eulerian representation mod 3^beta (beta in {2,3})
// by solving each E_s equation, taking the 3^(beta-1)-section for the
// residue class s, summing, and applying the small-n correction against the
// oracle. Result is expressed over Psi(z).
PsiPoly derive_eulerian(int kind, int beta, int alpha = 1);

// Hard-coded representations transcribed from the printed tables, keyed by
// sequence and modulus exponent; normalized into the equation's context.
PsiPoly fixture_rep(const SequenceId& id, int e);
bool has_fixture(const SequenceId& id, int e);

// Equation context used by solves and fixture normalization for an id.
PsiContext sequence_context(const SequenceId& id, int alpha, int e);

// Full pipeline: solve (or Eulerian assembly) for the id at modulus 3^e.
PsiPoly derive_sequence(const SequenceId& id, int alpha, int e);

// Directory the fixture JSONs are loaded from (PSICONG_DATA_DIR overrides
// the compiled-in default).
std::string fixture_dir();

}  // namespace psicong
