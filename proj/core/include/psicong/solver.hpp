#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "psicong/bigint.hpp"
#include "psicong/psi.hpp"

namespace psicong {

struct ShapeMismatch : std::runtime_error {
    explicit ShapeMismatch(const std::string& w) : std::runtime_error(w) {}
};
struct DivisibilityFailure : std::runtime_error {
    explicit DivisibilityFailure(const std::string& w) : std::runtime_error(w) {}
};
struct BranchAmbiguous : std::runtime_error {
    explicit BranchAmbiguous(const std::string& w) : std::runtime_error(w) {}
};
struct Inconsistent : std::runtime_error {
    explicit Inconsistent(const std::string& w) : std::runtime_error(w) {}
};
struct SectionDenominator : std::runtime_error {
    explicit SectionDenominator(const std::string& w) : std::runtime_error(w) {}
};
struct SolverError : std::runtime_error {
    explicit SolverError(const std::string& w) : std::runtime_error(w) {}
};

// A functional-differential equation
//   sum_j A[j](z) F(z)^j + sum_{k>=1} D[k](z) F^(k)(z) = 0
// with integer polynomial coefficients (ascending). Quadratic type means:
// mod 3 it collapses to c2 F^2 + c1 F + c0 with the monomial shapes below.
struct FunctionalEq {
    std::string name;
    std::vector<std::vector<BigInt>> A;  // A[j], j = 0..deg
    std::vector<std::vector<BigInt>> D;  // D[k], k = 0..ord (D[0] unused)
    int eps = 1;
    int gamma = 1;

    static std::vector<BigInt> poly(const std::vector<long long>& asc);
};

// Structure constants extracted mod 3:
//   c2 = z^e1 (1+eps z^gamma)^e2,
//   c1^2 - c0 c2 = z^(2 f1) u(z)^2 (1+eps z^gamma)^(2 f2 + 1),
// where u is a unit polynomial mod 3 (u == 1 in the strict shape; a
// nontrivial square factor is accepted and carried through the iteration).
struct EquationShape {
    int e1 = 0, e2 = 0, f1 = 0, f2 = 0;
    std::vector<std::uint8_t> u;       // GF(3) coefficients, ascending, u[0] = 1
    bool negated = false;              // equation was globally multiplied by -1
    std::vector<std::uint8_t> c1_mod3; // the (normalized) c1 mod 3
};

EquationShape validate_equation(const FunctionalEq& eqn);

// Result of the coefficient-by-coefficient solvability probe mod 3^e.
struct UniqueSeriesResult {
    std::optional<TruncSeries> series;  // the unique prefix, when unique
    int nonunique_index = -1;           // first index admitting two extensions
    bool unique() const { return series.has_value(); }
};

// Determines the power-series solution mod 3^e term by term up to degree N.
// An optional anchor pins the first coefficients to the target sequence
// (needed where the equation alone leaves a +-F sign symmetry).
// Throws Inconsistent when no solution prefix exists.
UniqueSeriesResult unique_series_solution(const FunctionalEq& eqn, int e, int N,
                                          const std::vector<std::uint64_t>& anchor = {});

struct SolveReport {
    PsiPoly representation;
    int verified_prefix = 0;  // series checked against the unique solution this far
    int branch = 0;           // retained sign of the base step
};

// Runs the base step / iteration machinery: base coefficients
//   a_0 = c1/c2,  a_{3^alpha} = +- z^(f1-e1) u (1+eps z^gamma)^(f2-e2+(3^alpha+1)/2),
// then for beta = 1..e_target-1 substitutes a_i + 3^beta b_i, divides by
// 3^beta and solves the resulting mod-3 system for the b_i. Both sign
// branches are carried; the one matching the unique series solution on a
// prefix of length 2*3^(alpha+2) is returned.
SolveReport solve_mod3k(const FunctionalEq& eqn, int alpha, int e_target,
                        const std::vector<std::uint64_t>& anchor);

// Substitutes Psi(z) = Psi(z^(3^(beta-1))) * prod_{j<beta-1} (1+z^(3^j)),
// rewrites all denominators onto the base (1+z^(3^(beta-1))) mod 3^e, and
// keeps only numerator monomials whose exponent lies in the residue set mod
// 3^(beta-1). Requires p's context to be (eps=+1, gamma=1).
PsiPoly m_section(const PsiPoly& p, const std::vector<int>& residues, int beta);

// Evaluates the equation on a PsiPoly candidate (used by the iteration and
// by tests that replay the substitution).
PsiPoly eval_equation(const FunctionalEq& eqn, const PsiPoly& f);

}  // namespace psicong
