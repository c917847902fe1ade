#ifndef QAW_SOLUTIONS_HPP
#define QAW_SOLUTIONS_HPP

// The six explicit solutions $X^{(1)}, \dots, X^{(6)}$ of the associated
// three-term recurrence.  Each is an infinite q-Pochhammer product prefactor
// times a very-well-poised ${}_8\phi_7$, convergent inside its own region:
//
//   S1: $|q/(\delta u)| < 1$          S2: $|\delta/u| < 1$
//   S3: $|\alpha/u| < 1$              S4: $|s\epsilon q^{n-1}| < 1$
//   S5: $|q^{2-n}/(s\epsilon)| < 1$   S6: $|\epsilon q^{n+1}| < 1$
//
// with $s = \alpha\beta\gamma\delta$.  For $|u| > 1$ the solutions decaying
// like $(2u)^{-n}$ are minimal; the same formulas evaluated at $1/u$ give the
// dominant companions.  All formulas are implemented exactly as printed,
// prefactors included, so cross-solution comparisons are ratio-based.

#include "qaw/parameters.hpp"
#include "qaw/series.hpp"
#include "qaw/types.hpp"

namespace qaw {

enum class SolutionKind { S1, S2, S3, S4, S5, S6 };

const char* to_string(SolutionKind k);

// Identifies a solution together with which spectral argument it receives:
// pt.u itself, or its reciprocal.
struct SolutionId {
    SolutionKind kind;
    bool reciprocal = false;
};

// Modulus of the W-series argument of solution k at index n — identical to
// the printed convergence predicate quantity.
double convergence_modulus(SolutionKind k, const QParameters& p, int n, cplx u);
bool convergence_ok(SolutionKind k, const QParameters& p, int n, cplx u);

struct SolutionValue {
    cplx value;
    SeriesValue w;  // diagnostics of the underlying W evaluation
};

// Printed prefactor times W, at u (or 1/u when id.reciprocal); n >= -1.
// DomainError when the convergence predicate fails at n; PoleError when a
// displayed denominator product vanishes.
SolutionValue eval_solution_detail(SolutionId id, const QParameters& p, int n,
                                   const SpectralPoint& pt,
                                   const ToleranceConfig& tol = {});
cplx eval_solution(SolutionId id, const QParameters& p, int n,
                   const SpectralPoint& pt, const ToleranceConfig& tol = {});

// $|X_{n+1} - (z - a'_n)X_n + b'^2_n X_{n-1}|$ over the largest of the three
// summand magnitudes.
double recurrence_residual(SolutionId id, const QParameters& p, int n,
                           const SpectralPoint& pt,
                           const ToleranceConfig& tol = {});

// Max over n in [n_lo, n_hi] of $|r_n/r_{n_{lo}} - 1|$ where
// $r_n = X^{(id_1)}_n / X^{(id_2)}_n$: zero iff the two solutions are
// proportional across the range.
double proportionality_variation(SolutionId id1, SolutionId id2,
                                 const QParameters& p, const SpectralPoint& pt,
                                 int n_lo, int n_hi,
                                 const ToleranceConfig& tol = {});

struct MinimalSolution {
    SolutionId id;
    cplx value;
};

// Selects the first of S6, S4, S3 (widest predicate first) whose predicate
// holds from index -1 on — the predicates are monotone in n, so certifying
// at -1 certifies every later index — and evaluates it at n.  Interior
// points (|u| < 1) are evaluated on the reciprocal (exterior) branch and the
// returned id carries reciprocal = true.  SpectrumError inside the
// |1 - |u|| <= 1e-8 guard band, where no minimal solution exists.
MinimalSolution minimal_solution(const QParameters& p, const SpectralPoint& pt,
                                 int n, const ToleranceConfig& tol = {});

}  // namespace qaw

#endif
