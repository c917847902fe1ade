#ifndef QAW_CONTINUED_FRACTION_HPP
#define QAW_CONTINUED_FRACTION_HPP

// The continued fraction attached to the three-term recurrence,
//
//   $CF(z) = z - a'_0 + K_{n\ge 1}\big(-b'^2_n / (z - a'_n)\big)$,
//
// evaluated three independent ways: directly (modified Lentz), through the
// minimal-solution ratio $1/CF = X_0/(b'^2_0 X_{-1})$, and through the two
// printed closed forms built from the decaying solutions' W-ratios at
// indices 0 and -1.  $1/CF(z)$ is the Stieltjes transform of the
// orthogonality measure; on the cut $z \in [-1,1]$ ($|u| = 1$) the fraction
// has no limit and evaluation reports that instead of a value.

#include <vector>

#include "qaw/parameters.hpp"
#include "qaw/types.hpp"

namespace qaw {

struct CfConfig {
    double tiny_guard = 1e-30;  // substitution for vanishing Lentz intermediates
    double rel_tol = 1e-12;     // relative agreement of successive convergents
    int max_depth = 5000;
};

// Forward evaluation by the modified Lentz algorithm.  NonConvergence at
// max_depth — the expected signal on the continuous spectrum; PoleError if
// some b'^2_n, n >= 1, vanishes.
cplx cf_direct(const QParameters& p, const SpectralPoint& pt,
               const CfConfig& cfg = {});

// Convergents at depths 0..depth (no early stopping), for decay studies.
std::vector<cplx> cf_convergents(const QParameters& p, const SpectralPoint& pt,
                                 int depth, const CfConfig& cfg = {});

// $CF = b'^2_0 X_{-1}/X_0$ with the selected minimal solution.  When
// $b'^2_0 = 0$ exactly (the printed ratio degenerates to 0 * inf) the
// algebraically identical tail form $CF = z - a'_0 - X_1/X_0$ is used.
// SpectrumError on the cut; DegenerateError when $X_0 = 0$.
cplx cf_pincherle(const QParameters& p, const SpectralPoint& pt,
                  const ToleranceConfig& tol = {});

// Closed form for $1/CF$ from the decaying solution with W argument
// $s\epsilon q^{n-1}$:  requires $|s\epsilon/q^2| < 1$; valid for |u| > 1
// and extended to |u| < 1 by the printed substitution u -> 1/u.
cplx stieltjes_closed_s4(const QParameters& p, const SpectralPoint& pt,
                         const ToleranceConfig& tol = {});

// Closed form for $1/CF$ from the decaying solution with W argument
// $\epsilon q^{n+1}$:  requires |u| > 1 and $|\epsilon| < 1$; the printed
// $(1-\epsilon)$ denominator factor raises PoleError at $\epsilon = 1$.
cplx stieltjes_closed_s6(const QParameters& p, const SpectralPoint& pt,
                         const ToleranceConfig& tol = {});

}  // namespace qaw

#endif
