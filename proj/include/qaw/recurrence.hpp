#ifndef QAW_RECURRENCE_HPP
#define QAW_RECURRENCE_HPP

// Coefficients of the association-shifted three-term recurrence
//
//   $X_{n+1} - (z - a'_n) X_n + b'^2_n X_{n-1} = 0$,
//
//   $a'_n = -A'_n - B'_n + \alpha/2 + 1/(2\alpha)$,  $b'^2_n = A'_{n-1} B'_n$,
//
// with the association shift $q^n \to \epsilon q^n$; $\epsilon = 1$ recovers
// the classical Askey-Wilson coefficients.  Also the monic polynomials
// $P_n(z;\epsilon)$ by forward recurrence and, at $\epsilon = 1$, their two
// explicit hypergeometric forms.

#include "qaw/parameters.hpp"
#include "qaw/types.hpp"

namespace qaw {

struct RecurrenceCoefficients {
    cplx a_n;   // diagonal $a'_n$
    cplx b2_n;  // squared off-diagonal $b'^2_n = A'_{n-1} B'_n$
    cplx A_n, B_n;
};

RecurrenceCoefficients coefficients(const QParameters& p, int n);

// $P_n(z;\epsilon)$ from $P_{-1} = 0$, $P_0 = 1$; monic of degree n.
cplx assoc_polynomial(const QParameters& p, int n, const SpectralPoint& pt);

// Monic Askey-Wilson polynomial as prefactor times a terminating balanced
// 4phi3 (requires epsilon = 1).
cplx aw_polynomial_4phi3(const QParameters& p, int n, const SpectralPoint& pt);

// Parameter-symmetric W-form of the same polynomial (requires epsilon = 1):
//   $P_n = (2u)^{-n} (\alpha u,\beta u,\gamma u,\delta u, s/q)_n /
//          [(s/q)_{2n} (u^2)_n] \cdot
//          W(q^{-n}/u^2; q^{-n}, \alpha/u, \beta/u, \gamma/u, \delta/u)$.
cplx aw_polynomial_symmetric(const QParameters& p, int n, const SpectralPoint& pt);

// Reflection symmetry of the coefficients: with parameters sent to
// $(q/\alpha, q/\beta, q/\gamma, q/\delta)$ and the shift index reflected
// ($v \to -v-1$, realized as effective shift $\epsilon' = 1/(\epsilon q^{2n+1})$
// so that $\epsilon' q^n = q^{-1}/(\epsilon q^n)$),
//   $b'^2(\text{reflected at } n) = b'^2_{n+1}$ and
//   $a'(\text{reflected at } n) = a'_n$.
// Returns the max of the two relative residuals.
double reflection_residual(const QParameters& p, int n);

}  // namespace qaw

#endif
