#ifndef QAW_SPECTRAL_HPP
#define QAW_SPECTRAL_HPP

// Spectral data of the recurrence: Casoratians of solution pairs and the
// closed form of the limiting one, the absolutely continuous weight
// $d\omega/dx$ on $[-1,1]$ in its two printed forms, the G-function identity
// that generalizes the q-Dougall sum, orthogonality/normalization checks by
// quadrature, and the sufficient-condition guards certifying the absence of
// a discrete spectrum.

#include <functional>
#include <string>
#include <vector>

#include "qaw/parameters.hpp"
#include "qaw/types.hpp"

namespace qaw {

using Sequence = std::function<cplx(int)>;

// Casoratian $\mathcal{W}(X, Y)_n := X_n Y_{n+1} - X_{n+1} Y_n$.
cplx wronskian(const Sequence& x, const Sequence& y, int n);

// Casoratian of the decaying solution evaluated at u against the same
// formula at 1/u (the two linearly independent branches off the cut).
cplx wronskian_s4_pair(const QParameters& p, const SpectralPoint& pt, int n,
                       const ToleranceConfig& tol = {});

// Closed form for that Casoratian at n = -1:
//
//   $2(u - u^{-1})\,
//    \frac{(s\epsilon^2/q^3, s\epsilon^2/q^2)_\infty}
//         {(\alpha\beta\epsilon/q, \alpha\gamma\epsilon/q,
//           \alpha\delta\epsilon/q, \beta\gamma\epsilon/q,
//           \beta\delta\epsilon/q, \gamma\delta\epsilon/q,
//           s\epsilon/q^2, \epsilon)_\infty}$.
cplx wronskian_closed_form(const QParameters& p, const SpectralPoint& pt,
                           const ToleranceConfig& tol = {});

// Absolutely continuous weight $d\omega/dx$ at $x = \cos\theta \in [-1,1]$,
// through the squared modulus of a single boundary W value.  Requires
// $|s\epsilon/q^2| < 1$ and a real-orthogonality regime (the assembled value
// must be real).  Returns 0 at x = +-1 (factor $\sqrt{1-x^2}$).
double weight_density(const QParameters& p, double x,
                      const ToleranceConfig& tol = {});

// The same weight through the boundary-value difference of the two
// Stieltjes branches (conjugate terms on |u| = 1).  The imaginary part of
// the assembled expression must vanish; it is returned as a residue with a
// warning flag when it exceeds 1e-8 of the real part.
struct WeightAltValue {
    double value;         // real part of the assembled expression
    double imag_residue;  // |imaginary part|, ideally ~ 0
    bool imag_warning;    // |Im| > 1e-8 |Re|
};
WeightAltValue weight_density_alt(const QParameters& p, double x,
                                  const ToleranceConfig& tol = {});

// $G(\alpha,\beta,\gamma,\delta,\epsilon,u)$: prefactor times the product of
// the two W values with arguments $\epsilon q$ and $s\epsilon/q^2$.
cplx g_function(const QParameters& p, cplx u, const ToleranceConfig& tol = {});

// Relative residual of the G-function difference identity
// $G(u) - G(1/u) = (1/u - u)(1-s\epsilon^2/q^2)/(1-s\epsilon/q^2) \cdot
//  (\text{products})$ — a q-analogue of Dougall's theorem.
double qdougall_residual(const QParameters& p, cplx u,
                         const ToleranceConfig& tol = {});

// $\Pi_1(u) = (q/\alpha u, q/\beta u, q/\gamma u, q/\delta u)_\infty$,
// $\Pi_2(u) = (\alpha/u, \beta/u, \gamma/u, \delta/u)_\infty$.
struct PiProducts {
    cplx pi1;
    cplx pi2;
};
PiProducts pi_products(const QParameters& p, cplx u,
                       const ToleranceConfig& tol = {});

// Relative residual of the product identity at $\epsilon = 1$, $s = q^m$,
// |u| = 1:
//   $(q/\alpha)^{m-3}(1/u - u)\,[u^{m-2}\Pi_1(u)\Pi_2(1/u)
//      - u^{2-m}\Pi_1(1/u)\Pi_2(u)]
//    = (\alpha\beta/q, \alpha\gamma/q, \alpha\delta/q, q^2/\alpha\beta,
//       q^2/\alpha\gamma, q^2/\alpha\delta)_\infty (u^2, u^{-2})_\infty$.
double pi_identity_residual(const QParameters& p, int m, cplx u,
                            const ToleranceConfig& tol = {});

// One-sided certificate that the measure has no discrete part.  certified =
// true when either printed sufficient condition holds; false only means the
// guard cannot certify absence.
struct GuardResult {
    bool certified;
    std::string reason;
};
GuardResult discrete_spectrum_guard(const QParameters& p);

// Gram matrix M[n][m] = $\int_{-1}^1 P_n P_m \, d\omega$, n, m <= degree_max,
// by x = cos(theta) substitution and uniform trapezoid rule with quad_n
// panels.  GuardError unless discrete_spectrum_guard certifies that the
// integral over [-1,1] captures the whole measure.
std::vector<std::vector<double>> orthogonality_check(
    const QParameters& p, int degree_max, int quad_n = 2048,
    const ToleranceConfig& tol = {});

// $\int_{-1}^1 d\omega(x)/(z - x)$ by the same quadrature.
cplx stieltjes_quadrature(const QParameters& p, cplx z, int quad_n = 2048,
                          const ToleranceConfig& tol = {});

// Relative distance between the quadrature transform and 1/CF(z).
double stieltjes_check(const QParameters& p, cplx z, int quad_n = 2048,
                       const ToleranceConfig& tol = {});

struct WeightTable {
    std::vector<double> nodes;    // strictly increasing in [-1,1]
    std::vector<double> density;  // d omega / dx at each node
    QParameters params;
    int quadrature_n;
};
WeightTable weight_table(const QParameters& p, int grid_n,
                         const ToleranceConfig& tol = {});

}  // namespace qaw

#endif
