#ifndef QAW_PARAMETERS_HPP
#define QAW_PARAMETERS_HPP

// Parameter set $(q; \alpha, \beta, \gamma, \delta, \epsilon)$ of the
// association-shifted q-orthogonal polynomial family, and the spectral
// variable pair $z = (u + u^{-1})/2$ with the exterior branch $|u| \ge 1$.

#include <optional>

#include "qaw/errors.hpp"
#include "qaw/types.hpp"

namespace qaw {

// Integer power by repeated multiplication (exact for the small exponents
// used here; avoids the principal-branch pow for complex bases).
cplx qpow(cplx base, int n);

struct QParameters {
    cplx q;
    cplx alpha, beta, gamma, delta;
    cplx epsilon{1.0, 0.0};

    cplx s() const { return alpha * beta * gamma * delta; }

    // $\epsilon q^n$ — the only way the association shift enters any formula.
    cplx epsq(int n) const { return epsilon * qpow(q, n); }

    // Diagnostic shift index $v = n + \log\epsilon/\log q$ (principal logs);
    // never used in evaluation, where epsq(n) replaces $q^v$.
    cplx v(int n) const;

    // |q| < 1 and epsilon != 0.
    void validate() const;
};

// A point of the spectral plane carrying both coordinates.  u is kept on the
// exterior branch |u| >= 1 (from_u normalizes reciprocal inputs; evaluations
// on the interior branch pass 1/u explicitly).  theta is set when |u| = 1.
struct SpectralPoint {
    cplx z;
    cplx u;
    std::optional<double> theta;

    // u = z + sqrt(z-1)*sqrt(z+1), the branch with |u| >= 1.  For real
    // z = x in (-1,1) the upper-half-plane boundary value is used, which is
    // u = e^{-i theta}, theta = arccos x (the x + i0 convention).
    static SpectralPoint from_z(cplx z);
    static SpectralPoint from_u(cplx u);
    static SpectralPoint from_theta(double theta);  // u = e^{i theta}, z = cos theta

    bool on_cut(double band = 1e-8) const;  // |u| within band of 1
};

}  // namespace qaw

#endif
