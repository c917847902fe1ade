#include "qaw/qpochhammer.hpp"

#include <cmath>
#include <cstdlib>

#include "qaw/errors.hpp"

namespace qaw {

cplx qpoch_finite(cplx a, cplx q, int n) {
    if (n < 0) throw DomainError("qpoch_finite: negative order");
    cplx prod(1.0, 0.0);
    cplx aq = a;
    for (int j = 0; j < n; ++j) {
        prod *= cplx(1.0, 0.0) - aq;
        aq *= q;
    }
    return prod;
}

cplx qpoch_pair(cplx y, cplx q, int n) {
    // $(\sqrt y)_n(-\sqrt y)_n = \prod_{j=1}^n (1 - y q^{2(j-1)})$
    return qpoch_finite(y, q * q, n);
}

SeriesValue qpoch_infinite(cplx a, cplx q, const ToleranceConfig& tol) {
    const double qa = std::abs(q);
    if (qa >= 1.0) throw DomainError("qpoch_infinite: |q| >= 1");

    SeriesValue out;
    out.value = cplx(1.0, 0.0);
    if (a == cplx(0.0, 0.0)) {  // all factors are exactly 1
        out.converged = true;
        return out;
    }

    const double thresh = tol.rel_tol * (1.0 - qa);
    cplx aq = a;            // $a q^k$, k = terms_used
    double mag = std::abs(a);
    int small_run = 0;
    for (int k = 0; k < tol.max_terms; ++k) {
        out.value *= cplx(1.0, 0.0) - aq;
        aq *= q;
        mag *= qa;
        ++out.terms_used;
        small_run = (mag < thresh) ? small_run + 1 : 0;
        if (small_run >= tol.tail_window) {
            // remainder of the log-product: $|\sum_{j>k}\log(1-aq^j)| \le
            // 2|a||q|^{k+1}/(1-|q|)$ once the factors are this small
            const double log_tail = 2.0 * mag / (1.0 - qa);
            const double tail = std::abs(out.value) * log_tail;
            if (tail <= tol.rel_tol * std::abs(out.value)) {
                out.converged = true;
                out.tail_estimate = tail;
                return out;
            }
        }
    }
    throw NonConvergenceError("qpoch_infinite: budget exhausted (|q| too close to 1)");
}

cplx qpoch_multi(std::span<const cplx> params, cplx q, int n) {
    cplx prod(1.0, 0.0);
    for (const cplx& a : params) prod *= qpoch_finite(a, q, n);
    return prod;
}

cplx qpoch_multi(std::initializer_list<cplx> params, cplx q, int n) {
    return qpoch_multi(std::span<const cplx>(params.begin(), params.size()), q, n);
}

SeriesValue qpoch_multi_inf(std::span<const cplx> params, cplx q,
                            const ToleranceConfig& tol) {
    SeriesValue out;
    out.value = cplx(1.0, 0.0);
    out.converged = true;
    double rel_tail = 0.0;  // first-order sum of relative tails
    for (const cplx& a : params) {
        SeriesValue v = qpoch_infinite(a, q, tol);
        out.terms_used += v.terms_used;
        out.converged = out.converged && v.converged;
        const double va = std::abs(v.value);
        if (va > 0.0) rel_tail += v.tail_estimate / va;
        out.value *= v.value;
    }
    out.tail_estimate = std::abs(out.value) * rel_tail;
    return out;
}

SeriesValue qpoch_multi_inf(std::initializer_list<cplx> params, cplx q,
                            const ToleranceConfig& tol) {
    return qpoch_multi_inf(std::span<const cplx>(params.begin(), params.size()), q,
                           tol);
}

}  // namespace qaw
