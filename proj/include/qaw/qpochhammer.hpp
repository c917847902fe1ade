#ifndef QAW_QPOCHHAMMER_HPP
#define QAW_QPOCHHAMMER_HPP

// q-shifted factorials.  Throughout the base is suppressed in names:
//   $(a)_n = \prod_{j=1}^n (1 - a q^{j-1})$, $(a)_0 = 1$,
//   $(a)_\infty = \lim_{n\to\infty}(a)_n$ for $|q| < 1$,
//   $(a_1,\dots,a_k)_n = \prod_i (a_i)_n$.

#include <initializer_list>
#include <span>

#include "qaw/types.hpp"

namespace qaw {

// $(a)_n$, finite product.  Total for n >= 0.
cplx qpoch_finite(cplx a, cplx q, int n);

// $(x)_n(-x)_n$ for $x = \sqrt{y}$, folded so no square root is taken:
//   $\prod_{j=1}^n (1 - y q^{2(j-1)}) = (y; q^2)_n$.
cplx qpoch_pair(cplx y, cplx q, int n);

// $(a)_\infty$.  Truncated once $|a| |q|^k$ stays below rel_tol*(1-|q|) for
// tail_window consecutive factors and the recorded tail bound is below
// rel_tol*|value|; tail_estimate comes from the geometric bound on the
// remainder of $\sum_{j>k} \log(1 - a q^j)$.
SeriesValue qpoch_infinite(cplx a, cplx q, const ToleranceConfig& tol = {});

// $(a_1,\dots,a_k)_n$; factors multiplied in ascending parameter index.
cplx qpoch_multi(std::span<const cplx> params, cplx q, int n);
cplx qpoch_multi(std::initializer_list<cplx> params, cplx q, int n);

// $(a_1,\dots,a_k)_\infty$ with combined tail estimate.
SeriesValue qpoch_multi_inf(std::span<const cplx> params, cplx q,
                            const ToleranceConfig& tol = {});
SeriesValue qpoch_multi_inf(std::initializer_list<cplx> params, cplx q,
                            const ToleranceConfig& tol = {});

}  // namespace qaw

#endif
