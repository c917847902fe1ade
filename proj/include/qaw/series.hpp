#ifndef QAW_SERIES_HPP
#define QAW_SERIES_HPP

// Basic hypergeometric series.
//
//   ${}_{r+1}\phi_r(a_1,\dots,a_{r+1}; b_1,\dots,b_r; z)
//      = \sum_n \frac{(a_1,\dots,a_{r+1})_n}{(b_1,\dots,b_r,q)_n} z^n$
//
// and the very-well-poised ${}_8\phi_7$
//
//   $W(a; b,c,d,e,f) = {}_8\phi_7(a, q\sqrt a, -q\sqrt a, b,\dots,f;
//      \sqrt a, -\sqrt a, aq/b,\dots,aq/f;\; a^2q^2/(bcdef))$,
//
// where the $\pm\sqrt a$ pairs are folded analytically into the per-term
// kernel $(1-aq^{2n})/(1-a)$ so no complex square root is ever taken.

#include <optional>
#include <span>
#include <vector>

#include "qaw/types.hpp"

namespace qaw {

struct PhiSeriesSpec {
    std::vector<cplx> numerator;    // length r+1
    std::vector<cplx> denominator;  // length r
    cplx q{0.0, 0.0};
    cplx z{0.0, 0.0};
};

struct VwpW {
    cplx a, b, c, d, e, f;
    cplx q;
    // series argument $a^2 q^2/(bcdef)$
    cplx argument() const { return a * a * q * q / (b * c * d * e * f); }
};

// Smallest n with params[i] = q^{-n} (relative distance < 1e-10), ties broken
// by smaller parameter index.  Returns the terminating order, or nothing.
std::optional<int> terminating_index(std::span<const cplx> params, cplx q);

// Generic phi sum via the term-ratio recurrence
//   $t_{n+1}/t_n = \prod_i(1-a_i q^n) / [\prod_j(1-b_j q^n)\,(1-q^{n+1})]\, z$.
SeriesValue eval_phi(const PhiSeriesSpec& spec, const ToleranceConfig& tol = {});

// Very-well-poised series with folded kernel and arbitrary lower-parameter
// count:  $\sum_k \frac{1-aq^{2k}}{1-a}
//            \frac{(a)_k \prod_i (x_i)_k}{(q)_k \prod_i (aq/x_i)_k} z^k$.
// Five lower parameters give W; seven give the terminating balanced series
// used by the contiguous relations.
SeriesValue eval_vwp(cplx a, std::span<const cplx> lowers, cplx z, cplx q,
                     const ToleranceConfig& tol = {});

SeriesValue eval_W(const VwpW& w, const ToleranceConfig& tol = {});

}  // namespace qaw

#endif
