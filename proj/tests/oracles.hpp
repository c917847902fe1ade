#ifndef QAW_TESTS_ORACLES_HPP
#define QAW_TESTS_ORACLES_HPP

// Independent extended-precision oracles for the test suite.  Everything here
// is evaluated definitionally (explicit term products, no shared code with
// the library under test) in 50-decimal-digit complex arithmetic, so oracle
// truncation/rounding error is far below the double-precision comparison
// thresholds.

#include <boost/multiprecision/cpp_complex.hpp>
#include <vector>

#include "qaw/types.hpp"

namespace oracle {

using big = boost::multiprecision::cpp_complex_50;

inline big to_big(qaw::cplx v) { return {v.real(), v.imag()}; }

inline qaw::cplx to_cplx(const big& v) {
    return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

// $(a)_n$ by direct multiplication.
inline big qpoch(big a, big q, int n) {
    big out(1);
    big p(1);
    for (int k = 0; k < n; ++k) {
        out *= big(1) - a * p;
        p *= q;
    }
    return out;
}

// $(a)_\infty$; for |q| <= 0.9 the default depth leaves a relative tail far
// below 1e-30.
inline big qpoch_inf(big a, big q, int nterms = 2000) {
    big out(1);
    big p(1);
    for (int k = 0; k < nterms; ++k) {
        out *= big(1) - a * p;
        p *= q;
        if (abs(p) < 1e-45) break;
    }
    return out;
}

// ${}_{r+1}\phi_r$ with explicit per-term Pochhammer products — no running
// ratios, so a library bug in the ratio recursion cannot be mirrored here.
inline big phi(const std::vector<big>& num, const std::vector<big>& den, big q,
               big z, int nterms = 500) {
    big sum(0);
    for (int k = 0; k < nterms; ++k) {
        big term = pow(z, k) / qpoch(q, q, k);
        for (const big& a : num) term *= qpoch(a, q, k);
        for (const big& b : den) term /= qpoch(b, q, k);
        sum += term;
        if (abs(term) < 1e-45 * abs(sum) && k > 4) break;
    }
    return sum;
}

// Very-well-poised series from its raw parameter list, with explicit
// principal square roots of the special parameter:
//   numerators  {a, q sqrt(a), -q sqrt(a), b, c, d, e, f}
//   denominators{sqrt(a), -sqrt(a), aq/b, aq/c, aq/d, aq/e, aq/f}
//   argument    a^2 q^2 / (bcdef).
inline big vwp_explicit(big a, big b, big c, big d, big e, big f, big q,
                        int nterms = 500) {
    const big ra = sqrt(a);
    const std::vector<big> num = {a, q * ra, -q * ra, b, c, d, e, f};
    const std::vector<big> den = {ra,        -ra,       a * q / b, a * q / c,
                                  a * q / d, a * q / e, a * q / f};
    const big z = a * a * q * q / (b * c * d * e * f);
    return phi(num, den, q, z, nterms);
}

}  // namespace oracle

#endif
