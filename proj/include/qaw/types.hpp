#ifndef QAW_TYPES_HPP
#define QAW_TYPES_HPP

#include <complex>

namespace qaw {

using cplx = std::complex<double>;

// Truncation policy shared by every series/product evaluation.
struct ToleranceConfig {
    double rel_tol = 1e-12;   // relative stopping tolerance
    int max_terms = 10000;    // hard cap on series/product length
    int tail_window = 3;      // consecutive small terms required before stopping
};

// Value of a truncated series or infinite product together with bookkeeping
// needed by the truncation-stability tests: number of terms actually summed,
// whether the stopping rule (as opposed to the budget) ended the loop, and an
// absolute bound on the discarded tail.
struct SeriesValue {
    cplx value{0.0, 0.0};
    int terms_used = 0;
    bool converged = false;
    double tail_estimate = 0.0;
};

}  // namespace qaw

#endif
