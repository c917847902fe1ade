#ifndef QAW_ERRORS_HPP
#define QAW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qaw {

// Base class for all library failures so callers can catch qaw::Error broadly
// while the CLI maps concrete types onto its exit-code contract.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input outside a documented domain (convergence region, |q| >= 1, ...).
struct DomainError : Error {
    using Error::Error;
};

// A series/product/continued fraction exhausted its iteration budget.
struct NonConvergenceError : Error {
    using Error::Error;
};

// A displayed denominator factor vanished.  Carries the factor name and the
// index at which it vanished for diagnosability of degenerate parameters.
struct PoleError : Error {
    std::string factor;
    long index;
    PoleError(std::string factor_name, long n)
        : Error("pole: factor " + factor_name + " vanishes at index " +
                std::to_string(n)),
          factor(std::move(factor_name)),
          index(n) {}
};

// Evaluation requested on the continuous spectrum (|u| = 1), where no minimal
// solution exists and the continued fraction does not converge pointwise.
struct SpectrumError : Error {
    using Error::Error;
};

// Degenerate recurrence data (e.g. a vanishing solution value where a ratio
// is required).
struct DegenerateError : Error {
    using Error::Error;
};

// A sufficient-condition guard could not certify the requested regime.
struct GuardError : Error {
    using Error::Error;
};

struct DivisionByZeroError : Error {
    using Error::Error;
};

}  // namespace qaw

#endif
