#include "qaw/series.hpp"

#include <algorithm>
#include <cmath>

#include "qaw/errors.hpp"

namespace qaw {

namespace {

constexpr double kTermDetectTol = 1e-10;  // relative distance to q^{-n}

// Exact-vanishing guard for displayed denominator factors.  Values below this
// are indistinguishable from a pole at binary64 scale.
constexpr double kPoleFloor = 1e-250;

// Sum accumulator with the shared stopping rule: the running term must stay
// below rel_tol*|sum| for tail_window consecutive terms AND the geometric
// tail bound must itself be below rel_tol*|sum|.
struct SumState {
    cplx sum{0.0, 0.0};
    double last_mag = 0.0;
    double ratio = 0.0;  // last observed |t_{k+1}/t_k| with nonzero t_k
    int small_run = 0;

    // returns true when converged after absorbing term t with base ratio r0
    bool push(cplx t, double r0, const ToleranceConfig& tol, double* tail_out) {
        const double tm = std::abs(t);
        if (last_mag > 0.0) ratio = tm / last_mag;
        last_mag = tm;
        sum += t;
        const double sm = std::abs(sum);
        small_run = (tm <= tol.rel_tol * sm) ? small_run + 1 : 0;
        if (small_run >= tol.tail_window) {
            double r = std::max(r0, ratio);
            if (r < 0.999) {
                const double tail = tm * r / (1.0 - r);
                if (tail <= tol.rel_tol * sm) {
                    *tail_out = tail;
                    return true;
                }
            }
        }
        return false;
    }
};

}  // namespace

std::optional<int> terminating_index(std::span<const cplx> params, cplx q) {
    double max_abs = 0.0;
    for (const cplx& p : params) max_abs = std::max(max_abs, std::abs(p));
    if (max_abs == 0.0) return std::nullopt;

    cplx qpos(1.0, 0.0);  // $q^{-n}$
    for (int n = 0; std::abs(qpos) * (1.0 - kTermDetectTol) <= max_abs; ++n) {
        for (const cplx& p : params)
            if (std::abs(p - qpos) < kTermDetectTol * std::abs(qpos)) return n;
        qpos /= q;
        if (n > 100000) break;  // unreachable for |q| bounded away from 1
    }
    return std::nullopt;
}

SeriesValue eval_phi(const PhiSeriesSpec& spec, const ToleranceConfig& tol) {
    if (spec.numerator.size() != spec.denominator.size() + 1)
        throw DomainError("eval_phi: need one more numerator than denominator");
    if (std::abs(spec.q) >= 1.0) throw DomainError("eval_phi: |q| >= 1");

    const std::optional<int> n_term = terminating_index(spec.numerator, spec.q);
    if (!n_term && std::abs(spec.z) >= 1.0)
        throw DomainError("eval_phi: nonterminating series requires |z| < 1");

    const double zmag = std::abs(spec.z);
    SeriesValue out;
    SumState st;
    cplx t(1.0, 0.0);
    cplx qn(1.0, 0.0);  // $q^n$
    for (int n = 0; n < tol.max_terms; ++n) {
        out.terms_used = n + 1;
        if (st.push(t, zmag, tol, &out.tail_estimate)) {
            out.converged = true;
            break;
        }
        if (n_term && n == *n_term) {  // exact termination: $(q^{-n})_{n+1} = 0$
            out.converged = true;
            out.tail_estimate = 0.0;
            break;
        }
        cplx ratio = spec.z;
        for (const cplx& a : spec.numerator) ratio *= cplx(1.0, 0.0) - a * qn;
        for (const cplx& b : spec.denominator) {
            const cplx fb = cplx(1.0, 0.0) - b * qn;
            if (std::abs(fb) < kPoleFloor)
                throw PoleError("1 - b q^n (phi denominator)", n);
            ratio /= fb;
        }
        qn *= spec.q;
        ratio /= cplx(1.0, 0.0) - qn;  // the $(q)_n$ factor
        t *= ratio;
    }
    out.value = st.sum;
    if (!out.converged)
        throw NonConvergenceError("eval_phi: term budget exhausted");
    return out;
}

SeriesValue eval_vwp(cplx a, std::span<const cplx> lowers, cplx z, cplx q,
                     const ToleranceConfig& tol) {
    if (std::abs(q) >= 1.0) throw DomainError("eval_vwp: |q| >= 1");
    const cplx one(1.0, 0.0);
    if (std::abs(one - a) < kPoleFloor)
        throw PoleError("1 - a (very-well-poised kernel)", 0);

    // termination scan covers a itself and every lower parameter: each makes
    // the term factor $(x)_k$ vanish for k > n when $x = q^{-n}$
    std::vector<cplx> scan(lowers.begin(), lowers.end());
    scan.push_back(a);
    const std::optional<int> n_term = terminating_index(scan, q);
    if (!n_term && std::abs(z) >= 1.0)
        throw DomainError("eval_vwp: nonterminating series requires |argument| < 1");

    const double zmag = std::abs(z);
    SeriesValue out;
    SumState st;
    cplx m(1.0, 0.0);    // running $(a)_k \prod (x_i)_k / [(q)_k \prod (aq/x_i)_k] z^k$
    cplx qn(1.0, 0.0);   // $q^k$
    cplx q2n(1.0, 0.0);  // $q^{2k}$
    for (int n = 0; n < tol.max_terms; ++n) {
        out.terms_used = n + 1;
        const cplx t = m * (one - a * q2n) / (one - a);
        if (st.push(t, zmag, tol, &out.tail_estimate)) {
            out.converged = true;
            break;
        }
        if (n_term && n == *n_term) {
            out.converged = true;
            out.tail_estimate = 0.0;
            break;
        }
        cplx ratio = z * (one - a * qn);
        for (const cplx& x : lowers) {
            ratio *= one - x * qn;
            const cplx fd = one - (a * q / x) * qn;
            if (std::abs(fd) < kPoleFloor)
                throw PoleError("1 - (aq/x) q^k (vwp denominator)", n);
            ratio /= fd;
        }
        qn *= q;
        q2n *= q * q;
        ratio /= one - qn;
        m *= ratio;
    }
    out.value = st.sum;
    if (!out.converged)
        throw NonConvergenceError("eval_vwp: term budget exhausted");
    return out;
}

SeriesValue eval_W(const VwpW& w, const ToleranceConfig& tol) {
    const cplx lowers[5] = {w.b, w.c, w.d, w.e, w.f};
    return eval_vwp(w.a, lowers, w.argument(), w.q, tol);
}

}  // namespace qaw
