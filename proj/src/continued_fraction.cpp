#include "qaw/continued_fraction.hpp"

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "qaw/errors.hpp"
#include "qaw/recurrence.hpp"
#include "qaw/series.hpp"
#include "qaw/solutions.hpp"

namespace qaw {

namespace {

constexpr double kPoleFloor = 1e-250;

// Reject a displayed denominator factor that has numerically vanished.
cplx checked(cplx factor, const char* label) {
    if (std::abs(factor) < kPoleFloor) throw PoleError(label, 0);
    return factor;
}

// Modified Lentz forward evaluation of
//   $b_0 + K_{j\ge 1}(a_j/b_j)$,  $a_j = -b'^2_j$,  $b_j = z - a'_j$.
// With `stop_early` the loop ends once successive convergents agree to
// cfg.rel_tol (NonConvergence at max_depth otherwise); without it, exactly
// `depth` levels are taken and every convergent is recorded in `trace`.
cplx lentz(const QParameters& p, const SpectralPoint& pt, const CfConfig& cfg,
           bool stop_early, int depth, std::vector<cplx>* trace) {
    if (!(cfg.tiny_guard > 0)) throw DomainError("tiny_guard must be > 0");
    const cplx z = pt.z;
    const RecurrenceCoefficients c0 = coefficients(p, 0);

    cplx f = z - c0.a_n;
    if (std::abs(f) < cfg.tiny_guard) f = cfg.tiny_guard;
    cplx C = f;
    cplx D = 0.0;
    if (trace != nullptr) trace->push_back(f);

    const int budget = stop_early ? cfg.max_depth : depth;
    for (int j = 1; j <= budget; ++j) {
        const RecurrenceCoefficients cj = coefficients(p, j);
        if (std::abs(cj.b2_n) < kPoleFloor) throw PoleError("b'^2_n", j);
        const cplx aj = -cj.b2_n;
        const cplx bj = z - cj.a_n;

        D = bj + aj * D;
        if (std::abs(D) < cfg.tiny_guard) D = cfg.tiny_guard;
        C = bj + aj / C;
        if (std::abs(C) < cfg.tiny_guard) C = cfg.tiny_guard;
        D = 1.0 / D;
        const cplx delta = C * D;
        f *= delta;
        if (trace != nullptr) trace->push_back(f);
        if (stop_early && std::abs(delta - 1.0) < cfg.rel_tol) return f;
    }
    if (stop_early)
        throw NonConvergenceError(
            "continued fraction did not settle within max_depth = " +
            std::to_string(cfg.max_depth) +
            " levels (expected behaviour on the continuous spectrum)");
    return f;
}

}  // namespace

cplx cf_direct(const QParameters& p, const SpectralPoint& pt,
               const CfConfig& cfg) {
    p.validate();
    return lentz(p, pt, cfg, /*stop_early=*/true, 0, nullptr);
}

std::vector<cplx> cf_convergents(const QParameters& p, const SpectralPoint& pt,
                                 int depth, const CfConfig& cfg) {
    p.validate();
    if (depth < 0) throw DomainError("convergent depth must be >= 0");
    std::vector<cplx> trace;
    trace.reserve(static_cast<std::size_t>(depth) + 1);
    lentz(p, pt, cfg, /*stop_early=*/false, depth, &trace);
    return trace;
}

cplx cf_pincherle(const QParameters& p, const SpectralPoint& pt,
                  const ToleranceConfig& tol) {
    p.validate();
    const RecurrenceCoefficients c0 = coefficients(p, 0);

    if (std::abs(c0.b2_n) < kPoleFloor) {
        // First row decoupled ($b'^2_0 = 0$, e.g. $\epsilon = 1$): the ratio
        // $b'^2_0 X_{-1}/X_0$ is a 0 * inf product, but by the recurrence it
        // equals the reciprocal-free tail form $z - a'_0 - X_1/X_0$.
        const MinimalSolution m0 = minimal_solution(p, pt, 0);
        if (std::abs(m0.value) < kPoleFloor)
            throw DegenerateError(
                "X_0 vanishes; the Pincherle ratio is undefined here");
        const cplx x1 = eval_solution(m0.id, p, 1, pt, tol);
        return pt.z - c0.a_n - x1 / m0.value;
    }

    const MinimalSolution m = minimal_solution(p, pt, -1);
    const cplx x0 = eval_solution(m.id, p, 0, pt, tol);
    if (std::abs(x0) < kPoleFloor)
        throw DegenerateError(
            "X_0 vanishes; the Pincherle ratio is undefined here");
    return c0.b2_n * m.value / x0;
}

// $1/CF$ through the ratio of W values with arguments $s\epsilon/q$ (index 0)
// and $s\epsilon/q^2$ (index -1):
//
//   $\frac{2}{u}\,
//    \frac{(1-\epsilon q/u^2)(1-s\epsilon^2/q^2)(1-s\epsilon^2/q)}
//         {(1-\alpha\epsilon/u)(1-\beta\epsilon/u)(1-\gamma\epsilon/u)
//          (1-\delta\epsilon/u)(1-s\epsilon/q^2)}\,
//    \frac{W(q\epsilon/u^2; q\epsilon, q/\alpha u, q/\beta u, q/\gamma u,
//            q/\delta u)}
//         {W(\epsilon/u^2; \epsilon, q/\alpha u, q/\beta u, q/\gamma u,
//          q/\delta u)}$
//
// for |u| > 1, extended to |u| < 1 by u -> 1/u.
cplx stieltjes_closed_s4(const QParameters& p, const SpectralPoint& pt,
                         const ToleranceConfig& tol) {
    p.validate();
    if (pt.on_cut())
        throw DomainError(
            "point lies on the continuous spectrum (|u| = 1); the closed form "
            "is undefined there");
    const cplx q = p.q;
    const cplx s = p.s();
    const cplx e = p.epsilon;
    if (std::abs(s * e / (q * q)) >= 1.0)
        throw DomainError("requires |s eps / q^2| < 1 for W convergence");

    cplx u = pt.u;
    if (std::abs(u) < 1.0) u = 1.0 / u;
    const cplx u2 = u * u;

    const cplx num =
        (2.0 / u) * (1.0 - e * q / u2) * (1.0 - s * e * e / (q * q)) *
        (1.0 - s * e * e / q);
    const cplx den = checked(1.0 - p.alpha * e / u, "1 - alpha eps / u") *
                     checked(1.0 - p.beta * e / u, "1 - beta eps / u") *
                     checked(1.0 - p.gamma * e / u, "1 - gamma eps / u") *
                     checked(1.0 - p.delta * e / u, "1 - delta eps / u") *
                     checked(1.0 - s * e / (q * q), "1 - s eps / q^2");

    VwpW top;
    top.a = q * e / u2;
    top.b = q * e;
    top.c = q / (p.alpha * u);
    top.d = q / (p.beta * u);
    top.e = q / (p.gamma * u);
    top.f = q / (p.delta * u);
    top.q = q;
    VwpW bot = top;
    bot.a = e / u2;
    bot.b = e;

    const SeriesValue wn = eval_W(top, tol);
    const SeriesValue wd = eval_W(bot, tol);
    if (std::abs(wd.value) < kPoleFloor)
        throw DegenerateError("denominator W value vanishes");
    return num / den * wn.value / wd.value;
}

// $1/CF$ through the ratio of W values with arguments $\epsilon q$ (index 0)
// and $\epsilon$ (index -1):
//
//   $\frac{2}{u}\,
//    \frac{(1-s\epsilon^2/q^2)(1-s\epsilon^2/q)(1-s\epsilon/u^2 q)}
//         {(1-\epsilon)(1-s\epsilon/\alpha u q)(1-s\epsilon/\beta u q)
//          (1-s\epsilon/\gamma u q)(1-s\epsilon/\delta u q)}\,
//    \frac{W(\epsilon s/u^2 q; \epsilon s/q, \alpha/u, \beta/u, \gamma/u,
//            \delta/u)}
//         {W(s\epsilon/u^2 q^2; \epsilon s/q^2, \alpha/u, \beta/u, \gamma/u,
//            \delta/u)}$
//
// for |u| > 1 and |eps| < 1.
cplx stieltjes_closed_s6(const QParameters& p, const SpectralPoint& pt,
                         const ToleranceConfig& tol) {
    p.validate();
    if (pt.on_cut())
        throw DomainError(
            "point lies on the continuous spectrum (|u| = 1); the closed form "
            "is undefined there");
    if (!(std::abs(pt.u) > 1.0))
        throw DomainError("requires |u| > 1 (no u -> 1/u extension here)");
    const cplx q = p.q;
    const cplx s = p.s();
    const cplx e = p.epsilon;
    if (std::abs(1.0 - e) < kPoleFloor) throw PoleError("1 - eps", 0);
    if (std::abs(e) >= 1.0) throw DomainError("requires |eps| < 1");

    const cplx u = pt.u;
    const cplx u2 = u * u;

    const cplx num = (2.0 / u) * (1.0 - s * e * e / (q * q)) *
                     (1.0 - s * e * e / q) * (1.0 - s * e / (u2 * q));
    const cplx den =
        checked(1.0 - e, "1 - eps") *
        checked(1.0 - s * e / (p.alpha * u * q), "1 - s eps / alpha u q") *
        checked(1.0 - s * e / (p.beta * u * q), "1 - s eps / beta u q") *
        checked(1.0 - s * e / (p.gamma * u * q), "1 - s eps / gamma u q") *
        checked(1.0 - s * e / (p.delta * u * q), "1 - s eps / delta u q");

    VwpW top;
    top.a = s * e / (u2 * q);
    top.b = s * e / q;
    top.c = p.alpha / u;
    top.d = p.beta / u;
    top.e = p.gamma / u;
    top.f = p.delta / u;
    top.q = q;
    VwpW bot = top;
    bot.a = s * e / (u2 * q * q);
    bot.b = s * e / (q * q);

    const SeriesValue wn = eval_W(top, tol);
    const SeriesValue wd = eval_W(bot, tol);
    if (std::abs(wd.value) < kPoleFloor)
        throw DegenerateError("denominator W value vanishes");
    return num / den * wn.value / wd.value;
}

}  // namespace qaw
