#include "qaw/solutions.hpp"

#include <cmath>
#include <span>
#include <sstream>
#include <string>

#include "qaw/errors.hpp"
#include "qaw/qpochhammer.hpp"
#include "qaw/recurrence.hpp"

namespace qaw {

namespace {

constexpr double kPoleFloor = 1e-250;
constexpr double kCutBand = 1e-8;

struct Factor {
    const char* label;
    cplx arg;
};

// $\prod (\text{num}_i)_\infty / \prod (\text{den}_j)_\infty$ with a
// PoleError naming any vanishing denominator product.
cplx poch_ratio(std::span<const Factor> num, std::span<const Factor> den, cplx q,
                const ToleranceConfig& tol, int n) {
    cplx acc(1.0, 0.0);
    for (const Factor& f : num) acc *= qpoch_infinite(f.arg, q, tol).value;
    for (const Factor& f : den) {
        const cplx v = qpoch_infinite(f.arg, q, tol).value;
        if (std::abs(v) < kPoleFloor) throw PoleError(f.label, n);
        acc /= v;
    }
    return acc;
}

SolutionValue assemble(cplx power, std::span<const Factor> num,
                       std::span<const Factor> den, const VwpW& w, cplx q,
                       const ToleranceConfig& tol, int n) {
    SolutionValue out;
    out.w = eval_W(w, tol);
    out.value = power * poch_ratio(num, den, q, tol, n) * out.w.value;
    return out;
}

// $X^{(1)}_n$:  $(u/2)^n$ prefactor,
//   $W(\alpha\beta\gamma u/q;\; q^{-n}/\epsilon,\ \epsilon s q^{n-1},
//      \alpha u,\ \beta u,\ \gamma u)$, argument $q/(\delta u)$.
SolutionValue eval_s1(const QParameters& p, int n, cplx u,
                      const ToleranceConfig& tol) {
    const cplx q = p.q, al = p.alpha, be = p.beta, ga = p.gamma, de = p.delta;
    const cplx s = p.s(), E = p.epsq(n);
    const Factor num[] = {
        {"(s u eps q^n/delta)_inf", s * u * E / de},
        {"(s eps^2 q^(2n-1))_inf", s * E * E / q},
    };
    const Factor den[] = {
        {"(s eps q^(n-1))_inf", s * E / q},
        {"(delta eps q^n/u)_inf", de * E / u},
        {"(alpha beta eps q^n)_inf", al * be * E},
        {"(alpha gamma eps q^n)_inf", al * ga * E},
        {"(beta gamma eps q^n)_inf", be * ga * E},
    };
    const VwpW w{al * be * ga * u / q, 1.0 / E, s * E / q, al * u, be * u,
                 ga * u, q};
    return assemble(qpow(u / 2.0, n), num, den, w, q, tol, n);
}

// $X^{(2)}_n$:  $(u/2)^n$ prefactor,
//   $W(q^2 u/(\alpha\beta\gamma);\; \epsilon q^{n+1},\ q^{2-n}/(\epsilon s),
//      qu/\alpha,\ qu/\beta,\ qu/\gamma)$, argument $\delta/u$.
SolutionValue eval_s2(const QParameters& p, int n, cplx u,
                      const ToleranceConfig& tol) {
    const cplx q = p.q, al = p.alpha, be = p.beta, ga = p.gamma, de = p.delta;
    const cplx s = p.s(), E = p.epsq(n);
    const Factor num[] = {
        {"(s eps^2 q^(2n-1))_inf", s * E * E / q},
        {"(delta eps u q^(n+1))_inf", de * u * E * q},
    };
    const Factor den[] = {
        {"(eps q^(n+1))_inf", E * q},
        {"(beta delta eps q^n)_inf", be * de * E},
        {"(gamma delta eps q^n)_inf", ga * de * E},
        {"(alpha delta eps q^n)_inf", al * de * E},
        {"(s eps q^(n-1)/(delta u))_inf", s * E / (de * u * q)},
    };
    const VwpW w{q * q * u / (al * be * ga), E * q, q * q / (s * E), q * u / al,
                 q * u / be, q * u / ga, q};
    return assemble(qpow(u / 2.0, n), num, den, w, q, tol, n);
}

// $X^{(3)}_n$:  $(2u)^{-n}$ prefactor,
//   $W(\beta\gamma\delta\epsilon^2 q^{2n}/u;\; q/(\alpha u),
//      \epsilon q^{n+1},\ \beta\delta\epsilon q^n,\ \gamma\delta\epsilon q^n,
//      \beta\gamma\epsilon q^n)$, argument $\alpha/u$.
SolutionValue eval_s3(const QParameters& p, int n, cplx u,
                      const ToleranceConfig& tol) {
    const cplx q = p.q, al = p.alpha, be = p.beta, ga = p.gamma, de = p.delta;
    const cplx s = p.s(), E = p.epsq(n);
    const Factor num[] = {
        {"(s eps^2 q^(2n))_inf", s * E * E},
        {"(s eps^2 q^(2n-1))_inf", s * E * E / q},
        {"(beta gamma delta eps q^n/u)_inf", be * ga * de * E / u},
        {"(beta eps q^(n+1)/u)_inf", be * E * q / u},
        {"(gamma eps q^(n+1)/u)_inf", ga * E * q / u},
        {"(delta eps q^(n+1)/u)_inf", de * E * q / u},
    };
    const Factor den[] = {
        {"(eps q^(n+1))_inf", E * q},
        {"(s eps q^(n-1))_inf", s * E / q},
        {"(alpha beta eps q^n)_inf", al * be * E},
        {"(alpha gamma eps q^n)_inf", al * ga * E},
        {"(alpha delta eps q^n)_inf", al * de * E},
        {"(beta gamma eps q^n)_inf", be * ga * E},
        {"(beta delta eps q^n)_inf", be * de * E},
        {"(gamma delta eps q^n)_inf", ga * de * E},
        {"(beta gamma delta eps^2 q^(2n+1)/u)_inf", be * ga * de * E * E * q / u},
    };
    const VwpW w{be * ga * de * E * E / u, q / (al * u), E * q, be * de * E,
                 ga * de * E, be * ga * E, q};
    return assemble(qpow(2.0 * u, -n), num, den, w, q, tol, n);
}

// $X^{(4)}_n$:  $(2u)^{-n}$ prefactor,
//   $W(\epsilon q^{n+1}/u^2;\; \epsilon q^{n+1},\ q/(\alpha u),
//      q/(\beta u),\ q/(\gamma u),\ q/(\delta u))$,
//   argument $s\epsilon q^{n-1}$.
SolutionValue eval_s4(const QParameters& p, int n, cplx u,
                      const ToleranceConfig& tol) {
    const cplx q = p.q, al = p.alpha, be = p.beta, ga = p.gamma, de = p.delta;
    const cplx s = p.s(), E = p.epsq(n);
    const Factor num[] = {
        {"(s eps^2 q^(2n-1))_inf", s * E * E / q},
        {"(alpha eps q^(n+1)/u)_inf", al * E * q / u},
        {"(beta eps q^(n+1)/u)_inf", be * E * q / u},
        {"(gamma eps q^(n+1)/u)_inf", ga * E * q / u},
        {"(delta eps q^(n+1)/u)_inf", de * E * q / u},
    };
    const Factor den[] = {
        {"(eps q^(n+1))_inf", E * q},
        {"(eps q^(n+2)/u^2)_inf", E * q * q / (u * u)},
        {"(alpha beta eps q^n)_inf", al * be * E},
        {"(alpha delta eps q^n)_inf", al * de * E},
        {"(alpha gamma eps q^n)_inf", al * ga * E},
        {"(beta gamma eps q^n)_inf", be * ga * E},
        {"(beta delta eps q^n)_inf", be * de * E},
        {"(gamma delta eps q^n)_inf", ga * de * E},
    };
    const VwpW w{E * q / (u * u), E * q, q / (al * u), q / (be * u),
                 q / (ga * u), q / (de * u), q};
    return assemble(qpow(2.0 * u, -n), num, den, w, q, tol, n);
}

// $X^{(5)}_n$:  $(2u)^{-n}$ prefactor,
//   $W(q^{-n}/(\epsilon u^2);\; q^{-n}/\epsilon,\ \alpha/u,\ \beta/u,
//      \gamma/u,\ \delta/u)$, argument $q^{2-n}/(s\epsilon)$.
SolutionValue eval_s5(const QParameters& p, int n, cplx u,
                      const ToleranceConfig& tol) {
    const cplx q = p.q, al = p.alpha, be = p.beta, ga = p.gamma, de = p.delta;
    const cplx s = p.s(), E = p.epsq(n);
    const Factor num[] = {
        {"(s eps^2 q^(2n-1))_inf", s * E * E / q},
        {"(u^2 eps q^n)_inf", u * u * E},
    };
    const Factor den[] = {
        {"(s eps q^(n-1))_inf", s * E / q},
        {"(alpha u eps q^n)_inf", al * u * E},
        {"(beta u eps q^n)_inf", be * u * E},
        {"(gamma u eps q^n)_inf", ga * u * E},
        {"(delta u eps q^n)_inf", de * u * E},
    };
    const VwpW w{1.0 / (E * u * u), 1.0 / E, al / u, be / u, ga / u, de / u, q};
    return assemble(qpow(2.0 * u, -n), num, den, w, q, tol, n);
}

// $X^{(6)}_n$:  $(2u)^{-n}$ prefactor,
//   $W(s\epsilon q^{n-1}/u^2;\; s\epsilon q^{n-1},\ \alpha/u,\ \beta/u,
//      \gamma/u,\ \delta/u)$, argument $\epsilon q^{n+1}$.
SolutionValue eval_s6(const QParameters& p, int n, cplx u,
                      const ToleranceConfig& tol) {
    const cplx q = p.q, al = p.alpha, be = p.beta, ga = p.gamma, de = p.delta;
    const cplx s = p.s(), E = p.epsq(n);
    const Factor num[] = {
        {"(s eps^2 q^(2n-1))_inf", s * E * E / q},
        {"(s eps q^n/(alpha u))_inf", s * E / (al * u)},
        {"(s eps q^n/(beta u))_inf", s * E / (be * u)},
        {"(s eps q^n/(gamma u))_inf", s * E / (ga * u)},
        {"(s eps q^n/(delta u))_inf", s * E / (de * u)},
    };
    const Factor den[] = {
        {"(s eps q^(n-1))_inf", s * E / q},
        {"(s eps q^n/u^2)_inf", s * E / (u * u)},
        {"(alpha beta eps q^n)_inf", al * be * E},
        {"(alpha gamma eps q^n)_inf", al * ga * E},
        {"(alpha delta eps q^n)_inf", al * de * E},
        {"(beta gamma eps q^n)_inf", be * ga * E},
        {"(beta delta eps q^n)_inf", be * de * E},
        {"(gamma delta eps q^n)_inf", ga * de * E},
    };
    const VwpW w{s * E / (q * u * u), s * E / q, al / u, be / u, ga / u, de / u,
                 q};
    return assemble(qpow(2.0 * u, -n), num, den, w, q, tol, n);
}

}  // namespace

const char* to_string(SolutionKind k) {
    switch (k) {
        case SolutionKind::S1: return "S1";
        case SolutionKind::S2: return "S2";
        case SolutionKind::S3: return "S3";
        case SolutionKind::S4: return "S4";
        case SolutionKind::S5: return "S5";
        case SolutionKind::S6: return "S6";
    }
    return "?";
}

double convergence_modulus(SolutionKind k, const QParameters& p, int n, cplx u) {
    const cplx s = p.s();
    const cplx E = p.epsq(n);
    switch (k) {
        case SolutionKind::S1: return std::abs(p.q / (p.delta * u));
        case SolutionKind::S2: return std::abs(p.delta / u);
        case SolutionKind::S3: return std::abs(p.alpha / u);
        case SolutionKind::S4: return std::abs(s * E / p.q);
        case SolutionKind::S5: return std::abs(p.q * p.q / (E * s));
        case SolutionKind::S6: return std::abs(E * p.q);
    }
    return 0.0;
}

bool convergence_ok(SolutionKind k, const QParameters& p, int n, cplx u) {
    return convergence_modulus(k, p, n, u) < 1.0;
}

SolutionValue eval_solution_detail(SolutionId id, const QParameters& p, int n,
                                   const SpectralPoint& pt,
                                   const ToleranceConfig& tol) {
    p.validate();
    if (n < -1) throw DomainError("eval_solution: index must be >= -1");
    const cplx u = id.reciprocal ? cplx(1.0, 0.0) / pt.u : pt.u;
    const double zmod = convergence_modulus(id.kind, p, n, u);
    if (!(zmod < 1.0)) {
        std::ostringstream os;
        os << "eval_solution " << to_string(id.kind)
           << ": convergence predicate fails at n = " << n
           << " (|argument| = " << zmod << ")";
        throw DomainError(os.str());
    }
    switch (id.kind) {
        case SolutionKind::S1: return eval_s1(p, n, u, tol);
        case SolutionKind::S2: return eval_s2(p, n, u, tol);
        case SolutionKind::S3: return eval_s3(p, n, u, tol);
        case SolutionKind::S4: return eval_s4(p, n, u, tol);
        case SolutionKind::S5: return eval_s5(p, n, u, tol);
        case SolutionKind::S6: return eval_s6(p, n, u, tol);
    }
    throw DomainError("eval_solution: unknown solution id");
}

cplx eval_solution(SolutionId id, const QParameters& p, int n,
                   const SpectralPoint& pt, const ToleranceConfig& tol) {
    return eval_solution_detail(id, p, n, pt, tol).value;
}

double recurrence_residual(SolutionId id, const QParameters& p, int n,
                           const SpectralPoint& pt, const ToleranceConfig& tol) {
    const RecurrenceCoefficients rc = coefficients(p, n);
    const cplx xm = eval_solution(id, p, n - 1, pt, tol);
    const cplx x0 = eval_solution(id, p, n, pt, tol);
    const cplx xp = eval_solution(id, p, n + 1, pt, tol);
    const cplx t2 = (pt.z - rc.a_n) * x0;
    const cplx t3 = rc.b2_n * xm;
    const double scale =
        std::max({std::abs(xp), std::abs(t2), std::abs(t3)});
    if (scale == 0.0) return 0.0;
    return std::abs(xp - t2 + t3) / scale;
}

double proportionality_variation(SolutionId id1, SolutionId id2,
                                 const QParameters& p, const SpectralPoint& pt,
                                 int n_lo, int n_hi,
                                 const ToleranceConfig& tol) {
    if (n_hi < n_lo)
        throw DomainError("proportionality_variation: empty index range");
    double worst = 0.0;
    cplx r0(0.0, 0.0);
    for (int n = n_lo; n <= n_hi; ++n) {
        const cplx x1 = eval_solution(id1, p, n, pt, tol);
        const cplx x2 = eval_solution(id2, p, n, pt, tol);
        if (std::abs(x2) < kPoleFloor)
            throw DivisionByZeroError(
                "proportionality_variation: denominator solution vanishes at "
                "n = " +
                std::to_string(n));
        const cplx r = x1 / x2;
        if (n == n_lo) {
            if (std::abs(r) < kPoleFloor)
                throw DivisionByZeroError(
                    "proportionality_variation: ratio vanishes at the base "
                    "index");
            r0 = r;
        } else {
            worst = std::max(worst, std::abs(r / r0 - 1.0));
        }
    }
    return worst;
}

MinimalSolution minimal_solution(const QParameters& p, const SpectralPoint& pt,
                                 int n, const ToleranceConfig& tol) {
    p.validate();
    if (pt.on_cut(kCutBand))
        throw SpectrumError(
            "minimal_solution: |u| = 1 is the continuous spectrum (z in "
            "[-1,1]); no minimal solution exists there");
    if (n < -1) throw DomainError("minimal_solution: index must be >= -1");

    SolutionId id;
    id.reciprocal = std::abs(pt.u) < 1.0;  // evaluate on the exterior branch
    const cplx ue = id.reciprocal ? cplx(1.0, 0.0) / pt.u : pt.u;

    const SolutionKind order[] = {SolutionKind::S6, SolutionKind::S4,
                                  SolutionKind::S3};
    for (SolutionKind k : order) {
        if (convergence_ok(k, p, -1, ue)) {
            id.kind = k;
            return {id, eval_solution_detail(id, p, n, pt, tol).value};
        }
    }
    std::ostringstream os;
    os << "minimal_solution: no solution certified from index -1 on; "
       << "S6 |eps| = " << convergence_modulus(SolutionKind::S6, p, -1, ue)
       << ", S4 |s eps/q^2| = "
       << convergence_modulus(SolutionKind::S4, p, -1, ue)
       << ", S3 |alpha/u| = "
       << convergence_modulus(SolutionKind::S3, p, -1, ue)
       << " must each be < 1";
    throw DomainError(os.str());
}

}  // namespace qaw
