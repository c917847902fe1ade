#include "qaw/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "qaw/continued_fraction.hpp"
#include "qaw/errors.hpp"
#include "qaw/qpochhammer.hpp"
#include "qaw/recurrence.hpp"
#include "qaw/series.hpp"
#include "qaw/solutions.hpp"

namespace qaw {

namespace {

constexpr double kPoleFloor = 1e-250;
constexpr double kPi = std::numbers::pi;

cplx checked(cplx factor, const char* label) {
    if (std::abs(factor) < kPoleFloor) throw PoleError(label, 0);
    return factor;
}

cplx checked_product(const SeriesValue& prod, const char* label) {
    if (std::abs(prod.value) < kPoleFloor) throw PoleError(label, 0);
    return prod.value;
}

// One Stieltjes branch of the boundary-value weight expression:
//
//   $\frac{1}{u}\,
//    \frac{(\epsilon q/u^2)_\infty (s\epsilon/\alpha u, s\epsilon/\beta u,
//           s\epsilon/\gamma u, s\epsilon/\delta u)_\infty}
//         {(s\epsilon/u^2)_\infty (\alpha\epsilon/u, \beta\epsilon/u,
//          \gamma\epsilon/u, \delta\epsilon/u)_\infty}\,
//    \frac{W(s\epsilon/u^2 q;\; s\epsilon/q, \alpha/u, \beta/u, \gamma/u,
//            \delta/u)}
//         {W(\epsilon/u^2;\; \epsilon, q/\alpha u, q/\beta u, q/\gamma u,
//            q/\delta u)}$
//
// so the two-branch difference is branch(u) - branch(1/u), each scaled by 2.
cplx stieltjes_branch(const QParameters& p, cplx u,
                      const ToleranceConfig& tol) {
    const cplx q = p.q;
    const cplx s = p.s();
    const cplx e = p.epsilon;
    const cplx u2 = u * u;

    const SeriesValue num = qpoch_multi_inf(
        {e * q / u2, s * e / (p.alpha * u), s * e / (p.beta * u),
         s * e / (p.gamma * u), s * e / (p.delta * u)},
        q, tol);
    const SeriesValue den = qpoch_multi_inf(
        {s * e / u2, p.alpha * e / u, p.beta * e / u, p.gamma * e / u,
         p.delta * e / u},
        q, tol);

    VwpW top;
    top.a = s * e / (u2 * q);
    top.b = s * e / q;
    top.c = p.alpha / u;
    top.d = p.beta / u;
    top.e = p.gamma / u;
    top.f = p.delta / u;
    top.q = q;

    VwpW bot;
    bot.a = e / u2;
    bot.b = e;
    bot.c = q / (p.alpha * u);
    bot.d = q / (p.beta * u);
    bot.e = q / (p.gamma * u);
    bot.f = q / (p.delta * u);
    bot.q = q;

    const SeriesValue wt = eval_W(top, tol);
    const SeriesValue wb = eval_W(bot, tol);
    if (std::abs(wb.value) < kPoleFloor)
        throw DegenerateError("branch denominator W value vanishes");

    return (1.0 / u) * num.value /
           checked_product(den, "(s eps/u^2, alpha eps/u, ...)_inf") *
           wt.value / wb.value;
}

void require_weight_domain(const QParameters& p, double x) {
    p.validate();
    if (!(x >= -1.0 && x <= 1.0))
        throw DomainError("weight argument x must lie in [-1, 1]");
    if (std::abs(p.s() * p.epsilon / (p.q * p.q)) >= 1.0)
        throw DomainError("requires |s eps / q^2| < 1");
}

}  // namespace

cplx wronskian(const Sequence& x, const Sequence& y, int n) {
    return x(n) * y(n + 1) - x(n + 1) * y(n);
}

cplx wronskian_s4_pair(const QParameters& p, const SpectralPoint& pt, int n,
                       const ToleranceConfig& tol) {
    const SolutionId direct{SolutionKind::S4, false};
    const SolutionId flipped{SolutionKind::S4, true};
    const Sequence x = [&](int k) { return eval_solution(direct, p, k, pt, tol); };
    const Sequence y = [&](int k) { return eval_solution(flipped, p, k, pt, tol); };
    return wronskian(x, y, n);
}

cplx wronskian_closed_form(const QParameters& p, const SpectralPoint& pt,
                           const ToleranceConfig& tol) {
    p.validate();
    const cplx q = p.q;
    const cplx s = p.s();
    const cplx e = p.epsilon;
    const cplx u = pt.u;

    const SeriesValue num =
        qpoch_multi_inf({s * e * e / (q * q * q), s * e * e / (q * q)}, q, tol);
    const SeriesValue den = qpoch_multi_inf(
        {p.alpha * p.beta * e / q, p.alpha * p.gamma * e / q,
         p.alpha * p.delta * e / q, p.beta * p.gamma * e / q,
         p.beta * p.delta * e / q, p.gamma * p.delta * e / q,
         s * e / (q * q), e},
        q, tol);

    return 2.0 * (u - 1.0 / u) * num.value /
           checked_product(den, "(alpha beta eps/q, ..., s eps/q^2, eps)_inf");
}

double weight_density(const QParameters& p, double x,
                      const ToleranceConfig& tol) {
    require_weight_domain(p, x);
    if (x == 1.0 || x == -1.0) return 0.0;

    const double theta = std::acos(x);
    const cplx u = std::polar(1.0, theta);
    const cplx u2 = u * u;
    const cplx q = p.q;
    const cplx s = p.s();
    const cplx e = p.epsilon;

    const cplx pref =
        (2.0 * std::sqrt(1.0 - x * x) / kPi) * (1.0 - s * e * e / q) *
        (1.0 - s * e * e / (q * q)) * (1.0 - s * e * e / (q * q)) /
        checked(1.0 - s * e / (q * q), "1 - s eps / q^2");

    const SeriesValue num = qpoch_multi_inf(
        {e * q / u2, e * q * u2, p.alpha * p.beta * e, p.alpha * p.gamma * e,
         p.alpha * p.delta * e, p.beta * p.gamma * e, p.beta * p.delta * e,
         p.gamma * p.delta * e, e * q},
        q, tol);
    const SeriesValue den = qpoch_multi_inf(
        {p.alpha * e / u, p.alpha * e * u, p.beta * e / u, p.beta * e * u,
         p.gamma * e / u, p.gamma * e * u, p.delta * e / u, p.delta * e * u,
         s * e / (q * q)},
        q, tol);

    VwpW w;
    w.a = e / u2;
    w.b = q / (p.alpha * u);
    w.c = q / (p.beta * u);
    w.d = q / (p.gamma * u);
    w.e = q / (p.delta * u);
    w.f = e;
    w.q = q;
    const SeriesValue wv = eval_W(w, tol);
    const double wmod2 = std::norm(wv.value);
    if (wmod2 < kPoleFloor) throw PoleError("|W(eps/u^2; ...)|^2", 0);

    const cplx value =
        pref * num.value /
        checked_product(den, "(alpha eps/u, alpha eps u, ..., s eps/q^2)_inf") /
        wmod2;
    if (std::abs(value.imag()) >
        1e-8 * std::max(std::abs(value.real()), 1e-30))
        throw DomainError(
            "assembled weight is not real; parameters lie outside the "
            "real-orthogonality regime");
    return value.real();
}

WeightAltValue weight_density_alt(const QParameters& p, double x,
                                  const ToleranceConfig& tol) {
    require_weight_domain(p, x);
    const cplx q = p.q;
    const cplx s = p.s();
    const cplx e = p.epsilon;
    if (std::abs(e * q) >= 1.0)
        throw DomainError("requires |eps q| < 1 for the branch W series");
    if (x == 1.0 || x == -1.0) return {0.0, 0.0, false};

    const double theta = std::acos(x);
    const cplx u = std::polar(1.0, theta);

    const SeriesValue eq_inf = qpoch_infinite(e * q, q, tol);
    const SeriesValue seq2_inf = qpoch_infinite(s * e / (q * q), q, tol);
    const cplx pref = cplx(0.0, -1.0 / (2.0 * kPi)) *
                      (1.0 - s * e * e / (q * q)) * (1.0 - s * e * e / q) *
                      eq_inf.value /
                      checked_product(seq2_inf, "(s eps/q^2)_inf");

    const cplx bracket = 2.0 * stieltjes_branch(p, 1.0 / u, tol) -
                         2.0 * stieltjes_branch(p, u, tol);
    const cplx value = pref * bracket;

    const double re = value.real();
    const double im = std::abs(value.imag());
    return {re, im, im > 1e-8 * std::abs(re)};
}

cplx g_function(const QParameters& p, cplx u, const ToleranceConfig& tol) {
    p.validate();
    if (std::abs(u) < kPoleFloor) throw DomainError("u must be nonzero");
    const cplx q = p.q;
    const cplx s = p.s();
    const cplx e = p.epsilon;
    if (std::abs(e * q) >= 1.0) throw DomainError("requires |eps q| < 1");
    if (std::abs(s * e / (q * q)) >= 1.0)
        throw DomainError("requires |s eps / q^2| < 1");
    const cplx u2 = u * u;

    const SeriesValue num = qpoch_multi_inf(
        {e * q / u2, s * e / (p.alpha * u), s * e / (p.beta * u),
         s * e / (p.gamma * u), s * e / (p.delta * u)},
        q, tol);
    const SeriesValue den = qpoch_multi_inf(
        {s * e / u2, p.alpha * e / u, p.beta * e / u, p.gamma * e / u,
         p.delta * e / u},
        q, tol);

    VwpW w1;
    w1.a = s * e / (u2 * q);
    w1.b = s * e / q;
    w1.c = p.alpha / u;
    w1.d = p.beta / u;
    w1.e = p.gamma / u;
    w1.f = p.delta / u;
    w1.q = q;

    VwpW w2;
    w2.a = e * u2;
    w2.b = e;
    w2.c = q * u / p.alpha;
    w2.d = q * u / p.beta;
    w2.e = q * u / p.gamma;
    w2.f = q * u / p.delta;
    w2.q = q;

    return (1.0 / u) * num.value /
           checked_product(den, "(s eps/u^2, alpha eps/u, ...)_inf") *
           eval_W(w1, tol).value * eval_W(w2, tol).value;
}

double qdougall_residual(const QParameters& p, cplx u,
                         const ToleranceConfig& tol) {
    const cplx g1 = g_function(p, u, tol);
    const cplx g2 = g_function(p, 1.0 / u, tol);

    const cplx q = p.q;
    const cplx s = p.s();
    const cplx e = p.epsilon;
    const cplx u2 = u * u;

    const SeriesValue num = qpoch_multi_inf(
        {p.alpha * p.beta * e, p.alpha * p.gamma * e, p.alpha * p.delta * e,
         p.beta * p.gamma * e, p.beta * p.delta * e, p.gamma * p.delta * e,
         e * q / u2, e * q * u2},
        q, tol);
    const SeriesValue den = qpoch_multi_inf(
        {p.alpha * e / u, p.alpha * e * u, p.beta * e / u, p.beta * e * u,
         p.gamma * e / u, p.gamma * e * u, p.delta * e / u, p.delta * e * u},
        q, tol);

    const cplx rhs = (1.0 / u - u) * (1.0 - s * e * e / (q * q)) /
                     checked(1.0 - s * e / (q * q), "1 - s eps / q^2") *
                     num.value /
                     checked_product(den, "(alpha eps/u, alpha eps u, ...)_inf");

    const double scale =
        std::max({std::abs(g1), std::abs(g2), std::abs(rhs)});
    if (scale == 0.0) return 0.0;
    return std::abs((g1 - g2) - rhs) / scale;
}

PiProducts pi_products(const QParameters& p, cplx u,
                       const ToleranceConfig& tol) {
    p.validate();
    if (std::abs(u) < kPoleFloor) throw DomainError("u must be nonzero");
    const cplx q = p.q;
    const SeriesValue pi1 = qpoch_multi_inf(
        {q / (p.alpha * u), q / (p.beta * u), q / (p.gamma * u),
         q / (p.delta * u)},
        q, tol);
    const SeriesValue pi2 = qpoch_multi_inf(
        {p.alpha / u, p.beta / u, p.gamma / u, p.delta / u}, q, tol);
    return {pi1.value, pi2.value};
}

double pi_identity_residual(const QParameters& p, int m, cplx u,
                            const ToleranceConfig& tol) {
    p.validate();
    if (m < 1) throw DomainError("m must be a positive integer");
    if (std::abs(p.epsilon - 1.0) > 1e-12)
        throw DomainError("identity requires eps = 1");
    const cplx q = p.q;
    const cplx qm = qpow(q, m);
    if (std::abs(p.s() - qm) > 1e-10 * std::abs(qm))
        throw DomainError(
            "identity requires the balance alpha beta gamma delta = q^m");
    if (std::abs(std::abs(u) - 1.0) > 1e-8)
        throw DomainError("identity requires |u| = 1");

    const PiProducts at_u = pi_products(p, u, tol);
    const PiProducts at_ru = pi_products(p, 1.0 / u, tol);

    const cplx lhs = qpow(q / p.alpha, m - 3) * (1.0 / u - u) *
                     (qpow(u, m - 2) * at_u.pi1 * at_ru.pi2 -
                      qpow(u, 2 - m) * at_ru.pi1 * at_u.pi2);

    const SeriesValue rhs_prod = qpoch_multi_inf(
        {p.alpha * p.beta / q, p.alpha * p.gamma / q, p.alpha * p.delta / q,
         q * q / (p.alpha * p.beta), q * q / (p.alpha * p.gamma),
         q * q / (p.alpha * p.delta), u * u, 1.0 / (u * u)},
        q, tol);
    const cplx rhs = rhs_prod.value;

    const double scale = std::max(std::abs(lhs), std::abs(rhs));
    if (scale == 0.0) return 0.0;
    return std::abs(lhs - rhs) / scale;
}

GuardResult discrete_spectrum_guard(const QParameters& p) {
    p.validate();
    const double root_q = std::sqrt(std::abs(p.q));
    const double a1 = std::abs(p.alpha);
    const double a2 = std::abs(p.beta);
    const double a3 = std::abs(p.gamma);
    const double a4 = std::abs(p.delta);
    const double amax = std::max({a1, a2, a3, a4});
    const double amin = std::min({a1, a2, a3, a4});

    const bool eps_real =
        std::abs(p.epsilon.imag()) <= 1e-12 * std::max(1.0, std::abs(p.epsilon));
    const double er = p.epsilon.real();

    if (eps_real && er > -1.0 && er < 1.0 && amax < root_q)
        return {true,
                "certified: -1 < eps < 1 and every parameter modulus < "
                "|q|^(1/2) = " +
                    std::to_string(root_q)};

    const double smod = std::abs(p.s());
    const double bound =
        smod < kPoleFloor ? std::numeric_limits<double>::infinity()
                          : std::abs(p.q * p.q) / smod;
    if (eps_real && std::abs(er) < bound && amin > root_q)
        return {true,
                "certified: |eps| < |q^2/s| = " + std::to_string(bound) +
                    " and every parameter modulus > |q|^(1/2) = " +
                    std::to_string(root_q)};

    std::string reason = "cannot certify absence of a discrete spectrum: ";
    if (!eps_real) {
        reason += "eps is not real";
    } else {
        reason +=
            "condition 1 needs -1 < eps < 1 and max modulus " +
            std::to_string(amax) + " < " + std::to_string(root_q) +
            "; condition 2 needs |eps| = " + std::to_string(std::abs(er)) +
            " < |q^2/s| = " + std::to_string(bound) + " and min modulus " +
            std::to_string(amin) + " > " + std::to_string(root_q);
    }
    return {false, reason};
}

namespace {

// Real recurrence data a'_0..a'_{count-1}, b'^2_0..b'^2_{count-1} for the
// quadrature loops; DomainError if the coefficients carry an imaginary part
// (outside the real-orthogonality regime the Gram integrals are meaningless).
void real_coefficients(const QParameters& p, int count, std::vector<double>& a,
                       std::vector<double>& b2) {
    a.resize(static_cast<std::size_t>(count));
    b2.resize(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        const RecurrenceCoefficients c = coefficients(p, k);
        const double sa = std::max(1.0, std::abs(c.a_n));
        const double sb = std::max(1.0, std::abs(c.b2_n));
        if (std::abs(c.a_n.imag()) > 1e-10 * sa ||
            std::abs(c.b2_n.imag()) > 1e-10 * sb)
            throw DomainError(
                "recurrence coefficients are not real; quadrature "
                "orthogonality is only defined in real regimes");
        a[static_cast<std::size_t>(k)] = c.a_n.real();
        b2[static_cast<std::size_t>(k)] = c.b2_n.real();
    }
}

}  // namespace

std::vector<std::vector<double>> orthogonality_check(
    const QParameters& p, int degree_max, int quad_n,
    const ToleranceConfig& tol) {
    p.validate();
    if (degree_max < 0) throw DomainError("degree_max must be >= 0");
    if (quad_n < 2) throw DomainError("quad_n must be >= 2");
    const GuardResult guard = discrete_spectrum_guard(p);
    if (!guard.certified) throw GuardError(guard.reason);

    std::vector<double> a;
    std::vector<double> b2;
    real_coefficients(p, degree_max, a, b2);

    const std::size_t dim = static_cast<std::size_t>(degree_max) + 1;
    std::vector<std::vector<double>> gram(dim, std::vector<double>(dim, 0.0));
    std::vector<double> poly(dim, 0.0);

    const double h = kPi / quad_n;
    for (int k = 1; k < quad_n; ++k) {  // endpoint integrand values are 0
        const double theta = h * k;
        const double x = std::cos(theta);
        const double node_factor = weight_density(p, x, tol) *
                                   std::sin(theta) * h;
        poly[0] = 1.0;
        for (int j = 0; j < degree_max; ++j) {
            const double prev = j >= 1 ? poly[static_cast<std::size_t>(j - 1)]
                                       : 0.0;
            poly[static_cast<std::size_t>(j + 1)] =
                (x - a[static_cast<std::size_t>(j)]) *
                    poly[static_cast<std::size_t>(j)] -
                b2[static_cast<std::size_t>(j)] * prev;
        }
        for (std::size_t n = 0; n < dim; ++n)
            for (std::size_t m = n; m < dim; ++m)
                gram[n][m] += poly[n] * poly[m] * node_factor;
    }
    for (std::size_t n = 0; n < dim; ++n)
        for (std::size_t m = 0; m < n; ++m) gram[n][m] = gram[m][n];
    return gram;
}

cplx stieltjes_quadrature(const QParameters& p, cplx z, int quad_n,
                          const ToleranceConfig& tol) {
    p.validate();
    if (quad_n < 2) throw DomainError("quad_n must be >= 2");
    const GuardResult guard = discrete_spectrum_guard(p);
    if (!guard.certified) throw GuardError(guard.reason);
    const SpectralPoint pt = SpectralPoint::from_z(z);
    if (pt.on_cut())
        throw DomainError("z must lie off the support interval [-1, 1]");

    const double h = kPi / quad_n;
    cplx sum = 0.0;
    for (int k = 1; k < quad_n; ++k) {
        const double theta = h * k;
        const double x = std::cos(theta);
        sum += weight_density(p, x, tol) * std::sin(theta) * h / (z - x);
    }
    return sum;
}

double stieltjes_check(const QParameters& p, cplx z, int quad_n,
                       const ToleranceConfig& tol) {
    const cplx cf = cf_pincherle(p, SpectralPoint::from_z(z), tol);
    if (std::abs(cf) < kPoleFloor)
        throw DegenerateError("CF(z) vanishes; its reciprocal is undefined");
    const cplx transform = 1.0 / cf;
    const cplx quad = stieltjes_quadrature(p, z, quad_n, tol);
    return std::abs(quad - transform) / std::abs(transform);
}

WeightTable weight_table(const QParameters& p, int grid_n,
                         const ToleranceConfig& tol) {
    if (grid_n < 2) throw DomainError("grid_n must be >= 2");
    WeightTable table;
    table.params = p;
    table.quadrature_n = grid_n;
    table.nodes.reserve(static_cast<std::size_t>(grid_n));
    table.density.reserve(static_cast<std::size_t>(grid_n));
    for (int j = 0; j < grid_n; ++j) {
        const double x = -1.0 + 2.0 * j / (grid_n - 1);
        table.nodes.push_back(x);
        table.density.push_back(weight_density(p, x, tol));
    }
    return table;
}

}  // namespace qaw
