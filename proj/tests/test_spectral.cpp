#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "qaw/continued_fraction.hpp"
#include "qaw/errors.hpp"
#include "qaw/parameters.hpp"
#include "qaw/qpochhammer.hpp"
#include "qaw/recurrence.hpp"
#include "qaw/rng.hpp"
#include "qaw/solutions.hpp"
#include "qaw/spectral.hpp"
#include "test_util.hpp"

using qaw::cplx;
using qaw::QParameters;
using qaw::SolutionKind;
using qaw::SpectralPoint;
using testutil::rel;

namespace {

QParameters cert_params() {
    QParameters p;
    p.q = cplx(0.5, 0.0);
    p.alpha = p.beta = p.gamma = p.delta = cplx(0.4, 0.0);
    p.epsilon = cplx(0.5, 0.0);
    return p;
}

QParameters small_params() {
    QParameters p;
    p.q = cplx(0.5, 0.0);
    p.alpha = cplx(0.3, 0.0);
    p.beta = cplx(0.25, 0.0);
    p.gamma = cplx(0.2, 0.0);
    p.delta = cplx(0.35, 0.0);
    p.epsilon = cplx(0.4, 0.0);
    return p;
}

}  // namespace

TEST_CASE("Casoratian: antisymmetry and self-annihilation") {
    const QParameters p = small_params();
    const SpectralPoint pt = SpectralPoint::from_u(cplx(1.9, 0.4));
    const qaw::Sequence x = [&](int n) {
        return qaw::eval_solution({SolutionKind::S4, false}, p, n, pt);
    };
    const qaw::Sequence y = [&](int n) {
        return qaw::eval_solution({SolutionKind::S4, true}, p, n, pt);
    };
    CHECK(qaw::wronskian(x, x, 2) == cplx(0.0, 0.0));
    CHECK(rel(qaw::wronskian(x, y, 2), -qaw::wronskian(y, x, 2)) < 1e-15);
}

TEST_CASE("Casoratian scaling law") {
    const QParameters p = small_params();
    const SpectralPoint pt = SpectralPoint::from_u(cplx(1.9, 0.4));
    cplx w_prev = qaw::wronskian_s4_pair(p, pt, -1);
    for (int n = 0; n <= 8; ++n) {
        const cplx wn = qaw::wronskian_s4_pair(p, pt, n);
        const cplx b2 = qaw::coefficients(p, n).b2_n;
        CHECK(rel(wn, b2 * w_prev) < 1e-10);
        w_prev = wn;
    }
}

TEST_CASE("Casoratian closed form") {
    const QParameters p = small_params();
    const SpectralPoint pt = SpectralPoint::from_u(cplx(1.9, 0.4));
    const cplx direct = qaw::wronskian_s4_pair(p, pt, -1);
    const cplx closed = qaw::wronskian_closed_form(p, pt);
    CHECK(rel(direct, closed) < 1e-8);

    // sign flip under u -> 1/u
    SpectralPoint flipped = pt;
    flipped.u = 1.0 / pt.u;
    CHECK(rel(qaw::wronskian_closed_form(p, flipped), -closed) < 1e-12);

    // zero at u = 1
    const SpectralPoint unit = SpectralPoint::from_theta(0.0);
    CHECK(std::abs(qaw::wronskian_closed_form(p, unit)) < 1e-12);
}

TEST_CASE("weight density: endpoints, positivity, and the two expressions") {
    const QParameters p = cert_params();
    CHECK(qaw::weight_density(p, 1.0) == 0.0);
    CHECK(qaw::weight_density(p, -1.0) == 0.0);
    for (int j = 0; j < 20; ++j) {
        const double x = -1.0 + 2.0 * (j + 1) / 21.0;
        const double w6 = qaw::weight_density(p, x);
        CHECK(w6 > 0.0);
        const qaw::WeightAltValue w7 = qaw::weight_density_alt(p, x);
        CHECK(!w7.imag_warning);
        CHECK(std::abs(w7.value - w6) / w6 < 1e-8);
    }
    // x = 0: the two bracket terms are conjugate, the value is real
    const qaw::WeightAltValue mid = qaw::weight_density_alt(p, 0.0);
    CHECK(mid.imag_residue < 1e-10 * std::abs(mid.value));
}

TEST_CASE("weight density: domain refusals") {
    QParameters p = cert_params();
    CHECK_THROWS_AS(qaw::weight_density(p, 1.5), qaw::DomainError);
    p.epsilon = cplx(12.0, 0.0);  // |s eps / q^2| > 1
    CHECK_THROWS_AS(qaw::weight_density(p, 0.25), qaw::DomainError);
}

TEST_CASE("weight density: classical limit at eps = 1") {
    QParameters p = cert_params();
    p.epsilon = cplx(1.0, 0.0);
    const qaw::ToleranceConfig tol;
    for (int j = 0; j < 7; ++j) {
        const double x = -0.9 + 0.3 * j;
        const double w = qaw::weight_density(p, x, tol);
        // classical density assembled from Pochhammer primitives only
        const double theta = std::acos(x);
        const cplx u = std::polar(1.0, theta);
        const cplx head =
            qaw::qpoch_multi_inf(
                {p.q, p.alpha * p.beta, p.alpha * p.gamma, p.alpha * p.delta,
                 p.beta * p.gamma, p.beta * p.delta, p.gamma * p.delta},
                p.q, tol)
                .value;
        const cplx smash = qaw::qpoch_infinite(p.s(), p.q, tol).value;
        const cplx circ =
            qaw::qpoch_multi_inf({u * u, 1.0 / (u * u)}, p.q, tol).value;
        const cplx wall =
            qaw::qpoch_multi_inf(
                {p.alpha * u, p.alpha / u, p.beta * u, p.beta / u,
                 p.gamma * u, p.gamma / u, p.delta * u, p.delta / u},
                p.q, tol)
                .value;
        const cplx classical = head / smash * circ / wall /
                               (2.0 * std::numbers::pi *
                                std::sqrt(1.0 - x * x));
        CHECK(std::abs(w - classical.real()) / std::abs(classical.real()) <
              1e-10);
        CHECK(std::abs(classical.imag()) < 1e-12 * std::abs(classical.real()));
    }
}

TEST_CASE("G-function: finiteness and parameter symmetry") {
    const QParameters p = small_params();
    const cplx u = std::polar(1.0, 1.1);
    const cplx g = qaw::g_function(p, u);
    CHECK(std::isfinite(g.real()));
    CHECK(std::isfinite(g.imag()));
    QParameters perm = p;
    std::swap(perm.alpha, perm.beta);
    CHECK(rel(qaw::g_function(perm, u), g) < 1e-13);
}

TEST_CASE("difference identity for the G-function") {
    const QParameters p = small_params();
    CHECK(qaw::qdougall_residual(p, std::polar(1.0, 1.1)) < 1e-9);
    CHECK(qaw::qdougall_residual(p, std::polar(1.0, 2.3)) < 1e-9);
    CHECK(qaw::qdougall_residual(p, cplx(1.0, 0.0)) == 0.0);

    QParameters p1 = small_params();
    p1.epsilon = cplx(1.0, 0.0);
    CHECK(qaw::qdougall_residual(p1, std::polar(1.0, 0.9)) < 1e-9);
}

TEST_CASE("product identity on the unit circle at s = q^m") {
    for (int m = 1; m <= 3; ++m) {
        QParameters p;
        p.q = cplx(0.5, 0.0);
        p.alpha = cplx(0.8, 0.0);
        p.beta = cplx(0.7, 0.0);
        p.gamma = cplx(0.6, 0.0);
        p.delta = qaw::qpow(p.q, m) / (p.alpha * p.beta * p.gamma);
        p.epsilon = cplx(1.0, 0.0);
        // the difference of the two product terms loses relative digits as
        // theta -> pi, so probe angles stay where it is well conditioned
        const cplx u = std::polar(1.0, std::numbers::pi / 3.0);
        CHECK(qaw::pi_identity_residual(p, m, u) < 1e-9);
        CHECK(qaw::pi_identity_residual(p, m, std::polar(1.0, 0.9)) < 1e-9);
    }
    // balance violation is refused
    QParameters bad;
    bad.q = cplx(0.5, 0.0);
    bad.alpha = cplx(0.8, 0.0);
    bad.beta = cplx(0.7, 0.0);
    bad.gamma = cplx(0.6, 0.0);
    bad.delta = cplx(0.5, 0.0);
    bad.epsilon = cplx(1.0, 0.0);
    CHECK_THROWS_AS(qaw::pi_identity_residual(bad, 1, std::polar(1.0, 1.0)),
                    qaw::DomainError);
}

TEST_CASE("discrete-spectrum guard: printed sufficient conditions") {
    {
        QParameters p = cert_params();  // eps=0.5, all moduli 0.4 < sqrt(0.5)
        const qaw::GuardResult g = qaw::discrete_spectrum_guard(p);
        CHECK(g.certified);
    }
    {
        QParameters p = cert_params();
        p.epsilon = cplx(0.99, 0.0);
        p.alpha = cplx(0.9, 0.0);  // violates both conditions
        const qaw::GuardResult g = qaw::discrete_spectrum_guard(p);
        CHECK(!g.certified);
        CHECK(!g.reason.empty());
    }
    {
        // second condition: all moduli above sqrt(|q|), eps below |q^2/s|
        QParameters p;
        p.q = cplx(0.5, 0.0);
        p.alpha = p.beta = p.gamma = p.delta = cplx(0.75, 0.0);
        p.epsilon = cplx(0.5, 0.0);
        const qaw::GuardResult g = qaw::discrete_spectrum_guard(p);
        CHECK(g.certified);
    }
}

TEST_CASE("orthogonality: Gram matrix, normalization, and guard refusal") {
    const QParameters p = cert_params();
    const auto gram = qaw::orthogonality_check(p, 3, 1024);
    CHECK(std::abs(gram[0][0] - 1.0) < 1e-6);
    CHECK(std::abs(gram[0][1]) < 1e-6);
    std::vector<double> diag(4, 1.0);
    for (int n = 1; n <= 3; ++n)
        diag[n] = diag[n - 1] * qaw::coefficients(p, n).b2_n.real();
    for (int n = 1; n <= 3; ++n)
        CHECK(std::abs(gram[n][n] / diag[n] - 1.0) < 1e-6);

    QParameters bad = cert_params();
    bad.epsilon = cplx(0.99, 0.0);
    bad.alpha = cplx(0.9, 0.0);
    CHECK_THROWS_AS(qaw::orthogonality_check(bad, 2, 64), qaw::GuardError);
}

TEST_CASE("orthogonality: quadrature error falls at least 4x per doubling") {
    const QParameters p = cert_params();
    const double ref = qaw::orthogonality_check(p, 0, 2048)[0][0];
    const double e16 = std::abs(qaw::orthogonality_check(p, 0, 16)[0][0] - ref);
    const double e32 = std::abs(qaw::orthogonality_check(p, 0, 32)[0][0] - ref);
    CHECK((e32 <= e16 / 4.0 || e32 < 1e-10));
}

TEST_CASE("Stieltjes transform: quadrature vs continued fraction") {
    const QParameters p = cert_params();
    CHECK(qaw::stieltjes_check(p, cplx(2.0, 0.0), 1024) < 1e-6);
    CHECK(qaw::stieltjes_check(p, cplx(5.0, 0.0), 1024) < 1e-6);
}

TEST_CASE("Stieltjes boundary values recover the density") {
    const QParameters p = cert_params();
    const double x = 0.25;
    const cplx cf = qaw::cf_pincherle(p, SpectralPoint::from_z(cplx(x, 1e-6)));
    const double rho = -std::imag(1.0 / cf) / std::numbers::pi;
    const double w = qaw::weight_density(p, x);
    CHECK(std::abs(rho - w) / w < 1e-4);
}

TEST_CASE("weight table shape") {
    const QParameters p = cert_params();
    const qaw::WeightTable t = qaw::weight_table(p, 21);
    REQUIRE(t.nodes.size() == 21);
    REQUIRE(t.density.size() == 21);
    CHECK(t.nodes.front() == -1.0);
    CHECK(t.nodes.back() == 1.0);
    CHECK(t.density.front() == 0.0);
    CHECK(t.density.back() == 0.0);
    for (std::size_t i = 1; i < t.nodes.size(); ++i) {
        CHECK(t.nodes[i] > t.nodes[i - 1]);
        if (i + 1 < t.nodes.size()) CHECK(t.density[i] > 0.0);
    }
    CHECK_THROWS_AS(qaw::weight_table(p, 1), qaw::DomainError);
}
