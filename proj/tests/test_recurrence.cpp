#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "qaw/errors.hpp"
#include "qaw/parameters.hpp"
#include "qaw/recurrence.hpp"
#include "qaw/rng.hpp"
#include "test_util.hpp"

using qaw::cplx;
using qaw::QParameters;
using qaw::SpectralPoint;
using testutil::rel;

namespace {

QParameters derived_set() {
    QParameters p;
    p.q = cplx(0.5, 0.0);
    p.alpha = cplx(0.3, 0.0);
    p.beta = cplx(0.25, 0.0);
    p.gamma = cplx(0.2, 0.0);
    p.delta = cplx(0.15, 0.0);
    p.epsilon = cplx(0.5, 0.0);
    return p;
}

// Independent extended-precision transcription of the coefficient displays,
// sharing no code with the library.
struct BigCoeffs {
    oracle::big A, B, a, b2;
};

oracle::big big_A(const QParameters& p, int n) {
    using oracle::big;
    using oracle::to_big;
    const big q = to_big(p.q), al = to_big(p.alpha), be = to_big(p.beta),
              ga = to_big(p.gamma), de = to_big(p.delta),
              ep = to_big(p.epsilon);
    const big s = al * be * ga * de;
    const big qn = pow(q, n);
    return (big(1) - s * qn / q * ep) * (big(1) - al * be * ep * qn) *
           (big(1) - al * ga * ep * qn) * (big(1) - al * de * ep * qn) /
           (big(2) * al * (big(1) - s * qn * qn / q * ep * ep) *
            (big(1) - s * qn * qn * ep * ep));
}

oracle::big big_B(const QParameters& p, int n) {
    using oracle::big;
    using oracle::to_big;
    const big q = to_big(p.q), al = to_big(p.alpha), be = to_big(p.beta),
              ga = to_big(p.gamma), de = to_big(p.delta),
              ep = to_big(p.epsilon);
    const big s = al * be * ga * de;
    const big qn = pow(q, n);
    return al * (big(1) - ep * qn) * (big(1) - be * ga * ep * qn / q) *
           (big(1) - be * de * ep * qn / q) * (big(1) - ga * de * ep * qn / q) /
           (big(2) * (big(1) - s * ep * ep * qn * qn / (q * q)) *
            (big(1) - s * ep * ep * qn * qn / q));
}

BigCoeffs big_coeffs(const QParameters& p, int n) {
    using oracle::big;
    const big al = oracle::to_big(p.alpha);
    BigCoeffs c;
    c.A = big_A(p, n);
    c.B = big_B(p, n);
    c.a = -c.A - c.B + al / 2 + big(1) / (2 * al);
    c.b2 = big_A(p, n - 1) * c.B;
    return c;
}

}  // namespace

TEST_CASE("coefficients: first off-diagonal decouples at eps = 1") {
    QParameters p = derived_set();
    p.epsilon = cplx(1.0, 0.0);
    const qaw::RecurrenceCoefficients c = qaw::coefficients(p, 0);
    CHECK(c.B_n == cplx(0.0, 0.0));
    CHECK(c.b2_n == cplx(0.0, 0.0));
}

TEST_CASE("coefficients: extended-precision transcription agreement") {
    const QParameters p = derived_set();
    for (int n : {0, 1, 2, 5, 9}) {
        const qaw::RecurrenceCoefficients lib = qaw::coefficients(p, n);
        const BigCoeffs ref = big_coeffs(p, n);
        CHECK(rel(lib.A_n, oracle::to_cplx(ref.A)) < 1e-13);
        CHECK(rel(lib.B_n, oracle::to_cplx(ref.B)) < 1e-13);
        // a_n -> 0 geometrically, so the subtraction forming it loses
        // relative digits as n grows; 1e-12 covers the n = 9 cancellation
        CHECK(rel(lib.a_n, oracle::to_cplx(ref.a)) < 1e-12);
        CHECK(rel(lib.b2_n, oracle::to_cplx(ref.b2)) < 1e-13);
    }
}

TEST_CASE("coefficients: eps = 1 values equal the shifted eps-family at 1") {
    // The association only enters through eps q^n, so eps = 1, index n must
    // reproduce eps = q, index n-1.
    QParameters p1 = derived_set();
    p1.epsilon = cplx(1.0, 0.0);
    QParameters pq = derived_set();
    pq.epsilon = p1.q;
    for (int n = 1; n <= 6; ++n) {
        const auto c1 = qaw::coefficients(p1, n);
        const auto cq = qaw::coefficients(pq, n - 1);
        CHECK(rel(c1.A_n, cq.A_n) < 1e-14);
        CHECK(rel(c1.B_n, cq.B_n) < 1e-14);
    }
}

TEST_CASE("coefficients: vanishing displayed factor raises a pole error") {
    QParameters p;
    p.q = cplx(0.5, 0.0);
    p.alpha = p.beta = p.gamma = p.delta = cplx(0.5, 0.0);  // s = 1/16 exactly
    p.epsilon = cplx(4.0, 0.0);                             // s eps^2 = 1
    CHECK_THROWS_AS(qaw::coefficients(p, 1), qaw::PoleError);
}

TEST_CASE("polynomials: initial values and first step") {
    const QParameters p = derived_set();
    const SpectralPoint pt = SpectralPoint::from_z(cplx(1.7, 0.3));
    CHECK(qaw::assoc_polynomial(p, 0, pt) == cplx(1.0, 0.0));
    const cplx a0 = qaw::coefficients(p, 0).a_n;
    CHECK(rel(qaw::assoc_polynomial(p, 1, pt), pt.z - a0) < 1e-14);
}

TEST_CASE("polynomials: forward recurrence against the big-float oracle") {
    const QParameters p = derived_set();
    const cplx z(0.9, 0.2);
    const SpectralPoint pt = SpectralPoint::from_z(z);
    using oracle::big;
    big pm1(0), p0(1);
    const big zb = oracle::to_big(z);
    for (int n = 0; n < 4; ++n) {
        const BigCoeffs c = big_coeffs(p, n);
        const big p1 = (zb - c.a) * p0 - c.b2 * pm1;
        pm1 = p0;
        p0 = p1;
    }
    CHECK(rel(qaw::assoc_polynomial(p, 4, pt), oracle::to_cplx(p0)) < 1e-12);
}

TEST_CASE("polynomials: monic leading coefficient via divided differences") {
    const QParameters p = derived_set();
    for (int n = 1; n <= 10; ++n) {
        std::vector<double> nodes(n + 1);
        std::vector<cplx> vals(n + 1);
        for (int j = 0; j <= n; ++j) {
            nodes[j] = std::cos(std::numbers::pi * (2.0 * j + 1.0) /
                                (2.0 * (n + 1)));
            vals[j] = qaw::assoc_polynomial(
                p, n, SpectralPoint::from_z(cplx(nodes[j], 0.0)));
        }
        for (int k = 1; k <= n; ++k)
            for (int j = n; j >= k; --j)
                vals[j] = (vals[j] - vals[j - 1]) / (nodes[j] - nodes[j - k]);
        CHECK(std::abs(vals[n] - cplx(1.0, 0.0)) < 1e-8);
    }
}

TEST_CASE("real-orthogonality regime: real coefficients give real values") {
    QParameters p;
    p.q = cplx(0.5, 0.0);
    p.alpha = p.beta = p.gamma = p.delta = cplx(0.4, 0.0);
    p.epsilon = cplx(0.5, 0.0);
    for (int n = 0; n <= 10; ++n) {
        const auto c = qaw::coefficients(p, n);
        CHECK(std::abs(c.a_n.imag()) < 1e-14);
        CHECK(std::abs(c.b2_n.imag()) < 1e-14);
        if (n >= 1) CHECK(c.b2_n.real() > 0.0);
    }
    const SpectralPoint pt = SpectralPoint::from_z(cplx(0.3, 0.0));
    for (int n = 0; n <= 8; ++n)
        CHECK(std::abs(qaw::assoc_polynomial(p, n, pt).imag()) < 1e-10);
}

TEST_CASE("eps = 1 explicit forms: trivial orders") {
    QParameters p = derived_set();
    p.epsilon = cplx(1.0, 0.0);
    const SpectralPoint pt = SpectralPoint::from_z(cplx(1.9, -0.4));
    CHECK(rel(qaw::aw_polynomial_4phi3(p, 0, pt), cplx(1.0, 0.0)) < 1e-14);
    CHECK(rel(qaw::aw_polynomial_symmetric(p, 0, pt), cplx(1.0, 0.0)) < 1e-14);
    const cplx a0 = qaw::coefficients(p, 0).a_n;
    CHECK(rel(qaw::aw_polynomial_4phi3(p, 1, pt), pt.z - a0) < 1e-12);
}

TEST_CASE("eps = 1 explicit forms: parameter symmetry of the W-form") {
    QParameters p = derived_set();
    p.epsilon = cplx(1.0, 0.0);
    const SpectralPoint pt = SpectralPoint::from_z(cplx(1.9, -0.4));
    const cplx base = qaw::aw_polynomial_symmetric(p, 3, pt);
    QParameters perm = p;
    std::swap(perm.alpha, perm.gamma);
    std::swap(perm.beta, perm.delta);
    CHECK(rel(base, qaw::aw_polynomial_symmetric(perm, 3, pt)) < 1e-12);
}

TEST_CASE("eps = 1: three polynomial representations agree") {
    qaw::Rng rng(301);
    for (int draw = 0; draw < 20; ++draw) {
        QParameters p;
        p.q = cplx(rng.uniform(0.35, 0.6), 0.0);
        p.alpha = rng.annulus(0.2, 0.55);
        p.beta = rng.annulus(0.2, 0.55);
        p.gamma = rng.annulus(0.2, 0.55);
        p.delta = rng.annulus(0.2, 0.55);
        p.epsilon = cplx(1.0, 0.0);
        const SpectralPoint pt = SpectralPoint::from_u(rng.annulus(1.3, 2.2));
        // z can land within roundoff of a polynomial zero, where agreement
        // relative to the value itself is meaningless; floor the comparison
        // scale by the forward-evaluation magnitude bound
        // M_{k+1} = (|z|+|a_k|) M_k + |b2_k| M_{k-1}, the size at which
        // rounding noise lives.
        double m_prev = 0.0, m_cur = 1.0;
        for (int n = 0; n <= 8; ++n) {
            const cplx pr = qaw::assoc_polynomial(p, n, pt);
            const cplx pf = qaw::aw_polynomial_4phi3(p, n, pt);
            const cplx ps = qaw::aw_polynomial_symmetric(p, n, pt);
            const double scale =
                std::max({std::abs(pr), std::abs(pf), std::abs(ps),
                          0.03 * m_cur});
            CHECK(std::abs(pr - pf) / scale < 1e-10);
            CHECK(std::abs(pr - ps) / scale < 1e-10);
            const auto c = qaw::coefficients(p, n);
            const double m_next = (std::abs(pt.z) + std::abs(c.a_n)) * m_cur +
                                  std::abs(c.b2_n) * m_prev;
            m_prev = m_cur;
            m_cur = m_next;
        }
    }
}

TEST_CASE("explicit forms refuse eps != 1") {
    const QParameters p = derived_set();  // eps = 0.5
    const SpectralPoint pt = SpectralPoint::from_z(cplx(1.9, 0.0));
    CHECK_THROWS_AS(qaw::aw_polynomial_4phi3(p, 2, pt), qaw::DomainError);
    CHECK_THROWS_AS(qaw::aw_polynomial_symmetric(p, 2, pt), qaw::DomainError);
}

TEST_CASE("coefficient reflection symmetry") {
    const QParameters p = derived_set();
    for (int n = 0; n <= 5; ++n)
        CHECK(qaw::reflection_residual(p, n) < 1e-10);

    // residual is invariant under permutations of (alpha..delta)
    QParameters perm = p;
    std::swap(perm.alpha, perm.delta);
    CHECK(std::abs(qaw::reflection_residual(p, 3) -
                   qaw::reflection_residual(perm, 3)) < 1e-12);

    QParameters p1 = derived_set();
    p1.epsilon = cplx(1.0, 0.0);
    CHECK(qaw::reflection_residual(p1, 0) < 1e-10);
}
