#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"
#include "qaw/continued_fraction.hpp"
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

QParameters cert_params() {
    QParameters p;
    p.q = cplx(0.5, 0.0);
    p.alpha = p.beta = p.gamma = p.delta = cplx(0.4, 0.0);
    p.epsilon = cplx(0.5, 0.0);
    return p;
}

double four_way_spread(const QParameters& p, const SpectralPoint& pt) {
    const cplx f1 = qaw::cf_direct(p, pt);
    const cplx f2 = qaw::cf_pincherle(p, pt);
    const cplx f3 = 1.0 / qaw::stieltjes_closed_s4(p, pt);
    const cplx f4 = 1.0 / qaw::stieltjes_closed_s6(p, pt);
    const double scale =
        std::max({std::abs(f1), std::abs(f2), std::abs(f3), std::abs(f4)});
    return std::max({std::abs(f1 - f2), std::abs(f1 - f3), std::abs(f1 - f4),
                     std::abs(f2 - f3), std::abs(f2 - f4),
                     std::abs(f3 - f4)}) /
           scale;
}

}  // namespace

TEST_CASE("four evaluation routes agree off the spectrum") {
    const QParameters p = cert_params();
    CHECK(four_way_spread(p, SpectralPoint::from_z(cplx(2.0, 0.0))) < 1e-8);
    CHECK(four_way_spread(p, SpectralPoint::from_z(cplx(-1.6, 0.7))) < 1e-8);
    CHECK(four_way_spread(p, SpectralPoint::from_u(cplx(1.4, -0.9))) < 1e-8);

    // complex parameters
    QParameters pc = p;
    pc.alpha = cplx(0.3, 0.15);
    pc.delta = cplx(0.35, -0.1);
    pc.epsilon = cplx(0.4, 0.1);
    CHECK(four_way_spread(pc, SpectralPoint::from_u(cplx(2.2, 0.5))) < 1e-8);

    // nearly-classical shift
    QParameters pe = p;
    pe.epsilon = cplx(1e-6, 0.0);
    CHECK(four_way_spread(pe, SpectralPoint::from_z(cplx(2.0, 0.0))) < 1e-8);
}

TEST_CASE("classical limit: decoupled first row still yields the fraction") {
    QParameters p = cert_params();
    p.epsilon = cplx(1.0, 0.0);
    CHECK(qaw::coefficients(p, 0).b2_n == cplx(0.0, 0.0));
    const SpectralPoint pt = SpectralPoint::from_z(cplx(2.0, 0.0));
    const cplx fd = qaw::cf_direct(p, pt);
    const cplx fp = qaw::cf_pincherle(p, pt);
    CHECK(rel(fd, fp) < 1e-8);
}

TEST_CASE("large-z asymptotics of the direct evaluation") {
    const QParameters p = cert_params();
    const SpectralPoint pt = SpectralPoint::from_z(cplx(50.0, 0.0));
    const cplx approx = pt.z - qaw::coefficients(p, 0).a_n -
                        qaw::coefficients(p, 1).b2_n / pt.z;
    CHECK(rel(qaw::cf_direct(p, pt), approx) < 1e-3);
}

TEST_CASE("continuous spectrum: all routes refuse or fail to settle") {
    const QParameters p = cert_params();
    const SpectralPoint pt = SpectralPoint::from_z(cplx(0.3, 0.0));
    qaw::CfConfig shallow;
    shallow.max_depth = 400;
    CHECK_THROWS_AS(qaw::cf_direct(p, pt, shallow),
                    qaw::NonConvergenceError);
    CHECK_THROWS_AS(qaw::cf_pincherle(p, pt), qaw::SpectrumError);
    CHECK_THROWS_AS(qaw::stieltjes_closed_s4(p, pt), qaw::DomainError);
    CHECK_THROWS_AS(qaw::stieltjes_closed_s6(p, pt), qaw::DomainError);
}

TEST_CASE("convergents: shape and geometric decay off the spectrum") {
    const QParameters p = cert_params();
    const SpectralPoint pt = SpectralPoint::from_z(cplx(1.02, 0.0));
    const std::vector<cplx> conv = qaw::cf_convergents(p, pt, 60);
    REQUIRE(conv.size() == 61);
    const double floor_mag = 1e-13 * std::abs(conv.back());
    double prev = 0.0;
    double worst = 0.0;
    for (std::size_t k = 41; k < conv.size(); ++k) {
        const double d = std::abs(conv[k] - conv[k - 1]);
        if (prev > floor_mag && d > floor_mag)
            worst = std::max(worst, d / prev);
        prev = d;
    }
    CHECK(worst < 0.95);
    CHECK(rel(conv.back(), qaw::cf_direct(p, pt)) < 1e-9);
}

TEST_CASE("closed forms: reciprocal-point handling and domain refusals") {
    const QParameters p = cert_params();
    // |u| < 1 inputs are evaluated at the reciprocal point
    SpectralPoint inside;
    inside.u = cplx(0.5, 0.0);
    inside.z = (inside.u + 1.0 / inside.u) / 2.0;
    const SpectralPoint outside = SpectralPoint::from_u(cplx(2.0, 0.0));
    CHECK(rel(qaw::stieltjes_closed_s4(p, inside),
              qaw::stieltjes_closed_s4(p, outside)) < 1e-14);

    // second closed form requires |eps| < 1 and |u| > 1
    QParameters pe = p;
    pe.epsilon = cplx(1.2, 0.0);
    CHECK_THROWS_AS(qaw::stieltjes_closed_s6(pe, outside), qaw::DomainError);
    CHECK_THROWS_AS(qaw::stieltjes_closed_s6(p, inside), qaw::DomainError);

    // eps = 1 hits the displayed (1 - eps) denominator factor
    QParameters p1 = p;
    p1.epsilon = cplx(1.0, 0.0);
    CHECK_THROWS_AS(qaw::stieltjes_closed_s6(p1, outside), qaw::PoleError);

    // first closed form: vanishing displayed factor (1 - alpha eps / u)
    QParameters pp = p;
    pp.alpha = cplx(2.5, 0.0);
    pp.beta = pp.gamma = pp.delta = cplx(0.2, 0.0);
    pp.epsilon = cplx(0.5, 0.0);
    const SpectralPoint pole_pt = SpectralPoint::from_u(cplx(1.25, 0.0));
    CHECK_THROWS_AS(qaw::stieltjes_closed_s4(pp, pole_pt), qaw::PoleError);
}

TEST_CASE("pincherle form equals the closed forms on random draws") {
    qaw::Rng rng(401);
    int accepted = 0;
    while (accepted < 8) {
        QParameters p;
        p.q = cplx(rng.uniform(0.35, 0.6), 0.0);
        p.alpha = rng.annulus(0.2, 0.55);
        p.beta = rng.annulus(0.2, 0.55);
        p.gamma = rng.annulus(0.2, 0.55);
        p.delta = rng.annulus(0.2, 0.55);
        p.epsilon = rng.annulus(0.15, 0.8);
        if (std::abs(p.s() * p.epsilon / (p.q * p.q)) > 0.9) continue;
        const SpectralPoint pt = SpectralPoint::from_u(rng.annulus(1.3, 3.0));
        ++accepted;
        CHECK(four_way_spread(p, pt) < 1e-8);
    }
}
