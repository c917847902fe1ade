#include <cmath>
#include <complex>

#include "doctest.h"
#include "oracles.hpp"
#include "qaw/errors.hpp"
#include "qaw/parameters.hpp"
#include "qaw/qpochhammer.hpp"
#include "qaw/rng.hpp"
#include "test_util.hpp"

using qaw::cplx;
using testutil::rel;

TEST_CASE("finite product: printed values") {
    CHECK(qaw::qpoch_finite(cplx(0.3, 0.0), cplx(0.5, 0.0), 0) ==
          cplx(1.0, 0.0));
    CHECK(rel(qaw::qpoch_finite(cplx(0.3, 0.0), cplx(0.5, 0.0), 1),
              cplx(0.7, 0.0)) < 1e-15);
    // (1 - 0.5)(1 - 0.25) = 0.375
    CHECK(rel(qaw::qpoch_finite(cplx(0.5, 0.0), cplx(0.5, 0.0), 2),
              cplx(0.375, 0.0)) < 1e-15);
}

TEST_CASE("infinite product: frozen 50-digit references") {
    // the default stopping tolerance (1e-12) leaves a truncation bias of the
    // same order; tighten it so only rounding remains against the references
    qaw::ToleranceConfig tight;
    tight.rel_tol = 1e-15;
    const qaw::SeriesValue v =
        qaw::qpoch_infinite(cplx(0.5, 0.0), cplx(0.5, 0.0), tight);
    CHECK(v.converged);
    CHECK(std::abs(v.value.real() - 0.288788095086602421278899721929) <
          1e-14);
    CHECK(std::abs(v.value.imag()) < 1e-16);
    CHECK(v.tail_estimate <= 1e-15 * std::abs(v.value));

    const qaw::SeriesValue w =
        qaw::qpoch_infinite(cplx(0.3, 0.0), cplx(0.5, 0.0), tight);
    CHECK(std::abs(w.value.real() - 0.510117826633987571832272217681) <
          1e-14);

    CHECK(qaw::qpoch_infinite(cplx(0.0, 0.0), cplx(0.5, 0.0)).value ==
          cplx(1.0, 0.0));
}

TEST_CASE("infinite product: budget exhaustion is an error") {
    qaw::ToleranceConfig tight;
    tight.max_terms = 5;
    CHECK_THROWS_AS(
        qaw::qpoch_infinite(cplx(0.3, 0.0), cplx(0.9, 0.0), tight),
        qaw::NonConvergenceError);
}

TEST_CASE("splitting identity over seeded draws") {
    qaw::Rng rng(101);
    for (int t = 0; t < 100; ++t) {
        const cplx a = rng.annulus(0.0, 2.0);
        const cplx q = rng.annulus(0.2, 0.85);
        const int m = static_cast<int>(rng.uniform(0.0, 30.999));
        const int n = static_cast<int>(rng.uniform(0.0, 30.999));
        const cplx lhs = qaw::qpoch_finite(a, q, m + n);
        const cplx rhs = qaw::qpoch_finite(a, q, m) *
                         qaw::qpoch_finite(a * qaw::qpow(q, m), q, n);
        CHECK(rel(lhs, rhs) < 1e-12);
    }
}

TEST_CASE("infinite split identity") {
    qaw::Rng rng(102);
    for (int t = 0; t < 40; ++t) {
        const cplx a = rng.annulus(0.0, 2.0);
        const cplx q = rng.annulus(0.2, 0.85);
        const int n = static_cast<int>(rng.uniform(0.0, 20.999));
        const cplx lhs = qaw::qpoch_infinite(a, q).value;
        const cplx rhs =
            qaw::qpoch_finite(a, q, n) *
            qaw::qpoch_infinite(a * qaw::qpow(q, n), q).value;
        CHECK(rel(lhs, rhs) < 5e-12);
    }
}

TEST_CASE("recursion identity") {
    qaw::Rng rng(103);
    for (int t = 0; t < 50; ++t) {
        const cplx a = rng.annulus(0.0, 2.0);
        const cplx q = rng.annulus(0.2, 0.85);
        const int n = static_cast<int>(rng.uniform(0.0, 29.999));
        const cplx lhs = qaw::qpoch_finite(a, q, n + 1);
        const cplx rhs = qaw::qpoch_finite(a, q, n) *
                         (cplx(1.0, 0.0) - a * qaw::qpow(q, n));
        CHECK(rel(lhs, rhs) < 1e-14);
    }
}

TEST_CASE("finite and infinite products against the definitional oracle") {
    qaw::Rng rng(104);
    for (int t = 0; t < 30; ++t) {
        const cplx a = rng.annulus(0.0, 2.0);
        const cplx q = rng.annulus(0.2, 0.8);
        const int n = static_cast<int>(rng.uniform(0.0, 25.999));
        const cplx lib = qaw::qpoch_finite(a, q, n);
        const cplx ref = oracle::to_cplx(
            oracle::qpoch(oracle::to_big(a), oracle::to_big(q), n));
        CHECK(rel(lib, ref) < 1e-13);

        const cplx lib_inf = qaw::qpoch_infinite(a, q).value;
        const cplx ref_inf = oracle::to_cplx(
            oracle::qpoch_inf(oracle::to_big(a), oracle::to_big(q)));
        CHECK(rel(lib_inf, ref_inf) < 1e-12);
    }
}

TEST_CASE("folded square-root pair against explicit principal roots") {
    qaw::Rng rng(105);
    for (int t = 0; t < 50; ++t) {
        const cplx y = rng.annulus(0.05, 2.0);
        const cplx q = rng.annulus(0.2, 0.85);
        const int n = static_cast<int>(rng.uniform(0.0, 12.999));
        const cplx folded = qaw::qpoch_pair(y, q, n);
        const oracle::big ry = sqrt(oracle::to_big(y));
        const oracle::big ref = oracle::qpoch(ry, oracle::to_big(q), n) *
                                oracle::qpoch(-ry, oracle::to_big(q), n);
        CHECK(rel(folded, oracle::to_cplx(ref)) < 1e-12);
        // and the clean algebraic form (y; q^2)_n
        CHECK(rel(folded, qaw::qpoch_finite(y, q * q, n)) < 1e-14);
    }
}

TEST_CASE("multi-parameter products") {
    const cplx q(0.5, 0.0);
    CHECK(rel(qaw::qpoch_multi({cplx(0.3, 0.2)}, q, 4),
              qaw::qpoch_finite(cplx(0.3, 0.2), q, 4)) < 1e-15);
    CHECK(rel(
              qaw::qpoch_multi({cplx(0.2, 0.0), cplx(0.4, 0.0)}, q, 3),
              qaw::qpoch_finite(cplx(0.2, 0.0), q, 3) *
                  qaw::qpoch_finite(cplx(0.4, 0.0), q, 3)) < 1e-15);
    // a zero parameter contributes factor 1
    const qaw::SeriesValue zi =
        qaw::qpoch_multi_inf({cplx(0.0, 0.0), cplx(0.3, 0.0)}, q);
    CHECK(rel(zi.value, qaw::qpoch_infinite(cplx(0.3, 0.0), q).value) <
          1e-14);
}
