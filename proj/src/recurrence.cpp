#include "qaw/recurrence.hpp"

#include <cmath>
#include <vector>

#include "qaw/errors.hpp"
#include "qaw/qpochhammer.hpp"
#include "qaw/series.hpp"

namespace qaw {

namespace {

constexpr double kPoleFloor = 1e-250;
constexpr double kEpsOneTol = 1e-12;

cplx checked_inv(cplx denom, const char* name, int n) {
    if (std::abs(denom) < kPoleFloor) throw PoleError(name, n);
    return cplx(1.0, 0.0) / denom;
}

// The terminating hypergeometric sum below cancels catastrophically in
// double precision: its terms grow like q^{-nk} before collapsing back to a
// polynomial-sized value, which costs about n(n-1)/2 * log10(1/q) digits.
// Accumulating with ~33 significant digits makes the representation agree
// with the forward recurrence to full double accuracy for the index range a
// polynomial evaluation meets in practice.
#if defined(__SIZEOF_FLOAT128__)
using ext_real = __float128;
#else
using ext_real = long double;
#endif

struct ExtCplx {
    ext_real re, im;
};

ExtCplx ext(cplx v) {
    return {static_cast<ext_real>(v.real()), static_cast<ext_real>(v.imag())};
}

cplx ext_round(const ExtCplx& v) {
    return cplx(static_cast<double>(v.re), static_cast<double>(v.im));
}

ExtCplx ext_mul(const ExtCplx& a, const ExtCplx& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

ExtCplx ext_div(const ExtCplx& a, const ExtCplx& b) {
    const ext_real n = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

ExtCplx ext_one_minus(const ExtCplx& v) { return {1.0 - v.re, -v.im}; }

// Terminating sum of the polynomial representation, carried out entirely in
// extended precision.  Every derived parameter (q^{-n}, s q^{n-1}, alpha u,
// alpha/u, ...) is rebuilt here from the exact double inputs: pre-rounding
// any of them to double would already plant ~1e-16 relative noise on terms
// that exceed the final value by q^{-n(n-1)/2}, wiping out the result for
// moderately small q.  With exact inputs the remaining error is the same
// term-cancellation ratio times the 113-bit rounding unit.
ExtCplx aw4phi3_sum_ext(const QParameters& p, cplx u, int n) {
    const ExtCplx qe = ext(p.q);
    const ExtCplx ae = ext(p.alpha);
    const ExtCplx ue = ext(u);
    const ExtCplx se = ext_mul(ext_mul(ae, ext(p.beta)),
                               ext_mul(ext(p.gamma), ext(p.delta)));

    ExtCplx n1{1.0, 0.0};  // q^{k-n}
    for (int j = 0; j < n; ++j) n1 = ext_div(n1, qe);
    ExtCplx n2 = se;       // s q^{n-1+k}
    for (int j = 0; j < n - 1; ++j) n2 = ext_mul(n2, qe);
    if (n == 0) n2 = ext_div(n2, qe);
    ExtCplx n3 = ext_mul(ae, ue);  // alpha u q^k
    ExtCplx n4 = ext_div(ae, ue);  // (alpha/u) q^k
    ExtCplx d1 = qe;               // q^{k+1}
    ExtCplx d2 = ext_mul(ae, ext(p.beta));   // alpha beta q^k
    ExtCplx d3 = ext_mul(ae, ext(p.gamma));  // alpha gamma q^k
    ExtCplx d4 = ext_mul(ae, ext(p.delta));  // alpha delta q^k

    ExtCplx term{1.0, 0.0};
    ExtCplx sum{1.0, 0.0};
    for (int k = 0; k < n; ++k) {
        ExtCplx ratio = qe;  // series argument z = q
        ratio = ext_mul(ratio, ext_one_minus(n1));
        ratio = ext_mul(ratio, ext_one_minus(n2));
        ratio = ext_mul(ratio, ext_one_minus(n3));
        ratio = ext_mul(ratio, ext_one_minus(n4));
        ratio = ext_div(ratio, ext_one_minus(d1));
        ratio = ext_div(ratio, ext_one_minus(d2));
        ratio = ext_div(ratio, ext_one_minus(d3));
        ratio = ext_div(ratio, ext_one_minus(d4));
        term = ext_mul(term, ratio);
        sum.re += term.re;
        sum.im += term.im;
        for (ExtCplx* v : {&n1, &n2, &n3, &n4, &d1, &d2, &d3, &d4})
            *v = ext_mul(*v, qe);
    }
    return sum;
}

// $A'_n = (1-s\epsilon q^{n-1})(1-\alpha\beta\epsilon q^n)(1-\alpha\gamma\epsilon q^n)
//         (1-\alpha\delta\epsilon q^n) /
//         [2\alpha (1-s\epsilon^2 q^{2n-1})(1-s\epsilon^2 q^{2n})]$
cplx coeff_A(const QParameters& p, int n) {
    const cplx one(1.0, 0.0);
    const cplx s = p.s();
    const cplx e2 = p.epsilon * p.epsilon;
    const cplx num = (one - s * p.epsq(n - 1)) * (one - p.alpha * p.beta * p.epsq(n)) *
                     (one - p.alpha * p.gamma * p.epsq(n)) *
                     (one - p.alpha * p.delta * p.epsq(n));
    cplx inv = checked_inv(2.0 * p.alpha, "2 alpha", n);
    inv *= checked_inv(one - s * e2 * qpow(p.q, 2 * n - 1), "1 - s eps^2 q^(2n-1)", n);
    inv *= checked_inv(one - s * e2 * qpow(p.q, 2 * n), "1 - s eps^2 q^(2n)", n);
    return num * inv;
}

// $B'_n = \alpha (1-\epsilon q^n)(1-\beta\gamma\epsilon q^{n-1})
//         (1-\beta\delta\epsilon q^{n-1})(1-\gamma\delta\epsilon q^{n-1}) /
//         [2 (1-s\epsilon^2 q^{2n-2})(1-s\epsilon^2 q^{2n-1})]$
cplx coeff_B(const QParameters& p, int n) {
    const cplx one(1.0, 0.0);
    const cplx s = p.s();
    const cplx e2 = p.epsilon * p.epsilon;
    const cplx num = p.alpha * (one - p.epsq(n)) *
                     (one - p.beta * p.gamma * p.epsq(n - 1)) *
                     (one - p.beta * p.delta * p.epsq(n - 1)) *
                     (one - p.gamma * p.delta * p.epsq(n - 1));
    cplx inv = checked_inv(
        2.0 * (one - s * e2 * qpow(p.q, 2 * n - 2)), "1 - s eps^2 q^(2n-2)", n);
    inv *= checked_inv(one - s * e2 * qpow(p.q, 2 * n - 1), "1 - s eps^2 q^(2n-1)", n);
    return num * inv;
}

void require_eps_one(const QParameters& p, const char* who) {
    if (std::abs(p.epsilon - cplx(1.0, 0.0)) > kEpsOneTol)
        throw DomainError(std::string(who) + ": requires epsilon = 1");
}

}  // namespace

RecurrenceCoefficients coefficients(const QParameters& p, int n) {
    p.validate();
    RecurrenceCoefficients rc;
    rc.A_n = coeff_A(p, n);
    rc.B_n = coeff_B(p, n);
    rc.a_n = -rc.A_n - rc.B_n + p.alpha / 2.0 + cplx(1.0, 0.0) / (2.0 * p.alpha);
    rc.b2_n = coeff_A(p, n - 1) * rc.B_n;
    return rc;
}

cplx assoc_polynomial(const QParameters& p, int n, const SpectralPoint& pt) {
    if (n < 0) throw DomainError("assoc_polynomial: negative degree");
    cplx pm1(0.0, 0.0);  // $P_{-1}$
    cplx pc(1.0, 0.0);   // $P_0$
    cplx A_prev(0.0, 0.0);
    for (int k = 0; k < n; ++k) {
        const cplx Ak = coeff_A(p, k);
        const cplx Bk = coeff_B(p, k);
        const cplx ak = -Ak - Bk + p.alpha / 2.0 + cplx(1.0, 0.0) / (2.0 * p.alpha);
        // $b'^2_k = A'_{k-1} B'_k$ multiplies $P_{k-1}$, which vanishes at k = 0
        const cplx b2k = (k == 0) ? cplx(0.0, 0.0) : A_prev * Bk;
        const cplx next = (pt.z - ak) * pc - b2k * pm1;
        pm1 = pc;
        pc = next;
        A_prev = Ak;
    }
    return pc;
}

cplx aw_polynomial_4phi3(const QParameters& p, int n, const SpectralPoint& pt) {
    require_eps_one(p, "aw_polynomial_4phi3");
    const cplx s = p.s();
    const cplx soq = s / p.q;
    const cplx den2n = qpoch_finite(soq, p.q, 2 * n);
    if (std::abs(den2n) < kPoleFloor) throw PoleError("(s/q)_(2n)", n);

    const cplx pref = qpoch_multi({p.alpha * p.beta, p.alpha * p.gamma,
                                   p.alpha * p.delta},
                                  p.q, n) *
                      qpoch_finite(soq, p.q, n) /
                      (qpow(2.0 * p.alpha, n) * den2n);

    return pref * ext_round(aw4phi3_sum_ext(p, pt.u, n));
}

cplx aw_polynomial_symmetric(const QParameters& p, int n, const SpectralPoint& pt) {
    require_eps_one(p, "aw_polynomial_symmetric");
    const cplx s = p.s();
    const cplx soq = s / p.q;
    const cplx u = pt.u;
    const cplx den2n = qpoch_finite(soq, p.q, 2 * n);
    if (std::abs(den2n) < kPoleFloor) throw PoleError("(s/q)_(2n)", n);
    const cplx denu2 = qpoch_finite(u * u, p.q, n);
    if (std::abs(denu2) < kPoleFloor) throw PoleError("(u^2)_n", n);

    const cplx pref =
        qpoch_multi({p.alpha * u, p.beta * u, p.gamma * u, p.delta * u, soq}, p.q, n) /
        (qpow(2.0 * u, n) * den2n * denu2);

    const cplx qmn = qpow(p.q, -n);
    VwpW w;
    w.a = qmn / (u * u);
    w.b = qmn;
    w.c = p.alpha / u;
    w.d = p.beta / u;
    w.e = p.gamma / u;
    w.f = p.delta / u;
    w.q = p.q;
    return pref * eval_W(w).value;
}

double reflection_residual(const QParameters& p, int n) {
    QParameters refl;
    refl.q = p.q;
    refl.alpha = p.q / p.alpha;
    refl.beta = p.q / p.beta;
    refl.gamma = p.q / p.gamma;
    refl.delta = p.q / p.delta;
    refl.epsilon = cplx(1.0, 0.0) / (p.epsilon * qpow(p.q, 2 * n + 1));

    const RecurrenceCoefficients orig_n = coefficients(p, n);
    const RecurrenceCoefficients orig_n1 = coefficients(p, n + 1);
    const RecurrenceCoefficients refl_n = coefficients(refl, n);

    const double res_a = std::abs(refl_n.a_n - orig_n.a_n) / std::abs(orig_n.a_n);
    const double res_b2 =
        std::abs(refl_n.b2_n - orig_n1.b2_n) / std::abs(orig_n1.b2_n);
    return std::max(res_a, res_b2);
}

}  // namespace qaw
