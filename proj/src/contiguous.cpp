#include "qaw/contiguous.hpp"

#include <algorithm>
#include <cmath>

#include "qaw/errors.hpp"
#include "qaw/parameters.hpp"
#include "qaw/qpochhammer.hpp"

namespace qaw {

namespace {

constexpr double kPoleFloor = 1e-250;
constexpr double kBalanceTol = 1e-10;
const cplx kOne(1.0, 0.0);

cplx checked(cplx factor, const char* label, int n) {
    if (std::abs(factor) < kPoleFloor) throw PoleError(label, n);
    return factor;
}

double rel_residual(cplx t1, cplx t2, cplx t3) {
    const double scale = std::max({std::abs(t1), std::abs(t2), std::abs(t3)});
    if (scale == 0.0) return 0.0;
    return std::abs(t1 - t2 - t3) / scale;
}

SeriesValue eval_phi10(cplx a, cplx b, cplx c, cplx d, cplx e, cplx f, cplx g,
                       cplx h, cplx q, const ToleranceConfig& tol) {
    const cplx lowers[7] = {b, c, d, e, f, g, h};
    return eval_vwp(a, lowers, q, q, tol);
}

// Reversal coefficient
//   $c_1 = \frac{(\sqrt a, -\sqrt a)_n (aq/b)_n \cdots (aq/g)_n
//           (aq^{n+1})_n}{(a)_n (q\sqrt a, -q\sqrt a)_n (b)_n \cdots (g)_n}
//           (-1)^n q^{n(n-1)/2}$,
// with the $\pm$ pairs folded: $(\pm\sqrt a)_n = (a; q^2)_n$ and
// $(\pm q\sqrt a)_n = (aq^2; q^2)_n$.  The companion coefficients are the
// same expression at the ladder-shifted parameter sets:
//   $c_2 = c_1(aq^2;\, b, cq, \dots, gq;\, n-1)$,
//   $c_3 = c_1(a/q^2;\, b, c/q, \dots, g/q;\, n+1)$,
// which reproduces every printed factor (e.g. $(q^2\sqrt a)_{n-1}$ and the
// unshifted $(b)_{n-1}$ in $c_2$).
cplx reversal_coeff(cplx a, cplx b, cplx c, cplx d, cplx e, cplx f, cplx g,
                    int n, cplx q) {
    const cplx num =
        qpoch_pair(a, q, n) *
        qpoch_multi({a * q / b, a * q / c, a * q / d, a * q / e, a * q / f,
                     a * q / g},
                    q, n) *
        qpoch_finite(a * qpow(q, n + 1), q, n);
    const cplx den = qpoch_finite(a, q, n) * qpoch_pair(a * q * q, q, n) *
                     qpoch_multi({b, c, d, e, f, g}, q, n);
    if (std::abs(den) < kPoleFloor)
        throw PoleError("reversal coefficient denominator", n);
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    return sign * qpow(q, n * (n - 1) / 2) * num / den;
}

double residual_phi10_exchange(const TenPhiNineSpec& s,
                               const ToleranceConfig& tol) {
    s.validate();
    const cplx a = s.a, b = s.b, c = s.c, d = s.d, e = s.e, f = s.f, g = s.g,
               h = s.h, q = s.q;
    const cplx phi = eval_phi10(a, b, c, d, e, f, g, h, q, tol).value;
    const cplx phi_bc =
        eval_phi10(a, b / q, c * q, d, e, f, g, h, q, tol).value;
    const cplx phi_cb =
        eval_phi10(a, b * q, c / q, d, e, f, g, h, q, tol).value;

    const cplx coef1 = b * (kOne - c) * (kOne - a / c) * (kOne - a * q / c) *
                       (kOne - a * q / (b * d)) * (kOne - a * q / (b * e)) *
                       (kOne - a * q / (b * f)) * (kOne - a * q / (b * g)) *
                       (kOne - a * q / (b * h)) /
                       checked(kOne - c * q / b, "1 - cq/b", s.n);
    const cplx coef2 = c * (kOne - b) * (kOne - a / b) * (kOne - a * q / b) *
                       (kOne - a * q / (c * d)) * (kOne - a * q / (c * e)) *
                       (kOne - a * q / (c * f)) * (kOne - a * q / (c * g)) *
                       (kOne - a * q / (c * h)) /
                       checked(kOne - b * q / c, "1 - bq/c", s.n);
    const cplx coef3 = (a * q / c) * (kOne - c / b) *
                       (kOne - b * c / (a * q)) * (kOne - d) * (kOne - e) *
                       (kOne - f) * (kOne - g) * (kOne - h);

    return rel_residual(coef1 * (phi_bc - phi), coef2 * (phi_cb - phi),
                        coef3 * phi);
}

double residual_w_exchange(const VwpW& w, const ToleranceConfig& tol) {
    const cplx a = w.a, b = w.b, c = w.c, d = w.d, e = w.e, f = w.f, q = w.q;
    if (std::abs(w.argument()) >= 1.0)
        throw DomainError("relation_residual: |W argument| >= 1");
    const cplx W0 = eval_W(w, tol).value;
    const cplx Wbc = eval_W({a, b / q, c * q, d, e, f, q}, tol).value;
    const cplx Wcb = eval_W({a, b * q, c / q, d, e, f, q}, tol).value;

    const cplx pref = b * c * d * e * f / (a * a * q);
    const cplx coef1 = pref * (kOne - c) * (kOne - a / c) *
                       (kOne - a * q / c) * (kOne - a * q / (b * d)) *
                       (kOne - a * q / (b * e)) * (kOne - a * q / (b * f)) /
                       checked(kOne - c * q / b, "1 - cq/b", 0);
    const cplx coef2 = pref * (kOne - b) * (kOne - a / b) *
                       (kOne - a * q / b) * (kOne - a * q / (c * d)) *
                       (kOne - a * q / (c * e)) * (kOne - a * q / (c * f)) /
                       checked(kOne - b * q / c, "1 - bq/c", 0);
    const cplx coef3 = (a * q / c) * (kOne - c / b) *
                       (kOne - b * c / (a * q)) * (kOne - d) * (kOne - e) *
                       (kOne - f);

    return rel_residual(coef1 * (Wbc - W0), coef2 * (Wcb - W0), coef3 * W0);
}

double residual_phi10_ladder(const TenPhiNineSpec& s,
                             const ToleranceConfig& tol) {
    s.validate();
    const cplx a = s.a, b = s.b, c = s.c, d = s.d, e = s.e, f = s.f, g = s.g,
               h = s.h, q = s.q;
    const int n = s.n;
    const cplx phi = eval_phi10(a, b, c, d, e, f, g, h, q, tol).value;
    const cplx c1 = reversal_coeff(a, b, c, d, e, f, g, n, q);

    // first summand: the factor (1 - h) vanishes identically at n = 0
    // (h = q^0), where the up-shifted series and c2 are undefined
    cplx t1(0.0, 0.0);
    if (n > 0) {
        const cplx phi_up =
            eval_phi10(a * q * q, b, c * q, d * q, e * q, f * q, g * q, h * q,
                       q, tol)
                .value;
        const cplx c2 = reversal_coeff(a * q * q, b, c * q, d * q, e * q,
                                       f * q, g * q, n - 1, q);
        const cplx coef1 =
            (b / a) * (kOne - h) * (kOne - h / a) * (kOne - h * q / a) *
            (kOne - a * q / (b * d)) * (kOne - a * q / (b * e)) *
            (kOne - a * q / (b * f)) * (kOne - a * q / (b * g)) *
            (kOne - a * q / (b * c)) /
            checked(kOne - a * q / b, "1 - aq/b", n);
        t1 = coef1 * (c2 * phi_up - c1 * phi);
    }

    const cplx phi_dn = eval_phi10(a / (q * q), b, c / q, d / q, e / q, f / q,
                                   g / q, h / q, q, tol)
                            .value;
    const cplx c3 = reversal_coeff(a / (q * q), b, c / q, d / q, e / q, f / q,
                                   g / q, n + 1, q);
    const cplx coef2 = (kOne - b * h / a) * (kOne - h / b) *
                       (kOne - h * q / b) * (kOne - q / d) * (kOne - q / e) *
                       (kOne - q / f) * (kOne - q / g) * (kOne - q / c) /
                       checked(kOne - b * q / a, "1 - bq/a", n);
    const cplx t2 = coef2 * (c3 * phi_dn - c1 * phi);

    const cplx coef3 = (q / a) * (kOne - a / b) * (kOne - b / q) *
                       (kOne - h * d / a) * (kOne - h * e / a) *
                       (kOne - h * f / a) * (kOne - h * g / a) *
                       (kOne - h * c / a);
    const cplx t3 = coef3 * c1 * phi;

    return rel_residual(t1, t2, t3);
}

double residual_w_ladder(const VwpW& w, const ToleranceConfig& tol) {
    const cplx a = w.a, b = w.b, c = w.c, d = w.d, e = w.e, f = w.f, q = w.q;
    const cplx Z = w.argument();
    if (std::abs(Z) >= 1.0)
        throw DomainError("relation_residual: |W argument| >= 1");
    const cplx W0 = eval_W(w, tol).value;
    const cplx Wup = eval_W({a * q * q, b, c * q, d * q, e * q, f * q, q},
                            tol)
                         .value;
    const cplx Wdn = eval_W({a / (q * q), b, c / q, d / q, e / q, f / q, q},
                            tol)
                         .value;

    const cplx coef1 = b * (kOne - a * q / (b * d)) * (kOne - a * q / (b * e)) *
                       (kOne - a * q / (b * f)) * (kOne - a * q / (b * c)) /
                       (a * checked(kOne - a * q / b, "1 - aq/b", 0));
    const cplx inner1 = Z * (kOne - a * q) * (kOne - a * q * q) * (kOne - c) *
                        (kOne - d) * (kOne - e) * (kOne - f) /
                        (checked(kOne - a * q / b, "1 - aq/b", 0) *
                         checked(kOne - a * q * q / b, "1 - aq^2/b", 0) *
                         checked(kOne - a * q / c, "1 - aq/c", 0) *
                         checked(kOne - a * q / d, "1 - aq/d", 0) *
                         checked(kOne - a * q / e, "1 - aq/e", 0) *
                         checked(kOne - a * q / f, "1 - aq/f", 0));
    const cplx t1 = coef1 * (inner1 * Wup - W0);

    const cplx coef2 = (kOne - q / d) * (kOne - q / e) * (kOne - q / f) *
                       (kOne - q / c) /
                       checked(kOne - b * q / a, "1 - bq/a", 0);
    const cplx inner2 = (kOne / Z) * (kOne - a / (b * q)) * (kOne - a / b) *
                        (kOne - a / c) * (kOne - a / d) * (kOne - a / e) *
                        (kOne - a / f) /
                        (checked(kOne - a / q, "1 - a/q", 0) *
                         checked(kOne - a, "1 - a", 0) *
                         checked(kOne - c / q, "1 - c/q", 0) *
                         checked(kOne - d / q, "1 - d/q", 0) *
                         checked(kOne - e / q, "1 - e/q", 0) *
                         checked(kOne - f / q, "1 - f/q", 0));
    const cplx t2 = coef2 * (inner2 * Wdn - W0);

    const cplx t3 =
        (q / a) * (kOne - a / b) * (kOne - b / q) * (kOne - Z) * W0;

    return rel_residual(t1, t2, t3);
}

}  // namespace

const char* to_string(RelationId id) {
    switch (id) {
        case RelationId::Phi10Exchange: return "Phi10Exchange";
        case RelationId::WExchange: return "WExchange";
        case RelationId::Phi10Ladder: return "Phi10Ladder";
        case RelationId::WLadder: return "WLadder";
    }
    return "?";
}

void TenPhiNineSpec::validate() const {
    if (std::abs(q) >= 1.0) throw DomainError("TenPhiNineSpec: |q| >= 1");
    if (n < 0) throw DomainError("TenPhiNineSpec: n < 0");
    const cplx qmn = qpow(q, -n);
    if (std::abs(h - qmn) > kBalanceTol * std::abs(qmn))
        throw DomainError("TenPhiNineSpec: h != q^{-n}");
    const cplx lhs = b * c * d * e * f * g * h;
    const cplx rhs = a * a * a * q * q;
    if (std::abs(lhs - rhs) > kBalanceTol * std::abs(rhs))
        throw DomainError("TenPhiNineSpec: balance bcdefgh = a^3 q^2 fails");
}

TenPhiNineSpec TenPhiNineSpec::balanced(cplx a, cplx b, cplx c, cplx d, cplx e,
                                        cplx f, cplx q, int n) {
    TenPhiNineSpec s;
    s.a = a;
    s.b = b;
    s.c = c;
    s.d = d;
    s.e = e;
    s.f = f;
    s.q = q;
    s.n = n;
    s.h = qpow(q, -n);
    s.g = a * a * a * qpow(q, n + 2) / (b * c * d * e * f);
    return s;
}

SeriesValue TenPhiNineSpec::eval(const ToleranceConfig& tol) const {
    validate();
    return eval_phi10(a, b, c, d, e, f, g, h, q, tol);
}

double relation_residual(RelationId id, const TenPhiNineSpec& spec,
                         const ToleranceConfig& tol) {
    switch (id) {
        case RelationId::Phi10Exchange:
            return residual_phi10_exchange(spec, tol);
        case RelationId::Phi10Ladder:
            return residual_phi10_ladder(spec, tol);
        default:
            throw DomainError(
                "relation_residual: this relation takes W parameters, not a "
                "10phi9 spec");
    }
}

double relation_residual(RelationId id, const VwpW& w,
                         const ToleranceConfig& tol) {
    switch (id) {
        case RelationId::WExchange: return residual_w_exchange(w, tol);
        case RelationId::WLadder: return residual_w_ladder(w, tol);
        default:
            throw DomainError(
                "relation_residual: this relation takes a 10phi9 spec, not W "
                "parameters");
    }
}

}  // namespace qaw
