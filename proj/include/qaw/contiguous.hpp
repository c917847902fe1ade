#ifndef QAW_CONTIGUOUS_HPP
#define QAW_CONTIGUOUS_HPP

// Contiguous relations among very-well-poised basic hypergeometric series,
// verified numerically as relative residuals.
//
// The terminating balanced series is
//   $\phi = {}_{10}\phi_9(a, q\sqrt a, -q\sqrt a, b,\dots,h;\;
//           \sqrt a, -\sqrt a, aq/b,\dots,aq/h;\; q)$
// with $h = q^{-n}$ and the balance $bcdefgh = a^3q^2$.  Four relations:
//
//   Phi10Exchange — three-term relation connecting $\phi$,
//     $\phi(b-,c+)$ and $\phi(c-,b+)$ (exchange a factor of q between b, c).
//   WExchange     — its nonterminating W(a; b,c,d,e,f) limit.
//   Phi10Ladder   — relation from reversing the series, connecting $\phi$
//     with $\phi_+(b-)$ and $\phi_-(b+)$, which shift a by $q^{\pm 2}$ and
//     every parameter except b by $q^{\pm 1}$, via reversal coefficients
//     $c_1, c_2, c_3$.
//   WLadder       — its W limit.
//
// Each residual is $|T_1 - T_2 - T_3| / \max_i |T_i|$ with the $T_i$ exactly
// the three displayed summands.

#include "qaw/series.hpp"
#include "qaw/types.hpp"

namespace qaw {

enum class RelationId { Phi10Exchange, WExchange, Phi10Ladder, WLadder };

const char* to_string(RelationId id);

// Terminating balanced very-well-poised 10phi9 parameter set.
struct TenPhiNineSpec {
    cplx a, b, c, d, e, f, g, h;
    cplx q;
    int n = 0;  // h = q^{-n}

    // h = q^{-n} and bcdefgh = a^3 q^2, both to 1e-10 relative.
    void validate() const;

    // Fixes h = q^{-n} and g = a^3 q^{n+2}/(bcdef) so the invariants hold.
    static TenPhiNineSpec balanced(cplx a, cplx b, cplx c, cplx d, cplx e,
                                   cplx f, cplx q, int n);

    SeriesValue eval(const ToleranceConfig& tol = {}) const;
};

// Relative residual of the named relation.  The 10phi9 overload serves the
// terminating relations, the VwpW overload the W limits (all three W values
// in a relation share the argument a^2q^2/(bcdef), so |argument| < 1 is the
// only convergence requirement).
double relation_residual(RelationId id, const TenPhiNineSpec& spec,
                         const ToleranceConfig& tol = {});
double relation_residual(RelationId id, const VwpW& w,
                         const ToleranceConfig& tol = {});

}  // namespace qaw

#endif
