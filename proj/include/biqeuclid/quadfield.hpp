#ifndef BIQEUCLID_QUADFIELD_HPP
#define BIQEUCLID_QUADFIELD_HPP

#include "biqeuclid/intarith.hpp"

#include <string>

namespace biqeuclid {

/* Fundamental unit (a + b*sqrt(m))/denom of the maximal order of Q(sqrt(m)),
 * the least unit > 1. Satisfies (a^2 - m*b^2)/denom^2 = norm exactly;
 * denom = 2 only when m = 1 (mod 4) and a, b are both odd. */
struct QuadUnit {
    Integer a;
    Integer b;
    int denom = 1;
    Integer m;
    int norm = 0; // -1 or +1
};

/* Canonical rendering "(a+b*sqrt(m))/denom". */
std::string to_string(const QuadUnit& u);

/* Invariants of the real quadratic field Q(sqrt(m)):
 * D = m for m = 1 (mod 4), else 4m; h_narrow = h when the fundamental unit
 * has norm -1 and 2h when it has norm +1. */
struct QuadFieldData {
    Integer m;
    Integer D;
    Integer h;
    Integer h_narrow;
};

/* Conductor (= discriminant) of Q(sqrt(m)), m squarefree > 1. */
Integer conductor_quad(const Integer& m);

/* Fundamental unit of the maximal order, by the continued-fraction expansion
 * of sqrt(m) (m = 2,3 mod 4) or (1+sqrt(m))/2 (m = 1 mod 4). Memoized. */
QuadUnit fundamental_unit(const Integer& m);

/* Norm of the fundamental unit (+1 or -1) from the parity of the
 * continued-fraction period, without computing the coefficients. */
int fundamental_unit_norm(const Integer& m);

/* Number of cycles of reduced primitive indefinite forms of discriminant
 * conductor_quad(m); this is the narrow class number h+. Memoized. */
Integer narrow_class_number(const Integer& m);

/* Wide class number: h+ when norm(eps) = -1, h+/2 when norm(eps) = +1. */
Integer class_number(const Integer& m);

QuadFieldData quad_field_data(const Integer& m);

/* Legendre symbol of the fundamental unit of Q(sqrt(p1)) reduced modulo a
 * degree-one prime above q. Requires p1 = 1 (mod 4) prime, q = 1 (mod 4)
 * prime with (p1/q) = 1 and q != p1; the value does not depend on which
 * square root of p1 mod q realizes the reduction. */
SymbolValue unit_residue_symbol(const Integer& p1, const Integer& q);

} // namespace biqeuclid

#endif // BIQEUCLID_QUADFIELD_HPP
