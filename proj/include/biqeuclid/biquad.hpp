#ifndef BIQEUCLID_BIQUAD_HPP
#define BIQEUCLID_BIQUAD_HPP

#include "biqeuclid/genus.hpp"
#include "biqeuclid/intarith.hpp"

#include <array>
#include <vector>

namespace biqeuclid {

/* An element x0 + x1*sqrt(m1) + x2*sqrt(m2) + x3*sqrt(m3) of the real field
 * K = Q(sqrt(m1), sqrt(m2)), where m3 = m1*m2/gcd(m1,m2)^2. Coordinates are
 * exact rationals; arithmetic is exact. The four real embeddings send
 * (sqrt(m1), sqrt(m2)) to the four consistent sign pairs. */
class BiquadElement {
  public:
    BiquadElement(Integer m1, Integer m2, std::array<Rational, 4> coords);

    static BiquadElement from_rational(Integer m1, Integer m2, const Rational& x);

    const Integer& m1() const { return m1_; }
    const Integer& m2() const { return m2_; }
    const Integer& m3() const { return m3_; }
    const std::array<Rational, 4>& coords() const { return coords_; }

    bool is_zero() const;

    friend BiquadElement operator*(const BiquadElement& x, const BiquadElement& y);
    friend BiquadElement operator-(const BiquadElement& x);
    friend bool operator==(const BiquadElement& x, const BiquadElement& y);

  private:
    Integer m1_, m2_, m3_, g_;
    std::array<Rational, 4> coords_;
};

/* Signs of the four real embeddings of a nonzero element, in the order
 * (s1,s2) = (+,+), (+,-), (-,+), (-,-). Decided exactly by interval
 * refinement. */
std::array<int, 4> embedding_signs(const BiquadElement& x);

/* Exact square test in K. Requires x totally positive (all four embeddings
 * positive) or zero; elements with a negative embedding are rejected since
 * their square roots leave the real field. Coordinate denominators of x must
 * divide 4. A "true" answer is always backed by an exactly verified root;
 * "false" is certified by interval enclosures that exclude every candidate
 * root. */
bool is_square_in_k(const BiquadElement& x);

/* Unit index Q(K) = [O_K^* : O_k0^* O_k1^* O_k2^*] of the real biquadratic
 * field with quadratic subfield radicands {m1, m2, m3}, together with the
 * exponent vectors e for which eps0^e0 * eps1^e1 * eps2^e2 is a square in K
 * up to sign. Q = 2^rank of that subgroup and is 1, 2 or 4. */
struct UnitIndexResult {
    int Q = 1;
    std::vector<std::array<int, 3>> square_products;
};

UnitIndexResult unit_index(const Integer& m1, const Integer& m2);

/* Class number of K = Q(sqrt(p1), sqrt(q1*q2)) from its three quadratic
 * subfields: h_K = Q(K) * h0 * h1 * h2 / 4, exactly. */
Integer class_number_biquad(const BiquadTriple& t);

} // namespace biqeuclid

#endif // BIQEUCLID_BIQUAD_HPP
