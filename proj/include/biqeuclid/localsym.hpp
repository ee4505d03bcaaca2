#ifndef BIQEUCLID_LOCALSYM_HPP
#define BIQEUCLID_LOCALSYM_HPP

#include "biqeuclid/intarith.hpp"

namespace biqeuclid {

/* A place of Q: a finite prime p or the real place. */
class Place {
  public:
    static Place finite(const Integer& p);
    static Place real();

    bool is_real() const { return real_; }
    const Integer& prime() const;

  private:
    Place() = default;
    bool real_ = false;
    Integer p_;
};

/* Hilbert symbol (a,b) at a place of Q, for nonzero rationals; +1 iff
 * a*x^2 + b*y^2 = z^2 has a nontrivial solution in the completion. */
SymbolValue hilbert_symbol(const Rational& a, const Rational& b, const Place& place);

/* Product of hilbert_symbol over the real place and every prime dividing
 * 2 * num(a) * den(a) * num(b) * den(b); all other factors are +1. The
 * product formula says this is always +1. */
SymbolValue product_over_places(const Rational& a, const Rational& b);

} // namespace biqeuclid

#endif // BIQEUCLID_LOCALSYM_HPP
