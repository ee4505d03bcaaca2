#ifndef BIQEUCLID_GENUS_HPP
#define BIQEUCLID_GENUS_HPP

#include "biqeuclid/intarith.hpp"

#include <optional>
#include <utility>

namespace biqeuclid {

/* Validated input triple for K = Q(sqrt(p1), sqrt(q1*q2)): three distinct
 * primes, hence at most one of them 2 and d = q1*q2 squarefree. The input
 * order of (q1, q2) is preserved. */
class BiquadTriple {
  public:
    BiquadTriple(Integer p1, Integer q1, Integer q2);

    const Integer& p1() const { return p1_; }
    const Integer& q1() const { return q1_; }
    const Integer& q2() const { return q2_; }
    Integer d() const { return q1_ * q2_; }

  private:
    Integer p1_, q1_, q2_;
};

/* Outcome of the genus-field classification: whether the genus field of K
 * is the elementary candidate Q(sqrt(p1), sqrt(q1), sqrt(q2)), the case of
 * the classification that applied (1..6), the matched subcase when one
 * matched, and the (q1,q2) orientation under which it matched. */
struct GenusVerdict {
    bool elementary = false;
    int case_label = 0;
    std::optional<int> bullet;
    std::pair<Integer, Integer> orientation;
};

/* Decides elementary/non-elementary by exhaustively testing the subcases of
 * the applicable case; asymmetric subcases are tried in both orientations
 * of (q1, q2). A triple matching no subcase is non-elementary. */
GenusVerdict classify(const BiquadTriple& t);

} // namespace biqeuclid

#endif // BIQEUCLID_GENUS_HPP
