#ifndef BIQEUCLID_EUCLID_HPP
#define BIQEUCLID_EUCLID_HPP

#include "biqeuclid/genus.hpp"
#include "biqeuclid/intarith.hpp"

#include <array>
#include <optional>
#include <string>

namespace biqeuclid {

enum class Verdict { yes, no, unknown, invalid };

std::string to_string(Verdict v);

/* Everything `decide` evaluated on the way to its verdict. */
struct DecideCertificate {
    Integer h0, h1, h2;       // class numbers of Q(sqrt p1), Q(sqrt q1q2), Q(sqrt p1q1q2)
    bool h0_is_one = false;
    bool h1_pow2 = false;
    bool h2_pow2 = false;
    bool q_both_1_mod_4 = false;
    bool q_contains_3 = false;
    std::optional<GenusVerdict> genus; // evaluated only once the class-number hypothesis holds
    std::string applied;               // which criterion produced the verdict
};

struct Decision {
    Verdict verdict = Verdict::invalid;
    DecideCertificate certificate;
};

/* Conductor of K = Q(sqrt(p1), sqrt(q1*q2)): lcm of the conductors of two
 * generating quadratic subfields. */
Integer conductor_biquad(const BiquadTriple& t);

/* Four-valued Euclidean-ideal-class verdict.
 *
 * yes      - h0 = 1, h1 and h2 powers of two, elementary genus field, and
 *            neither q equals 3 (or both q = 1 mod 4, where the criterion
 *            is an equivalence).
 * no       - both q = 1 mod 4, class-number hypothesis holds, genus field
 *            not elementary (the equivalence fails).
 * unknown  - class-number hypothesis fails, or the sufficient criterion
 *            does not apply (some q = 3, or non-elementary genus with a
 *            q = 3 mod 4 present).
 */
Decision decide(const BiquadTriple& t);

/* Overload that validates raw integers, reporting invalid instead of
 * throwing. */
Decision decide(const Integer& p1, const Integer& q1, const Integer& q2);

/* Arithmetic progression u (mod l), l = lcm(16, f(K)), all of whose prime
 * members p split completely in K with every prime above p generating the
 * class group: (p1/p) = 1, (q1/p) = (q2/p) = -1. checked_prime is the first
 * prime in the progression, with its three symbol conditions re-verified. */
struct ProgressionWitness {
    Integer u;
    Integer l;
    Integer checked_prime;
    std::array<int, 3> prime_symbols; // (p1/p), (q1/p), (q2/p) at checked_prime
};

/* Constructs the witness by the Chinese remainder theorem. Throws
 * std::domain_error when no admissible residue exists (a q equal to 3 forces
 * u = 1 mod 3, which the gcd conditions forbid). */
ProgressionWitness progression_witness(const BiquadTriple& t);

} // namespace biqeuclid

#endif // BIQEUCLID_EUCLID_HPP
