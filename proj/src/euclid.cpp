#include "biqeuclid/euclid.hpp"

#include "biqeuclid/quadfield.hpp"

namespace mp = boost::multiprecision;

namespace biqeuclid {

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::yes:
        return "Yes";
    case Verdict::no:
        return "No";
    case Verdict::unknown:
        return "Unknown";
    case Verdict::invalid:
        return "Invalid";
    }
    return "Invalid";
}

Integer conductor_biquad(const BiquadTriple& t)
{
    return mp::lcm(conductor_quad(t.p1()), conductor_quad(t.d()));
}

Decision decide(const BiquadTriple& t)
{
    Decision dec;
    DecideCertificate& cert = dec.certificate;

    cert.h0 = class_number(t.p1());
    cert.h0_is_one = cert.h0 == 1;
    cert.q_both_1_mod_4 = (t.q1() % 4 == 1) && (t.q2() % 4 == 1);
    cert.q_contains_3 = (t.q1() == 3) || (t.q2() == 3);

    if (!cert.h0_is_one) {
        cert.applied = "class-number hypothesis fails (h0 != 1)";
        dec.verdict = Verdict::unknown;
        return dec;
    }
    cert.h1 = class_number(t.d());
    cert.h1_pow2 = is_power_of_two(cert.h1);
    if (!cert.h1_pow2) {
        cert.applied = "class-number hypothesis fails (h1 not a power of 2)";
        dec.verdict = Verdict::unknown;
        return dec;
    }
    cert.h2 = class_number(t.p1() * t.d());
    cert.h2_pow2 = is_power_of_two(cert.h2);
    if (!cert.h2_pow2) {
        cert.applied = "class-number hypothesis fails (h2 not a power of 2)";
        dec.verdict = Verdict::unknown;
        return dec;
    }

    cert.genus = classify(t);
    const bool elementary = cert.genus->elementary;

    if (cert.q_both_1_mod_4) {
        // Equivalence regime: elementary genus field <=> Euclidean ideal class.
        dec.verdict = elementary ? Verdict::yes : Verdict::no;
        cert.applied = "equivalence for q1 = q2 = 1 (mod 4)";
        return dec;
    }
    if (elementary && !cert.q_contains_3) {
        dec.verdict = Verdict::yes;
        cert.applied = "sufficient criterion (elementary genus field, q != 3)";
        return dec;
    }
    if (elementary) {
        dec.verdict = Verdict::unknown;
        cert.applied = "criterion inapplicable with a q equal to 3";
        return dec;
    }
    dec.verdict = Verdict::unknown;
    cert.applied = "sufficient criterion fails; no converse outside q1 = q2 = 1 (mod 4)";
    return dec;
}

Decision decide(const Integer& p1, const Integer& q1, const Integer& q2)
{
    for (const Integer* x : {&p1, &q1, &q2})
        if (*x >= is_prime_limit()) {
            Decision dec;
            dec.certificate.applied = "input beyond the deterministic primality bound";
            return dec;
        }
    try {
        return decide(BiquadTriple(p1, q1, q2));
    } catch (const std::invalid_argument& e) {
        Decision dec;
        dec.certificate.applied = e.what();
        return dec;
    }
}

namespace {

/* Smallest residue r mod p (p odd prime) with Legendre symbol `target`,
 * r != 0 and r != 1. Fails only for target +1 and p = 3, whose lone
 * quadratic residue is 1. */
Integer residue_with_symbol(const Integer& p, int target)
{
    for (Integer r = 2; r < p; ++r) {
        if (jacobi(r, p) == target)
            return r;
    }
    throw std::domain_error(
        "progression witness: no residue r with (r/" + p.str() +
        ") = " + std::to_string(target) + " and r != 1 exists");
}

} // namespace

ProgressionWitness progression_witness(const BiquadTriple& t)
{
    const Integer& p1 = t.p1();
    const Integer& q1 = t.q1();
    const Integer& q2 = t.q2();

    const Integer l = mp::lcm(Integer(16), conductor_biquad(t));

    // u = -1 (mod 4) turns the quadratic-reciprocity transfer of the split
    // conditions into fixed Legendre targets: (u/p1) = +1 iff p1 = 1 (mod 4),
    // (u/q) = -1 iff q = 1 (mod 4). An entry equal to 2 moves its condition
    // into the residue of u mod 16: (2/p) = +1 iff p = +-1 (mod 8).
    std::vector<Integer> residues, moduli;
    const bool has_even = (p1 == 2) || (q1 == 2) || (q2 == 2);
    if (p1 == 2)
        residues.push_back(7); // p = 7 (mod 8): (2/p) = +1, and u = -1 (mod 4)
    else if (has_even)
        residues.push_back(3); // p = 3 (mod 8): (2/p) = -1, and u = -1 (mod 4)
    else
        residues.push_back(3);
    moduli.push_back(16);

    if (p1 != 2) {
        residues.push_back(residue_with_symbol(p1, p1 % 4 == 1 ? +1 : -1));
        moduli.push_back(p1);
    }
    for (const Integer* q : {&q1, &q2}) {
        if (*q == 2)
            continue;
        residues.push_back(residue_with_symbol(*q, *q % 4 == 1 ? -1 : +1));
        moduli.push_back(*q);
    }

    ProgressionWitness w;
    w.l = l;
    w.u = crt(residues, moduli);

    Integer prod = 16;
    for (std::size_t i = 1; i < moduli.size(); ++i)
        prod *= moduli[i];
    if (prod != l)
        throw std::logic_error("progression witness: modulus mismatch with lcm(16, f(K))");
    if (mp::gcd(w.u, l) != 1 || w.u % 4 != 3 || mp::gcd((w.u - 1) / 2, l) != 1)
        throw std::logic_error("progression witness: coprimality conditions failed");
    for (const Integer& m : moduli)
        if (m != 16 && w.u % m == 1)
            throw std::logic_error("progression witness: u = 1 (mod " + m.str() + ")");

    auto split_symbol = [](const Integer& entry, const Integer& p) -> int {
        if (entry == 2) {
            const Integer r = p % 8;
            return (r == 1 || r == 7) ? +1 : -1;
        }
        return jacobi(entry, p).value();
    };

    constexpr int kMaxSteps = 200000;
    Integer candidate = w.u;
    for (int step = 0; step < kMaxSteps; ++step, candidate += l) {
        if (candidate < 2 || !is_prime(candidate))
            continue;
        const int s0 = split_symbol(p1, candidate);
        const int s1 = split_symbol(q1, candidate);
        const int s2 = split_symbol(q2, candidate);
        if (s0 != +1 || s1 != -1 || s2 != -1)
            throw std::logic_error("progression witness: prime in the progression missed the "
                                   "splitting conditions");
        w.checked_prime = candidate;
        w.prime_symbols = {s0, s1, s2};
        return w;
    }
    throw std::domain_error("progression witness: no prime found in the progression");
}

} // namespace biqeuclid
