#ifndef BIQEUCLID_INTARITH_HPP
#define BIQEUCLID_INTARITH_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace biqeuclid {

// Exact unbounded integers/rationals; all arithmetic in this library is exact.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/* Value of a quadratic-residue-style symbol: -1, 0 or +1.
 * 0 occurs exactly when the arguments share a factor. */
class SymbolValue {
  public:
    constexpr SymbolValue() = default;
    static SymbolValue of(int v)
    {
        if (v < -1 || v > 1)
            throw std::invalid_argument("SymbolValue must be -1, 0 or +1");
        SymbolValue s;
        s.v_ = static_cast<signed char>(v);
        return s;
    }
    constexpr int value() const { return v_; }
    constexpr bool is_zero() const { return v_ == 0; }

    friend SymbolValue operator*(SymbolValue a, SymbolValue b)
    {
        return of(a.v_ * b.v_);
    }
    friend constexpr bool operator==(SymbolValue, SymbolValue) = default;

  private:
    signed char v_ = 0;
};

constexpr bool operator==(SymbolValue s, int v) { return s.value() == v; }
std::ostream& operator<<(std::ostream& os, SymbolValue s);

/* Jacobi symbol (a/n) for odd n >= 1; equals the Legendre symbol when n is
 * prime. Throws std::invalid_argument for even or nonpositive n. */
SymbolValue jacobi(const Integer& a, const Integer& n);

/* Square root of a modulo an odd prime p (Tonelli-Shanks). Returns the
 * smaller of the two roots, or nullopt when a is a non-residue.
 * Requires p prime (checked) and p not dividing a. */
std::optional<Integer> sqrt_mod_prime(const Integer& a, const Integer& p);

/* Deterministic primality for 0 <= n < 3.3e24 (Miller-Rabin with the first
 * 13 prime witnesses). Inputs at or beyond that bound are rejected. */
bool is_prime(const Integer& n);

/* Largest n accepted by is_prime + 1; callers bound their inputs below it. */
const Integer& is_prime_limit();

/* Whether q >= 1 is representable as a^2 + 32*b^2 (a, b integers, 0 allowed). */
bool is_a2_plus_32b2(const Integer& q);

/* Whether n is in {1, 2, 4, 8, ...}. */
bool is_power_of_two(const Integer& n);

/* Least nonnegative u with u = residues[i] (mod moduli[i]) for all i.
 * Moduli must be positive and pairwise coprime. */
Integer crt(const std::vector<Integer>& residues, const std::vector<Integer>& moduli);

// -- small exact helpers used across the library --

/* floor(sqrt(n)) for n >= 0. */
Integer isqrt_floor(const Integer& n);

bool is_perfect_square(const Integer& n, Integer* root = nullptr);

/* a^e mod m, m >= 1, e >= 0. */
Integer mod_pow(Integer a, Integer e, const Integer& m);

/* Inverse of a modulo m, gcd(a, m) = 1. */
Integer mod_inverse(const Integer& a, const Integer& m);

/* a mod m normalized into [0, m). */
Integer mod_floor(const Integer& a, const Integer& m);

namespace detail {

/* Trial-division factorization, (prime, exponent) pairs with primes
 * increasing. Intended for desk-scale inputs. */
std::vector<std::pair<Integer, int>> factorize(Integer n);

bool is_squarefree(const Integer& n);

} // namespace detail

} // namespace biqeuclid

#endif // BIQEUCLID_INTARITH_HPP
