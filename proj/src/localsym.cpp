#include "biqeuclid/localsym.hpp"

#include <set>

namespace mp = boost::multiprecision;

namespace biqeuclid {

Place Place::finite(const Integer& p)
{
    if (!is_prime(p))
        throw std::invalid_argument("Place::finite: p must be prime");
    Place v;
    v.p_ = p;
    return v;
}

Place Place::real()
{
    Place v;
    v.real_ = true;
    return v;
}

const Integer& Place::prime() const
{
    if (real_)
        throw std::logic_error("Place::prime: the real place carries no prime");
    return p_;
}

namespace {

// p-adic valuation of a nonzero rational, and the unit part u = x / p^v.
int valuation(const Rational& x, const Integer& p, Rational& unit)
{
    Integer num = mp::numerator(x);
    Integer den = mp::denominator(x);
    int v = 0;
    while (num % p == 0) {
        num /= p;
        ++v;
    }
    while (den % p == 0) {
        den /= p;
        --v;
    }
    unit = Rational(num, den);
    return v;
}

// Residue of a p-adic unit x/y modulo m (m a power of p).
Integer unit_mod(const Rational& u, const Integer& m)
{
    const Integer num = mod_floor(mp::numerator(u), m);
    const Integer den = mod_floor(mp::denominator(u), m);
    return (num * mod_inverse(den, m)) % m;
}

int legendre_of_unit(const Rational& u, const Integer& p)
{
    return jacobi(unit_mod(u, p), p).value();
}

} // namespace

SymbolValue hilbert_symbol(const Rational& a, const Rational& b, const Place& place)
{
    if (a == 0 || b == 0)
        throw std::invalid_argument("hilbert_symbol: arguments must be nonzero");

    if (place.is_real())
        return SymbolValue::of((a < 0 && b < 0) ? -1 : +1);

    const Integer& p = place.prime();
    Rational u, v;
    const int alpha = valuation(a, p, u);
    const int beta = valuation(b, p, v);

    if (p == 2) {
        // (2,2) = 1, (2,u) = (-1)^((u^2-1)/8), (u,v) = (-1)^((u-1)(v-1)/4)
        auto eps = [&](const Rational& w) { return (unit_mod(w, 4) == 3) ? 1 : 0; };
        auto omega = [&](const Rational& w) {
            const Integer r = unit_mod(w, 8);
            return (r == 3 || r == 5) ? 1 : 0;
        };
        const int e = eps(u) * eps(v) + alpha * omega(v) + beta * omega(u);
        return SymbolValue::of(e % 2 == 0 ? +1 : -1);
    }

    // (p,p) = (-1)^((p-1)/2), (p,u) = (u/p), (u,v) = 1
    const int p_eps = (p % 4 == 3) ? 1 : 0;
    int sign = 1;
    if ((alpha & 1) && (beta & 1) && p_eps)
        sign = -sign;
    if (beta & 1)
        sign *= legendre_of_unit(u, p);
    if (alpha & 1)
        sign *= legendre_of_unit(v, p);
    if (sign == 0)
        throw std::logic_error("hilbert_symbol: unit part was not a unit");
    return SymbolValue::of(sign);
}

SymbolValue product_over_places(const Rational& a, const Rational& b)
{
    if (a == 0 || b == 0)
        throw std::invalid_argument("product_over_places: arguments must be nonzero");
    std::set<Integer> primes{Integer(2)};
    for (const Rational* x : {&a, &b}) {
        for (const Integer& part : {mp::numerator(*x), mp::denominator(*x)})
            for (const auto& [p, e] : detail::factorize(part))
                primes.insert(p);
    }
    SymbolValue prod = hilbert_symbol(a, b, Place::real());
    for (const Integer& p : primes)
        prod = prod * hilbert_symbol(a, b, Place::finite(p));
    return prod;
}

} // namespace biqeuclid
