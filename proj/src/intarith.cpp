#include "biqeuclid/intarith.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <ostream>

namespace mp = boost::multiprecision;

namespace biqeuclid {

std::ostream& operator<<(std::ostream& os, SymbolValue s)
{
    return os << s.value();
}

SymbolValue jacobi(const Integer& a_in, const Integer& n_in)
{
    if (n_in <= 0 || mp::bit_test(n_in, 0) == false)
        throw std::invalid_argument("jacobi: lower argument must be odd and positive");

    Integer a = mod_floor(a_in, n_in);
    Integer n = n_in;
    int sign = 1;
    while (a != 0) {
        while (mp::bit_test(a, 0) == false) {
            a >>= 1;
            const unsigned r = static_cast<unsigned>(n % 8);
            if (r == 3 || r == 5)
                sign = -sign;
        }
        a.swap(n);
        if (a % 4 == 3 && n % 4 == 3)
            sign = -sign;
        a %= n;
    }
    if (n == 1)
        return SymbolValue::of(sign);
    return SymbolValue::of(0);
}

bool is_power_of_two(const Integer& n)
{
    if (n < 1)
        return false;
    return (n & (n - 1)) == 0;
}

Integer isqrt_floor(const Integer& n)
{
    if (n < 0)
        throw std::invalid_argument("isqrt_floor: negative argument");
    return mp::sqrt(n);
}

bool is_perfect_square(const Integer& n, Integer* root)
{
    if (n < 0)
        return false;
    Integer r = mp::sqrt(n);
    if (r * r == n) {
        if (root)
            *root = r;
        return true;
    }
    return false;
}

Integer mod_floor(const Integer& a, const Integer& m)
{
    if (m <= 0)
        throw std::invalid_argument("mod_floor: modulus must be positive");
    Integer r = a % m;
    if (r < 0)
        r += m;
    return r;
}

Integer mod_pow(Integer a, Integer e, const Integer& m)
{
    if (m < 1)
        throw std::invalid_argument("mod_pow: modulus must be positive");
    if (e < 0)
        throw std::invalid_argument("mod_pow: negative exponent");
    a = mod_floor(a, m);
    return mp::powm(a, e, m);
}

Integer mod_inverse(const Integer& a, const Integer& m)
{
    // extended Euclid
    Integer r0 = m, r1 = mod_floor(a, m);
    Integer t0 = 0, t1 = 1;
    while (r1 != 0) {
        Integer q = r0 / r1;
        Integer r2 = r0 - q * r1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        Integer t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0 != 1)
        throw std::invalid_argument("mod_inverse: arguments not coprime");
    return mod_floor(t0, m);
}

namespace {

// Miller-Rabin witnesses covering every n below 3317044064679887385961981.
constexpr std::array<unsigned, 13> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

const Integer kDeterministicLimit("3317044064679887385961981");

bool miller_rabin_round(const Integer& n, const Integer& d, unsigned s, const Integer& a)
{
    Integer x = mod_pow(a, d, n);
    if (x == 1 || x == n - 1)
        return true;
    for (unsigned i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n - 1)
            return true;
    }
    return false;
}

} // namespace

const Integer& is_prime_limit() { return kDeterministicLimit; }

bool is_prime(const Integer& n)
{
    if (n < 0)
        throw std::invalid_argument("is_prime: negative argument");
    if (n >= kDeterministicLimit)
        throw std::domain_error("is_prime: argument beyond the deterministic witness bound");
    if (n < 2)
        return false;
    for (unsigned p : kWitnesses) {
        if (n == p)
            return true;
        if (n % p == 0)
            return false;
    }
    Integer d = n - 1;
    unsigned s = 0;
    while (mp::bit_test(d, 0) == false) {
        d >>= 1;
        ++s;
    }
    for (unsigned a : kWitnesses) {
        if (!miller_rabin_round(n, d, s, Integer(a)))
            return false;
    }
    return true;
}

std::optional<Integer> sqrt_mod_prime(const Integer& a_in, const Integer& p)
{
    if (!is_prime(p))
        throw std::invalid_argument("sqrt_mod_prime: modulus is not prime");
    if (p == 2)
        throw std::invalid_argument("sqrt_mod_prime: modulus must be odd");
    Integer a = mod_floor(a_in, p);
    if (a == 0)
        throw std::invalid_argument("sqrt_mod_prime: argument divisible by the modulus");
    if (jacobi(a, p) == -1)
        return std::nullopt;

    Integer root;
    if (p % 4 == 3) {
        root = mod_pow(a, (p + 1) / 4, p);
    } else {
        // Tonelli-Shanks
        Integer q = p - 1;
        unsigned s = 0;
        while (mp::bit_test(q, 0) == false) {
            q >>= 1;
            ++s;
        }
        Integer z = 2;
        while (jacobi(z, p) != -1)
            ++z;
        Integer c = mod_pow(z, q, p);
        Integer t = mod_pow(a, q, p);
        Integer r = mod_pow(a, (q + 1) / 2, p);
        unsigned m = s;
        while (t != 1) {
            Integer t2 = t;
            unsigned i = 0;
            while (t2 != 1) {
                t2 = (t2 * t2) % p;
                ++i;
            }
            Integer b = c;
            for (unsigned j = 0; j + i + 1 < m; ++j)
                b = (b * b) % p;
            m = i;
            c = (b * b) % p;
            t = (t * c) % p;
            r = (r * b) % p;
        }
        root = r;
    }
    Integer other = p - root;
    return root < other ? root : other;
}

bool is_a2_plus_32b2(const Integer& q)
{
    if (q < 1)
        throw std::invalid_argument("is_a2_plus_32b2: argument must be >= 1");
    for (Integer b = 0; 32 * b * b <= q; ++b) {
        if (is_perfect_square(q - 32 * b * b))
            return true;
    }
    return false;
}

Integer crt(const std::vector<Integer>& residues, const std::vector<Integer>& moduli)
{
    if (residues.size() != moduli.size() || moduli.empty())
        throw std::invalid_argument("crt: residue/modulus lists must be nonempty and equal-sized");
    Integer u = 0, m = 1;
    for (std::size_t i = 0; i < moduli.size(); ++i) {
        const Integer& mi = moduli[i];
        if (mi <= 0)
            throw std::invalid_argument("crt: moduli must be positive");
        if (mp::gcd(m, mi) != 1)
            throw std::invalid_argument("crt: moduli are not pairwise coprime");
        // u' = u + m * ((ri - u) * m^-1 mod mi)
        Integer k = mod_floor((residues[i] - u) * mod_inverse(m, mi), mi);
        u += m * k;
        m *= mi;
    }
    return mod_floor(u, m);
}

namespace detail {

std::vector<std::pair<Integer, int>> factorize(Integer n)
{
    if (n < 0)
        n = -n;
    if (n == 0)
        throw std::invalid_argument("factorize: zero argument");
    std::vector<std::pair<Integer, int>> out;
    auto strip = [&](const Integer& p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0)
            out.emplace_back(p, e);
    };
    strip(2);
    strip(3);
    for (Integer p = 5; p * p <= n; p += 6) {
        strip(p);
        strip(p + 2);
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

bool is_squarefree(const Integer& n)
{
    if (n == 0)
        return false;
    for (const auto& [p, e] : factorize(n))
        if (e > 1)
            return false;
    return true;
}

} // namespace detail

} // namespace biqeuclid
