#ifndef BIQEUCLID_TESTS_ORACLES_HPP
#define BIQEUCLID_TESTS_ORACLES_HPP

// Independent oracles used to pin expected values. Everything here computes
// by exhaustive search or a different mathematical route than the library.

#include "biqeuclid/intarith.hpp"
#include "biqeuclid/quadfield.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

namespace oracles {

using biqeuclid::Integer;

// Does x^2 = a (mod p) have a solution? Exhaustive scan.
inline bool has_sqrt_mod(std::uint64_t a, std::uint64_t p)
{
    a %= p;
    for (std::uint64_t x = 0; x < p; ++x)
        if (x * x % p == a)
            return true;
    return false;
}

// All square roots of a mod p, ascending. Exhaustive scan.
inline std::vector<std::uint64_t> all_sqrts_mod(std::uint64_t a, std::uint64_t p)
{
    a %= p;
    std::vector<std::uint64_t> roots;
    for (std::uint64_t x = 0; x < p; ++x)
        if (x * x % p == a)
            roots.push_back(x);
    return roots;
}

// q = a^2 + 32 b^2? Double loop.
inline bool representable_a2_32b2(std::uint64_t q)
{
    for (std::uint64_t b = 0; 32 * b * b <= q; ++b)
        for (std::uint64_t a = 0; a * a + 32 * b * b <= q; ++a)
            if (a * a + 32 * b * b == q)
                return true;
    return false;
}

inline std::vector<std::uint64_t> primes_below(std::uint64_t n)
{
    std::vector<bool> composite(n, false);
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 2; i < n; ++i) {
        if (!composite[i]) {
            out.push_back(i);
            for (std::uint64_t j = i * i; j < n; j += i)
                composite[j] = true;
        }
    }
    return out;
}

inline std::vector<std::uint64_t> squarefree_below(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d < n; ++d) {
        bool sf = true;
        for (std::uint64_t k = 2; k * k <= d; ++k)
            if (d % (k * k) == 0) {
                sf = false;
                break;
            }
        if (sf)
            out.push_back(d);
    }
    return out;
}

// Minimal unit > 1 of the maximal order of Q(sqrt(m)), by scanning the
// sqrt(m)-coordinate upward; nullopt when the scan passes `cap` without a
// hit (a few m just below 200 have units with ten-digit coordinates).
struct SmallUnit {
    std::uint64_t a, b;
    int denom;
    int norm;
};

inline std::optional<SmallUnit> brute_force_fundamental_unit(std::uint64_t m,
                                                             std::uint64_t cap = 20000000)
{
    using u128 = unsigned __int128;
    auto usqrt = [](u128 n) {
        auto r = static_cast<u128>(sqrtl(static_cast<long double>(n)));
        while (r > 0 && r * r > n)
            --r;
        while ((r + 1) * (r + 1) <= n)
            ++r;
        return r;
    };
    const u128 unit_gap = (m % 4 == 1) ? 4 : 1;
    for (std::uint64_t b = 1; b <= cap; ++b) {
        for (int sign : {-1, +1}) {
            // candidates (A + b sqrt(m))/denom with A^2 - m b^2 = sign*gap
            const u128 t = static_cast<u128>(m) * b * b;
            const u128 target = sign < 0 ? t - unit_gap : t + unit_gap;
            const u128 A = usqrt(target);
            if (A * A != target)
                continue;
            const auto a = static_cast<std::uint64_t>(A);
            if (m % 4 == 1) {
                if (a % 2 != b % 2)
                    continue;
                if (a % 2 == 0)
                    return SmallUnit{a / 2, b / 2, 1, sign};
                return SmallUnit{a, b, 2, sign};
            }
            return SmallUnit{a, b, 1, sign};
        }
    }
    return std::nullopt;
}

// Wide class number by the analytic formula
//   h = -sum_{a=1}^{D-1} chi_D(a) log sin(pi a / D) / (2 log eps),
// evaluated in floating point and rounded. chi_D is computed from scratch.
inline long analytic_class_number(std::uint64_t m)
{
    using biqeuclid::jacobi;
    const Integer D_big = biqeuclid::conductor_quad(Integer(m));
    const auto D = static_cast<std::uint64_t>(D_big);

    auto chi = [&](std::uint64_t n) -> int {
        int val = 1;
        std::uint64_t rest = n;
        for (std::uint64_t p = 2; p * p <= rest; ++p) {
            while (rest % p == 0) {
                rest /= p;
                if (p == 2) {
                    if (D % 2 == 0)
                        return 0;
                    const auto r = D % 8;
                    val *= (r == 1 || r == 7) ? 1 : -1;
                } else {
                    const int j = jacobi(Integer(D % p), Integer(p)).value();
                    if (j == 0)
                        return 0;
                    val *= j;
                }
            }
        }
        if (rest > 1) {
            if (rest == 2) {
                if (D % 2 == 0)
                    return 0;
                const auto r = D % 8;
                val *= (r == 1 || r == 7) ? 1 : -1;
            } else {
                const int j = jacobi(Integer(D % rest), Integer(rest)).value();
                if (j == 0)
                    return 0;
                val *= j;
            }
        }
        return val;
    };

    double sum = 0.0;
    const double pi = std::acos(-1.0);
    for (std::uint64_t a = 1; a < D; ++a) {
        const int c = chi(a);
        if (c != 0)
            sum -= c * std::log(std::sin(pi * static_cast<double>(a) / static_cast<double>(D)));
    }

    const biqeuclid::QuadUnit eps = biqeuclid::fundamental_unit(Integer(m));
    const double eps_val =
        (static_cast<double>(eps.a) + static_cast<double>(eps.b) * std::sqrt(static_cast<double>(m))) /
        eps.denom;
    return std::lround(sum / (2.0 * std::log(eps_val)));
}

} // namespace oracles

#endif // BIQEUCLID_TESTS_ORACLES_HPP
