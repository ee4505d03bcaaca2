#include "biqeuclid/quadfield.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <vector>

namespace mp = boost::multiprecision;

namespace biqeuclid {

namespace {

void require_radicand(const Integer& m)
{
    if (m <= 1)
        throw std::invalid_argument("radicand must be > 1");
    if (!detail::is_squarefree(m))
        throw std::invalid_argument("radicand must be squarefree");
}

// ---------------------------------------------------------------------------
// Continued fractions of w = sqrt(m) or (1+sqrt(m))/2.
//
// The complete quotients are (P + sqrt(m))/Q with Q | m - P^2; the pair
// sequence (P,Q) is eventually periodic and the whole tail is reduced.
// ---------------------------------------------------------------------------

struct CfTail {
    Integer P0, Q0;            // start of the purely periodic tail
    std::vector<Integer> period; // partial quotients of one full period
};

CfTail cf_periodic_tail(const Integer& m)
{
    const Integer s = isqrt_floor(m);
    Integer P, Q;
    if (m % 4 == 1) {
        P = 1;
        Q = 2;
    } else {
        P = 0;
        Q = 1;
    }
    std::map<std::pair<Integer, Integer>, std::size_t> seen;
    std::vector<Integer> quots;
    std::vector<std::pair<Integer, Integer>> states;
    for (;;) {
        auto key = std::make_pair(P, Q);
        auto it = seen.find(key);
        if (it != seen.end()) {
            CfTail t;
            t.P0 = states[it->second].first;
            t.Q0 = states[it->second].second;
            t.period.assign(quots.begin() + it->second, quots.end());
            return t;
        }
        seen.emplace(key, quots.size());
        states.push_back(key);
        Integer a = (P + s) / Q;
        Integer Pn = a * Q - P;
        Integer Qn = (m - Pn * Pn) / Q;
        quots.push_back(a);
        P = Pn;
        Q = Qn;
    }
}

std::uint64_t isqrt_u64(std::uint64_t n)
{
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n)
        --r;
    while ((r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

// Period length only, on 64-bit words (P, Q < 2*sqrt(m) both fit).
std::size_t cf_period_length_u64(std::uint64_t m)
{
    const std::uint64_t s = isqrt_u64(m);
    std::uint64_t P, Q;
    if (m % 4 == 1) {
        P = 1;
        Q = 2;
    } else {
        P = 0;
        Q = 1;
    }
    std::unordered_map<std::uint64_t, std::size_t> seen;
    std::size_t k = 0;
    for (;;) {
        const std::uint64_t key = (P << 32) | Q;
        auto it = seen.find(key);
        if (it != seen.end())
            return k - it->second;
        seen.emplace(key, k);
        std::uint64_t a = (P + s) / Q;
        std::uint64_t Pn = a * Q - P;
        std::uint64_t Qn = (m - Pn * Pn) / Q;
        P = Pn;
        Q = Qn;
        ++k;
    }
}

std::size_t cf_period_length(const Integer& m)
{
    if (m < (Integer(1) << 62))
        return cf_period_length_u64(static_cast<std::uint64_t>(m));
    const CfTail t = cf_periodic_tail(m);
    return t.period.size();
}

QuadUnit unit_from_cf(const Integer& m)
{
    const CfTail t = cf_periodic_tail(m);
    // One full period of the tail xi = (P0 + sqrt(m))/Q0 gives the matrix
    // [[p,p'],[q,q']] with xi = (p*xi+p')/(q*xi+q'); eta = q*xi + q' is the
    // fundamental unit, of norm (-1)^period.
    Integer p = 1, pp = 0, q = 0, qq = 1;
    for (const Integer& a : t.period) {
        Integer np = a * p + pp;
        Integer nq = a * q + qq;
        pp = p;
        qq = q;
        p = np;
        q = nq;
    }
    const Integer num_a = q * t.P0 + qq * t.Q0;
    const Integer num_b = q;
    const Integer den = t.Q0;

    QuadUnit u;
    u.m = m;
    u.norm = (t.period.size() % 2 == 0) ? +1 : -1;
    if (m % 4 == 1) {
        Integer a2 = 2 * num_a, b2 = 2 * num_b;
        if (a2 % den != 0 || b2 % den != 0)
            throw std::logic_error("fundamental unit not integral over Z[(1+sqrt(m))/2]");
        a2 /= den;
        b2 /= den;
        if ((a2 - b2) % 2 != 0)
            throw std::logic_error("fundamental unit coordinate parity mismatch");
        if (a2 % 2 == 0) {
            u.a = a2 / 2;
            u.b = b2 / 2;
            u.denom = 1;
        } else {
            u.a = a2;
            u.b = b2;
            u.denom = 2;
        }
    } else {
        if (num_a % den != 0 || num_b % den != 0)
            throw std::logic_error("fundamental unit not integral over Z[sqrt(m)]");
        u.a = num_a / den;
        u.b = num_b / den;
        u.denom = 1;
    }
    if (u.a < 1 || u.b < 1)
        throw std::logic_error("fundamental unit has nonpositive coordinates");
    if (u.a * u.a - m * u.b * u.b != Integer(u.norm) * u.denom * u.denom)
        throw std::logic_error("fundamental unit fails its norm identity");
    return u;
}

// ---------------------------------------------------------------------------
// Reduced indefinite binary quadratic forms of discriminant D.
//
// (a,b,c) with b^2 - 4ac = D is reduced iff |sqrt(D) - 2|a|| < b < sqrt(D);
// in integers with s = floor(sqrt(D)): 0 < b <= s and s+1-b <= 2|a| <= s+b.
// The narrow class number is the number of rho-cycles of reduced primitive
// forms.
// ---------------------------------------------------------------------------

std::vector<std::uint64_t>& prime_list(std::uint64_t limit)
{
    thread_local std::vector<std::uint64_t> primes;
    thread_local std::uint64_t sieved_to = 1;
    constexpr std::uint64_t kCap = 2'000'000;
    std::uint64_t want = std::min(limit, kCap);
    if (want > sieved_to) {
        want = std::max<std::uint64_t>(want, 1024);
        std::vector<bool> composite(want + 1, false);
        primes.clear();
        for (std::uint64_t i = 2; i <= want; ++i) {
            if (!composite[i]) {
                primes.push_back(i);
                for (std::uint64_t j = i * i; j <= want; j += i)
                    composite[j] = true;
            }
        }
        sieved_to = want;
    }
    return primes;
}

// All positive divisors of n (64-bit path).
void divisors_u64(std::uint64_t n, std::vector<std::uint64_t>& out)
{
    out.clear();
    out.push_back(1);
    const auto& primes = prime_list(isqrt_u64(n));
    auto push_prime_power = [&](std::uint64_t p, int e) {
        const std::size_t base = out.size();
        std::uint64_t pe = 1;
        for (int i = 1; i <= e; ++i) {
            pe *= p;
            for (std::size_t j = 0; j < base; ++j)
                out.push_back(out[j] * pe);
        }
    };
    for (std::uint64_t p : primes) {
        if (p * p > n)
            break;
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            push_prime_power(p, e);
        }
    }
    if (n > 1) {
        // Either prime, or has factors above the cached prime cap.
        std::uint64_t q = primes.empty() ? 2 : primes.back() + 1;
        if (q % 2 == 0)
            ++q;
        while (q * q <= n) {
            if (n % q == 0) {
                int e = 0;
                while (n % q == 0) {
                    n /= q;
                    ++e;
                }
                push_prime_power(q, e);
            }
            q += 2;
        }
        if (n > 1)
            push_prime_power(n, 1);
    }
}

std::uint64_t gcd3_u64(std::uint64_t a, std::uint64_t b, std::uint64_t c)
{
    return std::gcd(std::gcd(a, b), c);
}

Integer narrow_class_number_u64(std::uint64_t D)
{
    const std::int64_t s = static_cast<std::int64_t>(isqrt_u64(D));
    struct Form {
        std::int64_t a, b;
    };
    std::vector<Form> forms;
    std::map<std::pair<std::int64_t, std::int64_t>, std::size_t> index;
    std::vector<std::uint64_t> divs;

    for (std::int64_t b = (D % 2 == 0) ? 2 : 1; b <= s; b += 2) {
        const std::uint64_t n = (D - static_cast<std::uint64_t>(b) * b) / 4;
        if (n == 0)
            continue;
        divisors_u64(n, divs);
        for (std::uint64_t d : divs) {
            const std::uint64_t twice = 2 * d;
            if (twice < static_cast<std::uint64_t>(s + 1 - b) || twice > static_cast<std::uint64_t>(s + b))
                continue;
            if (gcd3_u64(d, static_cast<std::uint64_t>(b), n / d) != 1)
                continue;
            const std::int64_t a = static_cast<std::int64_t>(d);
            forms.push_back({a, b});
            forms.push_back({-a, b});
        }
    }
    std::sort(forms.begin(), forms.end(), [](const Form& x, const Form& y) {
        return std::tie(x.a, x.b) < std::tie(y.a, y.b);
    });
    for (std::size_t i = 0; i < forms.size(); ++i)
        index.emplace(std::make_pair(forms[i].a, forms[i].b), i);

    auto c_of = [&](const Form& f) {
        return (static_cast<std::int64_t>(f.b) * f.b - static_cast<std::int64_t>(D)) / (4 * f.a);
    };
    auto rho = [&](const Form& f) -> Form {
        const std::int64_t c = c_of(f);
        const std::int64_t ca = c < 0 ? -c : c;
        std::int64_t r = s - ((s + f.b) % (2 * ca) + 2 * ca) % (2 * ca);
        return Form{c, r};
    };

    std::vector<bool> visited(forms.size(), false);
    Integer cycles = 0;
    for (std::size_t i = 0; i < forms.size(); ++i) {
        if (visited[i])
            continue;
        ++cycles;
        Form f = forms[i];
        for (;;) {
            auto it = index.find(std::make_pair(f.a, f.b));
            if (it == index.end())
                throw std::logic_error("rho left the reduced-form list");
            if (visited[it->second])
                break;
            visited[it->second] = true;
            f = rho(f);
        }
    }
    return cycles;
}

// Arbitrary-precision fallback, same enumeration with plain trial division.
Integer narrow_class_number_big(const Integer& D)
{
    const Integer s = isqrt_floor(D);
    struct Form {
        Integer a, b;
    };
    std::vector<Form> forms;
    std::map<std::pair<Integer, Integer>, std::size_t> index;

    for (Integer b = (D % 2 == 0) ? 2 : 1; b <= s; b += 2) {
        const Integer n = (D - b * b) / 4;
        if (n == 0)
            continue;
        for (Integer d = 1; d * d <= n; ++d) {
            if (n % d != 0)
                continue;
            for (const Integer& e : {d, Integer(n / d)}) {
                Integer twice = 2 * e;
                if (twice < s + 1 - b || twice > s + b)
                    continue;
                if (mp::gcd(mp::gcd(e, b), n / e) != 1)
                    continue;
                auto key = std::make_pair(e, b);
                if (index.count(key))
                    continue;
                index.emplace(key, forms.size());
                forms.push_back({e, b});
                index.emplace(std::make_pair(-e, b), forms.size());
                forms.push_back({-e, b});
            }
        }
    }

    auto rho = [&](const Form& f) -> Form {
        const Integer c = (f.b * f.b - D) / (4 * f.a);
        const Integer ca = c < 0 ? -c : c;
        Integer r = s - mod_floor(s + f.b, 2 * ca);
        return Form{c, r};
    };

    std::vector<bool> visited(forms.size(), false);
    Integer cycles = 0;
    for (std::size_t i = 0; i < forms.size(); ++i) {
        if (visited[i])
            continue;
        ++cycles;
        Form f = forms[i];
        for (;;) {
            auto it = index.find(std::make_pair(f.a, f.b));
            if (it == index.end())
                throw std::logic_error("rho left the reduced-form list");
            if (visited[it->second])
                break;
            visited[it->second] = true;
            f = rho(f);
        }
    }
    return cycles;
}

// ---------------------------------------------------------------------------
// Memoization. Results are pure; scans revisit subfields constantly.
// ---------------------------------------------------------------------------

std::mutex g_cache_mutex;
std::map<Integer, QuadFieldData> g_field_cache;
std::map<Integer, QuadUnit> g_unit_cache;
std::map<Integer, int> g_norm_cache;

} // namespace

std::string to_string(const QuadUnit& u)
{
    std::ostringstream os;
    os << "(" << u.a << "+" << u.b << "*sqrt(" << u.m << "))/" << u.denom;
    return os.str();
}

Integer conductor_quad(const Integer& m)
{
    require_radicand(m);
    return (m % 4 == 1) ? m : 4 * m;
}

QuadUnit fundamental_unit(const Integer& m)
{
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        auto it = g_unit_cache.find(m);
        if (it != g_unit_cache.end())
            return it->second;
    }
    require_radicand(m);
    QuadUnit u = unit_from_cf(m);
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    return g_unit_cache.emplace(m, std::move(u)).first->second;
}

int fundamental_unit_norm(const Integer& m)
{
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        auto it = g_norm_cache.find(m);
        if (it != g_norm_cache.end())
            return it->second;
    }
    require_radicand(m);
    const int norm = (cf_period_length(m) % 2 == 0) ? +1 : -1;
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    return g_norm_cache.emplace(m, norm).first->second;
}

Integer narrow_class_number(const Integer& m)
{
    return quad_field_data(m).h_narrow;
}

Integer class_number(const Integer& m)
{
    return quad_field_data(m).h;
}

QuadFieldData quad_field_data(const Integer& m)
{
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        auto it = g_field_cache.find(m);
        if (it != g_field_cache.end())
            return it->second;
    }
    QuadFieldData data;
    data.m = m;
    data.D = conductor_quad(m);
    data.h_narrow = (data.D < (Integer(1) << 61))
                        ? narrow_class_number_u64(static_cast<std::uint64_t>(data.D))
                        : narrow_class_number_big(data.D);
    if (fundamental_unit_norm(m) == -1) {
        data.h = data.h_narrow;
    } else {
        if (data.h_narrow % 2 != 0)
            throw std::logic_error("narrow class number must be even when norm(eps) = +1");
        data.h = data.h_narrow / 2;
    }
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    return g_field_cache.emplace(m, std::move(data)).first->second;
}

SymbolValue unit_residue_symbol(const Integer& p1, const Integer& q)
{
    if (!is_prime(p1) || p1 % 4 != 1)
        throw std::invalid_argument("unit_residue_symbol: p1 must be a prime = 1 (mod 4)");
    if (!is_prime(q) || q == 2)
        throw std::invalid_argument("unit_residue_symbol: q must be an odd prime");
    if (q % 4 != 1)
        throw std::invalid_argument(
            "unit_residue_symbol: q = 3 (mod 4) makes the value depend on the root choice");
    if (q == p1)
        throw std::invalid_argument("unit_residue_symbol: q must not ramify in Q(sqrt(p1))");
    if (!(jacobi(p1, q) == 1))
        throw std::invalid_argument("unit_residue_symbol: q must split in Q(sqrt(p1))");

    const QuadUnit eps = fundamental_unit(p1);
    const Integer s = *sqrt_mod_prime(p1, q);
    Integer val = mod_floor(eps.a + eps.b * s, q);
    val = (val * mod_inverse(Integer(eps.denom), q)) % q;
    SymbolValue sym = jacobi(val, q);
    if (sym.is_zero())
        throw std::logic_error("unit residue symbol vanished for a unit argument");
    return sym;
}

} // namespace biqeuclid
