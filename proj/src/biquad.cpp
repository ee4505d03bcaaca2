#include "biqeuclid/biquad.hpp"

#include "biqeuclid/quadfield.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace mp = boost::multiprecision;

namespace biqeuclid {

namespace {

void require_field_pair(const Integer& m1, const Integer& m2)
{
    if (m1 <= 1 || m2 <= 1)
        throw std::invalid_argument("biquadratic radicands must be > 1");
    if (m1 == m2)
        throw std::invalid_argument("biquadratic radicands must be distinct");
    if (!detail::is_squarefree(m1) || !detail::is_squarefree(m2))
        throw std::invalid_argument("biquadratic radicands must be squarefree");
}

// ---------------------------------------------------------------------------
// Exact rational intervals; just enough for sign decisions and root bounds.
// ---------------------------------------------------------------------------

struct RatInterval {
    Rational lo, hi;

    static RatInterval point(const Rational& x) { return {x, x}; }

    RatInterval operator+(const RatInterval& o) const { return {lo + o.lo, hi + o.hi}; }
    RatInterval operator-(const RatInterval& o) const { return {lo - o.hi, hi - o.lo}; }
    RatInterval operator*(const RatInterval& o) const
    {
        const Rational a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
        return {std::min(std::min(a, b), std::min(c, d)),
                std::max(std::max(a, b), std::max(c, d))};
    }
    RatInterval operator-() const { return {-hi, -lo}; }

    bool positive() const { return lo > 0; }
    bool negative() const { return hi < 0; }
    Rational width() const { return hi - lo; }
};

RatInterval scale(const Rational& c, const RatInterval& x)
{
    if (c >= 0)
        return {c * x.lo, c * x.hi};
    return {c * x.hi, c * x.lo};
}

// Quotient by a strictly positive interval.
RatInterval divide_positive(const RatInterval& x, const RatInterval& d)
{
    const Rational a = x.lo / d.lo, b = x.lo / d.hi, c = x.hi / d.lo, e = x.hi / d.hi;
    return {std::min(std::min(a, b), std::min(c, e)), std::max(std::max(a, b), std::max(c, e))};
}

// Enclosure of sqrt(r) for r >= 0 with dyadic endpoints at B fractional bits.
RatInterval sqrt_interval(const Rational& r_lo, const Rational& r_hi, unsigned B)
{
    const Integer one_shift = Integer(1) << B;
    Integer lo_scaled = (mp::numerator(r_lo) << (2 * B)) / mp::denominator(r_lo);
    if (lo_scaled < 0)
        lo_scaled = 0;
    const Integer k_lo = isqrt_floor(lo_scaled);
    const Integer hi_scaled = (mp::numerator(r_hi) << (2 * B)) / mp::denominator(r_hi) + 1;
    const Integer k_hi = isqrt_floor(hi_scaled) + 1;
    return {Rational(k_lo, one_shift), Rational(k_hi, one_shift)};
}

RatInterval sqrt_interval(const RatInterval& r, unsigned B)
{
    return sqrt_interval(r.lo, r.hi, B);
}

Integer floor_rational(const Rational& r)
{
    Integer num = mp::numerator(r), den = mp::denominator(r);
    Integer q = num / den;
    if (num % den != 0 && num < 0)
        --q;
    return q;
}

// ---------------------------------------------------------------------------

struct EmbeddingBasis {
    RatInterval s1, s2, s3; // enclosures of sqrt(m1), sqrt(m2), sqrt(m3)
};

EmbeddingBasis basis_at(const Integer& m1, const Integer& m2, const Integer& m3, unsigned B)
{
    return {sqrt_interval(Rational(m1), Rational(m1), B),
            sqrt_interval(Rational(m2), Rational(m2), B),
            sqrt_interval(Rational(m3), Rational(m3), B)};
}

// Embedding order: (s1,s2) = (+,+), (+,-), (-,+), (-,-).
constexpr int kSigns[4][2] = {{+1, +1}, {+1, -1}, {-1, +1}, {-1, -1}};

std::array<RatInterval, 4> embeddings_at(const BiquadElement& x, const EmbeddingBasis& basis)
{
    const auto& c = x.coords();
    std::array<RatInterval, 4> out;
    for (int i = 0; i < 4; ++i) {
        const int s1 = kSigns[i][0], s2 = kSigns[i][1];
        RatInterval v = RatInterval::point(c[0]);
        v = v + scale(c[1] * s1, basis.s1);
        v = v + scale(c[2] * s2, basis.s2);
        v = v + scale(c[3] * (s1 * s2), basis.s3);
        out[i] = v;
    }
    return out;
}

unsigned coords_bits(const BiquadElement& x)
{
    unsigned bits = 1;
    for (const Rational& c : x.coords()) {
        bits = std::max(bits, static_cast<unsigned>(mp::msb(mp::numerator(c) == 0
                                                                ? Integer(1)
                                                                : mp::abs(mp::numerator(c))) +
                                                    1));
        bits = std::max(bits, static_cast<unsigned>(mp::msb(mp::denominator(c)) + 1));
    }
    return bits;
}

constexpr unsigned kPrecisionCap = 1u << 22;

} // namespace

BiquadElement::BiquadElement(Integer m1, Integer m2, std::array<Rational, 4> coords)
    : m1_(std::move(m1)), m2_(std::move(m2)), coords_(std::move(coords))
{
    require_field_pair(m1_, m2_);
    g_ = mp::gcd(m1_, m2_);
    m3_ = (m1_ / g_) * (m2_ / g_);
}

BiquadElement BiquadElement::from_rational(Integer m1, Integer m2, const Rational& x)
{
    return BiquadElement(std::move(m1), std::move(m2), {x, Rational(0), Rational(0), Rational(0)});
}

bool BiquadElement::is_zero() const
{
    return coords_[0] == 0 && coords_[1] == 0 && coords_[2] == 0 && coords_[3] == 0;
}

BiquadElement operator*(const BiquadElement& x, const BiquadElement& y)
{
    if (x.m1_ != y.m1_ || x.m2_ != y.m2_)
        throw std::invalid_argument("BiquadElement: operands lie in different fields");
    const auto& a = x.coords_;
    const auto& b = y.coords_;
    const Integer& m1 = x.m1_;
    const Integer& m2 = x.m2_;
    const Integer& m3 = x.m3_;
    const Integer& g = x.g_;
    // sqrt(m1)sqrt(m2) = g sqrt(m3), sqrt(m1)sqrt(m3) = (m1/g) sqrt(m2),
    // sqrt(m2)sqrt(m3) = (m2/g) sqrt(m1)
    std::array<Rational, 4> z;
    z[0] = a[0] * b[0] + Rational(m1) * a[1] * b[1] + Rational(m2) * a[2] * b[2] +
           Rational(m3) * a[3] * b[3];
    z[1] = a[0] * b[1] + a[1] * b[0] + Rational(m2 / g) * (a[2] * b[3] + a[3] * b[2]);
    z[2] = a[0] * b[2] + a[2] * b[0] + Rational(m1 / g) * (a[1] * b[3] + a[3] * b[1]);
    z[3] = a[0] * b[3] + a[3] * b[0] + Rational(g) * (a[1] * b[2] + a[2] * b[1]);
    return BiquadElement(m1, m2, std::move(z));
}

BiquadElement operator-(const BiquadElement& x)
{
    auto c = x.coords_;
    for (Rational& v : c)
        v = -v;
    return BiquadElement(x.m1_, x.m2_, std::move(c));
}

bool operator==(const BiquadElement& x, const BiquadElement& y)
{
    return x.m1_ == y.m1_ && x.m2_ == y.m2_ && x.coords_ == y.coords_;
}

std::array<int, 4> embedding_signs(const BiquadElement& x)
{
    if (x.is_zero())
        throw std::invalid_argument("embedding_signs: zero element has no sign");
    for (unsigned B = std::max(64u, 2 * coords_bits(x)); B <= kPrecisionCap; B *= 2) {
        const EmbeddingBasis basis = basis_at(x.m1(), x.m2(), x.m3(), B);
        const auto emb = embeddings_at(x, basis);
        std::array<int, 4> signs{};
        bool decided = true;
        for (int i = 0; i < 4; ++i) {
            if (emb[i].positive())
                signs[i] = +1;
            else if (emb[i].negative())
                signs[i] = -1;
            else
                decided = false;
        }
        if (decided)
            return signs;
    }
    throw std::logic_error("embedding_signs: precision cap exceeded");
}

namespace {

// Exact verification target: does y*y == x for the candidate grid coords?
bool verify_root(const BiquadElement& x, const std::array<Rational, 4>& root_coords)
{
    const BiquadElement y(x.m1(), x.m2(), root_coords);
    return (y * y) == x;
}

enum class PatternState { open, dead };

} // namespace

bool is_square_in_k(const BiquadElement& x)
{
    if (x.is_zero())
        return true;

    Integer scale_den = 1;
    for (const Rational& c : x.coords()) {
        const Integer den = mp::denominator(c);
        if (4 % den != 0)
            throw std::invalid_argument("is_square_in_k: coordinate denominators must divide 4");
        scale_den = mp::lcm(scale_den, den);
    }
    // X = (scale*x) has integer coordinates, hence is an algebraic integer;
    // any square root of X lies on the (1/4)-integer coordinate grid.
    auto scaled = x.coords();
    for (Rational& c : scaled)
        c *= Rational(scale_den * scale_den);
    const BiquadElement X(x.m1(), x.m2(), scaled);

    const auto signs = embedding_signs(X);
    for (int s : signs)
        if (s < 0)
            throw std::domain_error("is_square_in_k: element has a negative embedding");

    std::array<PatternState, 8> state;
    state.fill(PatternState::open);

    for (unsigned B = std::max(64u, 2 * coords_bits(X)); B <= kPrecisionCap; B *= 2) {
        const EmbeddingBasis basis = basis_at(X.m1(), X.m2(), X.m3(), B);
        const auto emb = embeddings_at(X, basis);
        std::array<RatInterval, 4> root_mag;
        bool roots_ok = true;
        for (int i = 0; i < 4; ++i) {
            if (!emb[i].positive()) {
                roots_ok = false;
                break;
            }
            root_mag[i] = sqrt_interval(emb[i], B);
        }
        if (!roots_ok)
            continue;

        const RatInterval four = RatInterval::point(Rational(4));
        const std::array<RatInterval, 3> denoms = {four * basis.s1, four * basis.s2,
                                                   four * basis.s3};

        bool any_open = false;
        for (int pat = 0; pat < 8; ++pat) {
            if (state[pat] == PatternState::dead)
                continue;
            // embedding 0 of the root is taken positive; bits of pat give the
            // signs of embeddings 1..3
            std::array<RatInterval, 4> e;
            e[0] = root_mag[0];
            for (int i = 1; i < 4; ++i)
                e[i] = (pat >> (i - 1)) & 1 ? -root_mag[i] : root_mag[i];

            std::array<RatInterval, 4> comb;
            comb[0] = scale(Rational(1, 4), e[0] + e[1] + e[2] + e[3]);
            comb[1] = divide_positive(e[0] + e[1] - e[2] - e[3], denoms[0]);
            comb[2] = divide_positive(e[0] - e[1] + e[2] - e[3], denoms[1]);
            comb[3] = divide_positive(e[0] - e[1] - e[2] + e[3], denoms[2]);

            bool narrow = true;
            for (const auto& c : comb)
                if (!(c.width() < Rational(1, 4)))
                    narrow = false;
            if (!narrow) {
                any_open = true;
                continue;
            }

            // Each interval now holds at most one point of the (1/4)-grid;
            // if the root exists under this sign pattern it must be there.
            std::array<Rational, 4> candidate;
            bool have_candidate = true;
            for (int i = 0; i < 4; ++i) {
                const Integer k = floor_rational(comb[i].hi * 4);
                const Rational g = Rational(k, 4);
                if (g < comb[i].lo) {
                    have_candidate = false;
                    break;
                }
                candidate[i] = g;
            }
            if (have_candidate && verify_root(X, candidate))
                return true;
            state[pat] = PatternState::dead;
        }
        if (!any_open)
            return false;
    }
    throw std::logic_error("is_square_in_k: precision cap exceeded");
}

namespace {

BiquadElement unit_as_element(const Integer& m1, const Integer& m2, int slot, const QuadUnit& u)
{
    std::array<Rational, 4> c{Rational(u.a, u.denom), Rational(0), Rational(0), Rational(0)};
    c[slot] = Rational(u.b, u.denom);
    return BiquadElement(m1, m2, c);
}

int f2_rank(const std::vector<std::array<int, 3>>& vecs)
{
    std::array<unsigned, 3> pivot{};
    int rank = 0;
    for (const auto& v : vecs) {
        unsigned w = static_cast<unsigned>(v[0]) | (static_cast<unsigned>(v[1]) << 1) |
                     (static_cast<unsigned>(v[2]) << 2);
        for (int bit = 2; bit >= 0 && w != 0; --bit) {
            if (!(w >> bit & 1))
                continue;
            if (pivot[bit]) {
                w ^= pivot[bit];
            } else {
                pivot[bit] = w;
                ++rank;
                break;
            }
        }
    }
    return rank;
}

} // namespace

namespace {

std::mutex g_unit_index_mutex;
std::map<std::pair<Integer, Integer>, UnitIndexResult> g_unit_index_cache;

} // namespace

UnitIndexResult unit_index(const Integer& m1, const Integer& m2)
{
    {
        std::lock_guard<std::mutex> lock(g_unit_index_mutex);
        auto it = g_unit_index_cache.find({m1, m2});
        if (it != g_unit_index_cache.end())
            return it->second;
    }
    require_field_pair(m1, m2);
    const Integer g = mp::gcd(m1, m2);
    const Integer m3 = (m1 / g) * (m2 / g);

    const std::array<BiquadElement, 3> eps = {
        unit_as_element(m1, m2, 1, fundamental_unit(m1)),
        unit_as_element(m1, m2, 2, fundamental_unit(m2)),
        unit_as_element(m1, m2, 3, fundamental_unit(m3)),
    };

    UnitIndexResult result;
    for (int e0 = 0; e0 <= 1; ++e0)
        for (int e1 = 0; e1 <= 1; ++e1)
            for (int e2 = 0; e2 <= 1; ++e2) {
                if (e0 == 0 && e1 == 0 && e2 == 0)
                    continue;
                BiquadElement z = BiquadElement::from_rational(m1, m2, Rational(1));
                if (e0)
                    z = z * eps[0];
                if (e1)
                    z = z * eps[1];
                if (e2)
                    z = z * eps[2];
                const auto signs = embedding_signs(z);
                const bool all_pos = std::all_of(signs.begin(), signs.end(),
                                                 [](int s) { return s > 0; });
                const bool all_neg = std::all_of(signs.begin(), signs.end(),
                                                 [](int s) { return s < 0; });
                bool square = false;
                if (all_pos)
                    square = is_square_in_k(z);
                else if (all_neg)
                    square = is_square_in_k(-z);
                if (square)
                    result.square_products.push_back({e0, e1, e2});
            }

    // The exponent vectors must form a subgroup of (Z/2)^3 of rank <= 2.
    for (const auto& u : result.square_products)
        for (const auto& v : result.square_products) {
            const std::array<int, 3> w = {u[0] ^ v[0], u[1] ^ v[1], u[2] ^ v[2]};
            if (w == std::array<int, 3>{0, 0, 0})
                continue;
            if (std::find(result.square_products.begin(), result.square_products.end(), w) ==
                result.square_products.end())
                throw std::logic_error("unit_index: square products are not closed");
        }
    const int rank = f2_rank(result.square_products);
    if (rank > 2)
        throw std::logic_error("unit_index: rank exceeds 2");
    result.Q = 1 << rank;
    std::lock_guard<std::mutex> lock(g_unit_index_mutex);
    return g_unit_index_cache.emplace(std::make_pair(m1, m2), std::move(result)).first->second;
}

Integer class_number_biquad(const BiquadTriple& t)
{
    const Integer d = t.d();
    const Integer h0 = class_number(t.p1());
    const Integer h1 = class_number(d);
    const Integer h2 = class_number(t.p1() * d);
    const UnitIndexResult qk = unit_index(t.p1(), d);
    const Integer num = Integer(qk.Q) * h0 * h1 * h2;
    if (num % 4 != 0)
        throw std::logic_error("class_number_biquad: Q*h0*h1*h2 is not divisible by 4");
    return num / 4;
}

} // namespace biqeuclid
