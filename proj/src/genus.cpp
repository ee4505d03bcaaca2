#include "biqeuclid/genus.hpp"

#include "biqeuclid/quadfield.hpp"

#include <array>

namespace biqeuclid {

BiquadTriple::BiquadTriple(Integer p1, Integer q1, Integer q2)
    : p1_(std::move(p1)), q1_(std::move(q1)), q2_(std::move(q2))
{
    for (const Integer* x : {&p1_, &q1_, &q2_})
        if (!is_prime(*x))
            throw std::invalid_argument("BiquadTriple: entries must be prime");
    if (p1_ == q1_ || p1_ == q2_ || q1_ == q2_)
        throw std::invalid_argument("BiquadTriple: entries must be distinct");
}

namespace {

int sym(const Integer& a, const Integer& q) { return jacobi(a, q).value(); }

int unit_sym(const Integer& p1, const Integer& q)
{
    return unit_residue_symbol(p1, q).value();
}

struct Match {
    int bullet;
    Integer first, second;
};

/* Case 1: p1 = 1 (mod 4), d = q1*q2 = 1 (mod 4). */
std::optional<Match> case1(const Integer& p1, const Integer& x, const Integer& y)
{
    if (x % 4 != 1 || y % 4 != 1)
        return std::nullopt;
    if (sym(p1, x) == -1 && sym(p1, y) == -1)
        return Match{1, x, y};
    if (sym(p1, x) == 1 && sym(p1, y) == -1 && unit_sym(p1, x) == -1)
        return Match{2, x, y};
    return std::nullopt;
}

/* Case 2: p1 = 1 (mod 4), d = 2q; conditions are on the odd prime q. */
std::optional<Match> case2(const Integer& p1, const Integer& q)
{
    if (p1 % 8 != 5)
        return std::nullopt;
    if (q % 4 != 1)
        return std::nullopt;
    if (sym(p1, q) == -1)
        return Match{1, q, Integer(2)};
    if (sym(p1, q) == 1 && unit_sym(p1, q) == -1)
        return Match{2, q, Integer(2)};
    return std::nullopt;
}

/* Case 3: p1 = 1 (mod 4), d = q1*q2 = 3 (mod 4). */
std::optional<Match> case3(const Integer& p1, const Integer& x, const Integer& y)
{
    const bool both_nonresidue = sym(p1, x) == -1 && sym(p1, y) == -1;
    if (p1 % 8 == 1 && both_nonresidue)
        return Match{1, x, y};
    if (p1 % 8 == 5 && both_nonresidue)
        return Match{2, x, y};
    if (p1 % 8 == 5 && sym(p1, x) == 1 && sym(p1, y) == -1 && x % 4 == 3)
        return Match{3, x, y};
    return std::nullopt;
}

/* Case 4: p1 = 2. */
std::optional<Match> case4(const Integer& x, const Integer& y)
{
    if (x % 8 == 5 && y % 8 == 5)
        return Match{1, x, y};
    if (x % 8 == 1 && y % 8 == 5 && !is_a2_plus_32b2(x))
        return Match{2, x, y};
    if (x % 8 == 5 && y % 8 == 3)
        return Match{3, x, y};
    if (x % 8 == 7 && y % 8 == 5)
        return Match{4, x, y};
    return std::nullopt;
}

/* Case 5: p1 = 3 (mod 4), d odd. */
std::optional<Match> case5(const Integer& p1, const Integer& x, const Integer& y)
{
    if (sym(p1, x) == -1 && sym(p1, y) == -1)
        return Match{1, x, y};
    if (sym(p1, x) == 1 && sym(p1, y) == -1 && x % 8 != 1)
        return Match{2, x, y};
    if (sym(p1, x) == 1 && sym(p1, y) == 1 && x % 8 != 1 && y % 8 != 1) {
        const Integer d8 = (x * y) % 8;
        if (d8 == 5 || d8 == 7)
            return Match{3, x, y};
    }
    return std::nullopt;
}

/* Case 6: p1 = 3 (mod 4), d = 2q. */
std::optional<Match> case6(const Integer& p1, const Integer& q)
{
    if (sym(p1, q) == -1)
        return Match{1, q, Integer(2)};
    if (sym(p1, q) == 1 && q % 8 != 1)
        return Match{2, q, Integer(2)};
    return std::nullopt;
}

} // namespace

GenusVerdict classify(const BiquadTriple& t)
{
    const Integer& p1 = t.p1();
    const Integer& q1 = t.q1();
    const Integer& q2 = t.q2();

    GenusVerdict verdict;
    verdict.orientation = {q1, q2};

    const bool d_even = (q1 == 2 || q2 == 2);
    const Integer odd_q = (q1 == 2) ? q2 : q1;

    std::optional<Match> match;
    if (p1 == 2) {
        verdict.case_label = 4;
        match = case4(q1, q2);
        if (!match)
            match = case4(q2, q1);
    } else if (p1 % 4 == 1) {
        if (d_even) {
            verdict.case_label = 2;
            match = case2(p1, odd_q);
        } else if (t.d() % 4 == 1) {
            verdict.case_label = 1;
            match = case1(p1, q1, q2);
            if (!match)
                match = case1(p1, q2, q1);
        } else {
            verdict.case_label = 3;
            match = case3(p1, q1, q2);
            if (!match)
                match = case3(p1, q2, q1);
        }
    } else {
        if (d_even) {
            verdict.case_label = 6;
            match = case6(p1, odd_q);
        } else {
            verdict.case_label = 5;
            match = case5(p1, q1, q2);
            if (!match)
                match = case5(p1, q2, q1);
        }
    }

    if (match) {
        verdict.elementary = true;
        verdict.bullet = match->bullet;
        verdict.orientation = {match->first, match->second};
    }
    return verdict;
}

} // namespace biqeuclid
