#include "doctest.h"

#include "biqeuclid/quadfield.hpp"

#include "oracles.hpp"

#include <random>

using namespace biqeuclid;

TEST_CASE("conductor_quad")
{
    CHECK(conductor_quad(5) == 5);
    CHECK(conductor_quad(2) == 8);
    CHECK(conductor_quad(35) == 140); // 35 = 3 (mod 4)
    CHECK_THROWS_AS(conductor_quad(12), std::invalid_argument);
    CHECK_THROWS_AS(conductor_quad(1), std::invalid_argument);
    CHECK_THROWS_AS(conductor_quad(0), std::invalid_argument);
}

TEST_CASE("fundamental_unit: pinned values")
{
    const QuadUnit u29 = fundamental_unit(29);
    CHECK(u29.a == 5);
    CHECK(u29.b == 1);
    CHECK(u29.denom == 2);
    CHECK(u29.norm == -1);
    CHECK(to_string(u29) == "(5+1*sqrt(29))/2");

    const QuadUnit u37 = fundamental_unit(37);
    CHECK(u37.a == 6);
    CHECK(u37.b == 1);
    CHECK(u37.denom == 1);
    CHECK(u37.norm == -1);

    const QuadUnit u41 = fundamental_unit(41);
    CHECK(u41.a == 32);
    CHECK(u41.b == 5);
    CHECK(u41.denom == 1);
    CHECK(u41.norm == -1);

    const QuadUnit u2 = fundamental_unit(2);
    CHECK(u2.a == 1);
    CHECK(u2.b == 1);
    CHECK(u2.denom == 1);
    CHECK(u2.norm == -1);

    CHECK_THROWS_AS(fundamental_unit(9), std::invalid_argument);
}

TEST_CASE("fundamental_unit: norm identity and minimality below 200")
{
    for (std::uint64_t m : oracles::squarefree_below(200)) {
        const QuadUnit u = fundamental_unit(m);
        CHECK(u.a * u.a - Integer(m) * u.b * u.b == Integer(u.norm) * u.denom * u.denom);
        const auto expected = oracles::brute_force_fundamental_unit(m);
        if (expected) {
            CHECK(u.a == expected->a);
            CHECK(u.b == expected->b);
            CHECK(u.denom == expected->denom);
            CHECK(u.norm == expected->norm);
        } else {
            // scan capped out: no unit below the cap, and ours is above it
            CHECK(u.b * 2 > Integer(20000000) * u.denom);
        }
        CHECK(fundamental_unit_norm(m) == u.norm);
    }
}

TEST_CASE("fundamental_unit: norm -1 for every prime m = 1 (mod 4) below 10^4")
{
    for (std::uint64_t p : oracles::primes_below(10000))
        if (p % 4 == 1)
            CHECK(fundamental_unit_norm(p) == -1);
}

TEST_CASE("narrow_class_number: pinned values")
{
    CHECK(narrow_class_number(2) == 1);
    CHECK(narrow_class_number(3) == 2);
    CHECK(narrow_class_number(10) == 2);
}

TEST_CASE("class_number: pinned values")
{
    CHECK(class_number(29) == 1);
    CHECK(class_number(65) == 2);
    CHECK(class_number(35) == 2);
}

TEST_CASE("quad_field_data ties h, h+, conductor and unit norm together")
{
    for (std::uint64_t m : oracles::squarefree_below(300)) {
        const QuadFieldData data = quad_field_data(m);
        CHECK(data.D == conductor_quad(m));
        const int norm = fundamental_unit_norm(m);
        if (norm == -1)
            CHECK(data.h_narrow == data.h);
        else
            CHECK(data.h_narrow == 2 * data.h);
    }
}

TEST_CASE("class_number parity matches the odd-class-number classification below 300")
{
    for (std::uint64_t d : oracles::squarefree_below(300)) {
        const auto factors = detail::factorize(Integer(d));
        bool expected_odd = false;
        if (factors.size() == 1 && factors[0].second == 1) {
            expected_odd = true; // d = p
        } else if (factors.size() == 2) {
            const Integer& p = factors[0].first;
            const Integer& q = factors[1].first;
            if (p == 2)
                expected_odd = q % 4 == 3;
            else
                expected_odd = (p % 4 == 3) && (q % 4 == 3);
        }
        CHECK((class_number(d) % 2 == 1) == expected_odd);
    }
}

TEST_CASE("class_number agrees with the analytic formula below 500")
{
    for (std::uint64_t m : oracles::squarefree_below(500))
        CHECK(class_number(m) == oracles::analytic_class_number(m));
}

TEST_CASE("unit_residue_symbol: pinned values")
{
    CHECK(unit_residue_symbol(29, 53) == -1);
    CHECK(unit_residue_symbol(41, 61) == +1);
    CHECK(unit_residue_symbol(37, 53) == -1);
}

TEST_CASE("unit_residue_symbol: rejects bad arguments")
{
    CHECK_THROWS_AS(unit_residue_symbol(29, 7), std::invalid_argument);  // q = 3 (mod 4)
    CHECK_THROWS_AS(unit_residue_symbol(31, 5), std::invalid_argument);  // p1 = 3 (mod 4)
    CHECK_THROWS_AS(unit_residue_symbol(29, 29), std::invalid_argument); // ramified
    CHECK_THROWS_AS(unit_residue_symbol(29, 17), std::invalid_argument); // (29/17) = -1
    CHECK_THROWS_AS(unit_residue_symbol(29, 2), std::invalid_argument);
}

TEST_CASE("unit_residue_symbol: independent of the root choice")
{
    std::mt19937_64 rng(23);
    const auto primes = oracles::primes_below(2000);
    std::vector<std::uint64_t> ones;
    for (std::uint64_t p : primes)
        if (p % 4 == 1)
            ones.push_back(p);

    int done = 0;
    while (done < 100) {
        const Integer p1 = ones[rng() % ones.size()];
        const Integer q = ones[rng() % ones.size()];
        if (p1 == q || !(jacobi(p1, q) == 1))
            continue;
        const QuadUnit eps = fundamental_unit(p1);
        const Integer s = *sqrt_mod_prime(p1, q);
        const Integer inv_denom = mod_inverse(Integer(eps.denom), q);
        const Integer v1 = mod_floor((eps.a + eps.b * s) * inv_denom, q);
        const Integer v2 = mod_floor((eps.a + eps.b * (q - s)) * inv_denom, q);
        CHECK(jacobi(v1, q) == jacobi(v2, q));
        CHECK(jacobi(v1, q) == unit_residue_symbol(p1, q));
        ++done;
    }
}
