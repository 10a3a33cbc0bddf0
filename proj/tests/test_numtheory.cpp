#include "doctest.h"
#include "dsv/numtheory.hpp"

using namespace dsv;

TEST_CASE("binomial basics") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(9, 4) == 126);
    CHECK(binomial(4, 7) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial_big(BigInt(9), 4) == 126);
    CHECK(binomial_big(BigInt("1177622"), 2) == BigInt("693415925431"));
}

TEST_CASE("Pascal rule up to n = 60") {
    for (unsigned long n = 1; n <= 60; ++n)
        for (long k = 0; k <= static_cast<long>(n); ++k)
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("catalan and narayana") {
    CHECK(catalan(0) == 1);
    CHECK(catalan(3) == 5);
    CHECK(catalan(4) == 14);
    CHECK(narayana(2, 2) == 1);
    CHECK(narayana(3, 2) == 3);
    CHECK(narayana(5, 0) == 0);
    for (unsigned long n = 1; n <= 40; ++n) {
        BigInt acc(0);
        for (long k = 1; k <= static_cast<long>(n); ++k) acc += narayana(n, k);
        CHECK(acc == catalan(n));
    }
}

TEST_CASE("legendre symbol") {
    CHECK(legendre_symbol(BigInt(2), BigInt(7)) == 1);
    CHECK(legendre_symbol(BigInt(2), BigInt(3)) == -1);
    CHECK(legendre_symbol(BigInt(6), BigInt(3)) == 0);
    CHECK_THROWS_AS(legendre_symbol(BigInt(2), BigInt(9)), std::invalid_argument);
    CHECK_THROWS_AS(legendre_symbol(BigInt(2), BigInt(4)), std::invalid_argument);
}

TEST_CASE("fermat quotient") {
    CHECK(fermat_quotient(BigInt(2), BigInt(3), 1).residue_mod(1) == 1);
    CHECK(fermat_quotient(BigInt(2), BigInt(5), 1).residue_mod(1) == 3);
    CHECK(fermat_quotient(BigInt(3), BigInt(5), 1).residue_mod(1) == 1);
    CHECK_THROWS_AS(fermat_quotient(BigInt(10), BigInt(5), 1), std::invalid_argument);
    // q_p(ab) = q_p(a) + q_p(b) (mod p)
    for (long p : odd_primes_in(3, 99))
        for (long a : {2, 3, 7, 10})
            for (long b : {3, 5, 11}) {
                if (a % p == 0 || b % p == 0) continue;
                BigInt pp(p);
                BigInt lhs = fermat_quotient(BigInt(a) * BigInt(b), pp, 1).residue_mod(1);
                BigInt rhs = mod_floor(fermat_quotient(BigInt(a), pp, 1).residue_mod(1) +
                                           fermat_quotient(BigInt(b), pp, 1).residue_mod(1),
                                       pp);
                CHECK(lhs == rhs);
            }
}

TEST_CASE("lucas sequences") {
    CHECK(lucas_u(0, BigInt(3), BigInt(1)) == 0);
    CHECK(lucas_u(5, BigInt(1), BigInt(-1)) == 5);
    CHECK(lucas_u(3, BigInt(3), BigInt(9)) == 0);
    for (unsigned long n = 0; n <= 30; ++n)
        CHECK(lucas_u_mod(BigInt(n), BigInt(4), BigInt(-7), BigInt(1000003)) ==
              mod_floor(lucas_u(n, BigInt(4), BigInt(-7)), BigInt(1000003)));
}

TEST_CASE("Lucas congruences u_p = (D/p), p | u_{p-(D/p)}") {
    for (long p : odd_primes_in(3, 199)) {
        BigInt pp(p);
        for (long a = -5; a <= 5; ++a)
            for (long b = -5; b <= 5; ++b) {
                BigInt A(a), B(b);
                BigInt disc = A * A - 4 * B;
                if (disc == 0) continue;
                BigInt up = lucas_u_mod(pp, A, B, pp);
                CHECK(up == mod_floor(BigInt(legendre_symbol(disc, pp)), pp));
                if (mod_floor(B, pp) != 0) {
                    BigInt idx = pp - legendre_symbol(disc, pp);
                    CHECK(lucas_u_mod(idx, A, B, pp) == 0);
                }
            }
    }
}

TEST_CASE("Fibonacci mod p and Lucas numbers") {
    for (long p : odd_primes_in(3, 199)) {
        if (p == 5) continue;
        BigInt pp(p);
        CHECK(mod_floor(fibonacci(p), pp) == mod_floor(BigInt(legendre_symbol(BigInt(5), pp)), pp));
    }
    CHECK(lucas_number(0) == 2);
    CHECK(lucas_number(1) == 1);
    CHECK(lucas_number(4) == 7);
    for (unsigned long n = 1; n <= 30; ++n)
        CHECK(lucas_number(n) == 2 * fibonacci(n + 1) - fibonacci(n));
}

TEST_CASE("Euler numbers, secant convention") {
    CHECK(euler_number(0) == 1);
    CHECK(euler_number(1) == 0);
    CHECK(euler_number(4) == 5);
    CHECK(euler_number(2) == -1);
    CHECK(euler_number(6) == -61);
    CHECK(euler_number(8) == 1385);
}

TEST_CASE("p-adic valuation of rationals") {
    CHECK(*padic_valuation(make_rational(BigInt(18), BigInt(5)), BigInt(3)) == 2);
    CHECK(*padic_valuation(make_rational(BigInt(7), BigInt(9)), BigInt(3)) == -2);
    CHECK(!padic_valuation(Rational(0), BigInt(7)).has_value());
}

TEST_CASE("primality") {
    CHECK(is_prime(BigInt(588811)));
    CHECK(!is_prime(BigInt(588813)));
    CHECK(is_prime(BigInt("9223372036854775783")));  // largest prime below 2^63
    CHECK_THROWS_AS(is_prime(pow_int(BigInt(2), 64) + 1), std::invalid_argument);
}
