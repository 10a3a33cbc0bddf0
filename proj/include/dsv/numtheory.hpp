// Number-theoretic primitives: binomials, Catalan/Narayana numbers, the
// Legendre symbol, Fermat quotients, Lucas sequences and Euler numbers.
#ifndef DSV_NUMTHEORY_HPP
#define DSV_NUMTHEORY_HPP

#include <vector>

#include "dsv/bigint.hpp"
#include "dsv/residue.hpp"

namespace dsv {

// C(n, k); zero outside 0 <= k <= n.
inline BigInt binomial(unsigned long n, long k) {
    if (k < 0 || static_cast<unsigned long>(k) > n) return BigInt(0);
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
    return r;
}

// C(n, k) for big n >= 0 (falling-factorial form), zero outside range.
BigInt binomial_big(const BigInt& n, long k);

inline BigInt catalan(unsigned long n) { return exact_div(binomial(2 * n, n), BigInt(n + 1)); }

// Narayana number N(n,k) = C(n,k) C(n,k-1) / n; zero outside 1 <= k <= n.
inline BigInt narayana(unsigned long n, long k) {
    if (n < 1) throw std::invalid_argument("narayana requires n >= 1");
    if (k < 1 || static_cast<unsigned long>(k) > n) return BigInt(0);
    return exact_div(binomial(n, k) * binomial(n, k - 1), BigInt(n));
}

// Legendre symbol by Euler's criterion; p must be an odd prime.
int legendre_symbol(const BigInt& a, const BigInt& p);

// Fermat quotient q_p(z) = (z^(p-1) - 1)/p as a residue known mod p^prec.
TrackedResidue fermat_quotient(const BigInt& z, const BigInt& p, int prec);

// Lucas sequence u_0 = 0, u_1 = 1, u_{n+1} = A u_n - B u_{n-1}.
BigInt lucas_u(unsigned long n, const BigInt& A, const BigInt& B);
// Same value reduced mod m, computed by O(log n) matrix powering.
BigInt lucas_u_mod(const BigInt& n, const BigInt& A, const BigInt& B, const BigInt& m);

inline BigInt fibonacci(unsigned long n) { return lucas_u(n, BigInt(1), BigInt(-1)); }

// Lucas numbers L_0 = 2, L_1 = 1, L_{n+1} = L_n + L_{n-1}.
BigInt lucas_number(unsigned long n);

// Euler numbers in the secant convention: E_0 = 1, E_odd = 0 and
// sum_{j=0..m} C(2m,2j) E_{2j} = 0 for m >= 1.
BigInt euler_number(unsigned long n);
std::vector<BigInt> euler_numbers_upto(unsigned long n);

}  // namespace dsv

#endif
