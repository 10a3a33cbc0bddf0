#include "dsv/numtheory.hpp"

namespace dsv {

BigInt binomial_big(const BigInt& n, long k) {
    if (k < 0 || n < 0 || BigInt(k) > n) return BigInt(0);
    BigInt num(1), den(1);
    for (long j = 1; j <= k; ++j) {
        num *= n - (k - j);
        den *= j;
    }
    return exact_div(num, den);
}

int legendre_symbol(const BigInt& a, const BigInt& p) {
    require_odd_prime(p);
    BigInt r = powmod(mod_floor(a, p), (p - 1) / 2, p);
    if (r == 0) return 0;
    if (r == 1) return 1;
    if (r == p - 1) return -1;
    throw std::logic_error("Euler criterion produced a non-root of unity");
}

TrackedResidue fermat_quotient(const BigInt& z, const BigInt& p, int prec) {
    require_odd_prime(p);
    if (mpz_divisible_p(z.get_mpz_t(), p.get_mpz_t()))
        throw std::invalid_argument("Fermat quotient undefined: p divides z");
    BigInt m = pow_int(p, static_cast<unsigned long>(prec) + 1);
    BigInt t = powmod(mod_floor(z, m), p - 1, m) - 1;
    // t = z^(p-1) - 1 known mod p^(prec+1); dividing by p keeps prec digits.
    TrackedResidue num = TrackedResidue::from_known_mod(t, p, prec + 1);
    return num / TrackedResidue::from_exact(p, p, prec + 1);
}

BigInt lucas_u(unsigned long n, const BigInt& A, const BigInt& B) {
    if (n == 0) return BigInt(0);
    BigInt prev(0), cur(1);
    for (unsigned long i = 1; i < n; ++i) {
        BigInt next = A * cur - B * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

BigInt lucas_u_mod(const BigInt& n, const BigInt& A, const BigInt& B, const BigInt& m) {
    if (m <= 0) throw std::invalid_argument("modulus must be positive");
    if (n == 0) return BigInt(0);
    // [u_{k+1}, u_k] = M^k [1, 0] with M = [[A, -B], [1, 0]].
    BigInt a = mod_floor(A, m), b = mod_floor(-B, m), c(1), d(0);    // M
    BigInt ra(1), rb(0), rc(0), rd(1);                               // identity
    BigInt e = n;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) {
            BigInt na = mod_floor(ra * a + rb * c, m), nb = mod_floor(ra * b + rb * d, m);
            BigInt nc = mod_floor(rc * a + rd * c, m), nd = mod_floor(rc * b + rd * d, m);
            ra = na, rb = nb, rc = nc, rd = nd;
        }
        e >>= 1;
        if (e > 0) {
            BigInt na = mod_floor(a * a + b * c, m), nb = mod_floor(a * b + b * d, m);
            BigInt nc = mod_floor(c * a + d * c, m), nd = mod_floor(c * b + d * d, m);
            a = na, b = nb, c = nc, d = nd;
        }
    }
    return rc;  // bottom-left entry of M^n
}

BigInt lucas_number(unsigned long n) {
    if (n == 0) return BigInt(2);
    BigInt prev(2), cur(1);
    for (unsigned long i = 1; i < n; ++i) {
        BigInt next = cur + prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

std::vector<BigInt> euler_numbers_upto(unsigned long n) {
    std::vector<BigInt> e(n + 1, BigInt(0));
    e[0] = 1;
    for (unsigned long m = 1; 2 * m <= n; ++m) {
        BigInt acc(0);
        for (unsigned long j = 0; j < m; ++j) acc += binomial(2 * m, 2 * j) * e[2 * j];
        e[2 * m] = -acc;
    }
    return e;
}

BigInt euler_number(unsigned long n) {
    if (n % 2 == 1) return BigInt(0);
    return euler_numbers_upto(n)[n];
}

}  // namespace dsv
