// Arbitrary-precision integers and rationals (GMP-backed) plus the handful
// of exact-arithmetic helpers the rest of the library leans on.
#ifndef DSV_BIGINT_HPP
#define DSV_BIGINT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dsv {

using BigInt = mpz_class;
using Rational = mpq_class;

struct NonDivisibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotInvertibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PrecisionExhaustedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline BigInt pow_int(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// base^e mod m, m > 0.
inline BigInt powmod(const BigInt& base, const BigInt& e, const BigInt& m) {
    BigInt r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline BigInt invmod(const BigInt& a, const BigInt& m) {
    BigInt r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw NotInvertibleError("no inverse of " + a.get_str() + " modulo " + m.get_str());
    return r;
}

// Quotient a/b with a divisibility check; the callers rely on divisibility
// being a proven fact, so a failure here is a bug, not an input error.
inline BigInt exact_div(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) throw NonDivisibleError(a.get_str() + " not divisible by " + b.get_str());
    return q;
}

// Nonnegative residue of a mod m (m > 0).
inline BigInt mod_floor(const BigInt& a, const BigInt& m) {
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

// ord_p(n) for n != 0.
inline long int_valuation(const BigInt& n, const BigInt& p) {
    if (n == 0) throw std::invalid_argument("valuation of zero");
    BigInt reduced;
    return static_cast<long>(mpz_remove(reduced.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

// Reduced rational from an integer pair; denominator sign normalized.
inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// ord_p of a rational; nullopt encodes +infinity (the value zero).
inline std::optional<long> padic_valuation(const Rational& q, const BigInt& p) {
    if (q == 0) return std::nullopt;
    long vn = q.get_num() == 0 ? 0 : int_valuation(q.get_num(), p);
    long vd = int_valuation(q.get_den(), p);
    return vn - vd;
}

// Deterministic Miller-Rabin, valid for all inputs below 2^64; larger
// candidates are rejected rather than answered probabilistically.
bool is_prime(const BigInt& n);

inline bool is_odd_prime(const BigInt& p) { return p > 2 && is_prime(p); }

inline void require_odd_prime(const BigInt& p) {
    if (!is_odd_prime(p)) throw std::invalid_argument(p.get_str() + " is not an odd prime");
}

// Odd primes in [lo, hi], ascending.
std::vector<long> odd_primes_in(long lo, long hi);

}  // namespace dsv

#endif
