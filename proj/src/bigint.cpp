#include "dsv/bigint.hpp"

namespace dsv {

namespace {

// Strong-pseudoprime test to base a for odd n = d*2^s + 1.
bool strong_probable_prime(const BigInt& n, const BigInt& d, long s, unsigned long a) {
    BigInt base(a);
    if (mod_floor(base, n) == 0) return true;
    BigInt x = powmod(base, d, n);
    if (x == 1 || x == n - 1) return true;
    for (long i = 1; i < s; ++i) {
        x = mod_floor(x * x, n);
        if (x == n - 1) return true;
    }
    return false;
}

}  // namespace

bool is_prime(const BigInt& n) {
    if (n < 2) return false;
    if (mpz_sizeinbase(n.get_mpz_t(), 2) > 64)
        throw std::invalid_argument("primality test restricted to inputs below 2^64");
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul}) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    BigInt d = n - 1;
    long s = int_valuation(d, 2);
    d >>= s;
    // This witness set decides primality for every n < 2^64.
    for (unsigned long a : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul})
        if (!strong_probable_prime(n, d, s, a)) return false;
    return true;
}

std::vector<long> odd_primes_in(long lo, long hi) {
    std::vector<long> out;
    for (long p = std::max(lo, 3l); p <= hi; ++p)
        if (p % 2 == 1 && is_prime(BigInt(p))) out.push_back(p);
    return out;
}

}  // namespace dsv
