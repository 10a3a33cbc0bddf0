#include "dsv/fp_poly.hpp"

#include <algorithm>

namespace dsv {

namespace {

using Coeffs = std::vector<uint64_t>;

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

uint64_t inv_u64(uint64_t a, uint64_t p) { return powmod_u64(a % p, p - 2, p); }

void trim(Coeffs& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

Coeffs mul(const Coeffs& a, const Coeffs& b, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Coeffs r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + static_cast<unsigned __int128>(a[i]) * b[j]) % p;
    }
    trim(r);
    return r;
}

// Remainder of a modulo the monic polynomial f.
Coeffs rem_monic(Coeffs a, const Coeffs& f, uint64_t p) {
    long df = static_cast<long>(f.size()) - 1;
    while (static_cast<long>(a.size()) - 1 >= df) {
        uint64_t lead = a.back();
        std::size_t shift = a.size() - f.size();
        if (lead != 0)
            for (std::size_t j = 0; j < f.size(); ++j) {
                uint64_t sub = mulmod(lead, f[j], p);
                a[shift + j] = (a[shift + j] + p - sub) % p;
            }
        a.pop_back();
        trim(a);
        if (a.size() < f.size()) break;
    }
    return a;
}

Coeffs mulmod_poly(const Coeffs& a, const Coeffs& b, const Coeffs& f, uint64_t p) {
    return rem_monic(mul(a, b, p), f, p);
}

// g^p mod f (one Frobenius step).
Coeffs frobenius(const Coeffs& g, const Coeffs& f, uint64_t p) {
    Coeffs acc{1};
    Coeffs base = g;
    uint64_t e = p;
    while (e) {
        if (e & 1) acc = mulmod_poly(acc, base, f, p);
        e >>= 1;
        if (e) base = mulmod_poly(base, base, f, p);
    }
    return acc;
}

Coeffs gcd_poly(Coeffs a, Coeffs b, uint64_t p) {
    while (!b.empty()) {
        uint64_t lb = inv_u64(b.back(), p);
        Coeffs bm = b;
        for (auto& c : bm) c = mulmod(c, lb, p);
        a = rem_monic(std::move(a), bm, p);
        std::swap(a, b);
    }
    return a;
}

Coeffs sub_x(Coeffs g, uint64_t p) {
    if (g.size() < 2) g.resize(2, 0);
    g[1] = (g[1] + p - 1) % p;
    trim(g);
    return g;
}

std::vector<long> distinct_prime_divisors(long d) {
    std::vector<long> out;
    for (long q = 2; q * q <= d; ++q)
        if (d % q == 0) {
            out.push_back(q);
            while (d % q == 0) d /= q;
        }
    if (d > 1) out.push_back(d);
    return out;
}

}  // namespace

FpPolynomial::FpPolynomial(const IntPolynomial& poly, uint64_t prime) : p_(prime) {
    if (prime < 3 || prime >= (1ull << 31)) throw std::invalid_argument("prime out of range");
    c_.reserve(poly.coeffs().size());
    for (const auto& co : poly.coeffs())
        c_.push_back(mpz_fdiv_ui(co.get_mpz_t(), static_cast<unsigned long>(prime)));
    trim();
}

FpPolynomial::FpPolynomial(std::vector<uint64_t> coeffs, uint64_t prime)
    : p_(prime), c_(std::move(coeffs)) {
    if (prime < 3 || prime >= (1ull << 31)) throw std::invalid_argument("prime out of range");
    for (auto& co : c_) co %= prime;
    trim();
}

void FpPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

bool fp_irreducible(const FpPolynomial& fin) {
    if (fin.degree() < 1) throw std::invalid_argument("irreducibility needs degree >= 1");
    uint64_t p = fin.prime();
    long d = fin.degree();
    if (d == 1) return true;

    Coeffs f = fin.coeffs();
    uint64_t li = inv_u64(f.back(), p);
    for (auto& c : f) c = mulmod(c, li, p);  // monic

    // Rabin: f irreducible iff x^(p^d) = x (mod f) and, for every prime q | d,
    // gcd(x^(p^(d/q)) - x, f) = 1.  The chain t_j = x^(p^j) is built by
    // iterated Frobenius; a nontrivial gcd at any j < d already certifies a
    // factor of degree dividing j, which allows the early exits below.
    std::vector<long> qs = distinct_prime_divisors(d);
    std::vector<long> gcd_points;
    for (long q : qs) gcd_points.push_back(d / q);
    std::sort(gcd_points.begin(), gcd_points.end());

    Coeffs t{0, 1};  // x
    for (long j = 1; j <= d; ++j) {
        t = frobenius(t, f, p);
        bool mandatory = std::binary_search(gcd_points.begin(), gcd_points.end(), j);
        // A nontrivial gcd at j < d exhibits a factor of degree dividing j,
        // hence a proper factor; at j = d it would just reproduce f itself.
        if (mandatory || (j <= 3 && j < d)) {
            Coeffs g = gcd_poly(sub_x(t, p), f, p);
            if (static_cast<long>(g.size()) - 1 >= 1) return false;
        }
    }
    return t == Coeffs{0, 1};
}

bool fp_irreducible_bruteforce(const FpPolynomial& fin) {
    if (fin.degree() < 1) throw std::invalid_argument("irreducibility needs degree >= 1");
    uint64_t p = fin.prime();
    long d = fin.degree();
    if (d == 1) return true;
    Coeffs f = fin.coeffs();
    uint64_t li = inv_u64(f.back(), p);
    for (auto& c : f) c = mulmod(c, li, p);
    // Enumerate monic divisors g of degree 1..d/2.
    for (long dg = 1; 2 * dg <= d; ++dg) {
        uint64_t count = 1;
        for (long i = 0; i < dg; ++i) count *= p;
        for (uint64_t code = 0; code < count; ++code) {
            Coeffs g(dg + 1, 0);
            uint64_t c = code;
            for (long i = 0; i < dg; ++i) {
                g[i] = c % p;
                c /= p;
            }
            g[dg] = 1;
            if (rem_monic(f, g, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace dsv
