// Generators for the polynomial and integer families: Delannoy and Schroder
// polynomials, the W_n / w_n weights, generalized central trinomial and
// Motzkin numbers, the R_k / f_n rational families, and the u_j sums.
// Each family has a definitional sum and an independent recurrence route;
// mod_stream evaluates the recurrences over tracked p-adic residues.
#ifndef DSV_SEQUENCES_HPP
#define DSV_SEQUENCES_HPP

#include <vector>

#include "dsv/numtheory.hpp"
#include "dsv/poly.hpp"
#include "dsv/residue.hpp"

namespace dsv {

// w(n,k) = C(n-1,k-1) C(n+k,k-1) / k; zero outside 1 <= k <= n.
BigInt w_coeff(unsigned long n, long k);
// Row w(n,1..n).
std::vector<BigInt> w_coeff_row(unsigned long n);

std::vector<BigInt> catalan_upto(unsigned long n);

// --- definitional sums -------------------------------------------------

// sum_k C(n,k)^2 x^k (x+1)^(n-k).
IntPolynomial delannoy_def_weighted(unsigned long n);
// sum_k C(n,k) C(n+k,k) x^k.
IntPolynomial delannoy_def_plain(unsigned long n);
// sum_k N(n,k) x^(k-1) (x+1)^(n-k), n >= 1.
IntPolynomial schroder_little_def(unsigned long n);
// sum_k C(n+k,2k) C_k x^k.
IntPolynomial schroder_large_def(unsigned long n);
// sum_k w(n,k) C_(k-1) x^(k-1), n >= 1.
IntPolynomial big_w_def(unsigned long n);
// sum_k w(n,k) x^(k-1), n >= 1.
IntPolynomial small_w_def(unsigned long n);

// --- public constructors (cross-checked where the contract says so) ----

// Both definitional routes computed and compared; throws on disagreement.
IntPolynomial delannoy_poly(unsigned long n);
IntPolynomial schroder_little_poly(unsigned long n);
IntPolynomial schroder_large_poly(unsigned long n);
IntPolynomial big_w_poly(unsigned long n);
IntPolynomial small_w_poly(unsigned long n);
RatPolynomial r_poly(unsigned long k);
// Alternate printed form of the same sum, for cross-checks.
RatPolynomial r_poly_alt(unsigned long k);
// (1/n) sum_{k<n} D_k(x) R_k(x); rational until integrality is certified.
RatPolynomial f_poly(unsigned long n);

// --- numbers ------------------------------------------------------------

BigInt trinomial_T(unsigned long n, const BigInt& b, const BigInt& c);
BigInt motzkin_M(unsigned long n, const BigInt& b, const BigInt& c);
// Oracle: coefficient of x^n in (x^2 + b x + c)^n by direct expansion.
BigInt trinomial_T_expansion(unsigned long n, const BigInt& b, const BigInt& c);
BigInt delannoy_general(unsigned long m, unsigned long n);
// u_j of the D*s telescoping sum: sum_{j<k<=p} (k-1) C(k+j,2j) (2j+1 - j(j+1)(2k+1)/(k(k+1))).
Rational u_lemma25(long j, long p);

// --- exact value streams (recurrence route) -----------------------------

// D_0(x0) .. D_n(x0).
std::vector<BigInt> delannoy_values(const BigInt& x0, unsigned long n);
// s_1(x0) .. s_n(x0) at indices 1..n (index 0 unused, set to 0).
std::vector<BigInt> schroder_little_values(const BigInt& x0, unsigned long n);
// T_0 .. T_n / M_0 .. M_n.
std::vector<BigInt> trinomial_values(const BigInt& b, const BigInt& c, unsigned long n);
std::vector<BigInt> motzkin_values(const BigInt& b, const BigInt& c, unsigned long n);
// R_k(x0) as an exact integer (the rational coefficients clear exactly).
BigInt r_value(unsigned long k, const BigInt& x0);

// --- recurrence-built polynomial caches ---------------------------------

struct PolyCaches {
    std::vector<IntPolynomial> D;   // D[i] = D_i, from i = 0
    std::vector<IntPolynomial> s;   // s[i] = s_i, from i = 1 (s[0] unused)
    std::vector<IntPolynomial> S;   // S[i] = S_i, from i = 0
    std::vector<IntPolynomial> W;   // W[i] = W_i, from i = 1
    std::vector<IntPolynomial> w;   // w[i] = w_i, from i = 1

    void ensure_D(long n);
    void ensure_s(long n);
    void ensure_S(long n);
    void ensure_W(long n);
    void ensure_w(long n);

    // sum_{k=0}^{n-1} D_k(x) s_{k+1}(x), extended incrementally and cached.
    const IntPolynomial& ds_prefix(long n);

  private:
    std::vector<IntPolynomial> ds_;  // ds_[m] = prefix sum over k < m
};

// --- modular streaming ---------------------------------------------------

enum class FamilyTag {
    DelannoyPoly,
    LittleSchroderPoly,
    LargeSchroderPoly,
    BigW,
    SmallW,
    TrinomialT,
    MotzkinM,
    RPoly,
    FPoly,
    DelannoyGeneral,
    LemmaU,
};

struct SequenceFamily {
    FamilyTag tag;
    BigInt b{0}, c{0};  // TrinomialT / MotzkinM parameters
    long p = 0;         // LemmaU parameter

    static SequenceFamily simple(FamilyTag t) { return SequenceFamily{t, 0, 0, 0}; }
    static SequenceFamily trinomial(BigInt b, BigInt c) {
        return SequenceFamily{FamilyTag::TrinomialT, std::move(b), std::move(c), 0};
    }
    static SequenceFamily motzkin(BigInt b, BigInt c) {
        return SequenceFamily{FamilyTag::MotzkinM, std::move(b), std::move(c), 0};
    }
    std::string name() const;
};

// First index the family is defined at (0 or 1).
long family_base_index(FamilyTag t);

struct StreamItem {
    long n;
    TrackedResidue value;
};

// Family values at x = x0, emitted as residues mod p^prec for
// n = base..n_max.  Requires n_max < 2p.  Working precision is
// prec + (p-adic digits consumed by the recurrences' leading divisors up to
// n_max), counted exactly up front; every division-by-p asserts the
// numerator's divisibility at working precision.
std::vector<StreamItem> mod_stream(const SequenceFamily& fam, const BigInt& x0, const BigInt& p,
                                   int prec, long n_max);

// Definitional (sum-formula) value, as an exact rational, for cross-checks.
Rational family_exact_value(const SequenceFamily& fam, const BigInt& x0, long n);

}  // namespace dsv

#endif
