// Polynomials over the prime field F_p (p odd, p < 2^31) and Rabin's
// irreducibility test.
#ifndef DSV_FP_POLY_HPP
#define DSV_FP_POLY_HPP

#include <cstdint>
#include <vector>

#include "dsv/poly.hpp"

namespace dsv {

class FpPolynomial {
  public:
    // Reduces an integer polynomial mod p; the result may drop degree.
    FpPolynomial(const IntPolynomial& p, uint64_t prime);
    FpPolynomial(std::vector<uint64_t> coeffs, uint64_t prime);

    uint64_t prime() const { return p_; }
    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<uint64_t>& coeffs() const { return c_; }

    bool operator==(const FpPolynomial& o) const { return p_ == o.p_ && c_ == o.c_; }

  private:
    void trim();
    uint64_t p_;
    std::vector<uint64_t> c_;
};

// Rabin's criterion over F_p: true iff f is irreducible.  Requires deg f >= 1
// and a nonzero leading coefficient (i.e. no degree drop after reduction).
bool fp_irreducible(const FpPolynomial& f);

// Exhaustive oracle for tiny cases: trial division by every monic polynomial
// of degree <= deg(f)/2.  Test-grade, O(p^(d/2) * d^2).
bool fp_irreducible_bruteforce(const FpPolynomial& f);

}  // namespace dsv

#endif
