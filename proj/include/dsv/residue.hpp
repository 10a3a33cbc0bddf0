// Valuation-tracked p-adic residues.
//
// A TrackedResidue represents knowledge of the form
//
//     value = p^val * (unit + O(p^prec)),   unit in [0, p^prec), p !| unit,
//
// i.e. a p-adic integer known as a unit multiple of p^val to `prec` digits.
// Two degenerate states exist: the exact zero (val = +inf) and the "bounded
// zero" (prec = 0, unit = 0), which records only that value = O(p^val) --
// the state an addition collapses to when all known digits cancel.
//
// Arithmetic follows ball semantics: multiplication and division add and
// subtract valuations keeping the smaller precision; addition aligns to the
// minimum valuation and any cancellation it detects is paid for out of the
// precision field, never hidden.  Consumers must ask `knows_mod(m)` /
// `residue_mod(m)` so that insufficient precision surfaces as
// PrecisionExhaustedError instead of a wrong answer.
#ifndef DSV_RESIDUE_HPP
#define DSV_RESIDUE_HPP

#include <limits>
#include <string>

#include "dsv/bigint.hpp"

namespace dsv {

class TrackedResidue {
  public:
    static constexpr long kInfinity = std::numeric_limits<long>::max();

    // Exact integer value, unit recorded to `prec` digits.
    static TrackedResidue from_exact(const BigInt& n, const BigInt& p, int prec);
    // Value known only modulo p^known_digits (e.g. the output of a powmod).
    static TrackedResidue from_known_mod(const BigInt& n, const BigInt& p, int known_digits);
    // Exact rational with nonnegative p-adic valuation.
    static TrackedResidue from_rational(const Rational& q, const BigInt& p, int prec);
    static TrackedResidue exact_zero(const BigInt& p);

    const BigInt& prime() const { return prime_; }
    bool is_exact_zero() const { return val_ == kInfinity; }
    bool is_bounded_zero() const { return val_ != kInfinity && prec_ == 0; }
    // Lower bound on ord_p(value); exact unless bounded zero.
    long valuation() const { return val_; }
    int precision() const { return prec_; }
    const BigInt& unit() const { return unit_; }

    // True when value mod p^m is determined by this ball.
    bool knows_mod(long m) const;
    // value mod p^m in [0, p^m); throws PrecisionExhaustedError when unknown.
    BigInt residue_mod(long m) const;
    // Decides value == 0 (mod p^m); throws only if genuinely undecidable.
    bool is_zero_mod(long m) const;

    TrackedResidue operator-() const;
    TrackedResidue operator+(const TrackedResidue& o) const;
    TrackedResidue operator-(const TrackedResidue& o) const { return *this + (-o); }
    TrackedResidue operator*(const TrackedResidue& o) const;
    TrackedResidue operator/(const TrackedResidue& o) const;

    TrackedResidue pow(unsigned long e) const;

    std::string str() const;

  private:
    TrackedResidue(BigInt p, long val, BigInt unit, int prec)
        : prime_(std::move(p)), val_(val), unit_(std::move(unit)), prec_(prec) {}

    BigInt pk(long k) const { return pow_int(prime_, static_cast<unsigned long>(k)); }
    void check_same_prime(const TrackedResidue& o) const;

    BigInt prime_;
    long val_;
    BigInt unit_;
    int prec_;
};

}  // namespace dsv

#endif
