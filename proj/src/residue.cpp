#include "dsv/residue.hpp"

namespace dsv {

TrackedResidue TrackedResidue::from_exact(const BigInt& n, const BigInt& p, int prec) {
    if (prec < 1) throw std::invalid_argument("precision must be >= 1");
    if (n == 0) return exact_zero(p);
    BigInt u;
    long v = static_cast<long>(mpz_remove(u.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
    return TrackedResidue(p, v, mod_floor(u, pow_int(p, prec)), prec);
}

TrackedResidue TrackedResidue::from_known_mod(const BigInt& n, const BigInt& p, int known_digits) {
    if (known_digits < 1) throw std::invalid_argument("known_digits must be >= 1");
    BigInt r = mod_floor(n, pow_int(p, known_digits));
    if (r == 0) return TrackedResidue(p, known_digits, BigInt(0), 0);  // O(p^known)
    BigInt u;
    long v = static_cast<long>(mpz_remove(u.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t()));
    return TrackedResidue(p, v, u, static_cast<int>(known_digits - v));
}

TrackedResidue TrackedResidue::from_rational(const Rational& q, const BigInt& p, int prec) {
    if (q == 0) return exact_zero(p);
    long vd = int_valuation(q.get_den(), p);
    long vn = int_valuation(q.get_num(), p);
    long v = vn - vd;
    if (v < 0)
        throw std::invalid_argument("rational " + q.get_str() + " is not a " + p.get_str() +
                                    "-adic integer");
    BigInt num = q.get_num() / pow_int(p, vn);
    BigInt den = q.get_den() / pow_int(p, vd);
    BigInt m = pow_int(p, prec);
    BigInt u = mod_floor(num * invmod(den, m), m);
    return TrackedResidue(p, v, u, prec);
}

TrackedResidue TrackedResidue::exact_zero(const BigInt& p) {
    return TrackedResidue(p, kInfinity, BigInt(0), 1);
}

void TrackedResidue::check_same_prime(const TrackedResidue& o) const {
    if (prime_ != o.prime_) throw std::invalid_argument("mixed primes in residue arithmetic");
}

bool TrackedResidue::knows_mod(long m) const {
    if (is_exact_zero()) return true;
    if (is_bounded_zero()) return m <= val_;
    return m <= val_ + prec_;
}

BigInt TrackedResidue::residue_mod(long m) const {
    if (m < 1) throw std::invalid_argument("modulus exponent must be >= 1");
    if (!knows_mod(m))
        throw PrecisionExhaustedError("residue mod p^" + std::to_string(m) +
                                      " not determined by " + str());
    if (is_exact_zero() || val_ >= m) return BigInt(0);
    return mod_floor(pow_int(prime_, val_) * unit_, pk(m));
}

bool TrackedResidue::is_zero_mod(long m) const {
    if (is_exact_zero()) return true;
    if (val_ >= m) return true;
    if (is_bounded_zero())
        throw PrecisionExhaustedError("cannot decide zero mod p^" + std::to_string(m) +
                                      " from " + str());
    return false;  // unit is a p-adic unit, so ord_p(value) = val_ exactly
}

TrackedResidue TrackedResidue::operator-() const {
    if (is_exact_zero() || is_bounded_zero()) return *this;
    return TrackedResidue(prime_, val_, mod_floor(-unit_, pk(prec_)), prec_);
}

TrackedResidue TrackedResidue::operator*(const TrackedResidue& o) const {
    check_same_prime(o);
    if (is_exact_zero() || o.is_exact_zero()) return exact_zero(prime_);
    if (is_bounded_zero() || o.is_bounded_zero())
        return TrackedResidue(prime_, val_ + o.val_, BigInt(0), 0);
    int k = std::min(prec_, o.prec_);
    return TrackedResidue(prime_, val_ + o.val_, mod_floor(unit_ * o.unit_, pk(k)), k);
}

TrackedResidue TrackedResidue::operator/(const TrackedResidue& o) const {
    check_same_prime(o);
    if (o.is_exact_zero() || o.is_bounded_zero())
        throw NotInvertibleError("division by " + o.str());
    if (is_exact_zero()) return *this;
    long v = val_ - o.val_;
    if (is_bounded_zero()) {
        // O(p^val) / p^{o.val}*unit: divisibility is certain only if val >= o.val.
        if (v < 0)
            throw PrecisionExhaustedError("cannot certify divisibility of " + str() + " by " +
                                          o.str());
        return TrackedResidue(prime_, v, BigInt(0), 0);
    }
    if (v < 0)
        throw std::invalid_argument("quotient leaves the p-adic integers: " + str() + " / " +
                                    o.str());
    int k = std::min(prec_, o.prec_);
    BigInt m = pk(k);
    return TrackedResidue(prime_, v, mod_floor(unit_ * invmod(o.unit_, m), m), k);
}

TrackedResidue TrackedResidue::operator+(const TrackedResidue& o) const {
    check_same_prime(o);
    if (is_exact_zero()) return o;
    if (o.is_exact_zero()) return *this;
    long m = std::min(val_, o.val_);
    // Knowledge of each summand, expressed in the p^m frame.
    long ea = val_ - m + prec_;
    long eb = o.val_ - m + o.prec_;
    long cap = std::min(ea, eb);
    if (cap == 0) return TrackedResidue(prime_, m, BigInt(0), 0);
    BigInt mod = pk(cap);
    BigInt s = mod_floor(unit_ * pow_int(prime_, val_ - m) + o.unit_ * pow_int(prime_, o.val_ - m),
                         mod);
    if (s == 0) return TrackedResidue(prime_, m + cap, BigInt(0), 0);
    BigInt u;
    long t = static_cast<long>(mpz_remove(u.get_mpz_t(), s.get_mpz_t(), prime_.get_mpz_t()));
    return TrackedResidue(prime_, m + t, u, static_cast<int>(cap - t));
}

TrackedResidue TrackedResidue::pow(unsigned long e) const {
    if (e == 0) return from_exact(BigInt(1), prime_, is_bounded_zero() ? 1 : prec_);
    TrackedResidue acc = *this;
    TrackedResidue base = *this;
    bool have = false;
    for (unsigned long bit = e; bit; bit >>= 1) {
        if (bit & 1) {
            acc = have ? acc * base : base;
            have = true;
        }
        if (bit > 1) base = base * base;
    }
    return acc;
}

std::string TrackedResidue::str() const {
    if (is_exact_zero()) return "0 (exact, p=" + prime_.get_str() + ")";
    std::string s;
    if (is_bounded_zero()) {
        s = "O(" + prime_.get_str() + "^" + std::to_string(val_) + ")";
    } else {
        s = prime_.get_str() + "^" + std::to_string(val_) + "*(" + unit_.get_str() + " + O(" +
            prime_.get_str() + "^" + std::to_string(prec_) + "))";
    }
    return s;
}

}  // namespace dsv
