// Dense univariate polynomials over Z and Q, ascending coefficient order,
// trailing zeros trimmed (the zero polynomial is the empty list).
#ifndef DSV_POLY_HPP
#define DSV_POLY_HPP

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "dsv/bigint.hpp"

namespace dsv {

template <class C>
class DensePoly {
  public:
    DensePoly() = default;
    explicit DensePoly(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }
    DensePoly(std::initializer_list<C> coeffs) : c_(coeffs) { trim(); }
    static DensePoly constant(const C& v) { return DensePoly(std::vector<C>{v}); }
    static DensePoly x() { return DensePoly(std::vector<C>{C(0), C(1)}); }

    bool is_zero() const { return c_.empty(); }
    // Degree of the zero polynomial is -1 by convention.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<C>& coeffs() const { return c_; }
    C coeff(std::size_t i) const { return i < c_.size() ? c_[i] : C(0); }
    const C& leading() const {
        if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    bool operator==(const DensePoly& o) const { return c_ == o.c_; }
    bool operator!=(const DensePoly& o) const { return !(*this == o); }

    DensePoly operator-() const {
        std::vector<C> r(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
        return DensePoly(std::move(r));
    }

    DensePoly operator+(const DensePoly& o) const {
        std::vector<C> r(std::max(c_.size(), o.c_.size()), C(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
        return DensePoly(std::move(r));
    }
    DensePoly operator-(const DensePoly& o) const { return *this + (-o); }
    DensePoly& operator+=(const DensePoly& o) { return *this = *this + o; }
    DensePoly& operator-=(const DensePoly& o) { return *this = *this - o; }

    // Schoolbook product; fine at this library's degrees (<= a few hundred).
    // If degrees ever grow past a few thousand, switch to Karatsuba here.
    DensePoly operator*(const DensePoly& o) const {
        if (is_zero() || o.is_zero()) return DensePoly();
        std::vector<C> r(c_.size() + o.c_.size() - 1, C(0));
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        }
        return DensePoly(std::move(r));
    }
    DensePoly& operator*=(const DensePoly& o) { return *this = *this * o; }

    DensePoly operator*(const C& s) const {
        if (s == 0) return DensePoly();
        std::vector<C> r(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
        return DensePoly(std::move(r));
    }

    // Multiply by x^k.
    DensePoly shifted(std::size_t k) const {
        if (is_zero()) return DensePoly();
        std::vector<C> r(c_.size() + k, C(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
        return DensePoly(std::move(r));
    }

    template <class T>
    T eval(const T& x0) const {
        T acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc *= x0;
            acc += T(*it);
        }
        return acc;
    }

    DensePoly pow(unsigned long e) const {
        DensePoly acc = constant(C(1));
        DensePoly base = *this;
        for (unsigned long bit = e; bit; bit >>= 1) {
            if (bit & 1) acc *= base;
            if (bit > 1) base *= base;
        }
        return acc;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i] == 0) continue;
            if (!s.empty()) s += " + ";
            s += coeff_str(c_[i]);
            if (i >= 1) s += "*x";
            if (i >= 2) s += "^" + std::to_string(i);
        }
        return s;
    }

  private:
    static std::string coeff_str(const BigInt& v) { return v.get_str(); }
    static std::string coeff_str(const Rational& v) { return v.get_str(); }

    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<C> c_;
};

using IntPolynomial = DensePoly<BigInt>;
using RatPolynomial = DensePoly<Rational>;

inline RatPolynomial to_rational(const IntPolynomial& p) {
    std::vector<Rational> r;
    r.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) r.emplace_back(c);
    return RatPolynomial(std::move(r));
}

// Integer polynomial back from a rational one whose coefficients all have
// denominator 1; nullopt otherwise.
inline std::optional<IntPolynomial> to_integer(const RatPolynomial& p) {
    std::vector<BigInt> r;
    r.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        if (c.get_den() != 1) return std::nullopt;
        r.push_back(c.get_num());
    }
    return IntPolynomial(std::move(r));
}

// P(x(x+1)) expanded in x.
inline IntPolynomial compose_x_xplus1(const IntPolynomial& p) {
    IntPolynomial q{BigInt(0), BigInt(1), BigInt(1)};  // x + x^2
    IntPolynomial acc;
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        acc = acc * q;
        acc += IntPolynomial::constant(p.coeffs()[i]);
    }
    return acc;
}

// Quotient a/b when b divides a exactly over Z[x]; nullopt otherwise.
std::optional<IntPolynomial> try_exact_div(const IntPolynomial& a, const IntPolynomial& b);

inline IntPolynomial exact_poly_div(const IntPolynomial& a, const IntPolynomial& b) {
    auto q = try_exact_div(a, b);
    if (!q) throw NonDivisibleError("polynomial division leaves a remainder");
    return *q;
}

}  // namespace dsv

#endif
