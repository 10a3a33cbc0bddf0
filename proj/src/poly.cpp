#include "dsv/poly.hpp"

namespace dsv {

std::optional<IntPolynomial> try_exact_div(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (a.is_zero()) return IntPolynomial();
    if (a.degree() < b.degree()) return std::nullopt;
    // Long division over Q, then certify the quotient is integral and exact.
    std::vector<Rational> rem;
    rem.reserve(a.coeffs().size());
    for (const auto& c : a.coeffs()) rem.emplace_back(c);
    long db = b.degree();
    Rational lead(b.leading());
    std::vector<Rational> q(a.degree() - db + 1, Rational(0));
    for (long i = a.degree(); i >= db; --i) {
        Rational f = rem[i] / lead;
        q[i - db] = f;
        if (f == 0) continue;
        for (long j = 0; j <= db; ++j) rem[i - db + j] -= f * Rational(b.coeffs()[j]);
    }
    for (const auto& r : rem)
        if (r != 0) return std::nullopt;
    std::vector<BigInt> qi(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (q[i].get_den() != 1) return std::nullopt;
        qi[i] = q[i].get_num();
    }
    return IntPolynomial(std::move(qi));
}

}  // namespace dsv
