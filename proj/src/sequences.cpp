#include "dsv/sequences.hpp"

#include <stdexcept>

namespace dsv {

namespace {

// Incremental powers of (x+1) up to exponent n.
std::vector<IntPolynomial> xplus1_powers(unsigned long n) {
    std::vector<IntPolynomial> p;
    p.reserve(n + 1);
    p.push_back(IntPolynomial::constant(BigInt(1)));
    IntPolynomial base{BigInt(1), BigInt(1)};
    for (unsigned long j = 1; j <= n; ++j) p.push_back(p.back() * base);
    return p;
}

const IntPolynomial& two_x_plus_1() {
    static const IntPolynomial p{BigInt(1), BigInt(2)};
    return p;
}

}  // namespace

BigInt w_coeff(unsigned long n, long k) {
    if (n < 1) throw std::invalid_argument("w(n,k) requires n >= 1");
    if (k < 1 || static_cast<unsigned long>(k) > n) return BigInt(0);
    return exact_div(binomial(n - 1, k - 1) * binomial(n + k, k - 1), BigInt(k));
}

std::vector<BigInt> w_coeff_row(unsigned long n) {
    if (n < 1) throw std::invalid_argument("w(n,k) requires n >= 1");
    std::vector<BigInt> row(n + 1);          // row[k] = w(n,k), row[0] unused
    BigInt a(1), b(1);                       // C(n-1,k-1), C(n+k,k-1)
    for (unsigned long k = 1; k <= n; ++k) {
        row[k] = exact_div(a * b, BigInt(k));
        if (k < n) {
            a = exact_div(a * BigInt(n - k), BigInt(k));
            b = exact_div(b * BigInt(n + k + 1), BigInt(k));
        }
    }
    return row;
}

std::vector<BigInt> catalan_upto(unsigned long n) {
    std::vector<BigInt> c(n + 1);
    c[0] = 1;
    for (unsigned long k = 0; k < n; ++k)
        c[k + 1] = exact_div(c[k] * BigInt(2 * (2 * k + 1)), BigInt(k + 2));
    return c;
}

IntPolynomial delannoy_def_weighted(unsigned long n) {
    auto pw = xplus1_powers(n);
    IntPolynomial acc;
    for (unsigned long k = 0; k <= n; ++k) {
        BigInt cc = binomial(n, k);
        acc += (pw[n - k] * (cc * cc)).shifted(k);
    }
    return acc;
}

IntPolynomial delannoy_def_plain(unsigned long n) {
    std::vector<BigInt> c(n + 1);
    c[0] = 1;
    for (unsigned long k = 0; k < n; ++k)
        c[k + 1] = exact_div(c[k] * BigInt(n - k) * BigInt(n + k + 1),
                             BigInt(k + 1) * BigInt(k + 1));
    return IntPolynomial(std::move(c));
}

IntPolynomial schroder_little_def(unsigned long n) {
    if (n < 1) throw std::invalid_argument("s_n requires n >= 1");
    auto pw = xplus1_powers(n - 1);
    IntPolynomial acc;
    for (unsigned long k = 1; k <= n; ++k) acc += (pw[n - k] * narayana(n, k)).shifted(k - 1);
    return acc;
}

IntPolynomial schroder_large_def(unsigned long n) {
    std::vector<BigInt> c(n + 1);
    c[0] = 1;
    for (unsigned long k = 0; k < n; ++k)
        c[k + 1] = exact_div(c[k] * BigInt(n + k + 1) * BigInt(n - k),
                             BigInt(k + 1) * BigInt(k + 2));
    return IntPolynomial(std::move(c));
}

IntPolynomial big_w_def(unsigned long n) {
    auto row = w_coeff_row(n);
    auto cat = catalan_upto(n - 1);
    std::vector<BigInt> c(n);
    for (unsigned long k = 1; k <= n; ++k) c[k - 1] = row[k] * cat[k - 1];
    return IntPolynomial(std::move(c));
}

IntPolynomial small_w_def(unsigned long n) {
    auto row = w_coeff_row(n);
    std::vector<BigInt> c(n);
    for (unsigned long k = 1; k <= n; ++k) c[k - 1] = row[k];
    return IntPolynomial(std::move(c));
}

IntPolynomial delannoy_poly(unsigned long n) {
    IntPolynomial a = delannoy_def_weighted(n);
    IntPolynomial b = delannoy_def_plain(n);
    if (a != b)
        throw std::logic_error("Delannoy polynomial construction mismatch at n = " +
                               std::to_string(n));
    return a;
}

IntPolynomial schroder_little_poly(unsigned long n) { return schroder_little_def(n); }
IntPolynomial schroder_large_poly(unsigned long n) { return schroder_large_def(n); }
IntPolynomial big_w_poly(unsigned long n) { return big_w_def(n); }
IntPolynomial small_w_poly(unsigned long n) { return small_w_def(n); }

RatPolynomial r_poly(unsigned long k) {
    std::vector<Rational> c(k + 1);
    for (unsigned long l = 0; l <= k; ++l)
        c[l] = make_rational(binomial(k + l, 2 * l) * binomial(2 * l, l),
                             BigInt(2 * static_cast<long>(l) - 1));
    return RatPolynomial(std::move(c));
}

RatPolynomial r_poly_alt(unsigned long k) {
    std::vector<Rational> c(k + 1);
    for (unsigned long l = 0; l <= k; ++l)
        c[l] = make_rational(binomial(k, l) * binomial(k + l, l),
                             BigInt(2 * static_cast<long>(l) - 1));
    return RatPolynomial(std::move(c));
}

RatPolynomial f_poly(unsigned long n) {
    if (n < 1) throw std::invalid_argument("f_n requires n >= 1");
    PolyCaches caches;
    caches.ensure_D(static_cast<long>(n) - 1);
    RatPolynomial acc;
    for (unsigned long k = 0; k < n; ++k) acc += to_rational(caches.D[k]) * r_poly(k);
    return acc * make_rational(BigInt(1), BigInt(n));
}

BigInt trinomial_T(unsigned long n, const BigInt& b, const BigInt& c) {
    BigInt acc(0);
    for (unsigned long k = 0; 2 * k <= n; ++k)
        acc += binomial(n, 2 * k) * binomial(2 * k, k) * pow_int(b, n - 2 * k) * pow_int(c, k);
    return acc;
}

BigInt motzkin_M(unsigned long n, const BigInt& b, const BigInt& c) {
    BigInt acc(0);
    auto cat = catalan_upto(n / 2);
    for (unsigned long k = 0; 2 * k <= n; ++k)
        acc += binomial(n, 2 * k) * cat[k] * pow_int(b, n - 2 * k) * pow_int(c, k);
    return acc;
}

BigInt trinomial_T_expansion(unsigned long n, const BigInt& b, const BigInt& c) {
    IntPolynomial base{c, b, BigInt(1)};
    return base.pow(n).coeff(n);
}

BigInt delannoy_general(unsigned long m, unsigned long n) {
    BigInt acc(0);
    unsigned long top = std::min(m, n);
    BigInt term(1);
    for (unsigned long k = 0; k <= top; ++k) {
        acc += term;
        if (k < top)
            term = exact_div(term * BigInt(m - k) * BigInt(n - k) * 2,
                             BigInt(k + 1) * BigInt(k + 1));
    }
    return acc;
}

Rational u_lemma25(long j, long p) {
    if (j < 0 || j > p) throw std::invalid_argument("u_j requires 0 <= j <= p");
    Rational acc(0);
    for (long k = j + 1; k <= p; ++k) {
        Rational inner = Rational(2 * j + 1) -
                         make_rational(BigInt(j) * BigInt(j + 1) * BigInt(2 * k + 1),
                                       BigInt(k) * BigInt(k + 1));
        acc += Rational(BigInt(k - 1) * binomial_big(BigInt(k + j), 2 * j)) * inner;
    }
    return acc;
}

// ---- exact value streams ------------------------------------------------

namespace {

// a_0 = 1, a_1 = b; (n+s2) a_{n+2} = (2n+s1) b a_{n+1} - (n+1) d a_n.
// s1 = 3, s2 = 2 gives the T/Delannoy shape; s1 = 5, s2 = 4 the M/Schroder one.
std::vector<BigInt> two_term_values(const BigInt& b, const BigInt& d, long s1, long s2,
                                    unsigned long count) {
    std::vector<BigInt> a;
    a.reserve(count);
    if (count == 0) return a;
    a.emplace_back(1);
    if (count >= 2) a.push_back(b);
    for (long n = 0; n + 2 < static_cast<long>(count); ++n)
        a.push_back(exact_div(BigInt(2 * n + s1) * b * a[n + 1] - BigInt(n + 1) * d * a[n],
                              BigInt(n + s2)));
    return a;
}

}  // namespace

std::vector<BigInt> delannoy_values(const BigInt& x0, unsigned long n) {
    return two_term_values(2 * x0 + 1, BigInt(1), 3, 2, n + 1);
}

std::vector<BigInt> schroder_little_values(const BigInt& x0, unsigned long n) {
    auto a = two_term_values(2 * x0 + 1, BigInt(1), 5, 4, n);  // a[i] = s_{i+1}(x0)
    std::vector<BigInt> s(n + 1);
    for (unsigned long i = 1; i <= n; ++i) s[i] = a[i - 1];
    return s;
}

std::vector<BigInt> trinomial_values(const BigInt& b, const BigInt& c, unsigned long n) {
    return two_term_values(b, b * b - 4 * c, 3, 2, n + 1);
}

std::vector<BigInt> motzkin_values(const BigInt& b, const BigInt& c, unsigned long n) {
    return two_term_values(b, b * b - 4 * c, 5, 4, n + 1);
}

BigInt r_value(unsigned long k, const BigInt& x0) {
    BigInt acc(-1);
    BigInt xp(1);
    for (unsigned long l = 1; l <= k; ++l) {
        xp *= x0;
        acc += binomial(k + l, 2 * l) * exact_div(binomial(2 * l, l), BigInt(2 * l - 1)) * xp;
    }
    return acc;
}

// ---- recurrence-built polynomial caches ----------------------------------

void PolyCaches::ensure_D(long n) {
    if (D.empty()) {
        D.push_back(IntPolynomial::constant(BigInt(1)));
        D.push_back(two_x_plus_1());
    }
    while (static_cast<long>(D.size()) <= n) {
        long i = static_cast<long>(D.size());
        IntPolynomial num = D[i - 1] * two_x_plus_1() * BigInt(2 * i - 1) - D[i - 2] * BigInt(i - 1);
        std::vector<BigInt> c;
        c.reserve(num.coeffs().size());
        for (const auto& v : num.coeffs()) c.push_back(exact_div(v, BigInt(i)));
        D.emplace_back(std::move(c));
    }
}

void PolyCaches::ensure_s(long n) {
    if (s.empty()) {
        s.push_back(IntPolynomial());  // index 0 unused
        s.push_back(IntPolynomial::constant(BigInt(1)));
        s.push_back(two_x_plus_1());
    }
    while (static_cast<long>(s.size()) <= n) {
        long i = static_cast<long>(s.size());
        IntPolynomial num =
            s[i - 1] * two_x_plus_1() * BigInt(2 * i - 1) - s[i - 2] * BigInt(i - 2);
        std::vector<BigInt> c;
        c.reserve(num.coeffs().size());
        for (const auto& v : num.coeffs()) c.push_back(exact_div(v, BigInt(i + 1)));
        s.emplace_back(std::move(c));
    }
}

void PolyCaches::ensure_S(long n) {
    ensure_s(n);
    if (S.empty()) S.push_back(IntPolynomial::constant(BigInt(1)));
    IntPolynomial xp1{BigInt(1), BigInt(1)};
    while (static_cast<long>(S.size()) <= n) {
        long i = static_cast<long>(S.size());
        S.push_back(s[i] * xp1);
    }
}

void PolyCaches::ensure_W(long n) {
    if (W.empty()) {
        W.push_back(IntPolynomial());  // index 0 unused
        for (long i = 1; i <= 3; ++i) W.push_back(big_w_def(i));
    }
    while (static_cast<long>(W.size()) <= n) {
        long i = static_cast<long>(W.size());
        long m = i - 3;  // recurrence index
        IntPolynomial lin2{BigInt(3 * m * m + 11 * m + 10),
                           BigInt(4) * BigInt(2 * m + 3) * BigInt(2 * m + 3)};
        IntPolynomial lin1{BigInt(3 * m * m + 13 * m + 14),
                           BigInt(4) * BigInt(2 * m + 5) * BigInt(2 * m + 5)};
        IntPolynomial num = W[i - 1] * lin2 * (BigInt(m + 3) * BigInt(2 * m + 5)) -
                            W[i - 2] * lin1 * (BigInt(m + 1) * BigInt(2 * m + 3)) +
                            W[i - 3] * (BigInt(m) * BigInt(m + 1) * BigInt(m + 1) *
                                        BigInt(2 * m + 5));
        BigInt div = BigInt(m + 3) * BigInt(m + 3) * BigInt(m + 4) * BigInt(2 * m + 3);
        std::vector<BigInt> c;
        c.reserve(num.coeffs().size());
        for (const auto& v : num.coeffs()) c.push_back(exact_div(v, div));
        W.emplace_back(std::move(c));
    }
}

void PolyCaches::ensure_w(long n) {
    if (w.empty()) {
        w.push_back(IntPolynomial());  // index 0 unused
        w.push_back(IntPolynomial::constant(BigInt(1)));
        w.push_back(two_x_plus_1());
    }
    while (static_cast<long>(w.size()) <= n) {
        long i = static_cast<long>(w.size());
        long m = i - 2;  // recurrence index
        IntPolynomial num =
            w[i - 1] * two_x_plus_1() * BigInt(2 * m + 3) - w[i - 2] * BigInt(m);
        std::vector<BigInt> c;
        c.reserve(num.coeffs().size());
        for (const auto& v : num.coeffs()) c.push_back(exact_div(v, BigInt(m + 3)));
        w.emplace_back(std::move(c));
    }
}

const IntPolynomial& PolyCaches::ds_prefix(long n) {
    ensure_D(std::max<long>(n - 1, 1));
    ensure_s(std::max<long>(n, 1));
    if (ds_.empty()) ds_.push_back(IntPolynomial());
    while (static_cast<long>(ds_.size()) <= n) {
        long m = static_cast<long>(ds_.size()) - 1;
        ds_.push_back(ds_[m] + D[m] * s[m + 1]);
    }
    return ds_[n];
}

// ---- modular streaming ----------------------------------------------------

namespace {

using RV = std::vector<TrackedResidue>;

TrackedResidue exact_res(const BigInt& v, const BigInt& p, int wp) {
    return TrackedResidue::from_exact(v, p, wp);
}

long vp_of(const BigInt& n, const BigInt& p) { return n == 0 ? 0 : int_valuation(n, p); }

// Total p-adic digits consumed by the leading divisors of the family's
// recurrence while producing indices up to n_max.
long divisor_digits(const SequenceFamily& fam, const BigInt& p, long n_max) {
    long total = 0;
    switch (fam.tag) {
        case FamilyTag::DelannoyPoly:
        case FamilyTag::TrinomialT:
        case FamilyTag::DelannoyGeneral:
            for (long i = 2; i <= n_max; ++i) total += vp_of(BigInt(i), p);
            break;
        case FamilyTag::LittleSchroderPoly:
        case FamilyTag::LargeSchroderPoly:
            // internal index m = n - 1 runs to n_max - 1; divisor (m' + 4)
            for (long n = 0; n + 2 <= n_max - 1; ++n) total += vp_of(BigInt(n + 4), p);
            break;
        case FamilyTag::MotzkinM:
            for (long n = 0; n + 2 <= n_max; ++n) total += vp_of(BigInt(n + 4), p);
            break;
        case FamilyTag::SmallW:
            for (long i = 3; i <= n_max; ++i) total += vp_of(BigInt(i + 1), p);
            break;
        case FamilyTag::BigW:
            for (long i = 4; i <= n_max; ++i) {
                long m = i - 3;
                total += vp_of(BigInt(m + 3) * BigInt(m + 3) * BigInt(m + 4) * BigInt(2 * m + 3),
                               p);
            }
            break;
        case FamilyTag::RPoly:
            break;
        case FamilyTag::FPoly:
            for (long i = 2; i <= n_max - 1; ++i) total += vp_of(BigInt(i), p);  // D stream
            for (long n = 2; n <= n_max; ++n) total += vp_of(BigInt(n), p);      // /n steps
            break;
        case FamilyTag::LemmaU:
            break;
    }
    return total;
}

// Modular two-term recurrence, same shape as two_term_values.
RV mod_two_term(const BigInt& bb, const BigInt& dd, long s1, long s2, const BigInt& p, int wp,
                long count) {
    RV a;
    a.reserve(count);
    if (count <= 0) return a;
    a.push_back(exact_res(BigInt(1), p, wp));
    if (count >= 2) a.push_back(exact_res(bb, p, wp));
    for (long n = 0; n + 2 < count; ++n) {
        TrackedResidue num = exact_res(BigInt(2 * n + s1) * bb, p, wp) * a[n + 1] -
                             exact_res(BigInt(n + 1) * dd, p, wp) * a[n];
        a.push_back(num / exact_res(BigInt(n + s2), p, wp));
    }
    return a;
}

RV mod_r_values(const BigInt& x0, const BigInt& p, int wp, long n_max) {
    RV out;
    out.reserve(n_max + 1);
    TrackedResidue xr = exact_res(x0, p, wp);
    for (long n = 0; n <= n_max; ++n) {
        TrackedResidue acc = exact_res(BigInt(-1), p, wp);
        TrackedResidue xp = exact_res(BigInt(1), p, wp);
        for (long l = 1; l <= n; ++l) {
            xp = xp * xr;
            BigInt coeff =
                binomial(n + l, 2 * l) * exact_div(binomial(2 * l, l), BigInt(2 * l - 1));
            acc = acc + exact_res(coeff, p, wp) * xp;
        }
        out.push_back(acc);
    }
    return out;
}

}  // namespace

long family_base_index(FamilyTag t) {
    switch (t) {
        case FamilyTag::LittleSchroderPoly:
        case FamilyTag::BigW:
        case FamilyTag::SmallW:
        case FamilyTag::FPoly:
            return 1;
        default:
            return 0;
    }
}

std::string SequenceFamily::name() const {
    switch (tag) {
        case FamilyTag::DelannoyPoly: return "delannoy";
        case FamilyTag::LittleSchroderPoly: return "schroder_little";
        case FamilyTag::LargeSchroderPoly: return "schroder_large";
        case FamilyTag::BigW: return "W";
        case FamilyTag::SmallW: return "w";
        case FamilyTag::TrinomialT: return "T(" + b.get_str() + "," + c.get_str() + ")";
        case FamilyTag::MotzkinM: return "M(" + b.get_str() + "," + c.get_str() + ")";
        case FamilyTag::RPoly: return "R";
        case FamilyTag::FPoly: return "f";
        case FamilyTag::DelannoyGeneral: return "delannoy_general";
        case FamilyTag::LemmaU: return "u(p=" + std::to_string(p) + ")";
    }
    return "?";
}

std::vector<StreamItem> mod_stream(const SequenceFamily& fam, const BigInt& x0, const BigInt& p,
                                   int prec, long n_max) {
    require_odd_prime(p);
    if (prec < 1) throw std::invalid_argument("precision must be >= 1");
    if (BigInt(n_max) >= 2 * p)
        throw std::invalid_argument("mod_stream requires n_max < 2p");
    if (fam.tag == FamilyTag::LemmaU)
        throw std::invalid_argument(
            "LemmaU values are not p-adic integers in general; use the exact path");

    int wp = prec + static_cast<int>(divisor_digits(fam, p, n_max));
    long base = family_base_index(fam.tag);
    std::vector<StreamItem> out;

    auto emit = [&](long n, const TrackedResidue& v) {
        if (!v.knows_mod(prec))
            throw PrecisionExhaustedError("stream value at n=" + std::to_string(n) +
                                          " lost target precision");
        out.push_back(StreamItem{n, v});
    };

    switch (fam.tag) {
        case FamilyTag::DelannoyPoly: {
            RV a = mod_two_term(2 * x0 + 1, BigInt(1), 3, 2, p, wp, n_max + 1);
            for (long n = 0; n <= n_max; ++n) emit(n, a[n]);
            break;
        }
        case FamilyTag::LittleSchroderPoly: {
            RV a = mod_two_term(2 * x0 + 1, BigInt(1), 5, 4, p, wp, n_max);
            for (long n = 1; n <= n_max; ++n) emit(n, a[n - 1]);
            break;
        }
        case FamilyTag::LargeSchroderPoly: {
            RV a = mod_two_term(2 * x0 + 1, BigInt(1), 5, 4, p, wp, n_max);
            TrackedResidue xp1 = exact_res(x0 + 1, p, wp);
            emit(0, exact_res(BigInt(1), p, wp));
            for (long n = 1; n <= n_max; ++n) emit(n, xp1 * a[n - 1]);
            break;
        }
        case FamilyTag::TrinomialT: {
            RV a = mod_two_term(fam.b, fam.b * fam.b - 4 * fam.c, 3, 2, p, wp, n_max + 1);
            for (long n = 0; n <= n_max; ++n) emit(n, a[n]);
            break;
        }
        case FamilyTag::MotzkinM: {
            RV a = mod_two_term(fam.b, fam.b * fam.b - 4 * fam.c, 5, 4, p, wp, n_max + 1);
            for (long n = 0; n <= n_max; ++n) emit(n, a[n]);
            break;
        }
        case FamilyTag::DelannoyGeneral: {
            // Central Delannoy numbers D_{n,n}; x0 is ignored for this family.
            RV a = mod_two_term(BigInt(3), BigInt(1), 3, 2, p, wp, n_max + 1);
            for (long n = 0; n <= n_max; ++n) emit(n, a[n]);
            break;
        }
        case FamilyTag::SmallW: {
            RV a;
            a.push_back(exact_res(BigInt(1), p, wp));
            if (n_max >= 2) a.push_back(exact_res(2 * x0 + 1, p, wp));
            for (long m = 1; m + 2 <= n_max; ++m) {
                TrackedResidue num =
                    exact_res(BigInt(2 * m + 3) * (2 * x0 + 1), p, wp) * a[m] -
                    exact_res(BigInt(m), p, wp) * a[m - 1];
                a.push_back(num / exact_res(BigInt(m + 3), p, wp));
            }
            for (long n = 1; n <= n_max; ++n) emit(n, a[n - 1]);
            break;
        }
        case FamilyTag::BigW: {
            RV a;
            for (long i = 1; i <= std::min<long>(3, n_max); ++i)
                a.push_back(exact_res(big_w_def(i).eval(x0), p, wp));
            for (long i = 4; i <= n_max; ++i) {
                long m = i - 3;
                BigInt lin2 = BigInt(4) * x0 * BigInt(2 * m + 3) * BigInt(2 * m + 3) +
                              BigInt(3 * m * m + 11 * m + 10);
                BigInt lin1 = BigInt(4) * x0 * BigInt(2 * m + 5) * BigInt(2 * m + 5) +
                              BigInt(3 * m * m + 13 * m + 14);
                TrackedResidue num =
                    exact_res(BigInt(m + 3) * BigInt(2 * m + 5) * lin2, p, wp) * a[i - 2] -
                    exact_res(BigInt(m + 1) * BigInt(2 * m + 3) * lin1, p, wp) * a[i - 3] +
                    exact_res(BigInt(m) * BigInt(m + 1) * BigInt(m + 1) * BigInt(2 * m + 5), p,
                              wp) *
                        a[i - 4];
                BigInt div = BigInt(m + 3) * BigInt(m + 3) * BigInt(m + 4) * BigInt(2 * m + 3);
                a.push_back(num / exact_res(div, p, wp));
            }
            for (long n = 1; n <= n_max; ++n) emit(n, a[n - 1]);
            break;
        }
        case FamilyTag::RPoly: {
            RV a = mod_r_values(x0, p, wp, n_max);
            for (long n = 0; n <= n_max; ++n) emit(n, a[n]);
            break;
        }
        case FamilyTag::FPoly: {
            RV d = mod_two_term(2 * x0 + 1, BigInt(1), 3, 2, p, wp,
                                std::max<long>(n_max, 1));
            RV r = mod_r_values(x0, p, wp, n_max - 1);
            TrackedResidue acc = TrackedResidue::exact_zero(p);
            for (long n = 1; n <= n_max; ++n) {
                acc = acc + d[n - 1] * r[n - 1];
                emit(n, acc / exact_res(BigInt(n), p, wp));
            }
            break;
        }
        case FamilyTag::LemmaU:
            break;  // unreachable
    }
    return out;
}

Rational family_exact_value(const SequenceFamily& fam, const BigInt& x0, long n) {
    switch (fam.tag) {
        case FamilyTag::DelannoyPoly:
            return Rational(delannoy_def_plain(n).eval(x0));
        case FamilyTag::LittleSchroderPoly:
            return Rational(schroder_little_def(n).eval(x0));
        case FamilyTag::LargeSchroderPoly:
            return Rational(schroder_large_def(n).eval(x0));
        case FamilyTag::BigW:
            return Rational(big_w_def(n).eval(x0));
        case FamilyTag::SmallW:
            return Rational(small_w_def(n).eval(x0));
        case FamilyTag::TrinomialT:
            return Rational(trinomial_T(n, fam.b, fam.c));
        case FamilyTag::MotzkinM:
            return Rational(motzkin_M(n, fam.b, fam.c));
        case FamilyTag::RPoly:
            return r_poly(n).eval(Rational(x0));
        case FamilyTag::FPoly:
            return f_poly(n).eval(Rational(x0));
        case FamilyTag::DelannoyGeneral:
            return Rational(delannoy_general(n, n));
        case FamilyTag::LemmaU:
            return u_lemma25(n, fam.p);
    }
    throw std::logic_error("unknown family");
}

}  // namespace dsv
