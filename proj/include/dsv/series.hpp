// Truncated power series in y whose coefficients are polynomials in x.
// All arithmetic discards terms of y-degree above the truncation order.
#ifndef DSV_SERIES_HPP
#define DSV_SERIES_HPP

#include <vector>

#include "dsv/poly.hpp"

namespace dsv {

class PolySeries {
  public:
    // Keeps y^0 .. y^order.
    explicit PolySeries(int order) : order_(order), c_(order + 1) {}

    int order() const { return order_; }
    const RatPolynomial& coeff(int j) const { return c_.at(j); }
    void set_coeff(int j, RatPolynomial p) {
        if (j <= order_) c_.at(j) = std::move(p);
    }

    PolySeries operator+(const PolySeries& o) const {
        PolySeries r(std::min(order_, o.order_));
        for (int j = 0; j <= r.order_; ++j) r.c_[j] = c_[j] + o.c_[j];
        return r;
    }
    PolySeries operator-(const PolySeries& o) const {
        PolySeries r(std::min(order_, o.order_));
        for (int j = 0; j <= r.order_; ++j) r.c_[j] = c_[j] - o.c_[j];
        return r;
    }
    PolySeries operator*(const PolySeries& o) const {
        PolySeries r(std::min(order_, o.order_));
        for (int i = 0; i <= order_ && i <= r.order_; ++i) {
            if (c_[i].is_zero()) continue;
            for (int j = 0; i + j <= r.order_ && j <= o.order_; ++j) {
                if (o.c_[j].is_zero()) continue;
                r.c_[i + j] += c_[i] * o.c_[j];
            }
        }
        return r;
    }

    bool is_zero() const {
        for (const auto& p : c_)
            if (!p.is_zero()) return false;
        return true;
    }

    // Largest x-degree over all kept coefficients (-1 when zero).
    long max_x_degree() const {
        long d = -1;
        for (const auto& p : c_) d = std::max(d, p.degree());
        return d;
    }

  private:
    int order_;
    std::vector<RatPolynomial> c_;
};

}  // namespace dsv

#endif
