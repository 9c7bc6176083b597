#pragma once

// Truncated power series with exact rational coefficients: just enough for
// composition and compositional inversion of exponential generating
// functions.

#include "boxpoly/numbers.hpp"

namespace boxpoly {

// Coefficients 0..order; all arithmetic truncates at the common order.
class PowerSeries {
public:
    explicit PowerSeries(unsigned order) : c_(order + 1) {}
    PowerSeries(unsigned order, std::vector<BigRat> coeffs) : c_(std::move(coeffs)) { c_.resize(order + 1); }

    unsigned order() const { return static_cast<unsigned>(c_.size()) - 1; }
    const BigRat& operator[](std::size_t i) const { return c_[i]; }
    BigRat& operator[](std::size_t i) { return c_[i]; }

    PowerSeries operator+(const PowerSeries& o) const {
        PowerSeries r(order());
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
        return r;
    }

    PowerSeries operator-(const PowerSeries& o) const {
        PowerSeries r(order());
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] - o.c_[i];
        return r;
    }

    PowerSeries operator*(const PowerSeries& o) const {
        PowerSeries r(order());
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            for (std::size_t j = 0; i + j < c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
        }
        return r;
    }

    // this(g) for g with zero constant term.
    PowerSeries compose(const PowerSeries& g) const {
        if (g[0] != 0) throw std::invalid_argument("PowerSeries::compose: inner constant term must vanish");
        PowerSeries r(order());
        for (std::size_t i = c_.size(); i-- > 0;) {
            r = r * g;
            r.c_[0] += c_[i];
        }
        return r;
    }

    // h with f(h(x)) = x; requires f = x + higher order.
    PowerSeries compositional_inverse() const {
        if (c_.size() < 2 || c_[0] != 0 || c_[1] != 1)
            throw std::invalid_argument("PowerSeries: inversion needs f = x + O(x^2)");
        PowerSeries h(order());
        if (order() >= 1) h[1] = 1;
        for (unsigned k = 2; k <= order(); ++k) {
            // With h correct below degree k, [x^k] f(h) is linear in h_k with
            // unit coefficient; solve for it.
            PowerSeries probe = compose(h);
            h[k] = -probe[k];
        }
        return h;
    }

private:
    std::vector<BigRat> c_;
};

}  // namespace boxpoly
