#pragma once

// Dense univariate polynomials over BigRat and the operator calculus on them:
// shift E^a, forward difference Δ, derivative D, argument scaling M_a,
// monic gcd, and the geometric-product series expansion.
//
// Invariant: the coefficient vector never ends in a zero, so the zero
// polynomial is the empty vector and equality is plain structural equality.

#include "boxpoly/numbers.hpp"

#include <algorithm>
#include <initializer_list>
#include <sstream>
#include <utility>

namespace boxpoly {

class Polynomial {
public:
    Polynomial() = default;

    // Coefficients lowest degree first.
    explicit Polynomial(std::vector<BigRat> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }
    Polynomial(std::initializer_list<BigRat> coeffs) : coeffs_(coeffs) { normalize(); }

    static Polynomial zero() { return Polynomial(); }
    static Polynomial constant(const BigRat& c) { return Polynomial({c}); }

    static Polynomial monomial(std::size_t degree, const BigRat& c = 1) {
        if (c == 0) return Polynomial();
        std::vector<BigRat> v(degree + 1);
        v[degree] = c;
        return Polynomial(std::move(v));
    }

    // x
    static Polynomial x() { return monomial(1); }

    bool is_zero() const { return coeffs_.empty(); }

    // Degree of the zero polynomial is -1 by convention.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const std::vector<BigRat>& coefficients() const { return coeffs_; }

    BigRat coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigRat(0); }

    BigRat leading_coefficient() const { return coeffs_.empty() ? BigRat(0) : coeffs_.back(); }

    bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial operator+(const Polynomial& o) const {
        std::vector<BigRat> r(std::max(coeffs_.size(), o.coeffs_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
        return Polynomial(std::move(r));
    }

    Polynomial operator-() const {
        std::vector<BigRat> r(coeffs_);
        for (auto& c : r) c = -c;
        return Polynomial(std::move(r));
    }

    Polynomial operator-(const Polynomial& o) const { return *this + (-o); }

    Polynomial operator*(const Polynomial& o) const {
        if (is_zero() || o.is_zero()) return Polynomial();
        std::vector<BigRat> r(coeffs_.size() + o.coeffs_.size() - 1);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
        return Polynomial(std::move(r));
    }

    Polynomial operator*(const BigRat& s) const {
        if (s == 0) return Polynomial();
        std::vector<BigRat> r(coeffs_);
        for (auto& c : r) c *= s;
        return Polynomial(std::move(r));
    }

    Polynomial operator/(const BigRat& s) const {
        if (s == 0) throw std::domain_error("Polynomial: division by zero scalar");
        return *this * (BigRat(1) / s);
    }

    Polynomial pow(unsigned e) const {
        Polynomial r = constant(1), b = *this;
        for (; e; e >>= 1) {
            if (e & 1) r = r * b;
            b = b * b;
        }
        return r;
    }

    // Horner evaluation, exact.
    BigRat eval(const BigRat& x) const {
        BigRat acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    // p(x+a) by binomial expansion.
    Polynomial shift(const BigRat& a) const {
        if (a == 0 || is_zero()) return *this;
        std::size_t n = coeffs_.size();
        std::vector<BigRat> r(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (coeffs_[i] == 0) continue;
            BigRat apow = 1;
            for (std::size_t j = 0; j <= i; ++j) {
                // coefficient of x^{i-j}: C(i,j) a^j c_i
                r[i - j] += BigRat(binomial(static_cast<long long>(i), static_cast<long long>(j))) *
                            apow * coeffs_[i];
                apow *= a;
            }
        }
        return Polynomial(std::move(r));
    }

    // Δᵏ(p) with Δ(p) = p(x+1) - p(x); degree drops by exactly k (or to zero).
    Polynomial forward_difference(unsigned k = 1) const {
        Polynomial p = *this;
        for (unsigned i = 0; i < k && !p.is_zero(); ++i) p = p.shift(1) - p;
        return p;
    }

    Polynomial derivative() const {
        if (coeffs_.size() <= 1) return Polynomial();
        std::vector<BigRat> r(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) r[i - 1] = coeffs_[i] * BigRat(i);
        return Polynomial(std::move(r));
    }

    // p(a·x)
    Polynomial scale_argument(const BigRat& a) const {
        std::vector<BigRat> r(coeffs_);
        BigRat apow = 1;
        for (std::size_t i = 0; i < r.size(); ++i) {
            r[i] *= apow;
            apow *= a;
        }
        return Polynomial(std::move(r));
    }

    Polynomial monic() const {
        if (is_zero()) return *this;
        return *this / leading_coefficient();
    }

    // Remainder of *this by nonzero d (used by the gcd below).
    Polynomial remainder(const Polynomial& d) const {
        if (d.is_zero()) throw std::domain_error("Polynomial: remainder by zero");
        Polynomial r = *this;
        while (!r.is_zero() && r.degree() >= d.degree()) {
            BigRat q = r.leading_coefficient() / d.leading_coefficient();
            std::size_t s = static_cast<std::size_t>(r.degree() - d.degree());
            r = r - d * monomial(s, q);
        }
        return r;
    }

    // Coefficients "num/den" lowest degree first, e.g. ["7","12","6"].
    std::vector<std::string> to_coefficient_strings() const {
        std::vector<std::string> out;
        out.reserve(coeffs_.size());
        for (const auto& c : coeffs_) out.push_back(rat_to_string(c));
        return out;
    }

    static Polynomial from_coefficient_strings(const std::vector<std::string>& strs) {
        std::vector<BigRat> v;
        v.reserve(strs.size());
        for (const auto& s : strs) v.push_back(rat_from_string(s));
        return Polynomial(std::move(v));
    }

    // Human display, descending powers: "6x^2+12x+7", "x^2-1/2x", "0".
    std::string to_text() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int i = degree(); i >= 0; --i) {
            const BigRat c = coeff(static_cast<std::size_t>(i));
            if (c == 0) continue;
            BigRat a = c;
            if (first) {
                if (a < 0) { os << "-"; a = -a; }
            } else {
                os << (a < 0 ? "-" : "+");
                if (a < 0) a = -a;
            }
            if (i == 0 || a != 1) os << rat_to_string(a);
            if (i > 0) {
                os << "x";
                if (i > 1) os << "^" << i;
            }
            first = false;
        }
        return os.str();
    }

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<BigRat> coeffs_;
};

inline Polynomial operator*(const BigRat& s, const Polynomial& p) { return p * s; }

// Monic gcd via the Euclidean algorithm over the rationals.
inline Polynomial poly_gcd(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() && q.is_zero()) throw std::domain_error("poly_gcd: gcd undefined for two zero polynomials");
    Polynomial a = p, b = q;
    while (!b.is_zero()) {
        Polynomial r = a.remainder(b);
        a = b;
        b = r;
    }
    return a.monic();
}

// x(x-1)(x-2)...(x-s+1); the empty product for s = 0.
inline Polynomial falling_factorial(unsigned s) {
    Polynomial p = Polynomial::constant(1);
    for (unsigned i = 0; i < s; ++i) p = p * Polynomial({BigRat(-static_cast<long long>(i)), 1});
    return p;
}

// Coefficients of t^0..t^order of 1/prod_i (1 - a_i t), by repeated
// geometric-series convolution. Index m carries the complete homogeneous
// symmetric function h_m(a_1,...,a_k).
inline std::vector<BigRat> rational_series(const std::vector<BigRat>& poles, unsigned order) {
    std::vector<BigRat> c(order + 1);
    c[0] = 1;
    for (const auto& a : poles)
        for (unsigned j = 1; j <= order; ++j) c[j] += a * c[j - 1];
    return c;
}

}  // namespace boxpoly
