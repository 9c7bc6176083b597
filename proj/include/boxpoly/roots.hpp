#pragma once

// Arbitrary-precision complex root extraction (Aberth-Ehrlich) and the root-
// location checks for box polynomials: real parts -n/2, the mn/π imaginary
// bound, the annulus bounds, square-freeness, the n=1 trigonometric roots
// and the small-m radical formulas for the imaginary parts.
//
// Rational data is converted to floating point only at solver entry; bound
// values stay exact rationals and are compared against root enclosures
// (root value ± a residual-derived radius).

#include "boxpoly/boxpoly.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

namespace boxpoly {

template <unsigned Bits>
using BigFloatOf = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<Bits, boost::multiprecision::digit_base_2>,
                                                 boost::multiprecision::et_off>;
template <unsigned Bits>
using BigComplexOf = boost::multiprecision::number<
    boost::multiprecision::complex_adaptor<boost::multiprecision::cpp_bin_float<Bits, boost::multiprecision::digit_base_2>>,
    boost::multiprecision::et_off>;

inline constexpr unsigned kSupportedPrecisions[] = {128, 256, 512, 1024};

template <unsigned Bits>
struct ComplexRootOf {
    BigComplexOf<Bits> value;
    BigFloatOf<Bits> residual;          // |p(z)| / (|lc| (1+|z|)^deg)
    BigFloatOf<Bits> enclosure_radius;  // deg * |p(z)/p'(z)|, a disk certain to hold a root
};

struct RootFindingError : std::runtime_error {
    explicit RootFindingError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

template <unsigned Bits>
std::vector<BigComplexOf<Bits>> to_float_coeffs(const Polynomial& p) {
    std::vector<BigComplexOf<Bits>> c;
    c.reserve(p.coefficients().size());
    for (const auto& q : p.coefficients())
        c.emplace_back(static_cast<BigFloatOf<Bits>>(q), BigFloatOf<Bits>(0));
    return c;
}

template <unsigned Bits>
BigComplexOf<Bits> horner(const std::vector<BigComplexOf<Bits>>& c, const BigComplexOf<Bits>& z) {
    BigComplexOf<Bits> acc(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

}  // namespace detail

// All deg(p) roots by simultaneous Aberth-Ehrlich iteration from perturbed
// circular starting points. Deterministic. Escalates the working precision
// once (doubling it) before giving up.
template <unsigned Bits>
std::vector<ComplexRootOf<Bits>> find_roots(const Polynomial& p) {
    using F = BigFloatOf<Bits>;
    using C = BigComplexOf<Bits>;
    const int deg = p.degree();
    if (deg < 1) throw std::invalid_argument("find_roots: need degree >= 1");

    auto coeffs = detail::to_float_coeffs<Bits>(p);
    std::vector<C> dcoeffs(static_cast<std::size_t>(deg));
    for (int i = 1; i <= deg; ++i) dcoeffs[static_cast<std::size_t>(i - 1)] = coeffs[static_cast<std::size_t>(i)] * F(i);

    // Cauchy bound 1 + max |c_i / c_deg|.
    F lc = abs(coeffs.back());
    F bound = 0;
    for (int i = 0; i < deg; ++i) bound = std::max(bound, F(abs(coeffs[static_cast<std::size_t>(i)]) / lc));
    F radius = 1 + bound;

    const F pi = 4 * atan(F(1));
    const F golden_angle = pi * (3 - sqrt(F(5)));
    std::vector<C> z(static_cast<std::size_t>(deg));
    for (int k = 0; k < deg; ++k) {
        F theta = golden_angle * F(k) + F(1) / F(2);
        F r = radius * (1 + F(k + 1) / F(1000 * deg));
        z[static_cast<std::size_t>(k)] = C(r * cos(theta), r * sin(theta));
    }

    // stop once relative steps sit well below the certification needs but
    // above the evaluation-noise floor (a few hundred ulps at full precision)
    const F step_tol = ldexp(F(1), -3 * static_cast<int>(Bits) / 4);
    const int max_iters = 200 * deg;
    bool converged = false;
    for (int iter = 0; iter < max_iters && !converged; ++iter) {
        F max_step = 0;
        for (int i = 0; i < deg; ++i) {
            C zi = z[static_cast<std::size_t>(i)];
            C pv = detail::horner(coeffs, zi);
            if (pv == C(0)) continue;
            C dv = detail::horner(dcoeffs, zi);
            if (dv == C(0)) {  // nudge off a critical point
                z[static_cast<std::size_t>(i)] += C(ldexp(F(1), -static_cast<int>(Bits) / 4), 0);
                max_step = radius;
                continue;
            }
            C newton = pv / dv;
            C sum(0);
            for (int j = 0; j < deg; ++j)
                if (j != i) sum += C(1) / (zi - z[static_cast<std::size_t>(j)]);
            C denom = C(1) - newton * sum;
            C w = (denom == C(0)) ? newton : newton / denom;
            z[static_cast<std::size_t>(i)] -= w;
            max_step = std::max(max_step, F(abs(w) / std::max(F(1), abs(zi))));
        }
        converged = max_step < step_tol;
    }

    const F cert = ldexp(F(1), -static_cast<int>(Bits) / 2);
    std::vector<ComplexRootOf<Bits>> out(static_cast<std::size_t>(deg));
    bool certified = true;
    for (int i = 0; i < deg; ++i) {
        C zi = z[static_cast<std::size_t>(i)];
        C pv = detail::horner(coeffs, zi);
        C dv = detail::horner(dcoeffs, zi);
        F scale = lc * pow(1 + abs(zi), deg);
        F residual = abs(pv) / scale;
        out[static_cast<std::size_t>(i)].value = zi;
        out[static_cast<std::size_t>(i)].residual = residual;
        out[static_cast<std::size_t>(i)].enclosure_radius =
            (dv == C(0)) ? F(1) : F(deg) * abs(pv / dv);
        certified = certified && residual <= cert;
    }
    if (!converged || !certified) {
        if constexpr (Bits < 2048) {
            // one escalation: double the precision and round back down
            auto hi = find_roots<Bits * 2>(p);
            for (int i = 0; i < deg; ++i) {
                const auto& h = hi[static_cast<std::size_t>(i)];
                out[static_cast<std::size_t>(i)].value =
                    C(static_cast<F>(h.value.real()), static_cast<F>(h.value.imag()));
                out[static_cast<std::size_t>(i)].residual = static_cast<F>(h.residual);
                out[static_cast<std::size_t>(i)].enclosure_radius = static_cast<F>(h.enclosure_radius);
            }
            return out;
        }
        F best = 0;
        for (const auto& r : out) best = std::max(best, r.residual);
        throw RootFindingError("find_roots: no convergence; best residual " + best.str(8));
    }
    return out;
}

// max over roots of |Re(z) + n/2| for B_{m,n}; certification threshold is
// 2^(-Bits/2).
template <unsigned Bits>
BigFloatOf<Bits> verify_real_parts(int m, int n) {
    if (m < 1) throw std::invalid_argument("verify_real_parts: need m >= 1");
    auto roots = find_roots<Bits>(box_poly(m, n));
    BigFloatOf<Bits> half_n = BigFloatOf<Bits>(n) / 2, dev = 0;
    for (const auto& r : roots) dev = std::max(dev, BigFloatOf<Bits>(abs(r.value.real() + half_n)));
    return dev;
}

// Roots of B_{m,1} = (x+1)^{m+1} - x^{m+1}: -1/2 + (i/2) sin θ_j/(cos θ_j - 1),
// θ_j = 2πj/(m+1), j = 1..m.
template <unsigned Bits>
std::vector<BigComplexOf<Bits>> closed_form_roots_n1(int m) {
    using F = BigFloatOf<Bits>;
    if (m < 1) throw std::invalid_argument("closed_form_roots_n1: need m >= 1");
    const F pi = 4 * atan(F(1));
    std::vector<BigComplexOf<Bits>> out;
    for (int j = 1; j <= m; ++j) {
        F theta = 2 * pi * F(j) / F(m + 1);
        F im = sin(theta) / (cos(theta) - 1) / 2;
        out.emplace_back(F(-1) / 2, im);
    }
    return out;
}

template <unsigned Bits>
struct BoundsReport {
    BigFloatOf<Bits> max_im;
    BigFloatOf<Bits> bound_im;  // mn/π
    BigFloatOf<Bits> min_modulus;
    BigFloatOf<Bits> max_modulus;
    BigRat inner;  // n/2
    BigRat outer;  // S(m+n,n) / ((n/2)^{m-1} C(m+n,n))
    bool imaginary_ok = false;
    bool annulus_ok = false;
};

// Exact annulus radii for B_{m,n} roots.
inline BigRat annulus_inner_radius(int n) { return BigRat(n, 2); }

inline BigRat annulus_outer_radius(int m, int n) {
    return BigRat(stirling2(m + n, n)) / (rat_pow(BigRat(n, 2), m - 1) * BigRat(binomial(m + n, n)));
}

template <unsigned Bits>
BoundsReport<Bits> bounds_check(int m, int n) {
    using F = BigFloatOf<Bits>;
    if (m < 1 || n < 1) throw std::invalid_argument("bounds_check: need m, n >= 1");
    auto roots = find_roots<Bits>(box_poly(m, n));
    BoundsReport<Bits> rep;
    rep.inner = annulus_inner_radius(n);
    rep.outer = annulus_outer_radius(m, n);
    const F pi = 4 * atan(F(1));
    rep.bound_im = F(m) * F(n) / pi;
    rep.min_modulus = abs(roots.front().value);
    rep.max_modulus = rep.min_modulus;
    rep.max_im = 0;
    F slack = 0;
    for (const auto& r : roots) {
        F mod = abs(r.value);
        rep.min_modulus = std::min(rep.min_modulus, mod);
        rep.max_modulus = std::max(rep.max_modulus, mod);
        rep.max_im = std::max(rep.max_im, F(abs(r.value.imag())));
        slack = std::max(slack, r.enclosure_radius);
    }
    rep.imaginary_ok = rep.max_im <= rep.bound_im + slack;
    rep.annulus_ok = rep.min_modulus >= static_cast<F>(rep.inner) - slack &&
                     rep.max_modulus <= static_cast<F>(rep.outer) + slack;
    return rep;
}

// gcd(B_{m,n}, B_{m,n}') = 1, exactly.
inline bool square_free_certificate(int m, int n) {
    if (n < 1) throw std::invalid_argument("square_free_certificate: need n >= 1");
    Polynomial b = box_poly(m, n);
    if (b.degree() < 1) return true;
    return poly_gcd(b, b.derivative()) == Polynomial::constant(1);
}

// Squared imaginary parts of the roots of B_{m,n} for 1 <= m <= 5, from the
// radical formulas (rows m=4,5 carry the corrected constants; the printed
// versions fail against the exact quartics already at n = 1):
//   m=1: {}            m=2: n/12             m=3: 0, n/4
//   m=4: (30n ± 2 sqrt(150n²+30n))/120
//   m=5: 0, (10n ± sqrt(40n²+24n))/24
template <unsigned Bits>
std::vector<BigFloatOf<Bits>> table2_imaginary_parts(int m, int n) {
    using F = BigFloatOf<Bits>;
    if (m < 1 || m > 5) throw std::invalid_argument("table2_imaginary_parts: need 1 <= m <= 5");
    std::vector<F> ims;  // one value per root, signs included
    auto push_pair = [&](const F& im_sq) {
        F v = sqrt(im_sq);
        ims.push_back(v);
        ims.push_back(-v);
    };
    switch (m) {
        case 1: ims.push_back(F(0)); break;
        case 2: push_pair(F(n) / 12); break;
        case 3:
            ims.push_back(F(0));
            push_pair(F(n) / 4);
            break;
        case 4: {
            F disc = 2 * sqrt(F(150) * n * n + F(30) * n);
            push_pair((F(30) * n + disc) / 120);
            push_pair((F(30) * n - disc) / 120);
            break;
        }
        case 5: {
            ims.push_back(F(0));
            F disc = sqrt(F(40) * n * n + F(24) * n);
            push_pair((F(10) * n + disc) / 24);
            push_pair((F(10) * n - disc) / 24);
            break;
        }
    }
    std::sort(ims.begin(), ims.end());
    return ims;
}

template <unsigned Bits>
struct Table2Check {
    std::vector<BigFloatOf<Bits>> from_solver;
    std::vector<BigFloatOf<Bits>> from_formula;
    BigFloatOf<Bits> max_deviation;
};

template <unsigned Bits>
Table2Check<Bits> table2_check(int m, int n) {
    Table2Check<Bits> out;
    out.from_formula = table2_imaginary_parts<Bits>(m, n);
    auto roots = find_roots<Bits>(box_poly(m, n));
    for (const auto& r : roots) out.from_solver.push_back(BigFloatOf<Bits>(r.value.imag()));
    std::sort(out.from_solver.begin(), out.from_solver.end());
    out.max_deviation = 0;
    for (std::size_t i = 0; i < out.from_solver.size(); ++i)
        out.max_deviation = std::max(out.max_deviation,
                                     BigFloatOf<Bits>(abs(out.from_solver[i] - out.from_formula[i])));
    return out;
}

struct ImaginaryScalingRow {
    int m, n;
    std::string max_im;
    std::string ratio;  // max|Im| / (m sqrt(n))
};

template <unsigned Bits>
std::vector<ImaginaryScalingRow> imaginary_scaling_experiment(int m_max, int n_max) {
    using F = BigFloatOf<Bits>;
    std::vector<ImaginaryScalingRow> rows;
    for (int m = 1; m <= m_max; ++m)
        for (int n = 1; n <= n_max; ++n) {
            F max_im = 0;
            for (const auto& r : find_roots<Bits>(box_poly(m, n)))
                max_im = std::max(max_im, F(abs(r.value.imag())));
            F ratio = max_im / (F(m) * sqrt(F(n)));
            rows.push_back({m, n, max_im.str(12), ratio.str(12)});
        }
    return rows;
}

}  // namespace boxpoly
