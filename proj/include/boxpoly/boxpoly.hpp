#pragma once

// The box polynomial B_{m,n}(x): sum over integer partitions fitting in an
// m-by-n box of prod_i (x + lambda_i). Built three independent ways:
//
//   box_poly             Δⁿ(x^{m+n})/n!            (production path)
//   box_poly_oracle      the defining sum over partitions
//   box_poly_closed_form Σ_j C(m+n,j) S(m+n-j,n) x^j
//
// plus the special-value, splitting and odd-block-count identities.

#include "boxpoly/combinatorics.hpp"

#include <functional>

namespace boxpoly {

struct IntegerPartition {
    // Weakly decreasing, nonnegative.
    std::vector<int> parts;
};

struct BoxIndex {
    int m = 0;  // number of parts
    int n = 0;  // maximum part
};

// Visits every partition with m nonnegative parts each at most n exactly
// once, in colexicographic order of the part vector. C(m+n,m) visits total.
inline void for_each_partition_in_box(int m, int n, const std::function<void(const std::vector<int>&)>& visit) {
    if (m < 0 || n < 0) throw std::invalid_argument("partitions_in_box: negative box");
    std::vector<int> parts(static_cast<std::size_t>(m), 0);
    while (true) {
        visit(parts);
        // next: increment the rightmost part that can grow, reset the suffix
        int i = m - 1;
        while (i >= 0) {
            int cap = (i == 0) ? n : parts[static_cast<std::size_t>(i - 1)];
            if (parts[static_cast<std::size_t>(i)] < cap) break;
            --i;
        }
        if (i < 0) return;
        ++parts[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < m; ++j) parts[static_cast<std::size_t>(j)] = 0;
    }
}

inline std::vector<IntegerPartition> partitions_in_box(int m, int n) {
    std::vector<IntegerPartition> out;
    for_each_partition_in_box(m, n, [&](const std::vector<int>& p) { out.push_back({p}); });
    return out;
}

// Defining sum; cost C(m+n,m) polynomial products, keep m+n modest.
inline Polynomial box_poly_oracle(int m, int n) {
    Polynomial total;
    for_each_partition_in_box(m, n, [&](const std::vector<int>& parts) {
        Polynomial prod = Polynomial::constant(1);
        for (int part : parts) prod = prod * Polynomial({BigRat(part), 1});
        total = total + prod;
    });
    return total;
}

// Δⁿ(x^{m+n})/n!
inline Polynomial box_poly(int m, int n) {
    if (m < 0 || n < 0) throw std::invalid_argument("box_poly: negative index");
    Polynomial p = Polynomial::monomial(static_cast<std::size_t>(m + n));
    p = p.forward_difference(static_cast<unsigned>(n));
    return p / BigRat(factorial(static_cast<unsigned>(n)));
}

inline Polynomial box_poly_closed_form(int m, int n) {
    std::vector<BigRat> c(static_cast<std::size_t>(m) + 1);
    for (int j = 0; j <= m; ++j)
        c[static_cast<std::size_t>(j)] = BigRat(binomial(m + n, j) * stirling2(m + n - j, n));
    return Polynomial(std::move(c));
}

// Alternating-sum form (1/n!) Σ_r (-1)^{n-r} C(n,r) (x+r)^{m+n}.
inline Polynomial box_poly_via_alternating_sum(int m, int n) {
    Polynomial total;
    for (int r = 0; r <= n; ++r) {
        Polynomial term = Polynomial({BigRat(r), 1}).pow(static_cast<unsigned>(m + n));
        BigRat sign = ((n - r) % 2 == 0) ? 1 : -1;
        total = total + term * (sign * BigRat(binomial(n, r)));
    }
    return total / BigRat(factorial(static_cast<unsigned>(n)));
}

struct BoxSpecialValues {
    BigInt at0;              // S(m+n,n)
    BigInt at1;              // S(m+n+1,n+1)
    BigInt at_neg_n;         // (-1)^m S(m+n,n)
    BigInt at_neg_n_minus_1; // (-1)^m S(m+n+1,n+1)
};

inline BoxSpecialValues box_special_values(int m, int n) {
    Polynomial b = box_poly(m, n);
    auto as_int = [](const BigRat& q) {
        if (!is_integer(q)) throw std::logic_error("box_special_values: non-integer evaluation");
        return numerator(q);
    };
    return BoxSpecialValues{as_int(b.eval(0)), as_int(b.eval(1)), as_int(b.eval(BigRat(-n))),
                            as_int(b.eval(BigRat(-n - 1)))};
}

struct BoxSplit {
    Polynomial lhs;  // B_{m, n1+n2+1}
    Polynomial rhs;  // Σ_k B_{k,n1}(x) B_{m-k,n2}(x+n1+1)
};

inline BoxSplit box_split(int m, int n1, int n2) {
    BoxSplit out;
    out.lhs = box_poly(m, n1 + n2 + 1);
    for (int k = 0; k <= m; ++k)
        out.rhs = out.rhs + box_poly(k, n1) * box_poly(m - k, n2).shift(BigRat(n1 + 1));
    return out;
}

// 2^m B_{m,n}(-n/2): the number of set partitions of [m+n] into n odd blocks.
inline BigRat box_at_minus_half_n_scaled(int m, int n) {
    return rat_pow(2, m) * box_poly(m, n).eval(BigRat(-n, 2));
}

// 2^m Σ_k (-1)^k S(k+n/2,n/2) S(m-k+n/2,n/2); n must be even.
inline BigRat t_convolution(int m, int n) {
    if (n % 2 != 0) throw std::invalid_argument("t_convolution: n must be even");
    int h = n / 2;
    BigInt sum = 0;
    for (int k = 0; k <= m; ++k) {
        BigInt term = stirling2(k + h, h) * stirling2(m - k + h, h);
        sum += (k % 2 == 0) ? term : -term;
    }
    return BigRat(int_pow(2, static_cast<unsigned>(m)) * sum);
}

// B_{m,n}(r) = Σ_{i=0}^{r-1} s(r,r-i) S(m+n+r-i, r+n), r >= 1.
inline BigRat box_at_positive_r_via_stirling(int m, int n, int r) {
    if (r < 1) throw std::invalid_argument("box_at_positive_r_via_stirling: r must be positive");
    BigInt sum = 0;
    for (int i = 0; i <= r - 1; ++i) sum += stirling1_signed(r, r - i) * stirling2(m + n + r - i, r + n);
    return BigRat(sum);
}

}  // namespace boxpoly
