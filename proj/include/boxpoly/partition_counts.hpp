#pragma once

// The constrained set-partition counts driven by box-polynomial evaluations,
// each paired with its exhaustive oracle predicate.

#include "boxpoly/boxpoly.hpp"
#include "boxpoly/graphs.hpp"

namespace boxpoly {

namespace detail {
inline BigInt rat_count(const BigRat& v, const char* what) {
    if (!is_integer(v)) throw std::logic_error(std::string(what) + ": non-integer count");
    return numerator(v);
}
}  // namespace detail

// Partitions of [n] into k blocks with i, i+1 (mod n) always separated:
// B_{n-k,k}(-1).
inline BigInt cyclic_adjacency_count(int n, int k) {
    if (n < 3 || k < 2) throw std::invalid_argument("cyclic_adjacency_count: need n >= 3, k >= 2");
    return detail::rat_count(box_poly(n - k, k).eval(-1), "cyclic_adjacency_count");
}

inline BigInt cyclic_adjacency_count_oracle(int n, int k) {
    return enumerate_partitions(n, k,
                                [&](const BlockMasks& b) { return predicates::cyclically_independent(b, n); });
}

// Partitions of [n] into k blocks with same-block elements more than s apart.
// Production formula S(n-s,k-s) follows Prop s-tree (the distance graph is an
// s-tree); the corollary's printed alternative S(n-k,k-s) is exposed for the
// comparison the test suite records.
inline BigInt distance_s_count(int n, int k, int s) {
    if (s < 1 || k < s) throw std::invalid_argument("distance_s_count: need k >= s >= 1");
    return stirling2(n - s, k - s);
}

inline BigInt distance_s_count_corollary_formula(int n, int k, int s) {
    if (s < 1 || k < s) throw std::invalid_argument("distance_s_count: need k >= s >= 1");
    return stirling2(n - k, k - s);
}

inline BigInt distance_s_count_oracle(int n, int k, int s) {
    return enumerate_partitions(n, k,
                                [&](const BlockMasks& b) { return predicates::distance_greater_than(b, s); });
}

// Partitions of [m+n+r] into n+r blocks with 1..r pairwise separated:
// B_{m,n}(r).
inline BigInt first_r_separated_count(int m, int n, int r) {
    if (r < 1) throw std::invalid_argument("first_r_separated_count: need r >= 1");
    return detail::rat_count(box_poly(m, n).eval(BigRat(r)), "first_r_separated_count");
}

inline BigInt first_r_separated_count_oracle(int m, int n, int r) {
    return enumerate_partitions(m + n + r, n + r,
                                [&](const BlockMasks& b) { return predicates::first_r_separated(b, r); });
}

// Partitions of [m+n-r] into n-r blocks whose i-th block minimum is congruent
// to i mod 2 for 1 <= i <= r+1 (1 <= i <= r when r = n/2): |B_{m,n}(-r)|.
inline BigInt parity_minima_count(int m, int n, int r) {
    if (r < 1 || n < 2 * r) throw std::invalid_argument("parity_minima_count: hypothesis violated (need n >= 2r)");
    BigRat v = box_poly(m, n).eval(BigRat(-r));
    return detail::rat_count(v < 0 ? -v : v, "parity_minima_count");
}

inline int parity_minima_bound(int n, int r) { return std::min(r + 1, n - r); }

// When r = n/2 there is no (r+1)st block to witness the parity of the last
// word segment; that residual constraint is exactly "m is even" (odd m gives
// the vanishing evaluation, -n/2 being a root).
inline BigInt parity_minima_count_oracle(int m, int n, int r) {
    if (n == 2 * r && m % 2 == 1) return 0;
    int bound = parity_minima_bound(n, r);
    return enumerate_partitions(m + n - r, n - r,
                                [&](const BlockMasks& b) { return predicates::minima_parity(b, bound); });
}

// Partitions of [N] into k blocks, all of odd size.
inline BigInt odd_block_count_oracle(int N, int k) {
    return enumerate_partitions(N, k, predicates::all_blocks_odd);
}

// Partitions of [n] with no singleton block: Σ_{j=2}^n B_{n-j,j}(-1).
inline BigInt no_singleton_count(int n) {
    if (n < 2) throw std::invalid_argument("no_singleton_count: need n >= 2");
    BigRat sum = 0;
    for (int j = 2; j <= n; ++j) sum += box_poly(n - j, j).eval(-1);
    return detail::rat_count(sum, "no_singleton_count");
}

inline BigInt no_singleton_count_oracle(int n) {
    return enumerate_partitions(n, std::nullopt, predicates::no_singletons);
}

}  // namespace boxpoly
