#pragma once

// Stirling, Bell and Eulerian numbers. Small tables computed on demand;
// out-of-range arguments yield 0 rather than errors so identity sweeps can
// treat missing terms as vanishing.

#include "boxpoly/polynomial.hpp"

namespace boxpoly {

// S(n,k), triangle recurrence S(n,k) = k S(n-1,k) + S(n-1,k-1).
inline BigInt stirling2(long long n, long long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (n == 0) return 1;  // S(0,0)
    std::vector<BigInt> row(static_cast<std::size_t>(n) + 1);
    row[0] = 1;  // S(0,0)
    for (long long i = 1; i <= n; ++i) {
        for (long long j = i; j >= 1; --j)
            row[static_cast<std::size_t>(j)] =
                BigInt(j) * row[static_cast<std::size_t>(j)] + row[static_cast<std::size_t>(j - 1)];
        row[0] = 0;  // S(i,0) = 0 once i >= 1
    }
    return row[static_cast<std::size_t>(k)];
}

// Signed s(r,k): coefficients of x(x-1)...(x-(r-1)).
inline BigInt stirling1_signed(long long r, long long k) {
    if (r < 0 || k < 0 || k > r) return 0;
    Polynomial p = falling_factorial(static_cast<unsigned>(r));
    BigRat c = p.coeff(static_cast<std::size_t>(k));
    return numerator(c);
}

inline BigInt bell(long long n) {
    BigInt b = 0;
    for (long long k = 0; k <= n; ++k) b += stirling2(n, k);
    return b;
}

// A(n,k) = number of permutations of [n] with k-1 excedances, 1 <= k <= n.
// The convention is pinned by the excedance-matrix anchor: sum of the M(2,2)
// entries equals A(5,3) = 66.
inline BigInt eulerian(long long n, long long k) {
    if (n <= 0 || k < 1 || k > n) return 0;
    long long j = k - 1;  // internal table counts exactly j excedances
    std::vector<BigInt> row(static_cast<std::size_t>(n));
    row[0] = 1;
    for (long long i = 2; i <= n; ++i)
        for (long long t = std::min(i - 1, static_cast<long long>(row.size()) - 1); t >= 0; --t) {
            BigInt v = BigInt(t + 1) * row[static_cast<std::size_t>(t)];
            if (t > 0) v += BigInt(i - t) * row[static_cast<std::size_t>(t - 1)];
            row[static_cast<std::size_t>(t)] = v;
        }
    return row[static_cast<std::size_t>(j)];
}

}  // namespace boxpoly
