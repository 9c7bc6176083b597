#pragma once

// Exact scalar arithmetic used throughout: arbitrary-precision integers and
// rationals, plus the small combinatorial helpers (binomials, factorials)
// everything else leans on.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace boxpoly {

using BigInt = boost::multiprecision::cpp_int;

// Always in lowest terms with positive denominator; zero is 0/1.
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt numerator(const BigRat& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const BigRat& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const BigRat& q) { return denominator(q) == 1; }

inline BigInt factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

inline BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    BigInt b = 1;
    for (long long i = 0; i < k; ++i) {
        b *= n - i;
        b /= i + 1;
    }
    return b;
}

inline BigInt int_pow(const BigInt& base, unsigned e) {
    BigInt r = 1, b = base;
    for (; e; e >>= 1) {
        if (e & 1) r *= b;
        b *= b;
    }
    return r;
}

inline BigRat rat_pow(const BigRat& base, long long e) {
    if (e < 0) {
        if (base == 0) throw std::domain_error("rat_pow: zero to a negative power");
        return BigRat(1) / rat_pow(base, -e);
    }
    BigRat r = 1, b = base;
    for (; e; e >>= 1) {
        if (e & 1) r *= b;
        b *= b;
    }
    return r;
}

// "num" for integers, "num/den" otherwise (the CLI/JSON coefficient format).
inline std::string rat_to_string(const BigRat& q) {
    std::string s = numerator(q).str();
    if (!is_integer(q)) s += "/" + denominator(q).str();
    return s;
}

inline BigRat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return BigRat(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rat_from_string: zero denominator in '" + s + "'");
    return BigRat(num, den);
}

// Deterministic 64-bit generator (splitmix64). Used for property tests and
// the reproducible randomized rewrite orders; never for numerics.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound).
    std::uint64_t below(std::uint64_t bound) { return bound ? next() % bound : 0; }

    long long int_in(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    BigRat rational(long long max_abs_num = 20, long long max_den = 8) {
        return BigRat(int_in(-max_abs_num, max_abs_num), int_in(1, max_den));
    }

private:
    std::uint64_t state_;
};

}  // namespace boxpoly
