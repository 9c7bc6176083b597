#pragma once

// The fast Fourier operator F_r, realized exclusively through its derivative
// series f_r(D) = Σ_{m >= 1, m ≡ 1 mod r} D^m/m!, so every computation stays
// in exact rational arithmetic. For r = 1 this sum is e^D - 1, i.e. F_1 = Δ;
// that reading keeps F_r a delta operator for every r (F_r(x) = r) and makes
// f_r compositionally invertible, which the Möbius machinery requires.

#include "boxpoly/boxpoly.hpp"
#include "boxpoly/series.hpp"
#include "boxpoly/setpart.hpp"

namespace boxpoly {

struct FFOperator {
    int r = 1;
};

// F_r(p) = Σ_{m >= 1, m ≡ 1 mod r, m <= deg p} D^m(p)/m!.
inline Polynomial ff_apply(int r, const Polynomial& p) {
    if (r < 1) throw std::invalid_argument("ff_apply: need r >= 1");
    Polynomial result;
    Polynomial d = p;
    BigInt mfact = 1;
    for (int m = 1; m <= p.degree(); ++m) {
        d = d.derivative();
        mfact *= m;
        if ((m - 1) % r == 0) result = result + d / BigRat(mfact);
    }
    return result;
}

inline Polynomial ff_apply_power(int r, unsigned k, Polynomial p) {
    for (unsigned i = 0; i < k; ++i) p = ff_apply(r, p);
    return p;
}

// Partitions of [n] into k blocks of size ≡ 1 mod r: (1/k!) F_r^k(x^n)|_0.
inline BigInt mod_r_block_count(int n, int k, int r) {
    if (n < 0 || k < 0 || r < 1) throw std::invalid_argument("mod_r_block_count: bad arguments");
    Polynomial p = ff_apply_power(r, static_cast<unsigned>(k), Polynomial::monomial(static_cast<std::size_t>(n)));
    BigRat v = p.eval(0) / BigRat(factorial(static_cast<unsigned>(k)));
    if (!is_integer(v)) throw std::logic_error("mod_r_block_count: non-integer count");
    return numerator(v);
}

// f_r truncated at the given order.
inline PowerSeries ff_series(int r, unsigned order) {
    PowerSeries f(order);
    BigInt mfact = 1;
    for (unsigned m = 1; m <= order; ++m) {
        mfact *= m;
        if ((m - 1) % static_cast<unsigned>(r) == 0) f[m] = BigRat(1) / BigRat(mfact);
    }
    return f;
}

// μ(n) of the poset of partitions with block sizes ≡ 1 mod r, read off the
// compositional inverse h_r of f_r: μ(n) = n! [x^n] h_r. Zero off the
// congruence class.
inline BigInt mobius_mod_r(int n, int r) {
    if (n < 1 || r < 1) throw std::invalid_argument("mobius_mod_r: bad arguments");
    if ((n - 1) % r != 0) return 0;
    PowerSeries h = ff_series(r, static_cast<unsigned>(n)).compositional_inverse();
    BigRat mu = BigRat(factorial(static_cast<unsigned>(n))) * h[static_cast<std::size_t>(n)];
    if (!is_integer(mu)) throw std::logic_error("mobius_mod_r: non-integer value");
    return numerator(mu);
}

// Independent oracle: generic Möbius recursion on the subposet of the
// partition lattice with block sizes ≡ 1 mod r, bottom = singletons, top =
// one block (n ≡ 1 mod r). Small n only.
inline BigInt mobius_mod_r_poset_oracle(int n, int r) {
    if (n < 1 || (n - 1) % r != 0) return 0;
    if (n == 1) return 1;
    std::vector<BlockMasks> elems;
    for_each_partition(n, [&](const BlockMasks& blocks) {
        if (predicates::block_sizes_one_mod(blocks, r)) elems.push_back(blocks);
    });
    // refines(a, b): every block of a lies inside a block of b
    auto refines = [](const BlockMasks& a, const BlockMasks& b) {
        for (auto ba : a) {
            bool inside = false;
            for (auto bb : b)
                if ((ba & bb) == ba) { inside = true; break; }
            if (!inside) return false;
        }
        return true;
    };
    // sort coarser last so mu values are ready when needed
    std::sort(elems.begin(), elems.end(),
              [](const BlockMasks& a, const BlockMasks& b) { return a.size() > b.size(); });
    std::vector<BigInt> mu(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (elems[i].size() == static_cast<std::size_t>(n)) { mu[i] = 1; continue; }  // bottom
        BigInt acc = 0;
        for (std::size_t j = 0; j < i; ++j)
            if (elems[j].size() > elems[i].size() && refines(elems[j], elems[i])) acc += mu[j];
        mu[i] = -acc;
    }
    return mu.back();  // the one-block partition sorts last
}

// Basic sequence of F_r: p_n(x) = Σ_k (n!/k!) [u^n](h_r^k) x^k, the
// exponential-formula expansion of e^{x h_r(u)}.
inline Polynomial basic_sequence(int r, int n) {
    if (r < 1 || n < 0) throw std::invalid_argument("basic_sequence: bad arguments");
    if (n == 0) return Polynomial::constant(1);
    PowerSeries h = ff_series(r, static_cast<unsigned>(n)).compositional_inverse();
    std::vector<BigRat> coeffs(static_cast<std::size_t>(n) + 1);
    PowerSeries hk(static_cast<unsigned>(n));
    hk[0] = 1;
    BigInt kfact = 1;
    for (int k = 1; k <= n; ++k) {
        hk = hk * h;
        kfact *= k;
        coeffs[static_cast<std::size_t>(k)] =
            BigRat(factorial(static_cast<unsigned>(n))) / BigRat(kfact) * hk[static_cast<std::size_t>(n)];
    }
    return Polynomial(std::move(coeffs));
}

// The theorem's defining sum over the poset, as a cross-check oracle.
inline Polynomial basic_sequence_partition_oracle(int r, int n) {
    if (n == 0) return Polynomial::constant(1);
    std::vector<BigInt> mu_of(static_cast<std::size_t>(n) + 1);
    for (int s = 1; s <= n; ++s) mu_of[static_cast<std::size_t>(s)] = mobius_mod_r(s, r);
    std::vector<BigRat> coeffs(static_cast<std::size_t>(n) + 1);
    for_each_partition(n, [&](const BlockMasks& blocks) {
        if (!predicates::block_sizes_one_mod(blocks, r)) return;
        BigInt w = 1;
        for (auto b : blocks) w *= mu_of[static_cast<std::size_t>(std::popcount(b))];
        coeffs[blocks.size()] += BigRat(w);
    });
    return Polynomial(std::move(coeffs));
}

struct FF2BoxIdentity {
    Polynomial lhs;  // F_2^n(x^{m+n})
    Polynomial rhs;  // 2^m n! B_{m,n}((x-n)/2)
};

inline FF2BoxIdentity ff2_box_identity(int m, int n) {
    FF2BoxIdentity out;
    out.lhs = ff_apply_power(2, static_cast<unsigned>(n), Polynomial::monomial(static_cast<std::size_t>(m + n)));
    Polynomial b = box_poly(m, n).scale_argument(BigRat(1, 2)).shift(BigRat(-n));
    out.rhs = b * (rat_pow(2, m) * BigRat(factorial(static_cast<unsigned>(n))));
    return out;
}

}  // namespace boxpoly
