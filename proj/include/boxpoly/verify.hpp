#pragma once

// Named invariant suites behind the `verify` CLI subcommand. Each check
// re-derives one published identity at runtime and reports pass/fail; the
// unit and acceptance tests exercise the same identities with fixed oracles.

#include "boxpoly/bijections.hpp"
#include "boxpoly/excedance.hpp"
#include "boxpoly/ffop.hpp"
#include "boxpoly/roots.hpp"

namespace boxpoly {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

namespace detail {
inline void check(SuiteReport& rep, const std::string& name, bool ok, const std::string& detail = "") {
    rep.checks.push_back({name, ok, detail});
}
}  // namespace detail

inline SuiteReport verify_boxpoly(int cap = 8) {
    SuiteReport rep{"boxpoly", {}};
    bool triple = true, recursion = true, symmetry = true, deriv = true, alt = true, shifted = true,
         lead = true, series_ok = true, minus_one = true, split_ok = true;
    for (int m = 0; m <= cap; ++m)
        for (int n = 0; n <= cap; ++n) {
            Polynomial b = box_poly(m, n);
            triple &= b == box_poly_oracle(m, n) && b == box_poly_closed_form(m, n);
            if (m >= 1 && n >= 1)
                recursion &= b == Polynomial::x() * box_poly(m - 1, n) + box_poly(m, n - 1).shift(1);
            // B_{m,n}(-n-x) = (-1)^m B_{m,n}(x): the left side is scale(-1) then shift(n)
            symmetry &= b.scale_argument(-1).shift(BigRat(n)) == (m % 2 == 0 ? b : -b);
            if (m >= 1) deriv &= b.derivative() == BigRat(m + n) * box_poly(m - 1, n);
            alt &= b == box_poly_via_alternating_sum(m, n);
            // expansion in powers of (x-1)
            Polynomial at1 = b.shift(1);
            bool local = true;
            for (int j = 0; j <= m; ++j)
                local &= at1.coeff(static_cast<std::size_t>(j)) ==
                         BigRat(binomial(m + n, j) * stirling2(m + n - j + 1, n + 1));
            shifted &= local;
            lead &= b.leading_coefficient() == BigRat(binomial(m + n, m)) &&
                    b.eval(0) == BigRat(stirling2(m + n, n));
            for (const BigRat& x0 : {BigRat(0), BigRat(1), BigRat(-1, 2), BigRat(3, 7)}) {
                std::vector<BigRat> poles;
                for (int i = 0; i <= n; ++i) poles.push_back(x0 + i);
                series_ok &= rational_series(poles, static_cast<unsigned>(m))[static_cast<std::size_t>(m)] ==
                             b.eval(x0);
            }
        }
    for (int n = 2; n <= 10; ++n)
        for (int k = 2; k <= n; ++k) {
            BigRat lhs = 0;
            for (int j = 0; j <= n; ++j) {
                BigRat term = BigRat(binomial(n, j) * stirling2(n - j, k));
                lhs += (j % 2 == 0) ? term : -term;
            }
            minus_one &= lhs == box_poly(n - k, k).eval(-1);
        }
    for (int m = 0; m <= 4; ++m)
        for (int n1 = 0; n1 <= 3; ++n1)
            for (int n2 = 0; n2 <= 3; ++n2) {
                auto split = box_split(m, n1, n2);
                split_ok &= split.lhs == split.rhs;
            }
    detail::check(rep, "triple-equality", triple);
    detail::check(rep, "pascal-recursion", recursion);
    detail::check(rep, "reflection-symmetry", symmetry);
    detail::check(rep, "derivative-identity", deriv);
    detail::check(rep, "alternating-sum-form", alt);
    detail::check(rep, "shifted-expansion", shifted);
    detail::check(rep, "leading-and-constant", lead);
    detail::check(rep, "generating-function", series_ok);
    detail::check(rep, "minus-one-alternating-sum", minus_one);
    detail::check(rep, "split-identity", split_ok);
    return rep;
}

inline SuiteReport verify_setpart(int cap = 9) {
    SuiteReport rep{"setpart", {}};
    cap = std::min(cap, kOracleLimit);
    bool cyclic = true, dist = true, first_r = true, parity = true, odd = true, nosing = true, modr = true;
    for (int n = 3; n <= cap; ++n) {
        for (int k = 2; k <= n; ++k) cyclic &= cyclic_adjacency_count(n, k) == cyclic_adjacency_count_oracle(n, k);
        nosing &= no_singleton_count(n) == no_singleton_count_oracle(n);
    }
    for (int n = 1; n <= cap; ++n)
        for (int k = 1; k <= n; ++k) {
            for (int s = 1; s <= k; ++s) dist &= distance_s_count(n, k, s) == distance_s_count_oracle(n, k, s);
            for (int r = 1; r <= 4; ++r)
                modr &= mod_r_block_count(n, k, r) ==
                        enumerate_partitions(n, k, [&](const BlockMasks& b) {
                            return predicates::block_sizes_one_mod(b, r);
                        });
        }
    for (int N = 2; N <= cap; ++N)
        for (int blocks = 1; blocks <= N; ++blocks)
            for (int r = 1; r <= blocks; ++r) {
                int n = blocks - r, m = N - blocks;
                if (m < 0) continue;
                first_r &= first_r_separated_count(m, n, r) == first_r_separated_count_oracle(m, n, r);
            }
    for (int N = 1; N <= cap; ++N)
        for (int blocks = 1; blocks <= N; ++blocks)
            for (int r = 1; r <= blocks; ++r) {
                int n = blocks + r, m = N - n + r;
                if (n < 2 * r || m < 0) continue;
                parity &= parity_minima_count(m, n, r) == parity_minima_count_oracle(m, n, r);
            }
    for (int N = 1; N <= cap; ++N)
        for (int k = 1; k <= N; ++k) {
            BigInt oracle = odd_block_count_oracle(N, k);
            int m = N - k, n = k;
            odd &= BigRat(oracle) == box_at_minus_half_n_scaled(m, n);
            if (n % 2 == 0) odd &= BigRat(oracle) == t_convolution(m, n);
        }
    detail::check(rep, "cyclic-adjacency-counts", cyclic);
    detail::check(rep, "distance-s-counts", dist);
    detail::check(rep, "first-r-separated-counts", first_r);
    detail::check(rep, "parity-minima-counts", parity);
    detail::check(rep, "odd-block-counts", odd);
    detail::check(rep, "mod-r-block-counts", modr);
    detail::check(rep, "no-singleton-counts", nosing);
    return rep;
}

inline SuiteReport verify_ffop(int cap = 8) {
    SuiteReport rep{"ffop", {}};
    bool delta_ok = true, basic = true, binom = true, invert = true, mu_ok = true, box_id = true;
    Rng rng(20240901);
    for (int r = 1; r <= 5; ++r) {
        delta_ok &= ff_apply(r, Polynomial::x()) == Polynomial::constant(1);
        // shift invariance on random polynomials
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<BigRat> cs;
            for (int i = 0; i <= 5; ++i) cs.push_back(rng.rational());
            Polynomial p(cs);
            BigRat a = rng.rational();
            delta_ok &= ff_apply(r, p.shift(a)) == ff_apply(r, p).shift(a);
        }
    }
    for (int r = 1; r <= 4; ++r) {
        std::vector<Polynomial> basis;
        for (int n = 0; n <= cap; ++n) basis.push_back(basic_sequence(r, n));
        basic &= basis[0] == Polynomial::constant(1);
        for (int n = 1; n <= cap; ++n) {
            basic &= basis[static_cast<std::size_t>(n)].eval(0) == 0;
            basic &= ff_apply(r, basis[static_cast<std::size_t>(n)]) ==
                     BigRat(n) * basis[static_cast<std::size_t>(n - 1)];
        }
        for (int n = 0; n <= std::min(cap, 6); ++n)
            for (int trial = 0; trial < 25; ++trial) {
                BigRat x = rng.rational(), y = rng.rational();
                BigRat lhs = basis[static_cast<std::size_t>(n)].eval(x + y), rhs = 0;
                for (int k = 0; k <= n; ++k)
                    rhs += BigRat(binomial(n, k)) * basis[static_cast<std::size_t>(k)].eval(x) *
                           basis[static_cast<std::size_t>(n - k)].eval(y);
                binom &= lhs == rhs;
            }
        PowerSeries f = ff_series(r, 9);
        PowerSeries h = f.compositional_inverse();
        PowerSeries composed = f.compose(h);
        for (unsigned i = 0; i <= 9; ++i) invert &= composed[i] == (i == 1 ? BigRat(1) : BigRat(0));
    }
    mu_ok &= mobius_mod_r(1, 2) == 1 && mobius_mod_r(3, 2) == -1 && mobius_mod_r(5, 2) == 9;
    for (int n = 1; n <= 9; ++n)
        for (int r = 1; r <= 3; ++r) mu_ok &= mobius_mod_r(n, r) == mobius_mod_r_poset_oracle(n, r);
    for (int m = 0; m <= std::min(cap, 6); ++m)
        for (int n = 0; n <= std::min(cap, 6); ++n) {
            auto identity = ff2_box_identity(m, n);
            box_id &= identity.lhs == identity.rhs;
        }
    detail::check(rep, "delta-operator-axioms", delta_ok);
    detail::check(rep, "basic-sequence-axioms", basic);
    detail::check(rep, "binomial-type", binom);
    detail::check(rep, "compositional-inversion", invert);
    detail::check(rep, "mobius-values", mu_ok);
    detail::check(rep, "ff2-box-identity", box_id);
    return rep;
}

inline SuiteReport verify_excedance(int cap = 6) {
    SuiteReport rep{"excedance", {}};
    bool confluent = true, transpose = true, sums = true, diag = true, recur = true, column = true,
         corner = true, entry10 = true, brackets = true;
    Rng rng(777);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t len = 1 + rng.below(10);
        std::string s;
        for (std::size_t i = 0; i < len; ++i) s += (rng.below(2) ? 'a' : 'b');
        ABWord w{s};
        ExcedanceExpansion reference = normal_form(w);
        for (std::uint64_t seed = 0; seed < 20; ++seed)
            confluent &= normal_form_random_order(w, seed) == reference;
    }
    std::vector<std::vector<ExcedanceMatrix>> M(static_cast<std::size_t>(cap) + 1);
    for (int m = 0; m <= cap; ++m)
        for (int n = 0; n <= cap; ++n) M[static_cast<std::size_t>(m)].push_back(excedance_matrix(m, n));
    for (int m = 0; m <= cap; ++m)
        for (int n = 0; n <= cap; ++n) {
            const auto& Mmn = M[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)];
            const auto& Mnm = M[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)];
            for (int i = 0; i <= m; ++i)
                for (int j = 0; j <= n; ++j)
                    transpose &= Mmn.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ==
                                 Mnm.entries[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
            sums &= Mmn.sum() == eulerian(m + n + 1, n + 1);
            for (int k = 0; k < m + n; ++k) {
                BigInt alt = 0;
                for (int i = 0; i <= std::min(k, m); ++i) {
                    int j = k - i;
                    if (j > n) continue;
                    BigInt v = Mmn.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                    alt += (i % 2 == 0) ? v : -v;
                }
                diag &= alt == 0;
            }
            diag &= Mmn.entries[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)] == binomial(m + n, m);
            if (m >= 1 && n >= 1) {
                for (int i = 0; i <= m; ++i)
                    for (int j = 0; j <= n; ++j) recur &= entry_recursion_check(m, n, i, j).holds();
                corner &= Mmn.entries[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(n - 1)] ==
                          corner_entry_closed_form(m, n);
                entry10 &= Mmn.entries[1][0] == eulerian(m + n - 1, n) && Mmn.entries[0][1] == eulerian(m + n - 1, n);
            }
            std::vector<BigRat> col, row;
            for (int i = 0; i <= m; ++i) col.push_back(BigRat(Mmn.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(n)]));
            for (int j = 0; j <= n; ++j) row.push_back(BigRat(Mmn.entries[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)]));
            column &= Polynomial(col) == box_poly(m, n) && Polynomial(row) == box_poly(n, m);
        }
    for (int len = 0; len <= 7; ++len)
        for (int bits = 0; bits < (1 << len); ++bits) {
            std::string s;
            for (int i = 0; i < len; ++i) s += ((bits >> i) & 1) ? 'b' : 'a';
            ABWord w{s};
            BigInt direct = bracket(w);
            brackets &= direct == bracket_permutation_oracle(w) && direct == bracket_recursive(w);
        }
    detail::check(rep, "rewrite-confluence", confluent);
    detail::check(rep, "transpose-symmetry", transpose);
    detail::check(rep, "matrix-sum-eulerian", sums);
    detail::check(rep, "diagonal-sums", diag);
    detail::check(rep, "entry-recursion", recur);
    detail::check(rep, "box-column-and-row", column);
    detail::check(rep, "corner-closed-form", corner);
    detail::check(rep, "eulerian-entry", entry10);
    detail::check(rep, "bracket-oracles", brackets);
    return rep;
}

inline SuiteReport verify_roots(int m_cap = 8, int n_cap = 6) {
    SuiteReport rep{"roots", {}};
    constexpr unsigned Bits = 256;
    using F = BigFloatOf<Bits>;
    const F re_tol = ldexp(F(1), -static_cast<int>(Bits) / 2);
    bool re_ok = true, bounds_ok = true, sqfree = true, table2 = true, closed = true, conj = true,
         half_root = true;
    for (int m = 1; m <= m_cap; ++m)
        for (int n = 1; n <= n_cap; ++n) {
            re_ok &= verify_real_parts<Bits>(m, n) < re_tol;
            auto rep2 = bounds_check<Bits>(m, n);
            bounds_ok &= rep2.imaginary_ok && rep2.annulus_ok;
            sqfree &= square_free_certificate(m, n);
            // -n/2 is a root iff m odd, and then simple
            BigRat v = box_poly(m, n).eval(BigRat(-n, 2));
            half_root &= (m % 2 == 1) == (v == 0);
            if (m <= 5) {
                auto t2 = table2_check<Bits>(m, n);
                table2 &= t2.max_deviation < F("1e-25");
            }
            auto roots = find_roots<Bits>(box_poly(m, n));
            for (const auto& r : roots) {
                bool found = false;
                for (const auto& s : roots)
                    if (abs(s.value.real() - r.value.real()) < F("1e-30") &&
                        abs(s.value.imag() + r.value.imag()) < F("1e-30"))
                        found = true;
                conj &= found;
            }
        }
    for (int m = 1; m <= 12; ++m) {
        auto formula = closed_form_roots_n1<Bits>(m);
        auto solved = find_roots<Bits>(box_poly(m, 1));
        std::vector<F> a, b;
        for (const auto& r : formula) a.push_back(F(r.imag()));
        for (const auto& r : solved) b.push_back(F(r.value.imag()));
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        for (std::size_t i = 0; i < a.size(); ++i) closed &= abs(a[i] - b[i]) < F("1e-25");
    }
    detail::check(rep, "real-part-certification", re_ok);
    detail::check(rep, "imaginary-and-annulus-bounds", bounds_ok);
    detail::check(rep, "square-freeness", sqfree);
    detail::check(rep, "table2-radicals", table2);
    detail::check(rep, "n1-closed-form-roots", closed);
    detail::check(rep, "conjugate-symmetry", conj);
    detail::check(rep, "half-n-root-parity", half_root);
    return rep;
}

inline std::vector<std::string> verify_suite_names() {
    return {"boxpoly", "setpart", "ffop", "excedance", "roots"};
}

inline SuiteReport run_verify_suite(const std::string& name, int max_size) {
    if (name == "boxpoly") return verify_boxpoly(max_size > 0 ? max_size : 8);
    if (name == "setpart") return verify_setpart(max_size > 0 ? max_size : 9);
    if (name == "ffop") return verify_ffop(max_size > 0 ? max_size : 8);
    if (name == "excedance") return verify_excedance(max_size > 0 ? std::min(max_size, 8) : 6);
    if (name == "roots") return verify_roots(max_size > 0 ? max_size : 8, 6);
    throw std::invalid_argument("unknown verify suite: " + name);
}

}  // namespace boxpoly
