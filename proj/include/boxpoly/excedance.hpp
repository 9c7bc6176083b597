#pragma once

// The excedance algebra Z<a,b>/(ba - ab - a - b): normal forms in the basis
// a^i b^j, the excedance matrix M(m,n), the bracket statistic, Eulerian
// anchors, total-nonnegativity scanning and the unimodality map candidate.
//
// Post-multiplication rules in the standard basis (derived from b^k a =
// Σ_j C(k,j) a b^j + Σ_{j>=1} C(k,j-1) b^j):
//   (i,j) · b -> (i,j+1)
//   (i,k) · a -> Σ_{j=0..k} C(k,j) (i+1,j)  +  Σ_{j=1..k} C(k,j-1) (i,j)

#include "boxpoly/combinatorics.hpp"

#include <functional>
#include <map>
#include <unordered_map>

namespace boxpoly {

// A word over {a,b}; the empty word is valid.
struct ABWord {
    std::string letters;

    static ABWord parse(const std::string& s) {
        for (char c : s)
            if (c != 'a' && c != 'b') throw std::invalid_argument("ABWord: letters must be 'a' or 'b'");
        return ABWord{s};
    }

    int count_a() const { return static_cast<int>(std::count(letters.begin(), letters.end(), 'a')); }
    int count_b() const { return static_cast<int>(std::count(letters.begin(), letters.end(), 'b')); }
};

// Finitely supported coefficients on the basis a^i b^j.
class ExcedanceExpansion {
public:
    ExcedanceExpansion() = default;

    const std::map<std::pair<int, int>, BigInt>& coeffs() const { return c_; }

    BigInt coeff(int i, int j) const {
        auto it = c_.find({i, j});
        return it == c_.end() ? BigInt(0) : it->second;
    }

    void add(int i, int j, const BigInt& v) {
        if (v == 0) return;
        auto [it, inserted] = c_.try_emplace({i, j}, v);
        if (!inserted) {
            it->second += v;
            if (it->second == 0) c_.erase(it);
        }
    }

    ExcedanceExpansion& operator+=(const ExcedanceExpansion& o) {
        for (const auto& [ij, v] : o.c_) add(ij.first, ij.second, v);
        return *this;
    }

    ExcedanceExpansion append_b() const {
        ExcedanceExpansion r;
        for (const auto& [ij, v] : c_) r.add(ij.first, ij.second + 1, v);
        return r;
    }

    ExcedanceExpansion append_a() const {
        ExcedanceExpansion r;
        for (const auto& [ij, v] : c_) {
            auto [i, k] = ij;
            for (int j = 0; j <= k; ++j) r.add(i + 1, j, binomial(k, j) * v);
            for (int j = 1; j <= k; ++j) r.add(i, j, binomial(k, j - 1) * v);
        }
        return r;
    }

    BigInt total() const {
        BigInt s = 0;
        for (const auto& [ij, v] : c_) s += v;
        return s;
    }

    bool operator==(const ExcedanceExpansion& o) const { return c_ == o.c_; }

private:
    std::map<std::pair<int, int>, BigInt> c_;
};

// Normal form of a single word, by the left-to-right append DP.
inline ExcedanceExpansion normal_form(const ABWord& w) {
    ExcedanceExpansion e;
    e.add(0, 0, 1);
    for (char c : w.letters) e = (c == 'a') ? e.append_a() : e.append_b();
    return e;
}

// Normal form by literal term rewriting, the rewrite position picked by the
// seeded generator; exists to exercise confluence. Words are processed
// longest/most-inverted first so every word is rewritten once.
inline ExcedanceExpansion normal_form_random_order(const ABWord& w, std::uint64_t seed) {
    Rng rng(seed);
    auto inversions = [](const std::string& s) {
        int inv = 0, bs = 0;
        for (char c : s) {
            if (c == 'b') ++bs;
            else inv += bs;
        }
        return inv;
    };
    // (length, inversions) ordering, largest first
    std::map<std::pair<int, int>, std::map<std::string, BigInt>> pending;
    auto push = [&](const std::string& s, const BigInt& v) {
        pending[{static_cast<int>(s.size()), inversions(s)}][s] += v;
    };
    push(w.letters, 1);
    ExcedanceExpansion result;
    while (!pending.empty()) {
        auto bucket = std::prev(pending.end());
        auto words = std::move(bucket->second);
        pending.erase(bucket);
        for (auto& [s, v] : words) {
            if (v == 0) continue;
            std::vector<std::size_t> sites;
            for (std::size_t p = 0; p + 1 < s.size(); ++p)
                if (s[p] == 'b' && s[p + 1] == 'a') sites.push_back(p);
            if (sites.empty()) {
                int i = static_cast<int>(std::count(s.begin(), s.end(), 'a'));
                int j = static_cast<int>(s.size()) - i;
                result.add(i, j, v);
                continue;
            }
            std::size_t p = sites[static_cast<std::size_t>(rng.below(sites.size()))];
            std::string swapped = s;
            swapped[p] = 'a';
            swapped[p + 1] = 'b';
            push(swapped, v);
            push(s.substr(0, p) + "a" + s.substr(p + 2), v);
            push(s.substr(0, p) + "b" + s.substr(p + 2), v);
        }
    }
    return result;
}

// M(m,n): (m+1) x (n+1) grid of the coefficients of E(m,n), the sum of all
// words with m a's and n b's.
struct ExcedanceMatrix {
    int m = 0, n = 0;
    std::vector<std::vector<BigInt>> entries;  // entries[i][j], 0 <= i <= m, 0 <= j <= n

    BigInt sum() const {
        BigInt s = 0;
        for (const auto& row : entries)
            for (const auto& v : row) s += v;
        return s;
    }
};

constexpr int kExcedanceDirectLimit = 22;

// Production path: DP over the grid, E(m,n) = E(m-1,n)·a + E(m,n-1)·b.
inline ExcedanceMatrix excedance_matrix(int m, int n) {
    if (m < 0 || n < 0) throw std::invalid_argument("excedance_matrix: negative size");
    if (m > 40 || n > 40) throw std::invalid_argument("excedance_matrix: size limit exceeded");
    std::vector<std::vector<ExcedanceExpansion>> dp(static_cast<std::size_t>(m) + 1,
                                                    std::vector<ExcedanceExpansion>(static_cast<std::size_t>(n) + 1));
    dp[0][0].add(0, 0, 1);
    for (int i = 0; i <= m; ++i)
        for (int j = 0; j <= n; ++j) {
            if (i == 0 && j == 0) continue;
            ExcedanceExpansion e;
            if (i > 0) e += dp[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)].append_a();
            if (j > 0) e += dp[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)].append_b();
            dp[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::move(e);
        }
    ExcedanceMatrix out;
    out.m = m;
    out.n = n;
    out.entries.assign(static_cast<std::size_t>(m) + 1, std::vector<BigInt>(static_cast<std::size_t>(n) + 1));
    for (const auto& [ij, v] : dp[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)].coeffs()) {
        auto [i, j] = ij;
        out.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
    }
    return out;
}

// Small-size oracle: sum normal forms over all C(m+n,m) words.
inline ExcedanceMatrix excedance_matrix_word_sum_oracle(int m, int n) {
    if (m + n > kExcedanceDirectLimit) throw std::invalid_argument("excedance_matrix oracle: size limit exceeded");
    ExcedanceExpansion total;
    std::string word(static_cast<std::size_t>(m + n), 'a');
    // iterate over subsets choosing b positions
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(i)] = i;
    while (true) {
        std::fill(word.begin(), word.end(), 'a');
        for (int p : pos) word[static_cast<std::size_t>(p)] = 'b';
        total += normal_form(ABWord{word});
        int i = n - 1;
        while (i >= 0 && pos[static_cast<std::size_t>(i)] == m + n - (n - i)) --i;
        if (i < 0) break;
        ++pos[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n; ++j) pos[static_cast<std::size_t>(j)] = pos[static_cast<std::size_t>(j - 1)] + 1;
    }
    ExcedanceMatrix out;
    out.m = m;
    out.n = n;
    out.entries.assign(static_cast<std::size_t>(m) + 1, std::vector<BigInt>(static_cast<std::size_t>(n) + 1));
    for (const auto& [ij, v] : total.coeffs())
        out.entries[static_cast<std::size_t>(ij.first)][static_cast<std::size_t>(ij.second)] = v;
    return out;
}

// The excedance set statistic [w]: the bracket is linear and [a^i b^j] = 1,
// so it is the coefficient sum of the normal form.
inline BigInt bracket(const ABWord& w) { return normal_form(w).total(); }

// The paper's recursion with memoization, kept as a mid-size oracle:
// [u·ba·v] = [u·ab·v] + [u·a·v] + [u·b·v], [a·u] = [u·b] = [u], [1] = 1.
inline BigInt bracket_recursive(const ABWord& w,
                                std::unordered_map<std::string, BigInt>* memo = nullptr) {
    std::unordered_map<std::string, BigInt> local;
    if (!memo) memo = &local;
    std::function<BigInt(std::string)> rec = [&](std::string s) -> BigInt {
        std::size_t begin = 0, end = s.size();
        while (begin < end && s[begin] == 'a') ++begin;
        while (end > begin && s[end - 1] == 'b') --end;
        s = s.substr(begin, end - begin);
        if (s.empty()) return 1;
        auto it = memo->find(s);
        if (it != memo->end()) return it->second;
        std::size_t p = s.find("ba");
        if (p == std::string::npos) return 1;  // a^i b^j after stripping is empty, unreachable
        std::string swapped = s;
        swapped[p] = 'a';
        swapped[p + 1] = 'b';
        BigInt v = rec(swapped) + rec(s.substr(0, p) + "a" + s.substr(p + 2)) +
                   rec(s.substr(0, p) + "b" + s.substr(p + 2));
        memo->emplace(s, v);
        return v;
    };
    return rec(w.letters);
}

// Brute force over S_{|w|+1}: permutations whose excedance word is w.
inline BigInt bracket_permutation_oracle(const ABWord& w) {
    int n = static_cast<int>(w.letters.size()) + 1;
    if (n > 10) throw std::invalid_argument("bracket_permutation_oracle: factorial limit");
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
    BigInt count = 0;
    do {
        bool match = true;
        for (int j = 0; j + 1 < n && match; ++j) {
            bool exceed = perm[static_cast<std::size_t>(j)] > j + 1;
            match = (w.letters[static_cast<std::size_t>(j)] == (exceed ? 'b' : 'a'));
        }
        if (match) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

struct EntryRecursionCheck {
    BigInt lhs;  // c^{m,n}_{i,j}
    BigInt rhs;  // c^{m,n-1}_{i,j-1} + Σ_k C(k,j) c^{m-1,n}_{i-1,k} + Σ_k C(k,j-1) c^{m-1,n}_{i,k}
    bool holds() const { return lhs == rhs; }
};

inline BigInt matrix_entry_or_zero(const ExcedanceMatrix& M, int i, int j) {
    if (i < 0 || j < 0 || i > M.m || j > M.n) return 0;
    return M.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

inline EntryRecursionCheck entry_recursion_check(int m, int n, int i, int j) {
    if (m < 1 || n < 1) throw std::invalid_argument("entry_recursion_check: need m,n >= 1");
    ExcedanceMatrix full = excedance_matrix(m, n);
    ExcedanceMatrix up = excedance_matrix(m, n - 1);
    ExcedanceMatrix left = excedance_matrix(m - 1, n);
    EntryRecursionCheck out;
    out.lhs = matrix_entry_or_zero(full, i, j);
    out.rhs = matrix_entry_or_zero(up, i, j - 1);
    for (int k = j; k <= n; ++k) {
        out.rhs += binomial(k, j) * matrix_entry_or_zero(left, i - 1, k);
        out.rhs += binomial(k, j - 1) * matrix_entry_or_zero(left, i, k);
    }
    return out;
}

struct BoxColumnCheck {
    Polynomial last_column;      // Σ_j c^{m,n}_{j,n} x^j
    Polynomial last_row;         // Σ_j c^{m,n}_{m,j} x^j
    Polynomial box_mn;           // B_{m,n}
    Polynomial box_nm;           // B_{n,m}
    bool holds() const { return last_column == box_mn && last_row == box_nm; }
};

// Reads column k of M(m,n) as a coefficient vector, lowest degree first.
inline Polynomial excedance_column_polynomial(const ExcedanceMatrix& M, int k) {
    if (k < 0 || k > M.n) throw std::out_of_range("excedance_column_polynomial: bad column");
    std::vector<BigRat> c;
    for (int i = 0; i <= M.m; ++i)
        c.push_back(BigRat(M.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]));
    return Polynomial(std::move(c));
}

// The corrected corner closed form C(m+n,m)·mn(3mn-m-n-1)/12; the factor
// follows from c_{m-1,n-1} = c_{m-2,n} + c_{m,n-2} and the last-column
// formula (the commonly quoted constant omits the -1 and already fails on
// M(2,2), where the entry is 14).
inline BigInt corner_entry_closed_form(int m, int n) {
    BigInt v = binomial(m + n, m) * m * n * (3LL * m * n - m - n - 1);
    if (v % 12 != 0) throw std::logic_error("corner_entry_closed_form: not divisible by 12");
    return v / 12;
}

// Total nonnegativity of N(m,n) = M(m,n) flipped upside down.
struct TnnReport {
    bool is_tnn = true;
    // set when a violation exists: rows/cols of the offending minor and its determinant
    std::vector<int> rows, cols;
    BigInt determinant;
};

// Fraction-free Bareiss determinant.
inline BigInt bareiss_determinant(std::vector<std::vector<BigInt>> a) {
    int n = static_cast<int>(a.size());
    if (n == 0) return 1;
    BigInt sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] == 0) {
            int swap_row = -1;
            for (int r = k + 1; r < n; ++r)
                if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] != 0) { swap_row = r; break; }
            if (swap_row < 0) return 0;
            std::swap(a[static_cast<std::size_t>(k)], a[static_cast<std::size_t>(swap_row)]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                BigInt num = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                                 a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] -
                             a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                                 a[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = num / prev;
            }
        prev = a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
    }
    return sign * a[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
}

inline TnnReport total_nonnegativity_scan(int m, int n) {
    ExcedanceMatrix M = excedance_matrix(m, n);
    // N: row i is row m-i of M
    std::vector<std::vector<BigInt>> N(static_cast<std::size_t>(m) + 1);
    for (int i = 0; i <= m; ++i) N[static_cast<std::size_t>(i)] = M.entries[static_cast<std::size_t>(m - i)];

    TnnReport report;
    int rows = m + 1, cols = n + 1;
    int max_size = std::min(rows, cols);
    for (int size = 1; size <= max_size && report.is_tnn; ++size) {
        std::vector<int> ri(static_cast<std::size_t>(size)), ci(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i) ri[static_cast<std::size_t>(i)] = i;
        auto next_subset = [](std::vector<int>& idx, int limit) {
            int k = static_cast<int>(idx.size());
            int i = k - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == limit - (k - i)) --i;
            if (i < 0) return false;
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
            return true;
        };
        do {
            for (int i = 0; i < size; ++i) ci[static_cast<std::size_t>(i)] = i;
            do {
                std::vector<std::vector<BigInt>> minor(static_cast<std::size_t>(size),
                                                       std::vector<BigInt>(static_cast<std::size_t>(size)));
                for (int i = 0; i < size; ++i)
                    for (int j = 0; j < size; ++j)
                        minor[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                            N[static_cast<std::size_t>(ri[static_cast<std::size_t>(i)])]
                             [static_cast<std::size_t>(ci[static_cast<std::size_t>(j)])];
                BigInt det = bareiss_determinant(std::move(minor));
                if (det < 0) {
                    report.is_tnn = false;
                    report.rows = ri;
                    report.cols = ci;
                    report.determinant = det;
                    return report;
                }
            } while (next_subset(ci, cols));
        } while (next_subset(ri, rows));
    }
    return report;
}

// The unimodality-question candidate: factor u = v·w at the shortest prefix
// v with one more a than b, and return reverse-complement(v)·w. Requires
// more a's than b's, which guarantees such a prefix exists.
inline ABWord phi_candidate(const ABWord& u) {
    if (u.count_a() <= u.count_b())
        throw std::invalid_argument("phi_candidate: word needs more a's than b's");
    int balance = 0;
    std::size_t split = std::string::npos;
    for (std::size_t i = 0; i < u.letters.size(); ++i) {
        balance += (u.letters[i] == 'a') ? 1 : -1;
        if (balance == 1) { split = i + 1; break; }
    }
    if (split == std::string::npos) throw std::invalid_argument("phi_candidate: no factorization point");
    std::string v = u.letters.substr(0, split);
    std::string w = u.letters.substr(split);
    std::reverse(v.begin(), v.end());
    for (char& c : v) c = (c == 'a') ? 'b' : 'a';
    return ABWord{v + w};
}

}  // namespace boxpoly
