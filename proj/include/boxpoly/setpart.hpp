#pragma once

// Set partitions of [n], restricted growth words, and the brute-force
// enumeration oracle every counting claim is checked against.
//
// Standard form: blocks sorted by their minima, elements ascending inside a
// block. Equality is structural on standard form.

#include "boxpoly/combinatorics.hpp"

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>

namespace boxpoly {

class SetPartition;

// Letters v_1..v_n with v_i <= max(0, v_1..v_{i-1}) + 1; max letter = number
// of blocks of the encoded partition.
class RGWord {
public:
    RGWord() = default;

    explicit RGWord(std::vector<int> letters) : letters_(std::move(letters)) {
        int seen = 0;
        for (std::size_t i = 0; i < letters_.size(); ++i) {
            if (letters_[i] < 1 || letters_[i] > seen + 1)
                throw std::invalid_argument("RGWord: growth condition violated at position " +
                                            std::to_string(i + 1));
            seen = std::max(seen, letters_[i]);
        }
    }

    const std::vector<int>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }

    int block_count() const {
        int mx = 0;
        for (int v : letters_) mx = std::max(mx, v);
        return mx;
    }

    bool operator==(const RGWord& o) const { return letters_ == o.letters_; }

    // Unique factorization 1 u_1 2 u_2 ... k u_k where u_i uses letters [i]:
    // returns the u_i as letter vectors, index 0 holding u_1.
    std::vector<std::vector<int>> factor_segments() const {
        std::vector<std::vector<int>> segments;
        int seen = 0;
        for (int v : letters_) {
            if (v == seen + 1) {
                segments.emplace_back();
                seen = v;
            } else {
                segments.back().push_back(v);
            }
        }
        return segments;
    }

private:
    std::vector<int> letters_;
};

class SetPartition {
public:
    SetPartition() = default;

    SetPartition(int n, std::vector<std::vector<int>> blocks) : n_(n), blocks_(std::move(blocks)) {
        canonicalize_and_check();
    }

    static SetPartition singletons(int n) {
        std::vector<std::vector<int>> b;
        for (int i = 1; i <= n; ++i) b.push_back({i});
        return SetPartition(n, std::move(b));
    }

    static SetPartition single_block(int n) {
        std::vector<int> b(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) b[static_cast<std::size_t>(i)] = i + 1;
        return SetPartition(n, {b});
    }

    int ground_set_size() const { return n_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }

    int block_index_of(int element) const {
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            for (int e : blocks_[i])
                if (e == element) return static_cast<int>(i);
        throw std::out_of_range("SetPartition: element not in ground set");
    }

    bool same_block(int a, int b) const { return block_index_of(a) == block_index_of(b); }

    bool operator==(const SetPartition& o) const { return n_ == o.n_ && blocks_ == o.blocks_; }
    bool operator!=(const SetPartition& o) const { return !(*this == o); }

    // "13|2|4"
    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < blocks_.size(); ++i) {
            if (i) s += "|";
            for (int e : blocks_[i]) s += std::to_string(e);
        }
        return s.empty() ? "()" : s;
    }

private:
    void canonicalize_and_check() {
        for (auto& b : blocks_) {
            if (b.empty()) throw std::invalid_argument("SetPartition: empty block");
            std::sort(b.begin(), b.end());
        }
        std::sort(blocks_.begin(), blocks_.end(),
                  [](const std::vector<int>& a, const std::vector<int>& b) { return a.front() < b.front(); });
        std::vector<bool> seen(static_cast<std::size_t>(n_) + 1, false);
        int total = 0;
        for (const auto& b : blocks_)
            for (int e : b) {
                if (e < 1 || e > n_ || seen[static_cast<std::size_t>(e)])
                    throw std::invalid_argument("SetPartition: blocks must partition [n]");
                seen[static_cast<std::size_t>(e)] = true;
                ++total;
            }
        if (total != n_) throw std::invalid_argument("SetPartition: blocks must cover [n]");
    }

    int n_ = 0;
    std::vector<std::vector<int>> blocks_;
};

// v_i = index of the block (in standard form) containing i.
inline RGWord rg_from_partition(const SetPartition& pi) {
    std::vector<int> letters(static_cast<std::size_t>(pi.ground_set_size()));
    for (std::size_t b = 0; b < pi.blocks().size(); ++b)
        for (int e : pi.blocks()[b]) letters[static_cast<std::size_t>(e - 1)] = static_cast<int>(b) + 1;
    return RGWord(std::move(letters));
}

inline SetPartition partition_from_rg(const RGWord& v) {
    std::vector<std::vector<int>> blocks(static_cast<std::size_t>(v.block_count()));
    for (std::size_t i = 0; i < v.size(); ++i)
        blocks[static_cast<std::size_t>(v.letters()[i] - 1)].push_back(static_cast<int>(i) + 1);
    return SetPartition(static_cast<int>(v.size()), std::move(blocks));
}

// ---------------------------------------------------------------------------
// Brute-force oracle. Blocks are bitmasks (bit e-1 = element e), listed in
// order of their minima, which is exactly standard form.

constexpr int kOracleLimit = 13;  // Bell(13) ~ 2.8e7

using BlockMasks = std::vector<std::uint32_t>;

namespace detail {
inline void enumerate_rec(int n, int next, BlockMasks& blocks, const std::function<void(const BlockMasks&)>& visit) {
    if (next > n) {
        visit(blocks);
        return;
    }
    std::uint32_t bit = 1u << (next - 1);
    // index-based: deeper levels push and pop, which may reallocate
    std::size_t existing = blocks.size();
    for (std::size_t i = 0; i < existing; ++i) {
        blocks[i] |= bit;
        enumerate_rec(n, next + 1, blocks, visit);
        blocks[i] &= ~bit;
    }
    blocks.push_back(bit);
    enumerate_rec(n, next + 1, blocks, visit);
    blocks.pop_back();
}
}  // namespace detail

// Visits every partition of [n] as standard-form block masks.
inline void for_each_partition(int n, const std::function<void(const BlockMasks&)>& visit) {
    if (n < 0 || n > kOracleLimit) throw std::invalid_argument("for_each_partition: oracle limit exceeded");
    BlockMasks blocks;
    if (n == 0) {
        visit(blocks);
        return;
    }
    detail::enumerate_rec(n, 1, blocks, visit);
}

inline SetPartition partition_from_masks(int n, const BlockMasks& masks) {
    std::vector<std::vector<int>> blocks;
    blocks.reserve(masks.size());
    for (std::uint32_t m : masks) {
        std::vector<int> b;
        for (int e = 1; e <= n; ++e)
            if (m & (1u << (e - 1))) b.push_back(e);
        blocks.push_back(std::move(b));
    }
    return SetPartition(n, std::move(blocks));
}

// Counts partitions of [n] (into exactly k blocks when k is given) passing
// the predicate; optionally collects them.
inline BigInt enumerate_partitions(int n, std::optional<int> k,
                                   const std::function<bool(const BlockMasks&)>& predicate,
                                   std::vector<SetPartition>* collect = nullptr) {
    BigInt count = 0;
    for_each_partition(n, [&](const BlockMasks& blocks) {
        if (k && static_cast<int>(blocks.size()) != *k) return;
        if (predicate && !predicate(blocks)) return;
        ++count;
        if (collect) collect->push_back(partition_from_masks(n, blocks));
    });
    return count;
}

// Predicates on standard-form block masks for the counting oracles.
namespace predicates {

// No block contains i and i+1 cyclically (including n and 1).
inline bool cyclically_independent(const BlockMasks& blocks, int n) {
    std::uint32_t full = (n >= 32) ? ~0u : ((1u << n) - 1u);
    for (auto b : blocks) {
        std::uint32_t rot = ((b << 1) | (b >> (n - 1))) & full;
        if (b & rot) return false;
    }
    return true;
}

// Same-block elements differ by more than s.
inline bool distance_greater_than(const BlockMasks& blocks, int s) {
    for (auto b : blocks)
        for (int d = 1; d <= s; ++d)
            if (b & (b >> d)) return false;
    return true;
}

inline bool first_r_separated(const BlockMasks& blocks, int r) {
    std::uint32_t head = (1u << r) - 1u;
    for (auto b : blocks)
        if (std::popcount(b & head) > 1) return false;
    return true;
}

// Standard-form block minima satisfy min(B_i) ≡ i (mod 2) for i <= bound.
inline bool minima_parity(const BlockMasks& blocks, int bound) {
    for (int i = 0; i < bound && i < static_cast<int>(blocks.size()); ++i) {
        int min_elem = std::countr_zero(blocks[static_cast<std::size_t>(i)]) + 1;
        if ((min_elem - (i + 1)) % 2 != 0) return false;
    }
    return true;
}

inline bool all_blocks_odd(const BlockMasks& blocks) {
    for (auto b : blocks)
        if (std::popcount(b) % 2 == 0) return false;
    return true;
}

inline bool block_sizes_one_mod(const BlockMasks& blocks, int r) {
    for (auto b : blocks)
        if ((std::popcount(b) - 1) % r != 0) return false;
    return true;
}

inline bool no_singletons(const BlockMasks& blocks) {
    for (auto b : blocks)
        if (std::popcount(b) < 2) return false;
    return true;
}

}  // namespace predicates

}  // namespace boxpoly
