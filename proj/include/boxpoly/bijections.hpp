#pragma once

// Bijective maps on set partitions:
//
//  * psi_map: between partitions of [n] with no two cyclically-consecutive
//    elements in a block and partitions of [n] with no singleton blocks.
//    Forward merges runs of singletons pairwise (an odd-length run sends its
//    last element into the following block); two fixed partitions are
//    special-cased for even n so the map stays injective.
//
//  * tree_switch: between independent-set partitions of two trees that
//    differ by one edge across a common thicket.

#include "boxpoly/partition_counts.hpp"

namespace boxpoly {

enum class PsiDirection { Forward, Backward };

namespace detail {

inline int cyc_next(int e, int n) { return e % n + 1; }

// 13...(n-1)|2|4|...|n  (n even)
inline SetPartition psi_pi1(int n) {
    std::vector<std::vector<int>> blocks;
    std::vector<int> odds;
    for (int e = 1; e <= n; e += 2) odds.push_back(e);
    blocks.push_back(odds);
    for (int e = 2; e <= n; e += 2) blocks.push_back({e});
    return SetPartition(n, std::move(blocks));
}

// 1|3|...|(n-1)|24...n  (n even)
inline SetPartition psi_pi2(int n) {
    std::vector<std::vector<int>> blocks;
    for (int e = 1; e <= n; e += 2) blocks.push_back({e});
    std::vector<int> evens;
    for (int e = 2; e <= n; e += 2) evens.push_back(e);
    blocks.push_back(evens);
    return SetPartition(n, std::move(blocks));
}

// 23|45|...|n1  (n even)
inline SetPartition psi_shifted_pairs(int n) {
    std::vector<std::vector<int>> blocks;
    for (int e = 2; e < n; e += 2) blocks.push_back({e, e + 1});
    blocks.push_back({n, 1});
    return SetPartition(n, std::move(blocks));
}

// 12|34|...|(n-1)n  (n even)
inline SetPartition psi_aligned_pairs(int n) {
    std::vector<std::vector<int>> blocks;
    for (int e = 1; e < n; e += 2) blocks.push_back({e, e + 1});
    return SetPartition(n, std::move(blocks));
}

inline SetPartition psi_forward(const SetPartition& pi) {
    const int n = pi.ground_set_size();
    // Domain check: no cyclically-consecutive pair shares a block.
    for (int e = 1; e <= n; ++e)
        if (pi.same_block(e, cyc_next(e, n)) && n > 1)
            throw std::invalid_argument("psi_map: elements " + std::to_string(e) + " and " +
                                        std::to_string(cyc_next(e, n)) + " share a block");

    std::vector<bool> is_singleton(static_cast<std::size_t>(n) + 1, false);
    bool all_singletons = true;
    for (const auto& b : pi.blocks()) {
        if (b.size() == 1) is_singleton[static_cast<std::size_t>(b.front())] = true;
        else all_singletons = false;
    }
    if (all_singletons) return SetPartition::single_block(n);
    if (n >= 4 && n % 2 == 0) {
        if (pi == psi_pi1(n)) return psi_shifted_pairs(n);
        if (pi == psi_pi2(n)) return psi_aligned_pairs(n);
    }

    // Image blocks: one per non-singleton block of pi, extended in place.
    std::vector<std::vector<int>> image;
    std::vector<int> image_of_block(pi.blocks().size(), -1);
    for (std::size_t i = 0; i < pi.blocks().size(); ++i)
        if (pi.blocks()[i].size() > 1) {
            image_of_block[i] = static_cast<int>(image.size());
            image.push_back(pi.blocks()[i]);
        }

    // Maximal cyclic runs of singletons, each preceded by a non-singleton.
    for (int start = 1; start <= n; ++start) {
        int before = (start == 1) ? n : start - 1;
        if (!is_singleton[static_cast<std::size_t>(start)] || is_singleton[static_cast<std::size_t>(before)])
            continue;
        std::vector<int> run;
        int e = start;
        while (is_singleton[static_cast<std::size_t>(e)]) {
            run.push_back(e);
            e = cyc_next(e, n);
        }
        // e now sits in a non-singleton block.
        std::size_t i = 0;
        for (; i + 1 < run.size(); i += 2) image.push_back({run[i], run[i + 1]});
        if (i < run.size()) {
            int target = image_of_block[static_cast<std::size_t>(pi.block_index_of(e))];
            image[static_cast<std::size_t>(target)].push_back(run[i]);
        }
    }
    return SetPartition(n, std::move(image));
}

inline SetPartition psi_backward(const SetPartition& sigma) {
    const int n = sigma.ground_set_size();
    for (const auto& b : sigma.blocks())
        if (b.size() == 1)
            throw std::invalid_argument("psi_map: singleton block {" + std::to_string(b.front()) +
                                        "} not allowed in backward direction");

    if (sigma == SetPartition::single_block(n)) return SetPartition::singletons(n);
    if (n >= 4 && n % 2 == 0) {
        if (sigma == psi_shifted_pairs(n)) return psi_pi1(n);
        if (sigma == psi_aligned_pairs(n)) return psi_pi2(n);
    }

    // Within each block, split maximal cyclic runs of consecutive elements:
    // keep the run's last element, peel off every other one below it.
    std::vector<std::vector<int>> out;
    for (const auto& block : sigma.blocks()) {
        std::vector<bool> in_block(static_cast<std::size_t>(n) + 1, false);
        for (int e : block) in_block[static_cast<std::size_t>(e)] = true;
        std::vector<int> keep;
        for (int e : block) {
            int before = (e == 1) ? n : e - 1;
            if (in_block[static_cast<std::size_t>(before)]) continue;  // not a run start
            std::vector<int> run;
            int w = e;
            while (in_block[static_cast<std::size_t>(w)]) {
                run.push_back(w);
                w = cyc_next(w, n);
                if (static_cast<int>(run.size()) > n) throw std::logic_error("psi_map: run wrapped");
            }
            // offsets L-1, L-3, ... stay; L-2, L-4, ... become singletons
            for (int off = static_cast<int>(run.size()) - 1; off >= 0; --off) {
                if ((static_cast<int>(run.size()) - 1 - off) % 2 == 0)
                    keep.push_back(run[static_cast<std::size_t>(off)]);
                else
                    out.push_back({run[static_cast<std::size_t>(off)]});
            }
        }
        out.push_back(std::move(keep));
    }
    return SetPartition(n, std::move(out));
}

}  // namespace detail

inline SetPartition psi_map(const SetPartition& pi, PsiDirection direction) {
    if (pi.ground_set_size() < 2) throw std::invalid_argument("psi_map: need n >= 2");
    return direction == PsiDirection::Forward ? detail::psi_forward(pi) : detail::psi_backward(pi);
}

// ---------------------------------------------------------------------------

namespace detail {

// Component masks (1-based vertices -> bit v-1) of a graph.
inline std::vector<std::uint32_t> component_masks(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::uint32_t> comps;
    std::uint32_t seen = 0;
    for (int v = 1; v <= n; ++v) {
        if (seen & (1u << (v - 1))) continue;
        std::uint32_t comp = 1u << (v - 1), frontier = comp;
        while (frontier) {
            std::uint32_t next = 0;
            for (int u = 1; u <= n; ++u)
                if (frontier & (1u << (u - 1))) next |= g.neighbors(u);
            next &= ~comp;
            comp |= next;
            frontier = next;
        }
        seen |= comp;
        comps.push_back(comp);
    }
    return comps;
}

inline bool is_tree(const Graph& g) {
    return g.edge_count() == g.vertex_count() - 1 && component_masks(g).size() == 1;
}

}  // namespace detail

// pi must have blocks independent in T1 = F + xy; returns the matching
// partition independent in T2 = F + zw: H1-elements of the blocks holding x
// and z swap, H2-elements of the blocks holding y and w swap.
inline SetPartition tree_switch(const SetPartition& pi, const Graph& thicket, std::pair<int, int> xy,
                                std::pair<int, int> zw) {
    const int n = thicket.vertex_count();
    auto comps = detail::component_masks(thicket);
    if (comps.size() != 2 || thicket.edge_count() != n - 2)
        throw std::invalid_argument("tree_switch: F must be a thicket (a forest with two components)");

    auto orient = [&](std::pair<int, int> e, std::uint32_t h1) {
        if (h1 & (1u << (e.first - 1))) return e;
        return std::pair<int, int>{e.second, e.first};
    };
    std::uint32_t h1 = comps[0], h2 = comps[1];
    auto [x, y] = orient(xy, h1);
    auto [z, w] = orient(zw, h1);
    auto in = [](int v, std::uint32_t mask) { return (mask & (1u << (v - 1))) != 0; };
    if (!in(x, h1) || !in(y, h2) || !in(z, h1) || !in(w, h2))
        throw std::invalid_argument("tree_switch: edges must join the two components");

    Graph t1 = thicket, t2 = thicket;
    t1.add_edge(x, y);
    t2.add_edge(z, w);
    if (!detail::is_tree(t1) || !detail::is_tree(t2))
        throw std::invalid_argument("tree_switch: F plus the given edge must be a tree");
    for (auto [u, v] : t1.edges())
        if (pi.same_block(u, v))
            throw std::invalid_argument("tree_switch: partition not independent in F+xy");

    int bx = pi.block_index_of(x), bz = pi.block_index_of(z);
    int by = pi.block_index_of(y), bw = pi.block_index_of(w);
    std::vector<std::vector<int>> blocks(pi.blocks().size());
    for (std::size_t i = 0; i < pi.blocks().size(); ++i)
        for (int e : pi.blocks()[i]) {
            int target = static_cast<int>(i);
            if (in(e, h1)) {
                if (target == bx) target = bz;
                else if (target == bz) target = bx;
            } else {
                if (target == by) target = bw;
                else if (target == bw) target = by;
            }
            blocks[static_cast<std::size_t>(target)].push_back(e);
        }
    return SetPartition(n, std::move(blocks));
}

}  // namespace boxpoly
