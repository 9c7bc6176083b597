#include "boxpoly/bijections.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace boxpoly;

namespace {

std::vector<SetPartition> cyclic_family(int n) {
    std::vector<SetPartition> out;
    enumerate_partitions(n, std::nullopt,
                         [&](const BlockMasks& b) { return predicates::cyclically_independent(b, n); }, &out);
    return out;
}

std::vector<SetPartition> no_singleton_family(int n) {
    std::vector<SetPartition> out;
    enumerate_partitions(n, std::nullopt, predicates::no_singletons, &out);
    return out;
}

Graph tree_from_pruefer(const std::vector<int>& seq, int n) {
    std::vector<int> degree(static_cast<std::size_t>(n) + 1, 1);
    for (int v : seq) ++degree[static_cast<std::size_t>(v)];
    Graph g(n);
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    for (std::size_t i = 0; i < seq.size(); ++i) {
        int leaf = -1;
        for (int v = 1; v <= n; ++v)
            if (degree[static_cast<std::size_t>(v)] == 1 && !used[static_cast<std::size_t>(v)]) { leaf = v; break; }
        g.add_edge(leaf, seq[i]);
        used[static_cast<std::size_t>(leaf)] = true;
        --degree[static_cast<std::size_t>(seq[i])];
    }
    std::vector<int> last;
    for (int v = 1; v <= n; ++v)
        if (!used[static_cast<std::size_t>(v)]) last.push_back(v);
    g.add_edge(last[0], last[1]);
    return g;
}

std::vector<SetPartition> independent_partitions(const Graph& g, int k) {
    std::vector<SetPartition> out;
    int n = g.vertex_count();
    enumerate_partitions(n, k, [&](const BlockMasks& blocks) {
        for (auto b : blocks)
            for (int v = 0; v < n; ++v)
                if ((b & (1u << v)) && (g.neighbors(v + 1) & b)) return false;
        return true;
    }, &out);
    return out;
}

}  // namespace

TEST_CASE("psi special cases", "[bijections]") {
    CHECK(psi_map(SetPartition::singletons(4), PsiDirection::Forward) == SetPartition::single_block(4));
    // pi1 = 13|2|4 -> 23|41, pi2 = 1|3|24 -> 12|34
    SetPartition pi1(4, {{1, 3}, {2}, {4}});
    SetPartition pi2(4, {{1}, {3}, {2, 4}});
    CHECK(psi_map(pi1, PsiDirection::Forward) == SetPartition(4, {{2, 3}, {4, 1}}));
    CHECK(psi_map(pi2, PsiDirection::Forward) == SetPartition(4, {{1, 2}, {3, 4}}));
    CHECK(psi_map(SetPartition(4, {{2, 3}, {4, 1}}), PsiDirection::Backward) == pi1);
    CHECK(psi_map(SetPartition(4, {{1, 2}, {3, 4}}), PsiDirection::Backward) == pi2);
    CHECK(psi_map(SetPartition::single_block(4), PsiDirection::Backward) == SetPartition::singletons(4));
}

TEST_CASE("psi rejects inputs outside its domain", "[bijections]") {
    CHECK_THROWS_WITH(psi_map(SetPartition(4, {{1, 2}, {3}, {4}}), PsiDirection::Forward),
                      Catch::Matchers::ContainsSubstring("1") && Catch::Matchers::ContainsSubstring("2"));
    CHECK_THROWS_WITH(psi_map(SetPartition(4, {{1, 4}, {2}, {3}}), PsiDirection::Backward),
                      Catch::Matchers::ContainsSubstring("singleton"));
    CHECK_THROWS_AS(psi_map(SetPartition(1, {{1}}), PsiDirection::Forward), std::invalid_argument);
}

TEST_CASE("psi is a bijection between the two families", "[bijections]") {
    for (int n = 3; n <= 9; ++n) {
        auto domain = cyclic_family(n);
        auto image_family = no_singleton_family(n);
        CHECK(domain.size() == image_family.size());

        std::set<std::string> seen;
        for (const auto& pi : domain) {
            SetPartition sigma = psi_map(pi, PsiDirection::Forward);
            // forward image has no singletons
            for (const auto& b : sigma.blocks()) CHECK(b.size() >= 2);
            CHECK(seen.insert(sigma.to_string()).second);
            CHECK(psi_map(sigma, PsiDirection::Backward) == pi);
        }
        CHECK(seen.size() == image_family.size());
        for (const auto& sigma : image_family) {
            SetPartition pi = psi_map(sigma, PsiDirection::Backward);
            CHECK(psi_map(pi, PsiDirection::Forward) == sigma);
        }
    }
}

TEST_CASE("tree switch on the 3-vertex path and star", "[bijections]") {
    // F: edge {1,2} plus isolated 3; T1 adds 2-3 (path), T2 adds 1-3 (other path through 1)
    Graph f(3);
    f.add_edge(1, 2);
    SetPartition pi(3, {{1, 3}, {2}});
    SetPartition tau = tree_switch(pi, f, {2, 3}, {1, 3});
    // tau must be independent in T2 = {12, 13}
    CHECK(tau == SetPartition(3, {{2, 3}, {1}}));
    // reverse switch recovers pi
    CHECK(tree_switch(tau, f, {1, 3}, {2, 3}) == pi);
    // block-sum across all k matches bell(n-1)
    Graph t1(3);
    t1.add_edge(1, 2);
    t1.add_edge(2, 3);
    BigInt total = 0;
    for (int k = 0; k <= 3; ++k) total += graph_partition_count(t1, k);
    CHECK(total == bell(2));
}

TEST_CASE("tree switch validates its inputs", "[bijections]") {
    Graph not_thicket(3);  // three components
    CHECK_THROWS_AS(tree_switch(SetPartition::singletons(3), not_thicket, {1, 2}, {1, 3}),
                    std::invalid_argument);
    Graph f(4);
    f.add_edge(1, 2);
    f.add_edge(3, 4);
    // edge inside one component
    CHECK_THROWS_AS(tree_switch(SetPartition::singletons(4), f, {1, 2}, {3, 4}), std::invalid_argument);
    // partition not independent in T1
    SetPartition bad(4, {{1, 3}, {2, 4}});
    CHECK_THROWS_AS(tree_switch(bad, f, {1, 3}, {2, 4}), std::invalid_argument);
}

TEST_CASE("tree switch with x and z in the same block keeps the pair fixed", "[bijections]") {
    Graph f(4);
    f.add_edge(1, 2);
    f.add_edge(3, 4);
    // x = 1, z = 1 (same vertex): switching is the identity on H1
    SetPartition pi(4, {{1, 4}, {2}, {3}});
    SetPartition tau = tree_switch(pi, f, {1, 3}, {1, 4});
    CHECK(tau == SetPartition(4, {{1, 3}, {2}, {4}}));
    CHECK(tau.block_index_of(1) == pi.block_index_of(1));
}

TEST_CASE("tree switch is a bijection on all small tree pairs", "[bijections]") {
    for (int n = 4; n <= 6; ++n) {
        int seq_len = n - 2;
        std::vector<int> seq(static_cast<std::size_t>(seq_len), 1);
        while (true) {
            Graph t1 = tree_from_pruefer(seq, n);
            // remove each edge, try every cross edge
            for (auto [x, y] : t1.edges()) {
                Graph f(n);
                for (auto [u, v] : t1.edges())
                    if (!(u == x && v == y)) f.add_edge(u, v);
                auto comps = detail::component_masks(f);
                REQUIRE(comps.size() == 2);
                for (int z = 1; z <= n; ++z)
                    for (int w = z + 1; w <= n; ++w) {
                        bool z_in_0 = (comps[0] >> (z - 1)) & 1, w_in_0 = (comps[0] >> (w - 1)) & 1;
                        if (z_in_0 == w_in_0) continue;  // not a cross edge
                        Graph t2 = f;
                        t2.add_edge(z, w);
                        for (int k = 1; k <= n; ++k) {
                            auto s1 = independent_partitions(t1, k);
                            auto s2 = independent_partitions(t2, k);
                            REQUIRE(s1.size() == s2.size());
                            std::set<std::string> images;
                            for (const auto& pi : s1) {
                                SetPartition tau = tree_switch(pi, f, {x, y}, {z, w});
                                CHECK(tau.block_count() == k);
                                CHECK(images.insert(tau.to_string()).second);
                                CHECK(tree_switch(tau, f, {z, w}, {x, y}) == pi);
                            }
                            std::set<std::string> expected;
                            for (const auto& tau : s2) expected.insert(tau.to_string());
                            CHECK(images == expected);
                        }
                    }
            }
            int i = seq_len - 1;
            while (i >= 0 && seq[static_cast<std::size_t>(i)] == n) --i;
            if (i < 0) break;
            ++seq[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < seq_len; ++j) seq[static_cast<std::size_t>(j)] = 1;
        }
    }
}
