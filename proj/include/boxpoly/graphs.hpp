#pragma once

// Small simple graphs and exact chromatic polynomials via deletion-
// contraction, plus the named families used by the set-partition results:
// cycles, s-trees, K_r plus isolated vertices, and the cyclic ladder.

#include "boxpoly/setpart.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>

namespace boxpoly {

constexpr int kChromaticVertexLimit = 14;

// Vertices 1..n, adjacency kept as bitmasks. Simple: no loops, no multiedges.
class Graph {
public:
    explicit Graph(int n = 0) : n_(n), adj_(static_cast<std::size_t>(n), 0u) {
        if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    }

    int vertex_count() const { return n_; }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("Graph: loops not allowed");
        adj_[static_cast<std::size_t>(u - 1)] |= bit(v);
        adj_[static_cast<std::size_t>(v - 1)] |= bit(u);
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (adj_[static_cast<std::size_t>(u - 1)] & bit(v)) != 0;
    }

    std::uint32_t neighbors(int u) const { return adj_[static_cast<std::size_t>(u - 1)]; }

    int edge_count() const {
        int twice = 0;
        for (auto m : adj_) twice += std::popcount(m);
        return twice / 2;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 1; u <= n_; ++u)
            for (int v = u + 1; v <= n_; ++v)
                if (has_edge(u, v)) out.emplace_back(u, v);
        return out;
    }

    int degree(int u) const { return std::popcount(neighbors(u)); }

    // Named families -------------------------------------------------------

    static Graph empty_graph(int n) { return Graph(n); }

    static Graph complete(int n) {
        Graph g(n);
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v) g.add_edge(u, v);
        return g;
    }

    static Graph cycle(int n) {
        if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
        Graph g(n);
        for (int u = 1; u < n; ++u) g.add_edge(u, u + 1);
        g.add_edge(n, 1);
        return g;
    }

    static Graph path(int n) {
        Graph g(n);
        for (int u = 1; u < n; ++u) g.add_edge(u, u + 1);
        return g;
    }

    // The canonical s-tree on [n]: i and j adjacent iff |i-j| <= s. Each
    // vertex v > s attaches to the clique {v-s,...,v-1}.
    static Graph distance_s_tree(int s, int n) {
        if (s < 1 || n < s) throw std::invalid_argument("distance_s_tree: need n >= s >= 1");
        Graph g(n);
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n && v - u <= s; ++v) g.add_edge(u, v);
        return g;
    }

    static Graph complete_plus_isolated(int r, int isolated) {
        Graph g(r + isolated);
        for (int u = 1; u <= r; ++u)
            for (int v = u + 1; v <= r; ++v) g.add_edge(u, v);
        return g;
    }

    // C_n x K_2: vertices 1..n on the inner cycle, n+i paired with i.
    static Graph cyclic_ladder(int n) {
        if (n < 3) throw std::invalid_argument("cyclic_ladder: need n >= 3");
        Graph g(2 * n);
        for (int u = 1; u <= n; ++u) {
            int next = (u % n) + 1;
            g.add_edge(u, next);
            g.add_edge(n + u, n + next);
            g.add_edge(u, n + u);
        }
        return g;
    }

private:
    static std::uint32_t bit(int v) { return 1u << (v - 1); }

    void check_vertex(int u) const {
        if (u < 1 || u > n_) throw std::out_of_range("Graph: vertex out of range");
    }

    int n_;
    std::vector<std::uint32_t> adj_;
};

namespace detail {

// Working copy for deletion-contraction, relabeled compactly after each
// contraction so memo keys stay small.
struct DcGraph {
    int n = 0;
    std::vector<std::uint32_t> adj;

    std::string key() const {
        std::string s(adj.size() * 4 + 1, '\0');
        s[0] = static_cast<char>(n);
        for (std::size_t i = 0; i < adj.size(); ++i)
            for (int b = 0; b < 4; ++b) s[1 + 4 * i + b] = static_cast<char>((adj[i] >> (8 * b)) & 0xff);
        return s;
    }
};

inline Polynomial dc_chromatic(DcGraph g, std::map<std::string, Polynomial>& memo);

inline int dc_edge_count(const DcGraph& g) {
    int twice = 0;
    for (auto m : g.adj) twice += std::popcount(m);
    return twice / 2;
}

// Connected components as vertex masks (0-based bits here).
inline std::vector<std::uint32_t> dc_components(const DcGraph& g) {
    std::vector<std::uint32_t> comps;
    std::uint32_t seen = 0;
    for (int v = 0; v < g.n; ++v) {
        if (seen & (1u << v)) continue;
        std::uint32_t comp = 1u << v, frontier = comp;
        while (frontier) {
            std::uint32_t next = 0;
            for (int u = 0; u < g.n; ++u)
                if (frontier & (1u << u)) next |= g.adj[static_cast<std::size_t>(u)];
            next &= ~comp;
            comp |= next;
            frontier = next;
        }
        seen |= comp;
        comps.push_back(comp);
    }
    return comps;
}

inline DcGraph dc_induced(const DcGraph& g, std::uint32_t mask) {
    std::vector<int> newid(static_cast<std::size_t>(g.n), -1);
    int m = 0;
    for (int v = 0; v < g.n; ++v)
        if (mask & (1u << v)) newid[static_cast<std::size_t>(v)] = m++;
    DcGraph h;
    h.n = m;
    h.adj.assign(static_cast<std::size_t>(m), 0u);
    for (int v = 0; v < g.n; ++v) {
        if (!(mask & (1u << v))) continue;
        std::uint32_t nb = g.adj[static_cast<std::size_t>(v)] & mask;
        for (int u = 0; u < g.n; ++u)
            if (nb & (1u << u)) h.adj[static_cast<std::size_t>(newid[static_cast<std::size_t>(v)])] |=
                1u << newid[static_cast<std::size_t>(u)];
    }
    return h;
}

inline Polynomial dc_chromatic_connected(const DcGraph& g, std::map<std::string, Polynomial>& memo) {
    int m = dc_edge_count(g);
    // Trees, cycles and complete graphs have closed forms.
    if (m == g.n - 1)  // connected with n-1 edges: a tree
        return Polynomial::x() * Polynomial({-1, 1}).pow(static_cast<unsigned>(g.n - 1));
    if (m == g.n) {
        bool all_deg2 = true;
        for (auto a : g.adj) all_deg2 &= (std::popcount(a) == 2);
        if (all_deg2) {  // connected, n edges, 2-regular: a cycle
            Polynomial xm1({-1, 1});
            Polynomial p = xm1.pow(static_cast<unsigned>(g.n));
            return (g.n % 2 == 0) ? p + xm1 : p - xm1;
        }
    }
    if (m == g.n * (g.n - 1) / 2) return falling_factorial(static_cast<unsigned>(g.n));

    auto it = memo.find(g.key());
    if (it != memo.end()) return it->second;

    // Pick an edge at a minimum-degree endpoint.
    int best = -1;
    for (int v = 0; v < g.n; ++v)
        if (g.adj[static_cast<std::size_t>(v)] &&
            (best < 0 || std::popcount(g.adj[static_cast<std::size_t>(v)]) <
                             std::popcount(g.adj[static_cast<std::size_t>(best)])))
            best = v;
    int u = best;
    int v = std::countr_zero(g.adj[static_cast<std::size_t>(u)]);

    DcGraph del = g;
    del.adj[static_cast<std::size_t>(u)] &= ~(1u << v);
    del.adj[static_cast<std::size_t>(v)] &= ~(1u << u);

    DcGraph con = g;  // merge v into u, then drop v
    con.adj[static_cast<std::size_t>(u)] |= con.adj[static_cast<std::size_t>(v)];
    con.adj[static_cast<std::size_t>(u)] &= ~((1u << u) | (1u << v));
    for (int w = 0; w < con.n; ++w) {
        if (con.adj[static_cast<std::size_t>(w)] & (1u << v)) {
            con.adj[static_cast<std::size_t>(w)] &= ~(1u << v);
            con.adj[static_cast<std::size_t>(w)] |= (1u << u);
        }
    }
    con.adj[static_cast<std::size_t>(u)] &= ~(1u << u);
    con = dc_induced(con, ((g.n == 32 ? ~0u : (1u << g.n) - 1u)) & ~(1u << v));

    Polynomial result = dc_chromatic(del, memo) - dc_chromatic(con, memo);
    memo.emplace(g.key(), result);
    return result;
}

inline Polynomial dc_chromatic(DcGraph g, std::map<std::string, Polynomial>& memo) {
    if (dc_edge_count(g) == 0) return Polynomial::monomial(static_cast<std::size_t>(g.n));
    auto comps = dc_components(g);
    if (comps.size() == 1) return dc_chromatic_connected(g, memo);
    Polynomial p = Polynomial::constant(1);
    for (auto mask : comps) p = p * dc_chromatic(dc_induced(g, mask), memo);
    return p;
}

}  // namespace detail

// Exact chromatic polynomial; memoization is per call.
inline Polynomial chromatic_polynomial(const Graph& g) {
    if (g.vertex_count() > kChromaticVertexLimit)
        throw std::invalid_argument("chromatic_polynomial: graph too large for deletion-contraction");
    detail::DcGraph d;
    d.n = g.vertex_count();
    d.adj.resize(static_cast<std::size_t>(d.n));
    for (int v = 1; v <= d.n; ++v) d.adj[static_cast<std::size_t>(v - 1)] = g.neighbors(v);
    std::map<std::string, Polynomial> memo;
    return detail::dc_chromatic(std::move(d), memo);
}

enum class GraphFamily { Cycle, STree, CompletePlusIsolated, CyclicLadder };

// Closed-form chromatic polynomials for the named families.
//   cycle(n):                 (x-1)^n + (-1)^n (x-1),        n >= 3
//   s_tree(s, n):             x_(s) (x-s)^{n-s},             n >= s >= 1
//   complete_plus_isolated:   x_(r) x^{isolated}
//   cyclic_ladder(n):         (x^2-3x+3)^n + (x-1)((1-x)^n + (3-x)^n) + x^2-3x+1
inline Polynomial chromatic_named(GraphFamily family, int a, int b = 0) {
    switch (family) {
        case GraphFamily::Cycle: {
            int n = a;
            if (n < 3) throw std::invalid_argument("chromatic_named: cycle needs n >= 3");
            Polynomial xm1({-1, 1});
            Polynomial p = xm1.pow(static_cast<unsigned>(n));
            return (n % 2 == 0) ? p + xm1 : p - xm1;
        }
        case GraphFamily::STree: {
            int s = a, n = b;
            if (s < 1 || n < s) throw std::invalid_argument("chromatic_named: s-tree needs n >= s >= 1");
            return falling_factorial(static_cast<unsigned>(s)) *
                   Polynomial({BigRat(-s), 1}).pow(static_cast<unsigned>(n - s));
        }
        case GraphFamily::CompletePlusIsolated: {
            int r = a, isolated = b;
            if (r < 0 || isolated < 0) throw std::invalid_argument("chromatic_named: bad parameters");
            return falling_factorial(static_cast<unsigned>(r)) *
                   Polynomial::monomial(static_cast<std::size_t>(isolated));
        }
        case GraphFamily::CyclicLadder: {
            int n = a;
            if (n < 3) throw std::invalid_argument("chromatic_named: cyclic ladder needs n >= 3");
            Polynomial core({3, -3, 1});
            Polynomial one_minus_x({1, -1});
            Polynomial three_minus_x({3, -1});
            Polynomial p = core.pow(static_cast<unsigned>(n));
            p = p + Polynomial({-1, 1}) * (one_minus_x.pow(static_cast<unsigned>(n)) +
                                           three_minus_x.pow(static_cast<unsigned>(n)));
            return p + Polynomial({1, -3, 1});
        }
    }
    throw std::logic_error("chromatic_named: unreachable");
}

// S(G,k): partitions of V(G) into k blocks, every block an independent set.
// Computed as Δᵏ(χ(G;x))|₀ / k!.
inline BigInt graph_partition_count_from_chromatic(const Polynomial& chi, int k) {
    if (k < 0) throw std::invalid_argument("graph_partition_count: negative k");
    BigRat v = chi.forward_difference(static_cast<unsigned>(k)).eval(0) /
               BigRat(factorial(static_cast<unsigned>(k)));
    if (!is_integer(v)) throw std::logic_error("graph_partition_count: non-integer value");
    return numerator(v);
}

inline BigInt graph_partition_count(const Graph& g, int k) {
    return graph_partition_count_from_chromatic(chromatic_polynomial(g), k);
}

// Brute-force S(G,k) for cross-checks.
inline BigInt graph_partition_count_oracle(const Graph& g, int k) {
    int n = g.vertex_count();
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v) adj[static_cast<std::size_t>(v - 1)] = g.neighbors(v);
    return enumerate_partitions(n, k, [&](const BlockMasks& blocks) {
        for (auto b : blocks)
            for (int v = 0; v < n; ++v)
                if ((b & (1u << v)) && (adj[static_cast<std::size_t>(v)] & b)) return false;
        return true;
    });
}

// Edge-list text, one "u v" pair per line, 1-indexed. Vertex count defaults
// to the largest label; a leading "n <count>" line pins isolated vertices.
inline Graph graph_from_edge_list(const std::string& text) {
    std::vector<std::pair<int, int>> edges;
    int maxv = 0, forced_n = -1;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "n") {
            if (!(ls >> forced_n)) throw std::invalid_argument("graph_from_edge_list: bad vertex-count line");
            continue;
        }
        int u = std::stoi(first), v = 0;
        if (!(ls >> v)) throw std::invalid_argument("graph_from_edge_list: bad edge line '" + line + "'");
        edges.emplace_back(u, v);
        maxv = std::max({maxv, u, v});
    }
    Graph g(forced_n >= 0 ? forced_n : maxv);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

}  // namespace boxpoly
