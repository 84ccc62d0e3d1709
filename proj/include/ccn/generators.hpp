#pragma once

#include <cstdint>
#include <istream>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ccn/connectivity.hpp"
#include "ccn/errors.hpp"
#include "ccn/graph.hpp"
#include "ccn/graph6.hpp"

namespace ccn {

inline Graph path(int n) {
    if (n < 1) throw Error("path needs at least one vertex");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph cycle(int n) {
    if (n < 3) throw Error("cycle needs at least three vertices");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

// Star with the center at vertex 0.
inline Graph star(int leaves) {
    if (leaves < 1) throw Error("star needs at least one leaf");
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

inline Graph complete(int n) {
    if (n < 1) throw Error("complete graph needs at least one vertex");
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

// Sides [0, m) and [m, m+n).
inline Graph complete_bipartite(int m, int n) {
    if (m < 1 || n < 1) throw Error("complete bipartite graph needs nonempty sides");
    Graph g(m + n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) g.add_edge(i, m + j);
    return g;
}

// Triangle {0,1,2} with `pendants` extra leaves all attached to vertex 0.
// The plain triangle (no pendants) is excluded.
inline Graph family_g(int pendants) {
    if (pendants < 1) throw Error("family G needs at least one pendant");
    Graph g(3 + pendants);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    for (int i = 0; i < pendants; ++i) g.add_edge(0, 3 + i);
    return g;
}

// C4 on {0,1,2,3} with a pendant vertex 4 attached at 0.
inline Graph c4_plus_e() {
    Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}});
    return g;
}

inline Graph add_pendant(const Graph& g, int at) {
    Graph out(g.order() + 1);
    for (int u = 0; u < g.order(); ++u)
        for (int w : g.neighbors(u))
            if (w > u) out.add_edge(u, w);
    out.add_edge(at, g.order());
    return out;
}

// One copy of g, |V(g)| copies of h; vertex i of g joined to all of
// copy i. Copy i occupies ids n_g + i*n_h .. n_g + (i+1)*n_h - 1.
inline Graph corona(const Graph& g, const Graph& h) {
    if (g.order() < 1) throw Error("corona needs a nonempty first factor");
    int ng = g.order(), nh = h.order();
    Graph out(ng * (1 + nh));
    for (int u = 0; u < ng; ++u)
        for (int w : g.neighbors(u))
            if (w > u) out.add_edge(u, w);
    for (int i = 0; i < ng; ++i) {
        int base = ng + i * nh;
        for (int u = 0; u < nh; ++u) {
            out.add_edge(i, base + u);
            for (int w : h.neighbors(u))
                if (w > u) out.add_edge(base + u, base + w);
        }
    }
    return out;
}

// Disjoint union (g first, then h) plus all edges across.
inline Graph join(const Graph& g, const Graph& h) {
    int ng = g.order(), nh = h.order();
    Graph out(ng + nh);
    for (int u = 0; u < ng; ++u)
        for (int w : g.neighbors(u))
            if (w > u) out.add_edge(u, w);
    for (int u = 0; u < nh; ++u)
        for (int w : h.neighbors(u))
            if (w > u) out.add_edge(ng + u, ng + w);
    for (int u = 0; u < ng; ++u)
        for (int w = 0; w < nh; ++w) out.add_edge(u, ng + w);
    return out;
}

// Vertex (u,v) gets id u*|V(h)| + v in both products.
inline Graph cartesian_product(const Graph& g, const Graph& h) {
    if (g.order() < 1 || h.order() < 1) throw Error("product factors must be nonempty");
    int ng = g.order(), nh = h.order();
    Graph out(ng * nh);
    for (int u = 0; u < ng; ++u)
        for (int v = 0; v < nh; ++v) {
            for (int w : h.neighbors(v))
                if (w > v) out.add_edge(u * nh + v, u * nh + w);
            for (int x : g.neighbors(u))
                if (x > u) out.add_edge(u * nh + v, x * nh + v);
        }
    return out;
}

inline Graph lexicographic_product(const Graph& g, const Graph& h) {
    if (g.order() < 1 || h.order() < 1) throw Error("product factors must be nonempty");
    int ng = g.order(), nh = h.order();
    Graph out(ng * nh);
    for (int u = 0; u < ng; ++u)
        for (int v = 0; v < nh; ++v) {
            for (int w : h.neighbors(v))
                if (w > v) out.add_edge(u * nh + v, u * nh + w);
            for (int x : g.neighbors(u))
                if (x > u)
                    for (int w = 0; w < nh; ++w) out.add_edge(u * nh + v, x * nh + w);
        }
    return out;
}

// ---- exhaustive enumeration ----------------------------------------

struct GraphFilter {
    bool connected = false;
    bool tree = false;       // implies connected
    bool unicyclic = false;  // implies connected
    bool no_full_vertex = false;

    bool matches(const Graph& g) const {
        int n = g.order(), m = g.edge_count();
        if (tree && m != n - 1) return false;
        if (unicyclic && m != n) return false;
        if ((connected || tree || unicyclic) && !is_connected(g)) return false;
        if (no_full_vertex && !full_vertices(g).empty()) return false;
        return true;
    }
};

inline std::uint64_t labeled_graph_count(int n) {
    return std::uint64_t{1} << (n * (n - 1) / 2);
}

// Labeled graph from an edge bitmask over the pairs (i,j), i<j, ordered
// column-major like graph6.
inline Graph graph_from_mask(int n, std::uint64_t mask) {
    Graph g(n);
    int bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if ((mask >> bit) & 1) g.add_edge(i, j);
    return g;
}

// Deterministic stream over all labeled graphs on n vertices passing
// the filter. Exhaustive enumeration is capped at n <= 9; larger
// universes must come from an external graph6 corpus.
template <class F>
void enumerate_graphs(int n, const GraphFilter& filter, F&& fn) {
    if (n < 1) throw Error("enumeration needs at least one vertex");
    if (n > 9) throw Error("exhaustive enumeration capped at nine vertices; supply a graph6 corpus instead");
    std::uint64_t total = labeled_graph_count(n);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        Graph g = graph_from_mask(n, mask);
        if (filter.matches(g)) fn(g);
    }
}

// Stream from a newline-delimited graph6 corpus.
template <class F>
void enumerate_graph6_stream(std::istream& in, const GraphFilter& filter, F&& fn) {
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        Graph g = graph6_decode(line);
        if (filter.matches(g)) fn(g);
    }
}

// ---- labeled trees via Prufer sequences ------------------------------

inline std::uint64_t labeled_tree_count(int n) {
    if (n <= 2) return 1;
    std::uint64_t c = 1;
    for (int i = 0; i < n - 2; ++i) c *= static_cast<std::uint64_t>(n);
    return c;
}

inline Graph tree_from_prufer(int n, const std::vector<int>& seq) {
    Graph g(n);
    if (n == 1) return g;
    if (n == 2) {
        g.add_edge(0, 1);
        return g;
    }
    std::vector<int> deg(static_cast<std::size_t>(n), 1);
    for (int x : seq) ++deg[static_cast<std::size_t>(x)];
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    int ptr = 0;
    while (deg[static_cast<std::size_t>(ptr)] != 1) ++ptr;
    int leaf = ptr;
    for (int x : seq) {
        g.add_edge(leaf, x);
        if (--deg[static_cast<std::size_t>(x)] == 1 && x < ptr) {
            leaf = x;
        } else {
            ++ptr;
            while (deg[static_cast<std::size_t>(ptr)] != 1) ++ptr;
            leaf = ptr;
        }
    }
    g.add_edge(leaf, n - 1);
    return g;
}

// index in [0, n^(n-2)) decoded as base-n digits
inline Graph labeled_tree(int n, std::uint64_t index) {
    if (n < 1) throw Error("tree needs at least one vertex");
    std::vector<int> seq(static_cast<std::size_t>(std::max(0, n - 2)));
    for (int i = 0; i < n - 2; ++i) {
        seq[static_cast<std::size_t>(i)] = static_cast<int>(index % static_cast<std::uint64_t>(n));
        index /= static_cast<std::uint64_t>(n);
    }
    return tree_from_prufer(n, seq);
}

template <class F>
void enumerate_trees(int n, F&& fn) {
    std::uint64_t total = labeled_tree_count(n);
    for (std::uint64_t i = 0; i < total; ++i) fn(labeled_tree(n, i));
}

// ---- labeled unicyclic graphs ----------------------------------------

namespace detail {

// Path between u and v inside a tree, as a vertex sequence.
inline std::vector<int> tree_path(const Graph& t, int u, int v) {
    std::vector<int> parent(static_cast<std::size_t>(t.order()), -2);
    parent[static_cast<std::size_t>(u)] = -1;
    std::vector<int> queue{u};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int x = queue[qi];
        if (x == v) break;
        for (int w : t.neighbors(x))
            if (parent[static_cast<std::size_t>(w)] == -2) {
                parent[static_cast<std::size_t>(w)] = x;
                queue.push_back(w);
            }
    }
    std::vector<int> out;
    for (int x = v; x != -1; x = parent[static_cast<std::size_t>(x)]) out.push_back(x);
    return out;
}

}  // namespace detail

// Every labeled connected unicyclic graph arises exactly once as a
// labeled tree plus one extra edge, provided the extra edge is the
// lexicographically smallest edge of the resulting cycle.
template <class F>
void enumerate_unicyclic(int n, F&& fn) {
    if (n < 3) throw Error("unicyclic graphs need at least three vertices");
    enumerate_trees(n, [&](const Graph& t) {
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (t.has_edge(u, v)) continue;
                auto cyc = detail::tree_path(t, u, v);
                // cycle edges: consecutive path pairs plus (u,v) itself
                bool is_min = true;
                for (std::size_t i = 0; i + 1 < cyc.size() && is_min; ++i) {
                    int a = std::min(cyc[i], cyc[i + 1]);
                    int b = std::max(cyc[i], cyc[i + 1]);
                    if (a < u || (a == u && b < v)) is_min = false;
                }
                if (!is_min) continue;
                Graph g = t;
                g.add_edge(u, v);
                fn(g);
            }
        }
    });
}

// ---- random graphs ----------------------------------------------------

inline Graph random_graph(int n, double edge_prob, std::mt19937_64& rng) {
    Graph g(n);
    std::bernoulli_distribution coin(edge_prob);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) g.add_edge(i, j);
    return g;
}

inline Graph random_graph_matching(int n, double edge_prob, const GraphFilter& filter,
                                   std::mt19937_64& rng, int max_tries = 100000) {
    for (int t = 0; t < max_tries; ++t) {
        Graph g = random_graph(n, edge_prob, rng);
        if (filter.matches(g)) return g;
    }
    throw Error("failed to sample a graph matching the filter");
}

}  // namespace ccn
