#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "ccn/connectivity.hpp"
#include "ccn/errors.hpp"
#include "ccn/graph.hpp"

namespace ccn {

namespace detail {

inline std::string ahu_code(const Graph& g, int root, int parent, VertexSet allowed) {
    std::vector<std::string> child_codes;
    for (int w : g.neighbors(root)) {
        if (w == parent || !allowed.contains(w)) continue;
        child_codes.push_back(ahu_code(g, w, root, allowed));
    }
    std::sort(child_codes.begin(), child_codes.end());
    std::string out = "(";
    for (const auto& c : child_codes) out += c;
    out += ")";
    return out;
}

// Vertices left after iteratively stripping leaves; for a unicyclic
// graph this is exactly the cycle.
inline VertexSet two_core(const Graph& g) {
    VertexSet keep = g.vertices();
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v : keep) {
            if ((g.neighbors(v) & keep).count() <= 1) {
                keep = keep.without(v);
                changed = true;
            }
        }
    }
    return keep;
}

}  // namespace detail

// Isomorphism-complete code of a labeled tree: AHU rooted codes taken
// at the tree's center(s).
inline std::string tree_canonical_code(const Graph& g) {
    int n = g.order();
    if (n < 1 || g.edge_count() != n - 1 || !is_connected(g)) throw Error("not a tree");
    if (n == 1) return "()";
    // peel leaves level by level; the last one or two vertices are the centers
    std::vector<int> deg(static_cast<std::size_t>(n));
    VertexSet alive = g.vertices();
    for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
    int remaining = n;
    while (remaining > 2) {
        VertexSet leaves;
        for (int v : alive)
            if (deg[static_cast<std::size_t>(v)] <= 1) leaves = leaves.with(v);
        for (int v : leaves) {
            alive = alive.without(v);
            --remaining;
            for (int w : g.neighbors(v))
                if (alive.contains(w)) --deg[static_cast<std::size_t>(w)];
        }
    }
    std::string best;
    for (int c : alive) {
        std::string code = detail::ahu_code(g, c, -1, g.vertices());
        if (best.empty() || code < best) best = code;
    }
    return best;
}

// Isomorphism-complete code of a labeled unicyclic graph: AHU codes of
// the trees hanging off each cycle vertex, minimized over cycle
// rotations and both directions.
inline std::string unicyclic_canonical_code(const Graph& g) {
    int n = g.order();
    if (g.edge_count() != n || !is_connected(g)) throw Error("not unicyclic");
    VertexSet core = detail::two_core(g);
    // order the cycle as a sequence
    std::vector<int> cyc;
    int start = core.lowest();
    int prev = -1, cur = start;
    do {
        cyc.push_back(cur);
        int next = -1;
        for (int w : (g.neighbors(cur) & core))
            if (w != prev) {
                next = w;
                break;
            }
        prev = cur;
        cur = next;
    } while (cur != start);

    int m = static_cast<int>(cyc.size());
    VertexSet off_core = g.vertices() - core;
    std::vector<std::string> codes(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i)
        codes[static_cast<std::size_t>(i)] =
            detail::ahu_code(g, cyc[static_cast<std::size_t>(i)], -1, off_core.with(cyc[static_cast<std::size_t>(i)]));

    std::string best;
    for (int dir = 0; dir < 2; ++dir) {
        for (int shift = 0; shift < m; ++shift) {
            std::string cand;
            for (int i = 0; i < m; ++i) {
                int idx = dir == 0 ? (shift + i) % m : (shift - i % m + m + m) % m;
                cand += codes[static_cast<std::size_t>(idx)];
                cand += '|';
            }
            if (best.empty() || cand < best) best = cand;
        }
    }
    return best;
}

// Exact canonical edge mask of a small graph: the minimum upper-triangle
// bitmask over all vertex orderings compatible with the stable coloring
// computed by iterated neighborhood refinement. Intended for n <= 8.
inline std::uint64_t canonical_mask(const Graph& g) {
    int n = g.order();
    if (n > 10) throw Error("canonical_mask is for small graphs");
    if (n == 0) return 0;

    // 1-dimensional color refinement to a fixpoint
    std::vector<int> color(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) color[static_cast<std::size_t>(v)] = g.degree(v);
    for (;;) {
        std::map<std::vector<int>, int> sig_ids;
        std::vector<std::vector<int>> sigs(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            std::vector<int> s{color[static_cast<std::size_t>(v)]};
            std::vector<int> neigh;
            for (int w : g.neighbors(v)) neigh.push_back(color[static_cast<std::size_t>(w)]);
            std::sort(neigh.begin(), neigh.end());
            s.insert(s.end(), neigh.begin(), neigh.end());
            sigs[static_cast<std::size_t>(v)] = std::move(s);
        }
        for (int v = 0; v < n; ++v) sig_ids.emplace(sigs[static_cast<std::size_t>(v)], 0);
        int next_id = 0;
        for (auto& [sig, id] : sig_ids) id = next_id++;
        std::vector<int> refined(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) refined[static_cast<std::size_t>(v)] = sig_ids[sigs[static_cast<std::size_t>(v)]];
        if (refined == color) break;
        color = std::move(refined);
    }

    // candidate orderings: vertices sorted by color class, permuted
    // freely inside each class
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return color[static_cast<std::size_t>(a)] < color[static_cast<std::size_t>(b)] || (color[static_cast<std::size_t>(a)] == color[static_cast<std::size_t>(b)] && a < b);
    });

    auto mask_of = [&](const std::vector<int>& ord) {
        // position[v] = rank of v in ord
        std::array<int, 16> pos{};
        for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(ord[static_cast<std::size_t>(i)])] = i;
        std::uint64_t mask = 0;
        int bit = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++bit) {
                // edge between ord-ranks i and j?
                int u = ord[static_cast<std::size_t>(i)], v = ord[static_cast<std::size_t>(j)];
                if (g.has_edge(u, v)) mask |= std::uint64_t{1} << bit;
            }
        return mask;
    };

    std::uint64_t best = ~std::uint64_t{0};
    // iterate permutations within color classes via next_permutation on
    // the full order restricted to equal-color runs
    std::vector<int> ord = order;
    for (;;) {
        best = std::min(best, mask_of(ord));
        // advance: find the last class run that still has a next permutation
        bool advanced = false;
        int i = n;
        while (i > 0) {
            int j = i - 1;
            while (j > 0 && color[static_cast<std::size_t>(ord[static_cast<std::size_t>(j - 1)])] ==
                                color[static_cast<std::size_t>(ord[static_cast<std::size_t>(j)])])
                --j;
            // run [j, i)
            if (std::next_permutation(ord.begin() + j, ord.begin() + i)) {
                advanced = true;
                break;
            }
            // run back to sorted start; move to the previous run
            i = j;
        }
        if (!advanced) break;
    }
    return best;
}

}  // namespace ccn
