#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "ccn/errors.hpp"
#include "ccn/graph.hpp"
#include "ccn/vertex_set.hpp"

namespace ccn {

// Number of connected components of the subgraph induced by `within`.
inline int component_count_within(const Graph& g, VertexSet within) {
    std::uint64_t rest = within.bits();
    int comps = 0;
    while (rest) {
        ++comps;
        std::uint64_t frontier = rest & (~rest + 1);
        std::uint64_t seen = frontier;
        while (frontier) {
            std::uint64_t next = 0;
            for (std::uint64_t f = frontier; f; f &= f - 1)
                next |= g.neighbors_bits(std::countr_zero(f));
            frontier = next & rest & ~seen;
            seen |= frontier;
        }
        rest &= ~seen;
    }
    return comps;
}

inline int component_count(const Graph& g) {
    return component_count_within(g, g.vertices());
}

// The empty graph counts as not connected; K1 is connected.
inline bool is_connected(const Graph& g) {
    return component_count(g) == 1;
}

inline bool induced_is_connected(const Graph& g, VertexSet s) {
    if (s.empty()) throw Error("empty set");
    if (!s.is_subset_of(g.vertices())) throw Error("set contains vertices outside the graph");
    return component_count_within(g, s) == 1;
}

// Vertices adjacent to every other vertex. The sole vertex of K1 counts.
inline VertexSet full_vertices(const Graph& g) {
    VertexSet out;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == g.order() - 1) out = out.with(v);
    return out;
}

// Articulation points via lowlink DFS. Requires a connected graph.
inline VertexSet cut_vertices(const Graph& g) {
    if (!is_connected(g)) throw Error("graph not connected");
    int n = g.order();
    std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    VertexSet cuts;
    int timer = 0;

    struct Frame {
        int v;
        int parent;
        std::uint64_t todo;
        int children;
    };
    std::vector<Frame> stack;
    disc[0] = low[0] = timer++;
    stack.push_back({0, -1, g.neighbors_bits(0), 0});
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.todo) {
            int w = std::countr_zero(f.todo);
            f.todo &= f.todo - 1;
            if (disc[static_cast<std::size_t>(w)] == -1) {
                ++f.children;
                disc[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = timer++;
                stack.push_back({w, f.v, g.neighbors_bits(w), 0});
            } else if (w != f.parent) {
                low[static_cast<std::size_t>(f.v)] =
                    std::min(low[static_cast<std::size_t>(f.v)], disc[static_cast<std::size_t>(w)]);
            }
        } else {
            Frame done = f;
            stack.pop_back();
            if (!stack.empty()) {
                Frame& p = stack.back();
                low[static_cast<std::size_t>(p.v)] =
                    std::min(low[static_cast<std::size_t>(p.v)], low[static_cast<std::size_t>(done.v)]);
                if (p.parent != -1 &&
                    low[static_cast<std::size_t>(done.v)] >= disc[static_cast<std::size_t>(p.v)])
                    cuts = cuts.with(p.v);
            } else if (done.children > 1) {
                cuts = cuts.with(done.v);  // DFS root
            }
        }
    }
    return cuts;
}

// Same set by |V| deletion/connectivity checks; the slow cross-check
// for the DFS version.
inline VertexSet cut_vertices_by_deletion(const Graph& g) {
    if (!is_connected(g)) throw Error("graph not connected");
    VertexSet out;
    for (int v = 0; v < g.order(); ++v)
        if (component_count_within(g, g.vertices().without(v)) > 1) out = out.with(v);
    return out;
}

}  // namespace ccn
