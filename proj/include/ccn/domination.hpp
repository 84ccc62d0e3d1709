#pragma once

#include <bit>
#include <cstdint>

#include "ccn/connectivity.hpp"
#include "ccn/graph.hpp"
#include "ccn/vertex_set.hpp"

namespace ccn {

// Every vertex outside s has a neighbor in s. Vertices inside s need
// no witness.
inline bool is_dominating(const Graph& g, VertexSet s) {
    std::uint64_t cover = s.bits();
    for (std::uint64_t f = s.bits(); f; f &= f - 1)
        cover |= g.neighbors_bits(std::countr_zero(f));
    return (g.vertices().bits() & ~cover) == 0;
}

inline bool is_cds(const Graph& g, VertexSet s) {
    return !s.empty() && is_dominating(g, s) && component_count_within(g, s) == 1;
}

// Minimal connected dominating set inside `within`, obtained by
// repeated single-vertex removals scanned from the highest vertex down
// (so the kept set prefers low ids), iterated to a fixpoint.
inline VertexSet minimal_cds(const Graph& g, VertexSet within) {
    if (!is_cds(g, within)) throw Error("minimal_cds: input is not a connected dominating set");
    VertexSet x = within;
    bool changed = true;
    while (changed) {
        changed = false;
        auto vs = x.to_vector();
        for (auto it = vs.rbegin(); it != vs.rend(); ++it) {
            VertexSet candidate = x.without(*it);
            if (is_cds(g, candidate)) {
                x = candidate;
                changed = true;
            }
        }
    }
    return x;
}

}  // namespace ccn
