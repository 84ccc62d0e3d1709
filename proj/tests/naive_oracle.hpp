#pragma once

// Test-only reference: plain restricted-growth-string enumeration of
// every set partition with a full validation at each leaf and no
// pruning whatsoever. Deliberately slow and independent of the search
// used by the library oracle.

#include <vector>

#include "ccn/coalition.hpp"
#include "ccn/domination.hpp"
#include "ccn/graph.hpp"
#include "ccn/partition.hpp"

namespace ccn_test {

inline bool naive_partition_ok(const ccn::Graph& g, const std::vector<ccn::VertexSet>& cells) {
    ccn::VertexSet full = ccn::full_vertices(g);
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (cells[i].count() == 1 && full.contains(cells[i].lowest())) continue;
        bool has_partner = false;
        for (std::size_t j = 0; j < cells.size() && !has_partner; ++j) {
            if (j == i) continue;
            has_partner = ccn::is_cds(g, cells[i] | cells[j]) && !ccn::is_cds(g, cells[i]) &&
                          !ccn::is_cds(g, cells[j]);
        }
        if (!has_partner) return false;
    }
    return true;
}

inline void naive_rec(const ccn::Graph& g, int v, std::vector<ccn::VertexSet>& cells, int& best) {
    if (v == g.order()) {
        if (static_cast<int>(cells.size()) > best && naive_partition_ok(g, cells))
            best = static_cast<int>(cells.size());
        return;
    }
    for (std::size_t c = 0; c <= cells.size(); ++c) {
        if (c == cells.size()) {
            cells.push_back(ccn::VertexSet::single(v));
            naive_rec(g, v + 1, cells, best);
            cells.pop_back();
        } else {
            cells[c] = cells[c].with(v);
            naive_rec(g, v + 1, cells, best);
            cells[c] = cells[c].without(v);
        }
    }
}

inline int naive_cc(const ccn::Graph& g) {
    if (g.order() == 0) return 0;
    std::vector<ccn::VertexSet> cells;
    int best = 0;
    naive_rec(g, 0, cells, best);
    return best;
}

inline void naive_domatic_rec(const ccn::Graph& g, int v, std::vector<ccn::VertexSet>& cells,
                              int& best) {
    if (v == g.order()) {
        for (const auto& c : cells)
            if (!ccn::is_cds(g, c)) return;
        best = std::max(best, static_cast<int>(cells.size()));
        return;
    }
    for (std::size_t c = 0; c <= cells.size(); ++c) {
        if (c == cells.size()) {
            cells.push_back(ccn::VertexSet::single(v));
            naive_domatic_rec(g, v + 1, cells, best);
            cells.pop_back();
        } else {
            cells[c] = cells[c].with(v);
            naive_domatic_rec(g, v + 1, cells, best);
            cells[c] = cells[c].without(v);
        }
    }
}

inline int naive_connected_domatic(const ccn::Graph& g) {
    std::vector<ccn::VertexSet> cells;
    int best = 0;
    naive_domatic_rec(g, 0, cells, best);
    return best;
}

}  // namespace ccn_test
