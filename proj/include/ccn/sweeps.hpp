#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>

#include "ccn/canonical.hpp"
#include "ccn/closed_forms.hpp"
#include "ccn/coalition.hpp"
#include "ccn/generators.hpp"
#include "ccn/graph6.hpp"
#include "ccn/oracle.hpp"

namespace ccn {

struct SweepRow {
    std::string graph6;
    int n = 0;
    std::string rule;
    std::optional<long long> formula_value;
    std::optional<long long> oracle_value;
    bool agree = false;
};

struct SweepSummary {
    std::uint64_t rows = 0;
    std::uint64_t disagreements = 0;
};

using RowSink = std::function<void(const SweepRow&)>;

// CC is invariant under relabeling, so sweeps over labeled families
// run the oracle once per isomorphism class, keyed by a canonical code.
class OracleValueCache {
public:
    template <class CodeFn>
    int value(const Graph& g, const OracleOptions& opts, CodeFn&& code_of) {
        std::string key = code_of(g);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        int v = cc_oracle(g, opts).value;
        cache_.emplace(std::move(key), v);
        return v;
    }

    std::size_t classes() const { return cache_.size(); }

private:
    std::unordered_map<std::string, int> cache_;
};

namespace detail {

inline void emit(SweepSummary& summary, const RowSink& sink, SweepRow row) {
    ++summary.rows;
    if (!row.agree) ++summary.disagreements;
    if (sink) sink(row);
}

}  // namespace detail

inline SweepSummary sweep_cycles(int max_n, const OracleOptions& opts, const RowSink& sink) {
    SweepSummary s;
    for (int n = 3; n <= max_n; ++n) {
        Graph g = cycle(n);
        long long formula = cc_cycle(n);
        long long oracle = cc_oracle(g, opts).value;
        detail::emit(s, sink,
                     {graph6_encode(g), n, "cycle-formula", formula, oracle, formula == oracle});
    }
    return s;
}

inline SweepSummary sweep_trees(int max_n, const OracleOptions& opts, const RowSink& sink) {
    SweepSummary s;
    OracleValueCache cache;
    for (int n = 1; n <= max_n; ++n) {
        enumerate_trees(n, [&](const Graph& g) {
            long long formula = *cc_tree(g).value;
            long long oracle = cache.value(g, opts, tree_canonical_code);
            long long auto_value = cc_auto(g, opts).value;
            detail::emit(s, sink,
                         {graph6_encode(g), n, "tree-formula", formula, oracle,
                          formula == oracle && auto_value == oracle});
        });
    }
    return s;
}

inline SweepSummary sweep_unicyclic(int max_n, const OracleOptions& opts, const RowSink& sink) {
    SweepSummary s;
    OracleValueCache cache;
    for (int n = 3; n <= max_n; ++n) {
        enumerate_unicyclic(n, [&](const Graph& g) {
            auto report = cc_unicyclic(g);
            long long formula = *report.value;
            long long oracle = cache.value(g, opts, unicyclic_canonical_code);
            detail::emit(s, sink,
                         {graph6_encode(g), n, "unicyclic-" + report.case_label, formula, oracle,
                          formula == oracle});
        });
    }
    return s;
}

inline SweepSummary sweep_corona(int max_g, int max_h, const OracleOptions& opts, const RowSink& sink) {
    SweepSummary s;
    for (int ng = 1; ng <= max_g; ++ng) {
        enumerate_graphs(ng, {.connected = true}, [&](const Graph& g) {
            for (int nh = 1; nh <= max_h; ++nh) {
                enumerate_graphs(nh, {}, [&](const Graph& h) {
                    int product_order = ng * (1 + nh);
                    if (product_order > opts.max_n) return;
                    Graph product = corona(g, h);
                    long long formula = *cc_corona(g, h, opts).value;
                    long long oracle = cc_oracle(product, opts).value;
                    detail::emit(s, sink,
                                 {graph6_encode(product), product_order, "corona-formula", formula,
                                  oracle, formula == oracle});
                });
            }
        });
    }
    return s;
}

inline SweepSummary sweep_join(int max_side, const OracleOptions& opts, const RowSink& sink) {
    SweepSummary s;
    for (int ng = 1; ng <= max_side; ++ng) {
        enumerate_graphs(ng, {}, [&](const Graph& g) {
            for (int nh = 1; nh <= max_side; ++nh) {
                enumerate_graphs(nh, {}, [&](const Graph& h) {
                    if (ng + nh > opts.max_n) return;
                    Graph product = join(g, h);
                    long long formula = *cc_join(g, h, opts).value;
                    long long oracle = cc_oracle(product, opts).value;
                    detail::emit(s, sink,
                                 {graph6_encode(product), ng + nh, "join-formula", formula, oracle,
                                  formula == oracle});
                });
            }
        });
    }
    return s;
}

inline SweepSummary sweep_cartesian_bound(int max_side, const OracleOptions& opts, const RowSink& sink) {
    SweepSummary s;
    for (int ng = 2; ng <= max_side; ++ng) {
        enumerate_graphs(ng, {.connected = true}, [&](const Graph& g) {
            for (int nh = 2; nh <= max_side; ++nh) {
                enumerate_graphs(nh, {.connected = true}, [&](const Graph& h) {
                    if (ng * nh > opts.max_n) return;
                    Graph product = cartesian_product(g, h);
                    long long bound = cc_cartesian_lower_bound(g, h, opts);
                    long long oracle = cc_oracle(product, opts).value;
                    detail::emit(s, sink,
                                 {graph6_encode(product), ng * nh, "cartesian-bound", bound, oracle,
                                  oracle >= bound});
                });
            }
        });
    }
    return s;
}

inline SweepSummary sweep_lex_bound(int max_side, const OracleOptions& opts, const RowSink& sink) {
    SweepSummary s;
    for (int ng = 2; ng <= max_side; ++ng) {
        enumerate_graphs(ng, {}, [&](const Graph& g) {
            for (int nh = 2; nh <= max_side; ++nh) {
                enumerate_graphs(nh, {}, [&](const Graph& h) {
                    if (ng * nh > opts.max_n) return;
                    Graph product = lexicographic_product(g, h);
                    long long bound = cc_lexicographic_lower_bound(g, h, opts);
                    long long oracle = cc_oracle(product, opts).value;
                    detail::emit(s, sink,
                                 {graph6_encode(product), ng * nh, "lexicographic-bound", bound,
                                  oracle, oracle >= bound});
                });
            }
        });
    }
    return s;
}

// Rows agree when the oracle hits zero exactly on zero-family members
// and one exactly on K1.
inline SweepSummary sweep_zero_family(int max_n, const OracleOptions& opts, const RowSink& sink) {
    SweepSummary s;
    for (int n = 1; n <= max_n; ++n) {
        enumerate_graphs(n, {.connected = true}, [&](const Graph& g) {
            bool in_family = cc_zero_family_check(g);
            long long oracle = cc_oracle(g, opts).value;
            bool ok = ((oracle == 0) == in_family) && ((oracle == 1) == (n == 1));
            detail::emit(s, sink,
                         {graph6_encode(g), n, "zero-family",
                          in_family ? std::optional<long long>(0) : std::nullopt, oracle, ok});
        });
    }
    return s;
}

// Random (graph, connected dominating set) instances; each row checks
// that the constructive partition of the set validates: every cell has
// a coalition partner inside the partition.
inline SweepSummary sweep_cds_partition(int instances, int max_n, std::uint64_t seed,
                                        const RowSink& sink) {
    SweepSummary s;
    std::mt19937_64 rng(seed);
    GraphFilter filter{.connected = true, .no_full_vertex = true};
    int made = 0;
    while (made < instances) {
        std::uniform_int_distribution<int> size_dist(4, max_n);
        int n = size_dist(rng);
        std::uniform_real_distribution<double> p_dist(0.25, 0.75);
        Graph g = random_graph_matching(n, p_dist(rng), filter, rng);

        // random superset of V's pruned core, rejected until it is a CDS
        VertexSet a;
        for (int tries = 0;; ++tries) {
            std::uint64_t mask = rng() & g.vertices().bits();
            a = VertexSet::from_bits(mask);
            if (a.count() >= 2 && is_cds(g, a)) break;
            if (tries > 200) {
                a = g.vertices();
                break;
            }
        }
        Partition p = partition_cds(g, a);
        bool ok = true;
        std::uint64_t covered = 0;
        for (VertexSet c : p.cells) covered |= c.bits();
        ok = covered == a.bits();
        for (std::size_t i = 0; i < p.cells.size() && ok; ++i) {
            bool has_partner = false;
            for (std::size_t j = 0; j < p.cells.size() && !has_partner; ++j)
                if (j != i) has_partner = is_coalition(g, p.cells[i], p.cells[j]);
            ok = has_partner;
        }
        detail::emit(s, sink,
                     {graph6_encode(g), g.order(), "cds-partition",
                      static_cast<long long>(p.size()), std::nullopt, ok});
        ++made;
    }
    return s;
}

}  // namespace ccn
