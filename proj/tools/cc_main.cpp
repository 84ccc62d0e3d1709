// Command-line front end: compute CC(G) for one graph, verify a
// partition against the connected-coalition definition, or sweep a
// family comparing formulas with the exact oracle.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ccn/ccn.hpp"

namespace {

struct GraphInput {
    std::string graph6;
    std::string edges;
    int n_override = -1;
    int cycle_n = 0, path_n = 0, star_k = 0, complete_n = 0, family_g_k = 0;
    std::vector<int> bipartite;
    bool c4e = false;

    void add_options(CLI::App* cmd) {
        cmd->add_option("--graph6", graph6, "graph6 record");
        cmd->add_option("--edges", edges, "whitespace-separated 0-indexed endpoint pairs, e.g. \"0 1 1 2\"");
        cmd->add_option("--n", n_override, "vertex count for --edges (default: max id + 1)");
        cmd->add_option("--cycle", cycle_n, "cycle C_n");
        cmd->add_option("--path", path_n, "path P_n");
        cmd->add_option("--star", star_k, "star with k leaves");
        cmd->add_option("--complete", complete_n, "complete graph K_n");
        cmd->add_option("--complete-bipartite", bipartite, "complete bipartite K_{m,n}")->expected(2);
        cmd->add_option("--family-g", family_g_k, "triangle with k pendants at one vertex");
        cmd->add_flag("--c4-plus-e", c4e, "C4 with one pendant");
    }

    ccn::Graph build() const {
        int sources = !graph6.empty() + !edges.empty() +
                      (cycle_n || path_n || star_k || complete_n || family_g_k ||
                       !bipartite.empty() || c4e);
        if (sources == 0) throw ccn::Error("no graph input given");
        if (sources > 1)
            std::cerr << "warning: multiple graph sources given; using the highest-precedence one\n";
        if (!graph6.empty()) return ccn::graph6_decode(graph6);
        if (!edges.empty()) return from_edges();
        if (cycle_n) return ccn::cycle(cycle_n);
        if (path_n) return ccn::path(path_n);
        if (star_k) return ccn::star(star_k);
        if (complete_n) return ccn::complete(complete_n);
        if (family_g_k) return ccn::family_g(family_g_k);
        if (!bipartite.empty()) return ccn::complete_bipartite(bipartite[0], bipartite[1]);
        return ccn::c4_plus_e();
    }

private:
    ccn::Graph from_edges() const {
        std::istringstream in(edges);
        std::vector<int> ids;
        long long x = 0;
        while (in >> x) {
            if (x < 0 || x >= ccn::Graph::max_vertices) throw ccn::Error("edge endpoint out of range");
            ids.push_back(static_cast<int>(x));
        }
        if (!in.eof()) throw ccn::Error("--edges: unexpected token");
        if (ids.size() % 2) throw ccn::Error("--edges needs an even number of endpoints");
        int n = n_override;
        if (n < 0) {
            n = 0;
            for (int id : ids) n = std::max(n, id + 1);
        }
        ccn::Graph g(n);
        for (std::size_t i = 0; i < ids.size(); i += 2) g.add_edge(ids[i], ids[i + 1]);
        return g;
    }
};

int run_compute(const GraphInput& input, const std::string& method, const ccn::OracleOptions& opts) {
    ccn::Graph g = input.build();
    if (method == "auto" || method == "oracle") {
        ccn::CCResult r;
        try {
            r = method == "auto" ? ccn::cc_auto(g, opts) : ccn::cc_oracle(g, opts);
        } catch (const ccn::UndecidedError& e) {
            nlohmann::ordered_json j{{"error", "undecided"},
                                     {"message", e.what()},
                                     {"lower_bound", e.lower_bound()}};
            std::cout << j.dump() << "\n";
            return 2;
        } catch (const ccn::Error& e) {
            nlohmann::ordered_json j{{"error", "cap"}, {"message", e.what()}};
            std::cout << j.dump() << "\n";
            return 2;
        }
        std::cout << ccn::cc_result_to_json(r).dump() << "\n";
        return 0;
    }

    ccn::FormulaReport report;
    if (method == "tree") {
        report = ccn::cc_tree(g);
    } else if (method == "cycle") {
        bool is_cycle = g.order() >= 3 && ccn::is_connected(g);
        for (int v = 0; v < g.order() && is_cycle; ++v) is_cycle = g.degree(v) == 2;
        report = is_cycle ? ccn::FormulaReport::decided(ccn::cc_cycle(g.order()), "cycle")
                          : ccn::FormulaReport::not_applicable("not-a-cycle");
    } else if (method == "unicyclic") {
        report = ccn::cc_unicyclic(g);
    } else if (method == "cut-set") {
        report = ccn::cc_two_characterization(g);
    } else {
        throw ccn::Error("unknown method: " + method);
    }
    std::cout << ccn::formula_report_to_json(report).dump() << "\n";
    return report.value ? 0 : 2;
}

int run_verify(const GraphInput& input, const std::string& partition_json) {
    ccn::Graph g = input.build();
    ccn::Partition p = ccn::partition_from_json(nlohmann::json::parse(partition_json));
    auto outcome = ccn::validate_partition(g, p);
    nlohmann::ordered_json j;
    j["valid"] = outcome.valid();
    if (outcome.valid())
        j["certificate"] = ccn::certificate_to_json(*outcome.certificate);
    else
        j["failing_cell"] = outcome.failing_cell;
    std::cout << j.dump() << "\n";
    return outcome.valid() ? 0 : 2;
}

void print_row_tsv(const ccn::SweepRow& row) {
    auto opt = [](const std::optional<long long>& v) {
        return v ? std::to_string(*v) : std::string("-");
    };
    std::cout << row.graph6 << '\t' << row.n << '\t' << row.rule << '\t'
              << opt(row.formula_value) << '\t' << opt(row.oracle_value) << '\t'
              << (row.agree ? "1" : "0") << "\n";
}

void print_row_json(const ccn::SweepRow& row) {
    nlohmann::ordered_json j;
    j["graph6"] = row.graph6;
    j["n"] = row.n;
    j["rule"] = row.rule;
    if (row.formula_value) j["formula_value"] = *row.formula_value; else j["formula_value"] = nullptr;
    if (row.oracle_value) j["oracle_value"] = *row.oracle_value; else j["oracle_value"] = nullptr;
    j["agree"] = row.agree;
    std::cout << j.dump() << "\n";
}

int run_sweep(const std::string& family, int max_n, int max_side, int instances,
              std::uint64_t seed, const std::string& format, const ccn::OracleOptions& opts) {
    ccn::RowSink sink = format == "json" ? ccn::RowSink(print_row_json) : ccn::RowSink(print_row_tsv);
    if (format == "tsv")
        std::cout << "graph6\tn\trule\tformula_value\toracle_value\tagree\n";

    ccn::SweepSummary s;
    if (family == "cycles") {
        s = ccn::sweep_cycles(max_n > 0 ? max_n : 10, opts, sink);
    } else if (family == "trees") {
        s = ccn::sweep_trees(max_n > 0 ? max_n : 7, opts, sink);
    } else if (family == "unicyclic") {
        s = ccn::sweep_unicyclic(max_n > 0 ? max_n : 7, opts, sink);
    } else if (family == "corona") {
        s = ccn::sweep_corona(max_side > 0 ? max_side : 3, max_side > 0 ? max_side : 3, opts, sink);
    } else if (family == "join") {
        s = ccn::sweep_join(max_side > 0 ? max_side : 4, opts, sink);
    } else if (family == "cartesian-bound") {
        s = ccn::sweep_cartesian_bound(max_side > 0 ? max_side : 3, opts, sink);
    } else if (family == "lex-bound") {
        s = ccn::sweep_lex_bound(max_side > 0 ? max_side : 3, opts, sink);
    } else if (family == "zero-family") {
        s = ccn::sweep_zero_family(max_n > 0 ? max_n : 6, opts, sink);
    } else if (family == "cds-partition") {
        s = ccn::sweep_cds_partition(instances > 0 ? instances : 500, max_n > 0 ? max_n : 9, seed, sink);
    } else {
        throw ccn::Error("unknown family: " + family);
    }
    std::cerr << "rows=" << s.rows << " disagreements=" << s.disagreements << "\n";
    return s.disagreements ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"connected coalition number toolkit"};
    app.require_subcommand(1);

    int oracle_cap = 12;
    app.add_option("--max-oracle-n", oracle_cap, "oracle size cap (default 12)")
        ->envname("CC_ORACLE_CAP");

    auto* compute = app.add_subcommand("compute", "compute CC(G) for one graph");
    GraphInput compute_input;
    compute_input.add_options(compute);
    std::string method = "auto";
    compute->add_option("--method", method, "auto|oracle|tree|cycle|unicyclic|cut-set");

    auto* verify = app.add_subcommand("verify", "check a partition against the definition");
    GraphInput verify_input;
    verify_input.add_options(verify);
    std::string partition_json;
    verify->add_option("--partition", partition_json, "JSON array of cells, e.g. [[0],[1,2]]")
        ->required();

    auto* sweep = app.add_subcommand("sweep", "compare a formula with the oracle over a family");
    std::string family, format = "tsv";
    int max_n = 0, max_side = 0, instances = 0;
    std::uint64_t seed = 1;
    sweep->add_option("--family", family,
                      "trees|unicyclic|cycles|corona|join|cartesian-bound|lex-bound|zero-family|cds-partition")
        ->required();
    sweep->add_option("--max-n", max_n, "largest instance size");
    sweep->add_option("--max-side", max_side, "largest factor size for product families");
    sweep->add_option("--instances", instances, "instance count for random families");
    sweep->add_option("--seed", seed, "random seed for random families");
    sweep->add_option("--format", format, "tsv|json")->check(CLI::IsMember({"tsv", "json"}));

    CLI11_PARSE(app, argc, argv);

    if (oracle_cap > 12)
        std::cerr << "warning: oracle cap " << oracle_cap << " above the default 12; expect long runtimes\n";
    ccn::OracleOptions opts;
    opts.max_n = oracle_cap;

    try {
        if (compute->parsed()) return run_compute(compute_input, method, opts);
        if (verify->parsed()) return run_verify(verify_input, partition_json);
        if (sweep->parsed()) return run_sweep(family, max_n, max_side, instances, seed, format, opts);
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
