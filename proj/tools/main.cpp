#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "eideal/betti.hpp"
#include "eideal/enumerate.hpp"
#include "eideal/graph_io.hpp"
#include "eideal/harness.hpp"
#include "eideal/symbolic.hpp"
#include "eideal/version.hpp"

namespace {

using namespace eideal;

struct GraphInput {
    std::string path;
    std::string g6;

    SimpleGraph load() const {
        if (!path.empty() && !g6.empty()) {
            throw ArgumentError("give either --graph or --g6, not both");
        }
        if (!path.empty()) {
            std::ifstream in(path);
            if (!in) throw ArgumentError("cannot open graph file: " + path);
            std::ostringstream buf;
            buf << in.rdbuf();
            return parse_edge_list(buf.str());
        }
        if (!g6.empty()) return parse_graph6(g6);
        throw ArgumentError("a graph is required: pass --graph FILE or --g6 STRING");
    }
};

void add_graph_flags(CLI::App* cmd, GraphInput& input) {
    cmd->add_option("--graph", input.path, "edge-list file (header 'n <count>', one edge per line)");
    cmd->add_option("--g6", input.g6, "graph6 string");
}

std::vector<Field> parse_fields(const std::vector<std::string>& specs) {
    std::vector<Field> fields;
    for (const auto& s : specs) fields.push_back(Field::parse(s));
    if (fields.empty()) fields.push_back(Field::rationals());
    return fields;
}

void add_config_flags(CLI::App* cmd, Config& config, std::vector<std::string>& field_specs) {
    cmd->add_option("--max-n", config.max_n, "largest corpus graph order");
    cmd->add_option("--max-s", config.max_s, "largest power exponent");
    cmd->add_option("--field", field_specs, "coefficient field, q or fp:P (repeatable)");
    cmd->add_option("--jobs", config.jobs, "worker threads");
    cmd->add_option("--format", config.format, "report format: json or csv");
    cmd->add_option("--out", config.out_path, "write the report here instead of stdout");
    cmd->add_option("--lattice-cap", config.lattice_cap, "lcm-lattice size cap");
    cmd->add_option("--seed", config.seed, "seed for the randomized suites");
    cmd->add_option("--corpus", config.corpus, "unicyclic, bipartite or all-small");
    cmd->add_flag("--timing", config.timing, "include per-result wall times (non-deterministic)");
    cmd->add_flag("--intermediate", config.case2_intermediate,
                  "also verify the splitting chain's intermediate inequalities");
    cmd->add_flag("--inject-failure", config.inject_failure,
                  "deliberately corrupt one result (exit-code self test)");
}

int emit_report(const Report& report, const Config& config) {
    std::ostringstream body;
    if (config.format == "csv") {
        write_csv(report, body, config.timing);
    } else {
        write_json(report, body, config.timing);
    }
    if (config.out_path.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream out(config.out_path);
        if (!out) throw ArgumentError("cannot open output file: " + config.out_path);
        out << body.str();
    }
    std::cerr << "pass " << report.count("pass") << ", fail " << report.count("fail")
              << ", skip " << report.count("skip") << " (" << report.total_elapsed << "s)\n";
    return report_exit_code(report);
}

int run_cli(int argc, char** argv) {
    CLI::App app{"edge ideals of graphs: powers, Betti tables, regularity, checks"};
    app.set_version_flag("--version", EIDEAL_VERSION);
    app.require_subcommand(1);

    GraphInput reg_in, betti_in, power_in, symbolic_in;
    std::vector<std::string> reg_fields, betti_fields;
    int power_s = 1, symbolic_s = 1;
    std::size_t symbolic_cap = kDefaultBasisCap;
    std::size_t reg_cap = kDefaultLatticeCap, betti_cap = kDefaultLatticeCap;
    int reg_jobs = 1, betti_jobs = 1;

    auto* reg_cmd = app.add_subcommand("reg", "regularity of the edge ideal");
    add_graph_flags(reg_cmd, reg_in);
    reg_cmd->add_option("--field", reg_fields, "coefficient field, q or fp:P (repeatable)");
    reg_cmd->add_option("--lattice-cap", reg_cap, "lcm-lattice size cap");
    reg_cmd->add_option("--jobs", reg_jobs, "worker threads");

    auto* betti_cmd = app.add_subcommand("betti", "multigraded Betti table of the edge ideal");
    add_graph_flags(betti_cmd, betti_in);
    betti_cmd->add_option("--field", betti_fields, "coefficient field, q or fp:P (repeatable)");
    betti_cmd->add_option("--lattice-cap", betti_cap, "lcm-lattice size cap");
    betti_cmd->add_option("--jobs", betti_jobs, "worker threads");

    auto* power_cmd = app.add_subcommand("power", "generators of the s-th ordinary power");
    add_graph_flags(power_cmd, power_in);
    power_cmd->add_option("--max-s", power_s, "the exponent s (default 1)");

    auto* symbolic_cmd = app.add_subcommand("symbolic", "generators of the s-th symbolic power");
    add_graph_flags(symbolic_cmd, symbolic_in);
    symbolic_cmd->add_option("--max-s", symbolic_s, "the exponent s (default 1)");
    symbolic_cmd->add_option("--lattice-cap", symbolic_cap, "generator count cap");

    Config main_cfg, lemma_cfg, prop_cfg, bounds_cfg, case2_cfg;
    std::vector<std::string> main_fields, lemma_fields, prop_fields, bounds_fields, case2_fields;
    auto* check_main_cmd =
        app.add_subcommand("check-main", "symbolic vs ordinary regularity on the corpus");
    add_config_flags(check_main_cmd, main_cfg, main_fields);
    auto* check_lemmas_cmd =
        app.add_subcommand("check-lemmas", "deletion, colon and truncation identities");
    add_config_flags(check_lemmas_cmd, lemma_cfg, lemma_fields);
    auto* check_prop_cmd =
        app.add_subcommand("check-prop-sum", "partition inequalities for mixed ideals");
    add_config_flags(check_prop_cmd, prop_cfg, prop_fields);
    auto* check_bounds_cmd =
        app.add_subcommand("check-bounds", "regularity bounds and closed formulas");
    add_config_flags(check_bounds_cmd, bounds_cfg, bounds_fields);
    auto* check_case2_cmd =
        app.add_subcommand("check-case2", "splitting-set search and lower-bound endpoint");
    add_config_flags(check_case2_cmd, case2_cfg, case2_fields);

    int enum_max_n = 7;
    std::string enum_corpus = "unicyclic";
    auto* enum_cmd = app.add_subcommand("enumerate", "list corpus graphs as graph6 codes");
    enum_cmd->add_option("--max-n", enum_max_n, "largest graph order");
    enum_cmd->add_option("--corpus", enum_corpus,
                         "unicyclic, forest, bipartite, connected or all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
        std::cerr << "usage error: " << e.get_name() << ": " << e.what() << "\n";
        return 2;
    }

    if (*reg_cmd) {
        const SimpleGraph g = reg_in.load();
        const MonomialIdeal I = edge_ideal(g);
        if (I.is_zero()) throw ArgumentError("the graph has no edges");
        const auto fields = parse_fields(reg_fields);
        for (const auto& field : fields) {
            const int r = regularity(I, field, reg_jobs, reg_cap);
            if (fields.size() == 1) {
                std::cout << r << "\n";
            } else {
                std::cout << field.str() << " " << r << "\n";
            }
        }
        return 0;
    }
    if (*betti_cmd) {
        const SimpleGraph g = betti_in.load();
        const MonomialIdeal I = edge_ideal(g);
        if (I.is_zero()) throw ArgumentError("the graph has no edges");
        for (const auto& field : parse_fields(betti_fields)) {
            const BettiTable table = betti_table(I, field, betti_jobs, betti_cap);
            std::cout << "field " << field.str() << "\n" << table.str();
            std::cout << "regularity " << table.regularity() << "\n";
        }
        return 0;
    }
    if (*power_cmd) {
        const SimpleGraph g = power_in.load();
        const MonomialIdeal I = edge_ideal(g);
        if (I.is_zero()) throw ArgumentError("the graph has no edges");
        if (power_s < 1) throw ArgumentError("--max-s must be at least 1");
        std::cout << power(I, static_cast<std::uint32_t>(power_s)).str() << "\n";
        return 0;
    }
    if (*symbolic_cmd) {
        const SimpleGraph g = symbolic_in.load();
        std::cout << symbolic_power(g, symbolic_s, symbolic_cap).str() << "\n";
        return 0;
    }
    if (*check_main_cmd) {
        main_cfg.fields = parse_fields(main_fields);
        return emit_report(check_main(main_cfg), main_cfg);
    }
    if (*check_lemmas_cmd) {
        lemma_cfg.fields = parse_fields(lemma_fields);
        return emit_report(check_lemmas(lemma_cfg), lemma_cfg);
    }
    if (*check_prop_cmd) {
        prop_cfg.fields = parse_fields(prop_fields);
        return emit_report(check_prop_sum(prop_cfg), prop_cfg);
    }
    if (*check_bounds_cmd) {
        bounds_cfg.fields = parse_fields(bounds_fields);
        return emit_report(check_bounds(bounds_cfg), bounds_cfg);
    }
    if (*check_case2_cmd) {
        case2_cfg.fields = parse_fields(case2_fields);
        return emit_report(check_case2_monotonicity(case2_cfg), case2_cfg);
    }
    if (*enum_cmd) {
        std::vector<SimpleGraph> graphs;
        auto take = [&](std::vector<SimpleGraph> batch) {
            for (auto& g : batch) graphs.push_back(std::move(g));
        };
        for (int n = enum_corpus == "unicyclic" ? 3 : 2; n <= enum_max_n; ++n) {
            if (enum_corpus == "unicyclic") {
                take(enumerate_unicyclic(n));
            } else if (enum_corpus == "forest") {
                take(enumerate_forests(n));
            } else if (enum_corpus == "bipartite") {
                for (auto& g : enumerate_connected(n)) {
                    if (g.is_bipartite()) graphs.push_back(std::move(g));
                }
            } else if (enum_corpus == "connected") {
                take(enumerate_connected(n));
            } else if (enum_corpus == "all") {
                take(enumerate_all_graphs(n));
            } else {
                throw ArgumentError("unknown corpus: " + enum_corpus);
            }
        }
        for (const auto& g : graphs) std::cout << encode_graph6(g) << "\n";
        return 0;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const ArgumentError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
