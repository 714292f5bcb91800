// cellsim: pairwise mobility-pattern measures, matrices, clustering and
// synthetic traces from the command line.
//
// Exit codes: 0 success, 2 usage error, 3 data or precondition error.

#include "cellsim/case_study.hpp"
#include "cellsim/cell_graph.hpp"
#include "cellsim/clustering.hpp"
#include "cellsim/error.hpp"
#include "cellsim/generator.hpp"
#include "cellsim/io.hpp"
#include "cellsim/measure.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitData = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string measure = "composite";
    double w_space = 0.5;
    double w_time = 0.5;
    std::string graph_path;
    std::string trace_path;
    std::string out_path;
    std::uint64_t seed = 1;
    std::size_t k = 2;
    std::size_t count = 10;
    std::size_t min_len = 3;
    std::size_t max_len = 8;
    std::string id_a;
    std::string id_b;
};

std::vector<std::string> measure_names() {
    std::vector<std::string> names;
    for (auto m : cellsim::kAllMeasures) {
        names.emplace_back(cellsim::measure_name(m));
    }
    return names;
}

void add_measure_options(CLI::App& cmd, RunConfig& cfg) {
    cmd.add_option("--measure", cfg.measure, "Measure to evaluate")
        ->check(CLI::IsMember(measure_names()))
        ->capture_default_str();
    cmd.add_option("--wspace", cfg.w_space,
                   "Spatial weight (composite) or network weight (tiakas-total)")
        ->capture_default_str();
    cmd.add_option("--wtime", cfg.w_time, "Temporal weight")->capture_default_str();
    cmd.add_option("--graph", cfg.graph_path, "Cell graph file (tiakas-net, tiakas-total)");
    cmd.add_option("--trace", cfg.trace_path, "Trace file")->required();
}

struct Loaded {
    std::optional<cellsim::CellGraph> graph;
    std::vector<cellsim::TracePattern> patterns;
    std::optional<cellsim::PairMeasure> measure;
};

Loaded load_inputs(const RunConfig& cfg) {
    const auto kind = *cellsim::parse_measure(cfg.measure);
    if (cellsim::measure_needs_graph(kind) && cfg.graph_path.empty()) {
        throw UsageError("--graph is required for measure '" + cfg.measure + "'");
    }
    Loaded in;
    if (!cfg.graph_path.empty()) {
        in.graph = cellsim::load_graph(cfg.graph_path);
    }
    in.patterns = cellsim::load_trace(cfg.trace_path);
    in.measure.emplace(kind, cellsim::Weights(cfg.w_space, cfg.w_time),
                       in.graph ? &*in.graph : nullptr);
    return in;
}

/// Writes to --out when given, stdout otherwise.
template <typename Fn>
void with_output(const std::string& path, Fn&& fn) {
    if (path.empty()) {
        fn(std::cout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw cellsim::ParseError(0, "cannot write '" + path + "'");
    }
    fn(out);
}

std::vector<cellsim::MobilityPattern> just_patterns(const std::vector<cellsim::TracePattern>& tps) {
    std::vector<cellsim::MobilityPattern> out;
    out.reserve(tps.size());
    for (const auto& tp : tps) {
        out.push_back(tp.pattern);
    }
    return out;
}

std::vector<std::string> just_ids(const std::vector<cellsim::TracePattern>& tps) {
    std::vector<std::string> out;
    out.reserve(tps.size());
    for (const auto& tp : tps) {
        out.push_back(tp.id);
    }
    return out;
}

const cellsim::MobilityPattern& find_pattern(const std::vector<cellsim::TracePattern>& tps,
                                             const std::string& id) {
    auto it = std::find_if(tps.begin(), tps.end(), [&](const auto& tp) { return tp.id == id; });
    if (it == tps.end()) {
        throw cellsim::DomainError("pattern id '" + id + "' not found in trace");
    }
    return it->pattern;
}

void cmd_dist(const RunConfig& cfg) {
    const auto in = load_inputs(cfg);
    const auto& a = find_pattern(in.patterns, cfg.id_a);
    const auto& b = find_pattern(in.patterns, cfg.id_b);
    std::cout << cellsim::format_fixed((*in.measure)(a, b)) << '\n';
}

void cmd_matrix(const RunConfig& cfg) {
    const auto in = load_inputs(cfg);
    if (in.patterns.empty()) {
        throw cellsim::DomainError("trace contains no patterns");
    }
    const auto patterns = just_patterns(in.patterns);
    const auto ids = just_ids(in.patterns);
    const auto m = cellsim::build_matrix(patterns, *in.measure);
    with_output(cfg.out_path, [&](std::ostream& out) { cellsim::write_matrix_csv(out, m, ids); });
}

void cmd_cluster(const RunConfig& cfg) {
    const auto in = load_inputs(cfg);
    if (in.patterns.empty()) {
        throw cellsim::DomainError("trace contains no patterns");
    }
    const auto patterns = just_patterns(in.patterns);
    const auto ids = just_ids(in.patterns);
    const auto m = cellsim::build_matrix(patterns, *in.measure);
    const auto result = cellsim::kmedoids(m, cfg.k, cfg.seed);
    with_output(cfg.out_path, [&](std::ostream& out) {
        out << "# medoids:";
        for (auto med : result.medoids) {
            out << ' ' << ids[med];
        }
        out << "\n# total_cost: " << cellsim::format_fixed(result.total_cost) << '\n';
        out << "pattern_id,medoid_id\n";
        for (std::size_t i = 0; i < ids.size(); ++i) {
            out << ids[i] << ',' << ids[result.assignment[i]] << '\n';
        }
    });
}

void cmd_gen(const RunConfig& cfg) {
    const auto graph = cellsim::load_graph(cfg.graph_path);
    const auto walks = cellsim::generate_walks(graph, cfg.count, cfg.min_len, cfg.max_len, cfg.seed);
    with_output(cfg.out_path, [&](std::ostream& out) { cellsim::write_trace(out, walks); });
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spatial-temporal similarity of cellular mobility patterns"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* dist = app.add_subcommand("dist", "Measure between two patterns of a trace file");
    add_measure_options(*dist, cfg);
    dist->add_option("id_a", cfg.id_a, "First pattern id")->required();
    dist->add_option("id_b", cfg.id_b, "Second pattern id")->required();

    auto* matrix = app.add_subcommand("matrix", "Pairwise measure matrix as CSV");
    add_measure_options(*matrix, cfg);
    matrix->add_option("--out", cfg.out_path, "Output file (default stdout)");

    auto* cluster = app.add_subcommand("cluster", "k-medoids clustering of a trace file");
    add_measure_options(*cluster, cfg);
    cluster->add_option("--k", cfg.k, "Number of clusters")->capture_default_str();
    cluster->add_option("--seed", cfg.seed, "Seed for initial medoids")->capture_default_str();
    cluster->add_option("--out", cfg.out_path, "Output file (default stdout)");

    auto* casestudy = app.add_subcommand("casestudy", "Print the worked comparison example");

    auto* gen = app.add_subcommand("gen", "Generate random-walk traces on a cell graph");
    gen->add_option("--graph", cfg.graph_path, "Cell graph file")->required();
    gen->add_option("--count", cfg.count, "Number of patterns")->capture_default_str();
    gen->add_option("--min-len", cfg.min_len, "Minimum pattern length")->capture_default_str();
    gen->add_option("--max-len", cfg.max_len, "Maximum pattern length")->capture_default_str();
    gen->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
    gen->add_option("--out", cfg.out_path, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (dist->parsed()) {
            cmd_dist(cfg);
        } else if (matrix->parsed()) {
            cmd_matrix(cfg);
        } else if (cluster->parsed()) {
            cmd_cluster(cfg);
        } else if (casestudy->parsed()) {
            std::cout << cellsim::format_case_study(cellsim::run_case_study());
        } else if (gen->parsed()) {
            cmd_gen(cfg);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    }
    return 0;
}
