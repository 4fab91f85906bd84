#include "qfloyd/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

#include "qfloyd/fw_classical.hpp"
#include "qfloyd/fw_layered.hpp"
#include "qfloyd/fw_parallel.hpp"
#include "qfloyd/graph.hpp"
#include "qfloyd/oracle.hpp"
#include "qfloyd/qfw_sim.hpp"

namespace qfloyd::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SolverOutput {
    DistanceMatrix dist;
    std::optional<PredecessorMatrix> pred;
};

SolverOutput run_solver(const std::string& name, const Graph& graph, int workers) {
    if (name == "classical") {
        auto r = fw_classical(graph);
        return {std::move(r.dist), std::move(r.pred)};
    }
    if (name == "layered-printed") return {fw_layered_as_printed(graph), std::nullopt};
    if (name == "layered") {
        auto r = fw_layered_corrected(graph);
        return {std::move(r.dist), std::move(r.pred)};
    }
    if (name == "parallel") {
        auto r = fw_parallel(graph, workers);
        return {std::move(r.dist), std::move(r.pred)};
    }
    if (name == "parallel-inplace") {
        auto r = fw_parallel_inplace(graph, workers);
        return {std::move(r.dist), std::move(r.pred)};
    }
    if (name == "qfw") {
        qsim::QfwOptions options;
        options.worker_count = workers;
        auto r = qsim::qfw_run(graph, options);
        return {std::move(r.dist), std::move(r.pred)};
    }
    throw UsageError("unknown solver '" + name + "'");
}

Graph read_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    try {
        return parse_graph(in);
    } catch (const ParseError& e) {
        throw InputError(path + ": " + e.what());
    } catch (const GraphError& e) {
        throw InputError(path + ": " + e.what());
    }
}

std::vector<int> parse_worker_list(const std::string& text) {
    std::vector<int> workers;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        int value = 0;
        std::size_t used = 0;
        try {
            value = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw UsageError("invalid worker count '" + item + "'");
        }
        if (used != item.size() || value < 1) throw UsageError("invalid worker count '" + item + "'");
        workers.push_back(value);
    }
    if (workers.empty()) throw UsageError("empty worker list");
    return workers;
}

std::pair<std::uint32_t, std::uint32_t> parse_pair(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw UsageError("--paths expects i:j, got '" + text + "'");
    try {
        std::size_t used_a = 0, used_b = 0;
        const std::string a = text.substr(0, colon), b = text.substr(colon + 1);
        const unsigned long i = std::stoul(a, &used_a);
        const unsigned long j = std::stoul(b, &used_b);
        if (used_a != a.size() || used_b != b.size() || a.starts_with('-') || b.starts_with('-'))
            throw std::invalid_argument(text);
        return {static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)};
    } catch (const std::exception&) {
        throw UsageError("--paths expects i:j, got '" + text + "'");
    }
}

int single_worker_count(const RunConfig& config) {
    if (config.workers.size() != 1) throw UsageError("this command takes a single worker count");
    return config.workers.front();
}

std::string join_path(const std::vector<NodeId>& path) {
    std::ostringstream out;
    for (std::size_t n = 0; n < path.size(); ++n) out << (n ? " " : "") << path[n];
    return out.str();
}

void print_matrix(std::ostream& out, const DistanceMatrix& dist, OutputFormat format,
                  const std::string& prefix = "row") {
    if (format == OutputFormat::Text) {
        out << format_matrix(dist);
        return;
    }
    for (std::size_t i = 0; i < dist.size(); ++i) {
        out << prefix << '.' << i << '=';
        for (std::size_t j = 0; j < dist.size(); ++j) out << (j ? " " : "") << dist(i, j);
        out << '\n';
    }
}

// Checks every finite cell reconstructs to a path of the reported weight.
bool witnesses_hold(const Graph& graph, const SolverOutput& result) {
    if (!result.pred) return true;
    const std::size_t v = graph.node_count();
    try {
        for (std::size_t i = 0; i < v; ++i)
            for (std::size_t j = 0; j < v; ++j)
                reconstruct_path(graph, *result.pred, result.dist, static_cast<NodeId>(i),
                                 static_cast<NodeId>(j));
    } catch (const InconsistentResult&) {
        return false;
    }
    return true;
}

int cmd_solve(const RunConfig& config, std::ostream& out) {
    const Graph graph = read_input(config.input_path);
    const SolverOutput result = run_solver(config.solver, graph, single_worker_count(config));
    const bool kv = config.format == OutputFormat::KeyValue;
    if (kv) out << "solver=" << config.solver << "\nnodes=" << graph.node_count() << '\n';
    print_matrix(out, result.dist, config.format);

    if (!config.paths.empty() && !result.pred)
        throw UsageError("solver '" + config.solver + "' keeps no predecessor matrix; --paths unavailable");
    for (const auto& [i, j] : config.paths) {
        if (i >= graph.node_count() || j >= graph.node_count())
            throw UsageError("--paths " + std::to_string(i) + ":" + std::to_string(j) + " is out of range");
        const auto path = reconstruct_path(graph, *result.pred, result.dist, i, j);
        const std::string key = std::to_string(i) + "." + std::to_string(j);
        if (kv) {
            out << "path." << key << '=' << (path ? join_path(*path) : "none") << '\n';
            if (path) out << "path." << key << ".weight=" << result.dist(i, j) << '\n';
        } else if (path) {
            out << "path " << i << "->" << j << ": " << join_path(*path) << " (weight " << result.dist(i, j)
                << ")\n";
        } else {
            out << "path " << i << "->" << j << ": none\n";
        }
    }
    return kSuccess;
}

// Solvers that must reproduce the oracle; layered-printed is reported only.
const std::vector<std::string>& expected_correct() {
    static const std::vector<std::string> names{"classical", "layered", "parallel", "parallel-inplace", "qfw"};
    return names;
}

void report_divergence(std::ostream& out, const DivergenceReport& d, bool kv) {
    constexpr std::size_t kListed = 8;
    if (kv) {
        out << "solver.layered-printed=" << (d.equal ? "match" : "diverge") << '\n';
        if (!d.equal) {
            out << "solver.layered-printed.differing_cells=" << d.differing_cells << '\n';
            std::size_t listed = 0;
            for (std::size_t i = 0; i < d.oracle.size(); ++i)
                for (std::size_t j = 0; j < d.oracle.size(); ++j)
                    if (d.printed(i, j) != d.oracle(i, j) && listed++ < kListed)
                        out << "solver.layered-printed.cell." << i << '.' << j << '=' << d.printed(i, j)
                            << " oracle " << d.oracle(i, j) << '\n';
        }
        return;
    }
    if (d.equal) {
        out << "layered-printed: match\n";
        return;
    }
    out << "layered-printed: diverges in " << d.differing_cells << " cell(s) (expected; not a failure)\n";
    std::size_t listed = 0;
    for (std::size_t i = 0; i < d.oracle.size(); ++i)
        for (std::size_t j = 0; j < d.oracle.size(); ++j)
            if (d.printed(i, j) != d.oracle(i, j) && listed++ < kListed)
                out << "  (" << i << "," << j << "): printed " << d.printed(i, j) << ", oracle "
                    << d.oracle(i, j) << '\n';
}

int cmd_compare(const RunConfig& config, std::ostream& out) {
    const Graph graph = read_input(config.input_path);
    const int workers = single_worker_count(config);
    const DistanceMatrix truth = oracle::apsp(graph);
    const bool kv = config.format == OutputFormat::KeyValue;
    if (kv) out << "nodes=" << graph.node_count() << '\n';

    bool all_ok = true;
    for (const std::string& name : expected_correct()) {
        const SolverOutput result = run_solver(name, graph, workers);
        const auto diff = first_difference(result.dist, truth);
        const bool paths_ok = witnesses_hold(graph, result);
        const bool ok = !diff && paths_ok;
        all_ok = all_ok && ok;
        if (kv) {
            out << "solver." << name << '=' << (ok ? "match" : "mismatch") << '\n';
        } else {
            out << name << ": " << (ok ? "match" : "MISMATCH");
            if (diff)
                out << " at (" << diff->first << "," << diff->second << "): " << result.dist(diff->first, diff->second)
                    << " vs oracle " << truth(diff->first, diff->second);
            if (!paths_ok) out << " (path witness failed)";
            out << '\n';
        }
    }
    report_divergence(out, detect_divergence(graph), kv);
    if (kv) out << "result=" << (all_ok ? "ok" : "inconsistent") << '\n';
    else out << (all_ok ? "all expected-correct solvers agree with the oracle\n" : "inconsistency detected\n");
    return all_ok ? kSuccess : kInconsistent;
}

int cmd_audit(const RunConfig& config, std::ostream& out) {
    const Graph graph = read_input(config.input_path);
    const bool kv = config.format == OutputFormat::KeyValue;
    const TracedResult traced = fw_classical_traced(graph);
    const ObservationReport obs1 = check_observation_1(traced.events);
    const ObservationReport obs2 = check_observation_2(traced.events);
    const DivergenceReport d = detect_divergence(graph);

    if (kv) {
        out << "nodes=" << graph.node_count() << '\n'
            << "events=" << traced.events.size() << '\n'
            << "observation_1=" << (obs1.passed ? "pass" : "fail") << '\n'
            << "observation_2=" << (obs2.passed ? "pass" : "fail") << '\n'
            << "solver.layered=" << (d.corrected_equal ? "match" : "mismatch") << '\n';
    } else {
        out << "relaxation events: " << traced.events.size() << '\n'
            << "distinct indices on every update: " << (obs1.passed ? "pass" : "FAIL " + obs1.detail) << '\n'
            << "no updated cell re-read within its sweep: " << (obs2.passed ? "pass" : "FAIL " + obs2.detail)
            << '\n'
            << "layered: " << (d.corrected_equal ? "match" : "MISMATCH") << '\n';
    }
    report_divergence(out, d, kv);
    return obs1.passed && obs2.passed && d.corrected_equal ? kSuccess : kInconsistent;
}

int cmd_qsim(const RunConfig& config, std::ostream& out) {
    const Graph graph = read_input(config.input_path);
    qsim::QfwOptions options;
    options.worker_count = single_worker_count(config);
    if (config.seed_given) options.shuffle_seed = config.seed;
    const qsim::QfwResult result = qsim::qfw_run(graph, options);
    const qsim::ComplexityReport report = qsim::complexity_report(result.counters, graph.node_count());
    if (config.format == OutputFormat::KeyValue) {
        print_matrix(out, result.dist, config.format);
        out << "register_width_bits=" << result.register_width_bits << '\n' << qsim::format_kv(report);
    } else {
        out << format_matrix(result.dist) << '\n'
            << "register width (bits)          " << result.register_width_bits << '\n'
            << qsim::format_text(report);
    }
    return kSuccess;
}

double time_ms(const std::function<void()>& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

int cmd_bench(const RunConfig& config, std::ostream& out) {
    const Graph graph = config.input_path.empty()
                            ? random_graph(config.nodes, config.edge_probability, config.max_weight, config.seed)
                            : read_input(config.input_path);
    const bool kv = config.format == OutputFormat::KeyValue;
    struct Row {
        std::string key;
        double ms;
    };
    std::vector<Row> rows;
    rows.push_back({"classical", time_ms([&] { fw_classical(graph); })});
    rows.push_back({"layered", time_ms([&] { fw_layered_corrected(graph); })});
    rows.push_back({"layered-printed", time_ms([&] { fw_layered_as_printed(graph); })});
    for (int w : config.workers) {
        rows.push_back({"parallel.w" + std::to_string(w), time_ms([&] { fw_parallel(graph, w); })});
        rows.push_back({"parallel-inplace.w" + std::to_string(w), time_ms([&] { fw_parallel_inplace(graph, w); })});
    }
    std::optional<qsim::ComplexityReport> report;
    if (!config.skip_qsim) {
        qsim::QfwOptions options;
        options.worker_count = *std::max_element(config.workers.begin(), config.workers.end());
        qsim::QfwResult result;
        rows.push_back({"qfw.w" + std::to_string(options.worker_count),
                        time_ms([&] { result = qsim::qfw_run(graph, options); })});
        report = qsim::complexity_report(result.counters, graph.node_count());
    }

    if (kv) {
        out << "graph.nodes=" << graph.node_count() << "\ngraph.edges=" << graph.edge_count() << '\n';
        for (const Row& r : rows) out << "time_ms." << r.key << '=' << std::fixed << std::setprecision(3) << r.ms << '\n';
        if (report) out << qsim::format_kv(*report);
        else out << "qsim=skipped\n";
        return kSuccess;
    }
    out << "graph: V=" << graph.node_count() << " E=" << graph.edge_count() << '\n';
    out << std::left << std::setw(24) << "solver" << "wall ms\n";
    for (const Row& r : rows)
        out << std::left << std::setw(24) << r.key << std::fixed << std::setprecision(3) << r.ms << '\n';
    out << '\n';
    if (report) out << qsim::format_text(*report);
    else out << "quantum simulation skipped\n";
    return kSuccess;
}

int cmd_gen(const RunConfig& config, std::ostream& out) {
    const Graph graph = random_graph(config.nodes, config.edge_probability, config.max_weight, config.seed);
    const std::string text = serialize_graph(graph);
    if (config.output_path.empty() || config.output_path == "-") {
        out << text;
        return kSuccess;
    }
    std::ofstream file(config.output_path, std::ios::binary);
    if (!file) throw InputError("cannot write '" + config.output_path + "'");
    file << text;
    if (!file) throw InputError("failed writing '" + config.output_path + "'");
    return kSuccess;
}

}  // namespace

const std::vector<std::string>& solver_names() {
    static const std::vector<std::string> names{"classical", "layered-printed", "layered",
                                                "parallel",  "parallel-inplace", "qfw"};
    return names;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"All-pairs shortest paths: Floyd-Warshall variants and a superposed-sweep simulation", "qfloyd"};
    app.require_subcommand(1);

    RunConfig config;
    std::string workers_text;
    std::string format_text_opt = "text";
    std::vector<std::string> path_specs;

    auto add_workers = [&](CLI::App* sub) {
        sub->add_option("--workers", workers_text, "Worker count (bench: comma-separated list)");
    };
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format_text_opt, "Output format")
            ->check(CLI::IsMember({"text", "kv"}));
    };
    auto add_generator = [&](CLI::App* sub, bool nodes_required) {
        auto* nodes = sub->add_option("--V", config.nodes, "Node count")->check(CLI::PositiveNumber);
        if (nodes_required) nodes->required();
        sub->add_option("--p", config.edge_probability, "Edge probability")->check(CLI::Range(0.0, 1.0));
        sub->add_option("--max-weight", config.max_weight, "Largest edge weight")->check(CLI::PositiveNumber);
        sub->add_option("--seed", config.seed, "Generator seed");
    };

    auto* solve = app.add_subcommand("solve", "Print the distance matrix computed by one solver");
    solve->add_option("input", config.input_path, "Edge-list file")->required();
    solve->add_option("--solver", config.solver, "Solver")->check(CLI::IsMember(solver_names()));
    solve->add_option("--paths", path_specs, "Reconstruct the path for i:j (repeatable)");
    add_workers(solve);
    add_format(solve);

    auto* compare = app.add_subcommand("compare", "Check every solver against the reference oracle");
    compare->add_option("input", config.input_path, "Edge-list file")->required();
    add_workers(compare);
    add_format(compare);

    auto* audit = app.add_subcommand("audit", "Trace invariants and as-printed layered divergence");
    audit->add_option("input", config.input_path, "Edge-list file")->required();
    add_format(audit);

    auto* qsim_cmd = app.add_subcommand("qsim", "Run the superposed-sweep simulation and report costs");
    qsim_cmd->add_option("input", config.input_path, "Edge-list file")->required();
    qsim_cmd->add_option("--seed", config.seed, "Shuffle branch order with this seed");
    add_workers(qsim_cmd);
    add_format(qsim_cmd);

    auto* bench = app.add_subcommand("bench", "Time solvers and report operation counts");
    bench->add_option("input", config.input_path, "Edge-list file (default: generate)");
    add_generator(bench, false);
    bench->add_flag("--skip-qsim", config.skip_qsim, "Do not run the simulation");
    add_workers(bench);
    add_format(bench);
    config.nodes = 64;

    auto* gen = app.add_subcommand("gen", "Write a seeded random graph in edge-list format");
    add_generator(gen, true);
    gen->add_option("-o,--output", config.output_path, "Output file (default: stdout)");

    std::vector<const char*> argv{"qfloyd"};
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err), kSuccess;
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err), kSuccess;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsageError;
    }

    try {
        config.command = app.get_subcommands().front()->get_name();
        const CLI::Option* seed_opt = app.get_subcommands().front()->get_option_no_throw("--seed");
        config.seed_given = seed_opt && seed_opt->count() > 0;
        config.format = format_text_opt == "kv" ? OutputFormat::KeyValue : OutputFormat::Text;
        for (const std::string& spec : path_specs) config.paths.push_back(parse_pair(spec));
        if (workers_text.empty()) {
            if (const char* env = std::getenv(kWorkersEnv); env && *env) workers_text = env;
        }
        config.workers = workers_text.empty() ? std::vector<int>{default_worker_count()}
                                              : parse_worker_list(workers_text);

        if (config.command == "solve") return cmd_solve(config, out);
        if (config.command == "compare") return cmd_compare(config, out);
        if (config.command == "audit") return cmd_audit(config, out);
        if (config.command == "qsim") return cmd_qsim(config, out);
        if (config.command == "bench") return cmd_bench(config, out);
        if (config.command == "gen") return cmd_gen(config, out);
        throw UsageError("unknown command");
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsageError;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << '\n';
        return kInputError;
    } catch (const InconsistentResult& e) {
        err << "internal inconsistency: " << e.what() << '\n';
        return kInconsistent;
    } catch (const qsim::CounterMismatch& e) {
        err << "internal inconsistency: " << e.what() << '\n';
        return kInconsistent;
    } catch (const std::invalid_argument& e) {
        err << "input error: " << e.what() << '\n';
        return kInputError;
    }
}

}  // namespace qfloyd::cli
