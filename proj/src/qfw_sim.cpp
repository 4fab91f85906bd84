#include "qfloyd/qfw_sim.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

namespace qfloyd::qsim {

OpCounters& OpCounters::operator+=(const OpCounters& other) noexcept {
    hadamard_gates += other.hadamard_gates;
    oracle_queries += other.oracle_queries;
    comparisons += other.comparisons;
    conditional_writes += other.conditional_writes;
    branch_evaluations += other.branch_evaluations;
    return *this;
}

double BranchTable::total_probability() const noexcept {
    double total = 0.0;
    for (const Branch& b : branches) total += b.amplitude * b.amplitude;
    return total;
}

std::vector<double> hadamard_register(unsigned qubit_count) {
    const std::size_t size = std::size_t{1} << qubit_count;
    std::vector<double> state(size, 0.0);
    state[0] = 1.0;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (unsigned q = 0; q < qubit_count; ++q) {
        const std::size_t bit = std::size_t{1} << q;
        for (std::size_t b = 0; b < size; ++b) {
            if (b & bit) continue;
            const double lo = state[b];
            const double hi = state[b | bit];
            state[b] = (lo + hi) * inv_sqrt2;
            state[b | bit] = (lo - hi) * inv_sqrt2;
        }
    }
    return state;
}

BranchTable prepare_superposition(unsigned qubit_count, OpCounters& counters) {
    const std::vector<double> reg_i = hadamard_register(qubit_count);
    const std::vector<double> reg_j = hadamard_register(qubit_count);
    counters.hadamard_gates += 2u * qubit_count;

    BranchTable table;
    table.qubit_count = qubit_count;
    table.branches.reserve(reg_i.size() * reg_j.size());
    for (std::size_t i = 0; i < reg_i.size(); ++i)
        for (std::size_t j = 0; j < reg_j.size(); ++j)
            table.branches.push_back({static_cast<NodeId>(i), static_cast<NodeId>(j), reg_i[i] * reg_j[j]});
    return table;
}

DistanceRegisters oracle_query(const LayeredDistance& state, std::size_t k, NodeId i, NodeId j,
                               OpCounters& counters, D0Source d0_source) {
    const std::size_t v = state.size();
    if (k >= v || i >= v || j >= v) throw std::out_of_range("oracle query outside the padded node range");
    const DistanceMatrix& read = state.read_layer(k);
    DistanceRegisters regs;
    regs.d0 = d0_source == D0Source::ReadLayer ? read(i, j) : state.write_layer(k)(i, j);
    regs.d1 = read(i, k);
    regs.d2 = read(k, j);
    regs.d3 = ext_add(regs.d1, regs.d2);
    ++counters.branch_evaluations;
    return regs;
}

void charge_superposed_query(OpCounters& counters) noexcept {
    counters.oracle_queries += kRegistersPerQuery;
}

bool conditional_update(LayeredDistance& state, PredecessorMatrix& pred, std::size_t k, NodeId i,
                        NodeId j, const DistanceRegisters& regs, OpCounters& counters) {
    ++counters.comparisons;
    DistanceMatrix& write = state.write_layer(k);
    if (regs.d3 < regs.d0) {
        write(i, j) = regs.d3;
        pred(i, j) = Pred::via(static_cast<NodeId>(k));
        ++counters.conditional_writes;
        return true;
    }
    write(i, j) = regs.d0;
    return false;
}

std::size_t padded_size(std::size_t v) { return v <= 1 ? 1 : std::bit_ceil(v); }

unsigned qubits_for(std::size_t padded) {
    return static_cast<unsigned>(std::countr_zero(std::bit_ceil(std::max<std::size_t>(padded, 1))));
}

unsigned register_width_bits(const Graph& graph) {
    Weight total = 0;
    for (const Edge& e : graph.edges()) {
        if (e.weight > ExtDistance::kMaxFinite - total)
            throw std::invalid_argument("sum of edge weights does not fit the distance registers");
        total += e.weight;
    }
    return std::max(1u, static_cast<unsigned>(std::bit_width(total)));
}

QfwResult qfw_run(const Graph& graph, const QfwOptions& options) {
    if (options.worker_count < 1) throw std::invalid_argument("worker_count must be at least 1");
    const std::size_t v = graph.node_count();
    const std::size_t vpad = padded_size(v);
    const unsigned n = qubits_for(vpad);

    QfwResult result;
    result.padded_nodes = vpad;
    result.qubit_count = n;
    result.register_width_bits = register_width_bits(graph);

    ApspResult init = init_distance(graph.padded_to(vpad));
    LayeredDistance state(init.dist);
    PredecessorMatrix pred = std::move(init.pred);

    std::vector<std::size_t> order(vpad * vpad);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::mt19937_64 rng(options.shuffle_seed.value_or(0));

    OpCounters& counters = result.counters;
    for (std::size_t k = 0; k < vpad; ++k) {
        const BranchTable table = prepare_superposition(n, counters);
        charge_superposed_query(counters);
        if (options.shuffle_seed) std::shuffle(order.begin(), order.end(), rng);

        const std::size_t branch_count = order.size();
#pragma omp parallel num_threads(options.worker_count)
        {
            OpCounters local;
#pragma omp for schedule(static)
            for (std::size_t p = 0; p < branch_count; ++p) {
                const Branch& b = table.branches[order[p]];
                const DistanceRegisters regs = oracle_query(state, k, b.i, b.j, local, options.d0_source);
                conditional_update(state, pred, k, b.i, b.j, regs, local);
            }
#pragma omp critical(qfloyd_qsim_counters)
            counters += local;
        }
    }

    const DistanceMatrix& final_layer = state.write_layer(vpad - 1);
    result.dist = DistanceMatrix(v, kInfinity);
    result.pred = PredecessorMatrix(v, Pred::no_path());
    for (std::size_t i = 0; i < v; ++i) {
        for (std::size_t j = 0; j < v; ++j) {
            result.dist(i, j) = final_layer(i, j);
            result.pred(i, j) = pred(i, j);
        }
    }
    return result;
}

ComplexityReport complexity_report(const OpCounters& counters, std::size_t nodes) {
    if (nodes == 0) throw CounterMismatch("a completed run has at least one node");
    ComplexityReport r;
    r.nodes = nodes;
    r.padded_nodes = padded_size(nodes);
    r.qubit_count = qubits_for(r.padded_nodes);
    r.counters = counters;

    const std::uint64_t vpad = r.padded_nodes;
    const std::uint64_t branches = vpad * vpad * vpad;
    auto require = [](bool ok, const std::string& what) {
        if (!ok) throw CounterMismatch("counters do not match a completed run: " + what);
    };
    require(counters.hadamard_gates == vpad * 2 * r.qubit_count, "hadamard_gates != Vpad*2n");
    require(counters.oracle_queries == vpad * kRegistersPerQuery, "oracle_queries != 3*Vpad");
    require(counters.branch_evaluations == branches, "branch_evaluations != Vpad^3");
    require(counters.comparisons == branches, "comparisons != Vpad^3");
    require(counters.conditional_writes <= branches, "conditional_writes > Vpad^3");

    r.superposed_model_cost = vpad * (2 * std::uint64_t{r.qubit_count} + kModelOpsPerIteration);
    r.simulation_cost = counters.branch_evaluations;
    const std::uint64_t v = nodes;
    r.classical_relaxations = v * v * v;
    return r;
}

std::string format_text(const ComplexityReport& r) {
    std::ostringstream out;
    out << "nodes                          " << r.nodes << '\n'
        << "padded nodes (Vpad)            " << r.padded_nodes << '\n'
        << "qubits per index register (n)  " << r.qubit_count << '\n'
        << "-- superposed cost model (claimed) --\n"
        << "hadamard gates   (Vpad*2n)     " << r.counters.hadamard_gates << '\n'
        << "oracle queries   (3*Vpad)      " << r.counters.oracle_queries << '\n'
        << "model cost       (Vpad*(2n+" << kModelOpsPerIteration << "))  " << r.superposed_model_cost << '\n'
        << "-- classical simulation (actual work) --\n"
        << "branch evaluations (Vpad^3)    " << r.counters.branch_evaluations << '\n'
        << "comparisons                    " << r.counters.comparisons << '\n'
        << "conditional writes             " << r.counters.conditional_writes << '\n'
        << "simulation cost                " << r.simulation_cost << '\n'
        << "-- classical triple loop --\n"
        << "relaxations      (V^3)         " << r.classical_relaxations << '\n';
    return out.str();
}

std::string format_kv(const ComplexityReport& r) {
    std::ostringstream out;
    out << "nodes=" << r.nodes << '\n'
        << "padded_nodes=" << r.padded_nodes << '\n'
        << "qubit_count=" << r.qubit_count << '\n'
        << "superposed_model.hadamard_gates=" << r.counters.hadamard_gates << '\n'
        << "superposed_model.oracle_queries=" << r.counters.oracle_queries << '\n'
        << "superposed_model.cost=" << r.superposed_model_cost << '\n'
        << "simulation.branch_evaluations=" << r.counters.branch_evaluations << '\n'
        << "simulation.comparisons=" << r.counters.comparisons << '\n'
        << "simulation.conditional_writes=" << r.counters.conditional_writes << '\n'
        << "simulation.cost=" << r.simulation_cost << '\n'
        << "classical.relaxations=" << r.classical_relaxations << '\n';
    return out.str();
}

}  // namespace qfloyd::qsim
