#ifndef QFLOYD_QFW_SIM_HPP
#define QFLOYD_QFW_SIM_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qfloyd/fw_layered.hpp"
#include "qfloyd/graph.hpp"
#include "qfloyd/matrix.hpp"

// Classical simulation of the superposed Floyd-Warshall sweep: the i and j
// loops become two Hadamard-prepared index registers and every basis state
// (branch) is evaluated explicitly.
namespace qfloyd::qsim {

// n-qubit index register spanning 2^n basis states.
struct IndexRegister {
    unsigned qubit_count = 0;
    std::size_t basis_size() const noexcept { return std::size_t{1} << qubit_count; }
};

// Operation counts. hadamard_gates and oracle_queries follow the superposed
// cost model (one gate per qubit and one query per register per k);
// comparisons, conditional_writes and branch_evaluations count the work the
// classical simulation actually performs, one unit per branch.
struct OpCounters {
    std::uint64_t hadamard_gates = 0;
    std::uint64_t oracle_queries = 0;
    std::uint64_t comparisons = 0;
    std::uint64_t conditional_writes = 0;
    std::uint64_t branch_evaluations = 0;

    OpCounters& operator+=(const OpCounters& other) noexcept;
    friend bool operator==(const OpCounters&, const OpCounters&) = default;
};

// Oracle registers queried per k: d0, d1, d2.
inline constexpr std::uint64_t kRegistersPerQuery = 3;

struct Branch {
    NodeId i = 0;
    NodeId j = 0;
    double amplitude = 0.0;  // joint amplitude of |i> (x) |j>
};

struct BranchTable {
    unsigned qubit_count = 0;  // per index register
    std::vector<Branch> branches;  // row-major in (i, j)

    double total_probability() const noexcept;
};

// Applies a Hadamard to each of n qubits starting from |0...0> and returns
// the 2^n amplitudes.
std::vector<double> hadamard_register(unsigned qubit_count);

// Prepares |i> (x) |j> from two n-qubit registers; charges 2n Hadamards.
BranchTable prepare_superposition(unsigned qubit_count, OpCounters& counters);

struct DistanceRegisters {
    ExtDistance d0;  // current value of (i, j)
    ExtDistance d1;  // (i, k)
    ExtDistance d2;  // (k, j)
    ExtDistance d3;  // d1 + d2
};

// Where d0 is looked up. ReadLayer gives the recurrence that converges;
// WriteLayer is the literal "(k + 1) mod 2" index and inherits the stale
// value of iteration k - 2.
enum class D0Source { ReadLayer, WriteLayer };

// Looks up the registers for one branch; charges one branch evaluation.
// Throws std::out_of_range for indices outside the padded node range.
DistanceRegisters oracle_query(const LayeredDistance& state, std::size_t k, NodeId i, NodeId j,
                               OpCounters& counters, D0Source d0_source = D0Source::ReadLayer);

// Charges one superposed query per oracle register for iteration k.
void charge_superposed_query(OpCounters& counters) noexcept;

// Step 5/6 for one branch: write d3 and set pred to Via(k) if d3 < d0,
// otherwise carry d0 into the write layer. Returns whether it updated.
bool conditional_update(LayeredDistance& state, PredecessorMatrix& pred, std::size_t k, NodeId i,
                        NodeId j, const DistanceRegisters& regs, OpCounters& counters);

struct QfwOptions {
    int worker_count = 1;
    // When set, branches within each k are evaluated in an order shuffled
    // with this seed.
    std::optional<std::uint64_t> shuffle_seed;
    D0Source d0_source = D0Source::ReadLayer;
};

struct QfwResult {
    DistanceMatrix dist;       // restricted to the original V nodes
    PredecessorMatrix pred;    // likewise
    OpCounters counters;
    std::size_t padded_nodes = 0;
    unsigned qubit_count = 0;
    unsigned register_width_bits = 0;  // bits needed for d0..d3
};

// Smallest power of two >= v (1 for v <= 1).
std::size_t padded_size(std::size_t v);
unsigned qubits_for(std::size_t padded);

// Bits needed to hold the sum of all edge weights. Throws
// std::invalid_argument when that sum exceeds the finite distance range.
unsigned register_width_bits(const Graph& graph);

// Pads the graph to a power of two, then for k = 0 .. Vpad - 1 prepares the
// superposition and queries/updates every branch.
QfwResult qfw_run(const Graph& graph, const QfwOptions& options = {});

class CounterMismatch : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct ComplexityReport {
    std::size_t nodes = 0;         // original V
    std::size_t padded_nodes = 0;  // Vpad
    unsigned qubit_count = 0;      // n = log2(Vpad)
    OpCounters counters;
    // Superposed cost model: per k, 2n Hadamards plus kModelOpsPerIteration
    // unit operations (three queries, the addition, the comparison, the
    // conditional write).
    std::uint64_t superposed_model_cost = 0;
    // Work the classical simulation really does: Vpad * Vpad^2 branches.
    std::uint64_t simulation_cost = 0;
    // Relaxations of the classical triple loop on the original graph: V^3.
    std::uint64_t classical_relaxations = 0;
};

inline constexpr std::uint64_t kModelOpsPerIteration = kRegistersPerQuery + 3;

// Validates the counters against the closed forms for a completed run on V
// nodes and builds the report. Throws CounterMismatch otherwise.
ComplexityReport complexity_report(const OpCounters& counters, std::size_t nodes);

std::string format_text(const ComplexityReport& report);
std::string format_kv(const ComplexityReport& report);

}  // namespace qfloyd::qsim

#endif  // QFLOYD_QFW_SIM_HPP
