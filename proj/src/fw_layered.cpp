#include "qfloyd/fw_layered.hpp"

#include <stdexcept>
#include <string>

#include "qfloyd/oracle.hpp"

namespace qfloyd {

LayeredDistance::LayeredDistance(const DistanceMatrix& initial) : layers_{initial, initial} {}

LayeredDistance::LayeredDistance(DistanceMatrix layer0, DistanceMatrix layer1)
    : layers_{std::move(layer0), std::move(layer1)} {
    if (layers_[0].size() != layers_[1].size())
        throw std::invalid_argument("layers must have the same size");
}

namespace {

inline void relax_cell(const DistanceMatrix& read, DistanceMatrix& write, std::size_t k,
                       std::size_t i, std::size_t j, LayeredVariant variant,
                       PredecessorMatrix* pred) {
    const ExtDistance candidate = ext_add(read(i, k), read(k, j));
    if (variant == LayeredVariant::AsPrinted) {
        if (candidate < write(i, j)) write(i, j) = candidate;
        return;
    }
    if (candidate < read(i, j)) {
        write(i, j) = candidate;
        if (pred) (*pred)(i, j) = Pred::via(static_cast<NodeId>(k));
    } else {
        write(i, j) = read(i, j);
    }
}

}  // namespace

LayeredDistance fw_layered_step(LayeredDistance state, std::size_t k, LayeredVariant variant,
                                PredecessorMatrix* pred, SweepOrder order) {
    const std::size_t v = state.size();
    if (k >= v)
        throw std::out_of_range("pivot " + std::to_string(k) + " outside [0, " + std::to_string(v) + ")");
    if (pred && pred->size() != v) throw std::invalid_argument("pred size does not match state");
    // Read and write layers are distinct objects, so taking both is safe.
    const DistanceMatrix& read = state.read_layer(k);
    DistanceMatrix& write = state.write_layer(k);
    if (order == SweepOrder::RowMajor) {
        for (std::size_t i = 0; i < v; ++i)
            for (std::size_t j = 0; j < v; ++j) relax_cell(read, write, k, i, j, variant, pred);
    } else {
        for (std::size_t j = 0; j < v; ++j)
            for (std::size_t i = 0; i < v; ++i) relax_cell(read, write, k, i, j, variant, pred);
    }
    return state;
}

DistanceMatrix fw_layered_as_printed(const Graph& graph) {
    const std::size_t v = graph.node_count();
    LayeredDistance state(init_distance(graph).dist);
    for (std::size_t k = 0; k < v; ++k)
        state = fw_layered_step(std::move(state), k, LayeredVariant::AsPrinted);
    return state.write_layer(v - 1);
}

ApspResult fw_layered_corrected(const Graph& graph) {
    const std::size_t v = graph.node_count();
    ApspResult init = init_distance(graph);
    LayeredDistance state(init.dist);
    PredecessorMatrix pred = std::move(init.pred);
    for (std::size_t k = 0; k < v; ++k)
        state = fw_layered_step(std::move(state), k, LayeredVariant::Corrected, &pred);
    return {state.write_layer(v - 1), std::move(pred)};
}

DivergenceReport detect_divergence(const Graph& graph) {
    DivergenceReport report;
    report.printed = fw_layered_as_printed(graph);
    report.corrected = fw_layered_corrected(graph).dist;
    report.oracle = oracle::apsp(graph);
    report.corrected_equal = report.corrected == report.oracle;
    const std::size_t v = graph.node_count();
    for (std::size_t i = 0; i < v; ++i) {
        for (std::size_t j = 0; j < v; ++j) {
            if (report.printed(i, j) == report.oracle(i, j)) continue;
            if (!report.first_difference)
                report.first_difference = CellDifference{i, j, report.printed(i, j), report.oracle(i, j)};
            ++report.differing_cells;
        }
    }
    report.equal = report.differing_cells == 0;
    return report;
}

}  // namespace qfloyd
