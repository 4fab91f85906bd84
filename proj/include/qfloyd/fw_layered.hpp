#ifndef QFLOYD_FW_LAYERED_HPP
#define QFLOYD_FW_LAYERED_HPP

#include <array>
#include <cstddef>
#include <optional>

#include "qfloyd/graph.hpp"
#include "qfloyd/matrix.hpp"

namespace qfloyd {

// Two distance layers addressed by k mod 2. Iteration k reads layer k % 2
// and writes layer (k + 1) % 2.
class LayeredDistance {
public:
    // Both layers start as copies of `initial`.
    explicit LayeredDistance(const DistanceMatrix& initial);
    LayeredDistance(DistanceMatrix layer0, DistanceMatrix layer1);

    std::size_t size() const noexcept { return layers_[0].size(); }

    DistanceMatrix& layer(std::size_t parity) noexcept { return layers_[parity % 2]; }
    const DistanceMatrix& layer(std::size_t parity) const noexcept { return layers_[parity % 2]; }

    const DistanceMatrix& read_layer(std::size_t k) const noexcept { return layers_[k % 2]; }
    DistanceMatrix& write_layer(std::size_t k) noexcept { return layers_[(k + 1) % 2]; }
    const DistanceMatrix& write_layer(std::size_t k) const noexcept { return layers_[(k + 1) % 2]; }

    friend bool operator==(const LayeredDistance&, const LayeredDistance&) = default;

private:
    std::array<DistanceMatrix, 2> layers_;
};

enum class LayeredVariant {
    // write[i][j] = MIN(write[i][j], read[i][k] + read[k][j]); the first MIN
    // argument is whatever the write layer held from iteration k - 2.
    AsPrinted,
    // write[i][j] = MIN(read[i][j], read[i][k] + read[k][j]).
    Corrected,
};

enum class SweepOrder { RowMajor, ColumnMajor };

// Applies iteration k of the selected recurrence and returns the new state.
// For Corrected, pred[i][j] becomes Via(k) exactly when the candidate strictly
// wins; pred is ignored for AsPrinted. Throws std::out_of_range if k >= V.
LayeredDistance fw_layered_step(LayeredDistance state, std::size_t k, LayeredVariant variant,
                                PredecessorMatrix* pred = nullptr,
                                SweepOrder order = SweepOrder::RowMajor);

// The recurrence exactly as printed; the final layer is the one written at
// k = V - 1. No predecessor information is maintained.
DistanceMatrix fw_layered_as_printed(const Graph& graph);

ApspResult fw_layered_corrected(const Graph& graph);

struct CellDifference {
    std::size_t i = 0;
    std::size_t j = 0;
    ExtDistance printed;
    ExtDistance oracle;
};

struct DivergenceReport {
    bool equal = true;                        // as-printed == oracle
    bool corrected_equal = true;              // corrected == oracle
    std::optional<CellDifference> first_difference;  // row-major
    std::size_t differing_cells = 0;
    DistanceMatrix printed;
    DistanceMatrix corrected;
    DistanceMatrix oracle;
};

DivergenceReport detect_divergence(const Graph& graph);

}  // namespace qfloyd

#endif  // QFLOYD_FW_LAYERED_HPP
