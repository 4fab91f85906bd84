#ifndef QFLOYD_FW_PARALLEL_HPP
#define QFLOYD_FW_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <cstdint>

#include "qfloyd/graph.hpp"
#include "qfloyd/matrix.hpp"

namespace qfloyd {

// How the V rows of one k sweep are handed to workers. chunk_rows == 0 gives
// contiguous row blocks (one per worker); otherwise rows are dealt out
// dynamically in chunks of that many rows.
struct ParallelOptions {
    int worker_count = 1;
    std::size_t chunk_rows = 0;
};

// Test instrumentation for the in-place kernel: counts writes that land in
// row k or column k during sweep k. Must stay zero for non-negative weights.
struct InplaceWitness {
    std::atomic<std::uint64_t> writes{0};
    std::atomic<std::uint64_t> pivot_line_writes{0};
};

// Double-buffered: every sweep reads a frozen layer and writes the other.
// Output is bit-identical to fw_layered_corrected for any options.
ApspResult fw_parallel(const Graph& graph, int worker_count);
ApspResult fw_parallel(const Graph& graph, const ParallelOptions& options);

// Single buffer relaxed concurrently within each sweep. Safe because row k
// and column k never change during sweep k when weights are non-negative.
ApspResult fw_parallel_inplace(const Graph& graph, int worker_count);
ApspResult fw_parallel_inplace(const Graph& graph, const ParallelOptions& options,
                               InplaceWitness* witness = nullptr);

// Worker count used when none is given: OpenMP's default thread count.
int default_worker_count();

}  // namespace qfloyd

#endif  // QFLOYD_FW_PARALLEL_HPP
