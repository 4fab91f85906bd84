#include "qfloyd/fw_parallel.hpp"

#include <omp.h>

#include <array>
#include <stdexcept>

namespace qfloyd {

namespace {

void validate(const ParallelOptions& options) {
    if (options.worker_count < 1) throw std::invalid_argument("worker_count must be at least 1");
}

// Contiguous block of rows owned by worker `id` out of `workers`.
std::pair<std::size_t, std::size_t> row_block(int id, int workers, std::size_t rows) {
    const std::size_t lo = rows * static_cast<std::size_t>(id) / static_cast<std::size_t>(workers);
    const std::size_t hi = rows * static_cast<std::size_t>(id + 1) / static_cast<std::size_t>(workers);
    return {lo, hi};
}

inline void relax_row_buffered(const DistanceMatrix& read, DistanceMatrix& write,
                               PredecessorMatrix& pred, std::size_t k, std::size_t i) {
    const std::size_t v = read.size();
    const ExtDistance ik = read(i, k);
    auto in = read.row(i);
    auto out = write.row(i);
    auto via = read.row(k);
    for (std::size_t j = 0; j < v; ++j) {
        const ExtDistance candidate = ext_add(ik, via[j]);
        if (candidate < in[j]) {
            out[j] = candidate;
            pred(i, j) = Pred::via(static_cast<NodeId>(k));
        } else {
            out[j] = in[j];
        }
    }
}

inline void relax_row_inplace(DistanceMatrix& dist, PredecessorMatrix& pred, std::size_t k,
                              std::size_t i, InplaceWitness* witness) {
    const std::size_t v = dist.size();
    const ExtDistance ik = dist(i, k);
    if (ik.is_infinite()) return;
    auto row = dist.row(i);
    auto via = dist.row(k);
    for (std::size_t j = 0; j < v; ++j) {
        const ExtDistance candidate = ext_add(ik, via[j]);
        if (candidate < row[j]) {
            row[j] = candidate;
            pred(i, j) = Pred::via(static_cast<NodeId>(k));
            if (witness) {
                witness->writes.fetch_add(1, std::memory_order_relaxed);
                if (i == k || j == k) witness->pivot_line_writes.fetch_add(1, std::memory_order_relaxed);
            }
        }
    }
}

}  // namespace

int default_worker_count() { return omp_get_max_threads(); }

ApspResult fw_parallel(const Graph& graph, int worker_count) {
    return fw_parallel(graph, ParallelOptions{worker_count, 0});
}

ApspResult fw_parallel(const Graph& graph, const ParallelOptions& options) {
    validate(options);
    ApspResult init = init_distance(graph);
    const std::size_t v = graph.node_count();
    std::array<DistanceMatrix, 2> layers{init.dist, init.dist};
    PredecessorMatrix& pred = init.pred;
    const std::size_t chunk = options.chunk_rows;

#pragma omp parallel num_threads(options.worker_count)
    {
        const int id = omp_get_thread_num();
        const int workers = omp_get_num_threads();
        for (std::size_t k = 0; k < v; ++k) {
            const DistanceMatrix& read = layers[k % 2];
            DistanceMatrix& write = layers[(k + 1) % 2];
            if (chunk == 0) {
                auto [lo, hi] = row_block(id, workers, v);
                for (std::size_t i = lo; i < hi; ++i) relax_row_buffered(read, write, pred, k, i);
#pragma omp barrier
            } else {
#pragma omp for schedule(dynamic, chunk)
                for (std::size_t i = 0; i < v; ++i) relax_row_buffered(read, write, pred, k, i);
            }
        }
    }
    return {std::move(layers[v % 2]), std::move(pred)};
}

ApspResult fw_parallel_inplace(const Graph& graph, int worker_count) {
    return fw_parallel_inplace(graph, ParallelOptions{worker_count, 0});
}

ApspResult fw_parallel_inplace(const Graph& graph, const ParallelOptions& options,
                               InplaceWitness* witness) {
    validate(options);
    ApspResult r = init_distance(graph);
    const std::size_t v = graph.node_count();
    const std::size_t chunk = options.chunk_rows;

#pragma omp parallel num_threads(options.worker_count)
    {
        const int id = omp_get_thread_num();
        const int workers = omp_get_num_threads();
        for (std::size_t k = 0; k < v; ++k) {
            if (chunk == 0) {
                auto [lo, hi] = row_block(id, workers, v);
                for (std::size_t i = lo; i < hi; ++i) relax_row_inplace(r.dist, r.pred, k, i, witness);
#pragma omp barrier
            } else {
#pragma omp for schedule(dynamic, chunk)
                for (std::size_t i = 0; i < v; ++i) relax_row_inplace(r.dist, r.pred, k, i, witness);
            }
        }
    }
    return r;
}

}  // namespace qfloyd
