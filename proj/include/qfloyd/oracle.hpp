#ifndef QFLOYD_ORACLE_HPP
#define QFLOYD_ORACLE_HPP

#include <cstddef>
#include <stdexcept>

#include "qfloyd/graph.hpp"
#include "qfloyd/matrix.hpp"

// Ground-truth distances built without any Floyd-Warshall machinery.
namespace qfloyd::oracle {

// Per-source edge-list relaxation, at most V - 1 passes each.
DistanceMatrix apsp(const Graph& graph);

// Minimum over every simple path of every ordered pair. Exponential; throws
// std::invalid_argument when V > max_nodes.
DistanceMatrix enumerate(const Graph& graph, std::size_t max_nodes = 10);

}  // namespace qfloyd::oracle

#endif  // QFLOYD_ORACLE_HPP
