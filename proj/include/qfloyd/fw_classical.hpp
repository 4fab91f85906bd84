#ifndef QFLOYD_FW_CLASSICAL_HPP
#define QFLOYD_FW_CLASSICAL_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qfloyd/graph.hpp"
#include "qfloyd/matrix.hpp"

namespace qfloyd {

// One successful in-place update dist[i][j]: old_value -> new_value at pivot k.
struct RelaxationEvent {
    NodeId k = 0;
    NodeId i = 0;
    NodeId j = 0;
    ExtDistance old_value;
    ExtDistance new_value;

    friend bool operator==(const RelaxationEvent&, const RelaxationEvent&) = default;
};

// Triple loop k, i, j with in-place strict-less-than updates.
ApspResult fw_classical(const Graph& graph);

struct TracedResult {
    DistanceMatrix dist;
    PredecessorMatrix pred;
    std::vector<RelaxationEvent> events;
};

TracedResult fw_classical_traced(const Graph& graph);

// Runs the relaxation triple loop over an existing dist/pred pair. When
// `trace` is non-null every successful update is appended to it.
void relax_in_place(DistanceMatrix& dist, PredecessorMatrix& pred,
                    std::vector<RelaxationEvent>* trace = nullptr);

struct ObservationReport {
    bool passed = true;
    std::optional<RelaxationEvent> first_violation;
    std::string detail;
};

// Passes iff every update has pairwise distinct i, j, k.
ObservationReport check_observation_1(std::span<const RelaxationEvent> events);

// Passes iff no cell updated during sweep k is afterwards read, within the
// same sweep, as dist[i'][k] or dist[k][j'] by a later update.
ObservationReport check_observation_2(std::span<const RelaxationEvent> events);

}  // namespace qfloyd

#endif  // QFLOYD_FW_CLASSICAL_HPP
