#include "qfloyd/fw_classical.hpp"

#include <sstream>
#include <unordered_set>

namespace qfloyd {

void relax_in_place(DistanceMatrix& dist, PredecessorMatrix& pred,
                    std::vector<RelaxationEvent>* trace) {
    const std::size_t v = dist.size();
    for (std::size_t k = 0; k < v; ++k) {
        for (std::size_t i = 0; i < v; ++i) {
            const ExtDistance ik = dist(i, k);
            if (ik.is_infinite()) continue;
            for (std::size_t j = 0; j < v; ++j) {
                const ExtDistance candidate = ext_add(dist(i, k), dist(k, j));
                if (candidate < dist(i, j)) {
                    if (trace)
                        trace->push_back({static_cast<NodeId>(k), static_cast<NodeId>(i),
                                          static_cast<NodeId>(j), dist(i, j), candidate});
                    dist(i, j) = candidate;
                    pred(i, j) = Pred::via(static_cast<NodeId>(k));
                }
            }
        }
    }
}

ApspResult fw_classical(const Graph& graph) {
    ApspResult r = init_distance(graph);
    relax_in_place(r.dist, r.pred);
    return r;
}

TracedResult fw_classical_traced(const Graph& graph) {
    auto [dist, pred] = init_distance(graph);
    std::vector<RelaxationEvent> events;
    relax_in_place(dist, pred, &events);
    return {std::move(dist), std::move(pred), std::move(events)};
}

namespace {

std::string describe(const RelaxationEvent& e) {
    std::ostringstream out;
    out << "(k=" << e.k << ", i=" << e.i << ", j=" << e.j << ", " << e.old_value << "->"
        << e.new_value << ")";
    return out.str();
}

std::uint64_t cell_key(NodeId i, NodeId j) { return (std::uint64_t{i} << 32) | j; }

}  // namespace

ObservationReport check_observation_1(std::span<const RelaxationEvent> events) {
    for (const RelaxationEvent& e : events) {
        if (e.i == e.j || e.i == e.k || e.j == e.k)
            return {false, e, "indices not pairwise distinct at " + describe(e)};
    }
    return {};
}

ObservationReport check_observation_2(std::span<const RelaxationEvent> events) {
    std::unordered_set<std::uint64_t> updated;
    std::optional<NodeId> sweep;
    for (const RelaxationEvent& e : events) {
        if (sweep != e.k) {
            updated.clear();
            sweep = e.k;
        }
        if (updated.contains(cell_key(e.i, e.k)))
            return {false, e,
                    "dist[" + std::to_string(e.i) + "][" + std::to_string(e.k) +
                        "] read after its update in the same sweep at " + describe(e)};
        if (updated.contains(cell_key(e.k, e.j)))
            return {false, e,
                    "dist[" + std::to_string(e.k) + "][" + std::to_string(e.j) +
                        "] read after its update in the same sweep at " + describe(e)};
        updated.insert(cell_key(e.i, e.j));
    }
    return {};
}

}  // namespace qfloyd
