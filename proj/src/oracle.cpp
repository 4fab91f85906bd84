#include "qfloyd/oracle.hpp"

#include <string>
#include <vector>

namespace qfloyd::oracle {

DistanceMatrix apsp(const Graph& graph) {
    const std::size_t v = graph.node_count();
    DistanceMatrix out(v, kInfinity);
    std::vector<ExtDistance> label(v);
    for (std::size_t s = 0; s < v; ++s) {
        std::fill(label.begin(), label.end(), kInfinity);
        label[s] = ExtDistance(0);
        for (std::size_t pass = 0; pass + 1 < v; ++pass) {
            bool changed = false;
            for (const Edge& e : graph.edges()) {
                if (label[e.source].is_infinite()) continue;
                const ExtDistance through = label[e.source] + ExtDistance(e.weight);
                if (through < label[e.target]) {
                    label[e.target] = through;
                    changed = true;
                }
            }
            if (!changed) break;
        }
        std::copy(label.begin(), label.end(), out.row(s).begin());
    }
    return out;
}

namespace {

struct Enumerator {
    const std::vector<std::vector<Edge>>& out_edges;
    std::vector<bool> on_path;
    std::span<ExtDistance> best;  // row of the current source

    void walk(NodeId node, ExtDistance so_far) {
        if (so_far < best[node]) best[node] = so_far;
        for (const Edge& e : out_edges[node]) {
            if (on_path[e.target]) continue;
            on_path[e.target] = true;
            walk(e.target, so_far + ExtDistance(e.weight));
            on_path[e.target] = false;
        }
    }
};

}  // namespace

DistanceMatrix enumerate(const Graph& graph, std::size_t max_nodes) {
    const std::size_t v = graph.node_count();
    if (v > max_nodes)
        throw std::invalid_argument("path enumeration limited to " + std::to_string(max_nodes) +
                                    " nodes, graph has " + std::to_string(v));
    std::vector<std::vector<Edge>> out_edges(v);
    for (const Edge& e : graph.edges()) out_edges[e.source].push_back(e);

    DistanceMatrix out(v, kInfinity);
    for (std::size_t s = 0; s < v; ++s) {
        Enumerator en{out_edges, std::vector<bool>(v, false), out.row(s)};
        en.on_path[s] = true;
        en.walk(static_cast<NodeId>(s), ExtDistance(0));
    }
    return out;
}

}  // namespace qfloyd::oracle
