#include "qfloyd/matrix.hpp"

#include <sstream>
#include <unordered_set>

namespace qfloyd {

std::string to_string(Pred p) {
    switch (p.kind()) {
        case Pred::Kind::NoPath: return "NoPath";
        case Pred::Kind::Direct: return "Direct";
        case Pred::Kind::Via: return "Via(" + std::to_string(p.node()) + ")";
    }
    return "?";
}

std::ostream& operator<<(std::ostream& os, Pred p) { return os << to_string(p); }

ApspResult init_distance(const Graph& graph) {
    const std::size_t v = graph.node_count();
    ApspResult r{DistanceMatrix(v, kInfinity), PredecessorMatrix(v, Pred::no_path())};
    for (std::size_t i = 0; i < v; ++i) {
        r.dist(i, i) = ExtDistance(0);
        r.pred(i, i) = Pred::direct();
    }
    for (const Edge& e : graph.edges()) {
        r.dist(e.source, e.target) = ExtDistance(e.weight);
        r.pred(e.source, e.target) = Pred::direct();
    }
    return r;
}

namespace {

class PathExpander {
public:
    PathExpander(const Graph& graph, const PredecessorMatrix& pred, const DistanceMatrix& dist)
        : graph_(graph), pred_(pred), dist_(dist) {}

    // Appends the nodes of path(i, j) after i (i itself is already emitted).
    void expand(NodeId i, NodeId j, std::vector<NodeId>& out) {
        if (i == j) return;
        const std::uint64_t key = (std::uint64_t{i} << 32) | j;
        if (!on_stack_.insert(key).second)
            throw InconsistentResult("cycle while expanding pred at (" + std::to_string(i) + "," +
                                     std::to_string(j) + ")");
        const Pred p = pred_(i, j);
        switch (p.kind()) {
            case Pred::Kind::NoPath:
                throw InconsistentResult("NoPath inside a finite path at (" + std::to_string(i) + "," +
                                         std::to_string(j) + ")");
            case Pred::Kind::Direct:
                if (!graph_.weight(i, j))
                    throw InconsistentResult("Direct at (" + std::to_string(i) + "," +
                                             std::to_string(j) + ") but no such edge");
                out.push_back(j);
                break;
            case Pred::Kind::Via: {
                const NodeId k = p.node();
                if (k == i || k == j || k >= dist_.size())
                    throw InconsistentResult("invalid pivot " + std::to_string(k) + " at (" +
                                             std::to_string(i) + "," + std::to_string(j) + ")");
                expand(i, k, out);
                expand(k, j, out);
                break;
            }
        }
        on_stack_.erase(key);
    }

private:
    const Graph& graph_;
    const PredecessorMatrix& pred_;
    const DistanceMatrix& dist_;
    std::unordered_set<std::uint64_t> on_stack_;
};

}  // namespace

ExtDistance path_weight(const Graph& graph, std::span<const NodeId> path) {
    ExtDistance total(0);
    for (std::size_t n = 1; n < path.size(); ++n) {
        auto w = graph.weight(path[n - 1], path[n]);
        if (!w)
            throw InconsistentResult("no edge " + std::to_string(path[n - 1]) + "->" +
                                     std::to_string(path[n]));
        total = ext_add(total, ExtDistance(*w));
    }
    return total;
}

std::optional<std::vector<NodeId>> reconstruct_path(const Graph& graph,
                                                    const PredecessorMatrix& pred,
                                                    const DistanceMatrix& dist, NodeId i,
                                                    NodeId j) {
    const std::size_t v = dist.size();
    if (pred.size() != v || graph.node_count() != v)
        throw InconsistentResult("graph, pred and dist disagree on node count");
    if (i >= v || j >= v) throw std::out_of_range("node index out of range");
    if (dist(i, j).is_infinite()) {
        if (pred(i, j).kind() != Pred::Kind::NoPath)
            throw InconsistentResult("unreachable pair (" + std::to_string(i) + "," +
                                     std::to_string(j) + ") has a pred entry");
        return std::nullopt;
    }
    std::vector<NodeId> path{i};
    PathExpander(graph, pred, dist).expand(i, j, path);
    if (path_weight(graph, path) != dist(i, j))
        throw InconsistentResult("path weight for (" + std::to_string(i) + "," + std::to_string(j) +
                                 ") differs from the reported distance");
    return path;
}

std::string format_matrix(const DistanceMatrix& dist) {
    std::ostringstream out;
    for (std::size_t i = 0; i < dist.size(); ++i) {
        for (std::size_t j = 0; j < dist.size(); ++j) {
            if (j) out << ' ';
            out << dist(i, j);
        }
        out << '\n';
    }
    return out.str();
}

std::optional<std::pair<std::size_t, std::size_t>> first_difference(const DistanceMatrix& a,
                                                                    const DistanceMatrix& b) {
    if (a.size() != b.size()) throw std::invalid_argument("matrix sizes differ");
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (a(i, j) != b(i, j)) return std::pair{i, j};
    return std::nullopt;
}

}  // namespace qfloyd
