#ifndef QFLOYD_GRAPH_HPP
#define QFLOYD_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qfloyd/ext_distance.hpp"

namespace qfloyd {

struct Edge {
    NodeId source = 0;
    NodeId target = 0;
    Weight weight = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

// Raised when a Graph would violate its invariants.
class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Raised by parse_graph; carries the 1-based line number of the offending line
// (0 when the problem is end-of-input).
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Directed graph with non-negative integer weights. Edges are kept sorted by
// (source, target); at most one edge per ordered pair, no self-loops.
class Graph {
public:
    // Throws GraphError on out-of-range index, self-loop, duplicate pair or
    // a weight above ExtDistance::kMaxFinite.
    Graph(std::size_t node_count, std::vector<Edge> edges);

    std::size_t node_count() const noexcept { return node_count_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::span<const Edge> edges() const noexcept { return edges_; }

    std::optional<Weight> weight(NodeId source, NodeId target) const;

    // Same edges on `padded_count` >= node_count() nodes; extra nodes are isolated.
    Graph padded_to(std::size_t padded_count) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::size_t node_count_;
    std::vector<Edge> edges_;
};

// Edge-list text: "V E" header followed by E lines "u v w". Blank lines are
// ignored. Errors are reported as ParseError with the line number.
Graph parse_graph(std::istream& in);
Graph parse_graph(std::string_view text);
Graph load_graph(const std::string& path);

// Inverse of parse_graph; edges are emitted sorted by (u, v).
std::string serialize_graph(const Graph& graph);

// Each ordered non-diagonal pair is present independently with probability
// `edge_probability`; weights are uniform in [0, max_weight]. Bit-reproducible
// for a fixed argument tuple.
Graph random_graph(std::size_t node_count, double edge_probability, Weight max_weight,
                   std::uint64_t seed);

}  // namespace qfloyd

#endif  // QFLOYD_GRAPH_HPP
