#include "qfloyd/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <random>
#include <sstream>

namespace qfloyd {

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
      line_(line) {}

Graph::Graph(std::size_t node_count, std::vector<Edge> edges)
    : node_count_(node_count), edges_(std::move(edges)) {
    if (node_count_ == 0) throw GraphError("graph must have at least one node");
    if (node_count_ > std::size_t{0xFFFFFFFF}) throw GraphError("node count exceeds index range");
    for (const Edge& e : edges_) {
        if (e.source >= node_count_ || e.target >= node_count_)
            throw GraphError("edge " + std::to_string(e.source) + "->" + std::to_string(e.target) +
                             " references a node outside [0, " + std::to_string(node_count_) + ")");
        if (e.source == e.target)
            throw GraphError("self-loop on node " + std::to_string(e.source));
        if (e.weight > ExtDistance::kMaxFinite)
            throw GraphError("weight out of range on edge " + std::to_string(e.source) + "->" +
                             std::to_string(e.target));
    }
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
        return std::tie(a.source, a.target) < std::tie(b.source, b.target);
    });
    auto dup = std::adjacent_find(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
        return a.source == b.source && a.target == b.target;
    });
    if (dup != edges_.end())
        throw GraphError("duplicate edge " + std::to_string(dup->source) + "->" +
                         std::to_string(dup->target));
}

std::optional<Weight> Graph::weight(NodeId source, NodeId target) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair{source, target},
                               [](const Edge& e, const std::pair<NodeId, NodeId>& key) {
                                   return std::tie(e.source, e.target) < std::tie(key.first, key.second);
                               });
    if (it == edges_.end() || it->source != source || it->target != target) return std::nullopt;
    return it->weight;
}

Graph Graph::padded_to(std::size_t padded_count) const {
    if (padded_count < node_count_) throw GraphError("cannot pad a graph to fewer nodes");
    return Graph(padded_count, edges_);
}

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
        std::size_t end = pos;
        while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != '\r') ++end;
        if (end > pos) fields.push_back(line.substr(pos, end - pos));
        pos = end;
    }
    return fields;
}

std::uint64_t parse_unsigned(std::string_view field, std::size_t line, const char* what) {
    if (!field.empty() && field.front() == '-') {
        if (std::string_view(what) == "weight") throw ParseError(line, "negative weight " + std::string(field));
        throw ParseError(line, std::string("negative ") + what + " " + std::string(field));
    }
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec == std::errc::result_out_of_range)
        throw ParseError(line, std::string(what) + " out of range: " + std::string(field));
    if (ec != std::errc() || ptr != field.data() + field.size())
        throw ParseError(line, std::string("malformed ") + what + ": '" + std::string(field) + "'");
    return value;
}

}  // namespace

Graph parse_graph(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    std::size_t header_line = 0;
    std::optional<std::pair<std::uint64_t, std::uint64_t>> header;
    std::vector<Edge> edges;
    std::vector<std::size_t> edge_lines;

    while (std::getline(in, line)) {
        ++line_no;
        auto fields = split_fields(line);
        if (fields.empty()) continue;
        if (!header) {
            if (fields.size() != 2) throw ParseError(line_no, "malformed header, expected \"V E\"");
            auto v = parse_unsigned(fields[0], line_no, "node count");
            auto e = parse_unsigned(fields[1], line_no, "edge count");
            if (v == 0) throw ParseError(line_no, "malformed header, node count must be positive");
            if (v > 0xFFFFFFFFull) throw ParseError(line_no, "node count out of range");
            header = {v, e};
            header_line = line_no;
            continue;
        }
        if (edges.size() == header->second)
            throw ParseError(line_no, "more edge lines than the " + std::to_string(header->second) +
                                          " declared in the header");
        if (fields.size() != 3) throw ParseError(line_no, "malformed edge, expected \"u v w\"");
        auto u = parse_unsigned(fields[0], line_no, "source index");
        auto v = parse_unsigned(fields[1], line_no, "target index");
        auto w = parse_unsigned(fields[2], line_no, "weight");
        if (u >= header->first || v >= header->first)
            throw ParseError(line_no, "node index out of range (V=" + std::to_string(header->first) + ")");
        if (u == v) throw ParseError(line_no, "self-loop on node " + std::to_string(u));
        if (w > ExtDistance::kMaxFinite) throw ParseError(line_no, "weight out of range");
        edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v), w});
        edge_lines.push_back(line_no);
    }
    if (!header) throw ParseError(line_no == 0 ? 1 : line_no, "malformed header, input is empty");
    if (edges.size() != header->second)
        throw ParseError(line_no, "expected " + std::to_string(header->second) + " edges, found " +
                                      std::to_string(edges.size()) + " (header on line " +
                                      std::to_string(header_line) + ")");

    // Duplicates are reported at the second occurrence.
    std::vector<std::size_t> order(edges.size());
    for (std::size_t n = 0; n < order.size(); ++n) order[n] = n;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::tie(edges[a].source, edges[a].target) < std::tie(edges[b].source, edges[b].target);
    });
    for (std::size_t n = 1; n < order.size(); ++n) {
        const Edge& a = edges[order[n - 1]];
        const Edge& b = edges[order[n]];
        if (a.source == b.source && a.target == b.target)
            throw ParseError(edge_lines[order[n]], "duplicate edge " + std::to_string(b.source) + " " +
                                                       std::to_string(b.target));
    }
    return Graph(header->first, std::move(edges));
}

Graph parse_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_graph(in);
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_graph(in);
}

std::string serialize_graph(const Graph& graph) {
    std::ostringstream out;
    out << graph.node_count() << ' ' << graph.edge_count() << '\n';
    for (const Edge& e : graph.edges()) out << e.source << ' ' << e.target << ' ' << e.weight << '\n';
    return out.str();
}

namespace {

// Uniform in [0, 1) from the top 53 bits.
double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

// Uniform in [0, bound] by rejection; std distributions are not portable
// across standard libraries.
Weight bounded_draw(std::mt19937_64& rng, Weight bound) {
    if (bound == std::numeric_limits<Weight>::max()) return rng();
    const Weight span = bound + 1;
    const Weight limit = std::numeric_limits<Weight>::max() - std::numeric_limits<Weight>::max() % span;
    Weight x;
    do {
        x = rng();
    } while (x >= limit);
    return x % span;
}

}  // namespace

Graph random_graph(std::size_t node_count, double edge_probability, Weight max_weight,
                   std::uint64_t seed) {
    if (!(edge_probability >= 0.0 && edge_probability <= 1.0))
        throw GraphError("edge probability must lie in [0, 1]");
    max_weight = std::min(max_weight, ExtDistance::kMaxFinite);
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < node_count; ++u) {
        for (std::size_t v = 0; v < node_count; ++v) {
            if (u == v) continue;
            if (unit_draw(rng) < edge_probability)
                edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v), bounded_draw(rng, max_weight)});
        }
    }
    return Graph(node_count, std::move(edges));
}

}  // namespace qfloyd
