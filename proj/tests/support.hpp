#ifndef QFLOYD_TESTS_SUPPORT_HPP
#define QFLOYD_TESTS_SUPPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qfloyd/graph.hpp"
#include "qfloyd/matrix.hpp"

namespace qfloyd::test {

// {0->1 w1, 1->2 w2, 0->2 w10}
inline Graph g3() { return Graph(3, {{0, 1, 1}, {1, 2, 2}, {0, 2, 10}}); }

// The as-printed layered recurrence loses the via-1 improvement on this one.
inline Graph g5div() { return Graph(5, {{0, 1, 1}, {1, 3, 1}, {3, 4, 1}, {0, 3, 10}, {0, 4, 100}}); }

inline Graph edgeless(std::size_t v) { return Graph(v, {}); }

inline Graph complete(std::size_t v, Weight w) {
    std::vector<Edge> edges;
    for (NodeId i = 0; i < v; ++i)
        for (NodeId j = 0; j < v; ++j)
            if (i != j) edges.push_back({i, j, w});
    return Graph(v, std::move(edges));
}

inline std::string fixture_path(const std::string& name) { return std::string(QFLOYD_FIXTURES) + "/" + name; }

struct SweepCase {
    std::uint64_t seed;
    std::size_t nodes;
    double p;
    Graph graph;
};

// Seeded random graphs cycling p over {0.1, 0.5, 0.9} with V in [min_v, max_v].
inline std::vector<SweepCase> random_sweep(std::size_t count, std::size_t min_v, std::size_t max_v,
                                           Weight max_weight = 50) {
    static constexpr double kProbabilities[] = {0.1, 0.5, 0.9};
    std::vector<SweepCase> cases;
    for (std::uint64_t s = 0; s < count; ++s) {
        const std::size_t v = min_v + (s * 37 + s / 3) % (max_v - min_v + 1);
        const double p = kProbabilities[s % 3];
        cases.push_back({s, v, p, random_graph(v, p, max_weight, s)});
    }
    return cases;
}

}  // namespace qfloyd::test

#endif  // QFLOYD_TESTS_SUPPORT_HPP
