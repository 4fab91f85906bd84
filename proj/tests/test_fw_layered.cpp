#include <doctest.h>

#include <algorithm>
#include <array>

#include "qfloyd/fw_classical.hpp"
#include "qfloyd/fw_layered.hpp"
#include "qfloyd/oracle.hpp"
#include "support.hpp"

using namespace qfloyd;
namespace t = qfloyd::test;

namespace {

// Direct transcription of the printed three-dimensional loop nest, kept
// independent of LayeredDistance.
DistanceMatrix printed_loop_nest(const Graph& g) {
    const std::size_t n = g.node_count();
    std::array<std::vector<std::vector<ExtDistance>>, 2> dist;
    for (auto& layer : dist) {
        layer.assign(n, std::vector<ExtDistance>(n, kInfinity));
        for (std::size_t i = 0; i < n; ++i) layer[i][i] = ExtDistance(0);
        for (const Edge& e : g.edges()) layer[e.source][e.target] = ExtDistance(e.weight);
    }
    for (std::size_t k = 0; k < n; k++)
        for (std::size_t i = 0; i < n; i++)
            for (std::size_t j = 0; j < n; j++)
                dist[(k + 1) % 2][i][j] =
                    std::min(dist[(k + 1) % 2][i][j], dist[k % 2][i][k] + dist[k % 2][k][j]);
    DistanceMatrix out(n, kInfinity);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = dist[n % 2][i][j];
    return out;
}

}  // namespace

TEST_CASE("fw_layered_as_printed examples") {
    CHECK(fw_layered_as_printed(t::g3())(0, 2) == ExtDistance(3));
    CHECK(fw_layered_as_printed(t::g3()) == oracle::apsp(t::g3()));
    CHECK(fw_layered_as_printed(t::edgeless(4)) == oracle::apsp(t::edgeless(4)));

    const DistanceMatrix printed = fw_layered_as_printed(t::g5div());
    CHECK(printed == printed_loop_nest(t::g5div()));
    CHECK(printed(0, 4) > ExtDistance(3));
    CHECK(printed(0, 4) == ExtDistance(11));
    CHECK(printed(0, 3) == ExtDistance(10));
}

TEST_CASE("fw_layered_as_printed matches the literal loop nest") {
    for (const auto& c : t::random_sweep(100, 1, 20)) {
        INFO("seed " << c.seed);
        CHECK(fw_layered_as_printed(c.graph) == printed_loop_nest(c.graph));
    }
}

TEST_CASE("fw_layered_as_printed never undercuts the oracle") {
    std::size_t divergent = 0;
    for (const auto& c : t::random_sweep(200, 2, 64)) {
        const DistanceMatrix printed = fw_layered_as_printed(c.graph);
        const DistanceMatrix truth = oracle::apsp(c.graph);
        bool ok = true;
        for (std::size_t n = 0; n < truth.cells().size(); ++n) ok = ok && printed.cells()[n] >= truth.cells()[n];
        INFO("seed " << c.seed);
        CHECK(ok);
        divergent += printed != truth;
    }
    MESSAGE("as-printed diverged on " << divergent << " of 200 random graphs");
}

TEST_CASE("fw_layered_corrected examples") {
    CHECK(fw_layered_corrected(t::g5div()).dist(0, 4) == ExtDistance(3));
    const ApspResult g3 = fw_layered_corrected(t::g3());
    const ApspResult ref = fw_classical(t::g3());
    CHECK(g3.dist == ref.dist);
    CHECK(g3.pred == ref.pred);
    CHECK(fw_layered_corrected(Graph(1, {})).dist == DistanceMatrix(1, ExtDistance(0)));
}

TEST_CASE("fw_layered_corrected equals fw_classical and the oracle") {
    for (const auto& c : t::random_sweep(200, 2, 64)) {
        INFO("seed " << c.seed << " V " << c.nodes);
        const ApspResult layered = fw_layered_corrected(c.graph);
        const ApspResult classical = fw_classical(c.graph);
        CHECK(layered.dist == oracle::apsp(c.graph));
        CHECK(layered.dist == classical.dist);
        CHECK(layered.pred == classical.pred);
    }
}

TEST_CASE("detect_divergence") {
    SUBCASE("G3") {
        const DivergenceReport r = detect_divergence(t::g3());
        CHECK(r.equal);
        CHECK(r.corrected_equal);
        CHECK_FALSE(r.first_difference);
    }
    SUBCASE("edgeless") { CHECK(detect_divergence(t::edgeless(4)).equal); }
    SUBCASE("G5div") {
        const DivergenceReport r = detect_divergence(t::g5div());
        CHECK_FALSE(r.equal);
        CHECK(r.corrected_equal);
        CHECK(r.differing_cells == 2);
        REQUIRE(r.first_difference);
        // Row-major, the stale (0,3) entry comes first.
        CHECK(r.first_difference->i == 0);
        CHECK(r.first_difference->j == 3);
        CHECK(r.first_difference->printed == ExtDistance(10));
        CHECK(r.first_difference->oracle == ExtDistance(2));
        CHECK(r.printed(0, 4) == ExtDistance(11));
        CHECK(r.oracle(0, 4) == ExtDistance(3));
    }
}

TEST_CASE("G5div fixture file matches the in-code graph") {
    CHECK(load_graph(t::fixture_path("g5div.edges")) == t::g5div());
    CHECK(load_graph(t::fixture_path("g3.edges")) == t::g3());
}

TEST_CASE("fw_layered_step") {
    const Graph g = t::g3();
    const ApspResult init = init_distance(g);
    const LayeredDistance start(init.dist);

    SUBCASE("k = 0 changes nothing on G3") {
        for (auto variant : {LayeredVariant::AsPrinted, LayeredVariant::Corrected}) {
            const LayeredDistance after = fw_layered_step(start, 0, variant);
            CHECK(after.write_layer(0) == init.dist);
        }
    }
    SUBCASE("k = 1 after k = 0 improves (0,2)") {
        PredecessorMatrix pred = init.pred;
        LayeredDistance s = fw_layered_step(start, 0, LayeredVariant::Corrected, &pred);
        s = fw_layered_step(s, 1, LayeredVariant::Corrected, &pred);
        CHECK(s.write_layer(1)(0, 2) == ExtDistance(3));
        CHECK(pred(0, 2) == Pred::via(1));
    }
    SUBCASE("repeating k against its own output is a no-op") {
        for (const auto& c : t::random_sweep(20, 2, 20)) {
            LayeredDistance s(init_distance(c.graph).dist);
            for (std::size_t k = 0; k < c.nodes / 2; ++k) s = fw_layered_step(s, k, LayeredVariant::Corrected);
            const std::size_t k = c.nodes / 2;
            const DistanceMatrix once = fw_layered_step(s, k, LayeredVariant::Corrected).write_layer(k);
            const LayeredDistance repointed(once, once);
            CHECK(fw_layered_step(repointed, k, LayeredVariant::Corrected).write_layer(k) == once);
        }
    }
    SUBCASE("k out of range") {
        CHECK_THROWS_AS(fw_layered_step(start, 3, LayeredVariant::Corrected), std::out_of_range);
    }
}

TEST_CASE("corrected step is a pure function of the read layer") {
    for (const auto& c : t::random_sweep(40, 2, 32)) {
        const ApspResult init = init_distance(c.graph);
        LayeredDistance s(init.dist);
        PredecessorMatrix pred_row = init.pred, pred_col = init.pred;
        for (std::size_t k = 0; k < c.nodes; ++k) {
            // Poison the write layer: a corrected step must not read it.
            LayeredDistance poisoned = s;
            poisoned.write_layer(k) = DistanceMatrix(c.nodes, ExtDistance(0));
            const LayeredDistance row = fw_layered_step(s, k, LayeredVariant::Corrected, &pred_row, SweepOrder::RowMajor);
            const LayeredDistance col =
                fw_layered_step(poisoned, k, LayeredVariant::Corrected, &pred_col, SweepOrder::ColumnMajor);
            CHECK(row.write_layer(k) == col.write_layer(k));
            CHECK(pred_row == pred_col);

            const DistanceMatrix& read = row.read_layer(k);
            const DistanceMatrix& written = row.write_layer(k);
            for (std::size_t x = 0; x < c.nodes; ++x) {
                CHECK(written(k, x) == read(k, x));
                CHECK(written(x, k) == read(x, k));
            }
            s = row;
        }
    }
}
