#include <doctest.h>

#include <cmath>
#include <set>
#include <sstream>

#include "qfloyd/fw_layered.hpp"
#include "qfloyd/oracle.hpp"
#include "qfloyd/qfw_sim.hpp"
#include "support.hpp"

using namespace qfloyd;
using namespace qfloyd::qsim;
namespace t = qfloyd::test;

TEST_CASE("hadamard_register produces a uniform superposition") {
    CHECK(hadamard_register(0) == std::vector<double>{1.0});
    for (unsigned n = 1; n <= 6; ++n) {
        const auto amps = hadamard_register(n);
        REQUIRE(amps.size() == (std::size_t{1} << n));
        for (double a : amps) CHECK(a == doctest::Approx(std::pow(2.0, -0.5 * n)).epsilon(1e-14));
    }
}

TEST_CASE("prepare_superposition") {
    SUBCASE("n = 0") {
        OpCounters c;
        const BranchTable t0 = prepare_superposition(0, c);
        REQUIRE(t0.branches.size() == 1);
        CHECK(t0.branches[0].i == 0);
        CHECK(t0.branches[0].j == 0);
        CHECK(t0.branches[0].amplitude * t0.branches[0].amplitude == doctest::Approx(1.0));
        CHECK(c.hadamard_gates == 0);
    }
    SUBCASE("n = 1") {
        OpCounters c;
        const BranchTable t1 = prepare_superposition(1, c);
        REQUIRE(t1.branches.size() == 4);
        for (const Branch& b : t1.branches) CHECK(b.amplitude * b.amplitude == doctest::Approx(0.25));
        CHECK(c.hadamard_gates == 2);
    }
    SUBCASE("n = 2 covers every pair once") {
        OpCounters c;
        const BranchTable t2 = prepare_superposition(2, c);
        REQUIRE(t2.branches.size() == 16);
        std::set<std::pair<NodeId, NodeId>> pairs;
        for (const Branch& b : t2.branches) pairs.insert({b.i, b.j});
        CHECK(pairs.size() == 16);
        CHECK(std::abs(t2.total_probability() - 1.0) <= 1e-12);
        CHECK(c.hadamard_gates == 4);
    }
    SUBCASE("normalization for n in 0..6") {
        for (unsigned n = 0; n <= 6; ++n) {
            OpCounters c;
            const BranchTable table = prepare_superposition(n, c);
            CHECK(table.branches.size() == (std::size_t{1} << (2 * n)));
            CHECK(std::abs(table.total_probability() - 1.0) <= 1e-12);
        }
    }
}

namespace {

LayeredDistance g3_after_k0(PredecessorMatrix& pred) {
    ApspResult init = init_distance(t::g3().padded_to(4));
    pred = init.pred;
    return fw_layered_step(LayeredDistance(init.dist), 0, LayeredVariant::Corrected, &pred);
}

}  // namespace

TEST_CASE("oracle_query") {
    PredecessorMatrix pred;
    const LayeredDistance state = g3_after_k0(pred);
    OpCounters c;
    const DistanceRegisters regs = oracle_query(state, 1, 0, 2, c);
    CHECK(regs.d0 == ExtDistance(10));
    CHECK(regs.d1 == ExtDistance(1));
    CHECK(regs.d2 == ExtDistance(2));
    CHECK(regs.d3 == ExtDistance(3));
    CHECK(c.branch_evaluations == 1);
    CHECK(c.oracle_queries == 0);

    const DistanceRegisters diag = oracle_query(state, 1, 1, 1, c);
    CHECK(diag.d1 == ExtDistance(0));
    CHECK(diag.d2 == ExtDistance(0));
    CHECK(diag.d3 == ExtDistance(0));

    const DistanceRegisters unreachable = oracle_query(state, 1, 2, 0, c);
    CHECK(unreachable.d1.is_infinite());
    CHECK(unreachable.d3.is_infinite());

    CHECK_THROWS_AS(oracle_query(state, 4, 0, 0, c), std::out_of_range);
    CHECK_THROWS_AS(oracle_query(state, 0, 4, 0, c), std::out_of_range);

    charge_superposed_query(c);
    CHECK(c.oracle_queries == kRegistersPerQuery);
}

TEST_CASE("conditional_update") {
    PredecessorMatrix pred;
    LayeredDistance state = g3_after_k0(pred);
    OpCounters c;

    const DistanceRegisters regs = oracle_query(state, 1, 0, 2, c);
    CHECK(conditional_update(state, pred, 1, 0, 2, regs, c));
    CHECK(state.write_layer(1)(0, 2) == ExtDistance(3));
    CHECK(pred(0, 2) == Pred::via(1));
    CHECK(c.comparisons == 1);
    CHECK(c.conditional_writes == 1);

    for (NodeId i = 0; i < 4; ++i) {
        const DistanceRegisters d = oracle_query(state, 1, i, i, c);
        CHECK_FALSE(conditional_update(state, pred, 1, i, i, d, c));
    }

    const Pred before = pred(0, 1);
    const DistanceRegisters tie{ExtDistance(5), ExtDistance(2), ExtDistance(3), ExtDistance(5)};
    CHECK_FALSE(conditional_update(state, pred, 1, 0, 1, tie, c));
    CHECK(pred(0, 1) == before);
    CHECK(state.write_layer(1)(0, 1) == ExtDistance(5));  // d0 carried over
    CHECK(c.conditional_writes == 1);
}

TEST_CASE("qfw_run examples") {
    SUBCASE("G3 padded to 4") {
        const QfwResult r = qfw_run(t::g3());
        CHECK(r.padded_nodes == 4);
        CHECK(r.qubit_count == 2);
        CHECK(r.dist.size() == 3);
        CHECK(r.dist(0, 2) == ExtDistance(3));
        CHECK(r.pred(0, 2) == Pred::via(1));
        CHECK(r.counters.hadamard_gates == 16);
        CHECK(r.counters.branch_evaluations == 64);
        CHECK(r.register_width_bits == 4);  // 1 + 2 + 10 = 13
    }
    SUBCASE("single node") {
        const QfwResult r = qfw_run(Graph(1, {}));
        CHECK(r.dist == DistanceMatrix(1, ExtDistance(0)));
        CHECK(r.counters.hadamard_gates == 0);
        CHECK(r.counters.branch_evaluations == 1);
        CHECK(r.counters.comparisons == 1);
        CHECK(r.counters.conditional_writes == 0);
    }
    SUBCASE("G5div padded to 8") {
        const QfwResult r = qfw_run(t::g5div());
        CHECK(r.padded_nodes == 8);
        CHECK(r.dist(0, 4) == ExtDistance(3));
        CHECK(r.counters.hadamard_gates == 48);
        CHECK(r.counters.branch_evaluations == 512);
    }
}

TEST_CASE("qfw_run distances and pred equal the corrected layered solver") {
    for (const auto& c : t::random_sweep(200, 1, 32)) {
        INFO("seed " << c.seed << " V " << c.nodes);
        const QfwResult r = qfw_run(c.graph, QfwOptions{1 + static_cast<int>(c.seed % 3), std::nullopt});
        const ApspResult ref = fw_layered_corrected(c.graph);
        CHECK(r.dist == oracle::apsp(c.graph));
        CHECK(r.dist == ref.dist);
        CHECK(r.pred == ref.pred);
        const std::uint64_t vpad = r.padded_nodes;
        CHECK(r.counters.hadamard_gates == vpad * 2 * r.qubit_count);
        CHECK(r.counters.branch_evaluations == vpad * vpad * vpad);
    }
}

TEST_CASE("branch order does not change the result") {
    for (const auto& c : t::random_sweep(20, 3, 20)) {
        const QfwResult base = qfw_run(c.graph);
        for (std::uint64_t seed : {1ull, 2ull, 99ull}) {
            QfwOptions opt;
            opt.shuffle_seed = seed;
            opt.worker_count = static_cast<int>(seed % 4) + 1;
            const QfwResult shuffled = qfw_run(c.graph, opt);
            CHECK(shuffled.dist == base.dist);
            CHECK(shuffled.pred == base.pred);
            CHECK(shuffled.counters == base.counters);
        }
    }
}

TEST_CASE("padding with isolated nodes is transparent") {
    for (const auto& c : t::random_sweep(30, 2, 30)) {
        const ApspResult unpadded = fw_layered_corrected(c.graph);
        const ApspResult padded = fw_layered_corrected(c.graph.padded_to(padded_size(c.nodes)));
        for (std::size_t i = 0; i < c.nodes; ++i)
            for (std::size_t j = 0; j < c.nodes; ++j) CHECK(padded.dist(i, j) == unpadded.dist(i, j));
    }
}

TEST_CASE("reading d0 from the write layer reproduces the as-printed recurrence") {
    QfwOptions literal;
    literal.d0_source = D0Source::WriteLayer;
    const Graph g = t::g5div().padded_to(8);
    const QfwResult r = qfw_run(g, literal);
    CHECK(r.dist == fw_layered_as_printed(g));
    CHECK(r.dist(0, 4) == ExtDistance(11));
    for (const auto& c : t::random_sweep(40, 2, 16)) {
        const Graph pow2 = c.graph.padded_to(padded_size(c.nodes));
        CHECK(qfw_run(pow2, literal).dist == fw_layered_as_printed(pow2));
    }
}

TEST_CASE("register width") {
    CHECK(register_width_bits(Graph(2, {})) == 1);
    CHECK(register_width_bits(Graph(3, {{0, 1, 255}, {1, 2, 1}})) == 9);
    CHECK_THROWS_AS(register_width_bits(Graph(3, {{0, 1, ExtDistance::kMaxFinite}, {1, 2, 1}})),
                    std::invalid_argument);
}

TEST_CASE("padded_size and qubits_for") {
    CHECK(padded_size(1) == 1);
    CHECK(padded_size(2) == 2);
    CHECK(padded_size(3) == 4);
    CHECK(padded_size(5) == 8);
    CHECK(padded_size(32) == 32);
    CHECK(qubits_for(1) == 0);
    CHECK(qubits_for(8) == 3);
    CHECK(qubits_for(32) == 5);
}

TEST_CASE("complexity_report") {
    SUBCASE("Vpad = 8") {
        const QfwResult r = qfw_run(random_graph(8, 0.5, 9, 3));
        const ComplexityReport rep = complexity_report(r.counters, 8);
        CHECK(rep.counters.hadamard_gates == 48);
        CHECK(rep.simulation_cost == 512);
        CHECK(rep.classical_relaxations == 512);
        CHECK(rep.superposed_model_cost == 8 * (6 + kModelOpsPerIteration));
    }
    SUBCASE("Vpad = 1") {
        const ComplexityReport rep = complexity_report(qfw_run(Graph(1, {})).counters, 1);
        CHECK(rep.counters.hadamard_gates == 0);
        CHECK(rep.counters.conditional_writes == 0);
        CHECK(rep.counters.branch_evaluations == 1);
        CHECK(rep.counters.comparisons == 1);
        CHECK(rep.classical_relaxations == 1);
    }
    SUBCASE("Vpad = 16") {
        const ComplexityReport rep = complexity_report(qfw_run(random_graph(16, 0.3, 9, 1)).counters, 16);
        CHECK(rep.counters.hadamard_gates == 128);
        CHECK(rep.counters.hadamard_gates < rep.classical_relaxations);
        CHECK(rep.classical_relaxations == 4096);
    }
    SUBCASE("inconsistent counters") {
        OpCounters c = qfw_run(t::g3()).counters;
        CHECK_NOTHROW(complexity_report(c, 3));
        CHECK_THROWS_AS(complexity_report(c, 5), CounterMismatch);
        c.hadamard_gates += 1;
        CHECK_THROWS_AS(complexity_report(c, 3), CounterMismatch);
        CHECK_THROWS_AS(complexity_report(OpCounters{}, 0), CounterMismatch);
    }
    SUBCASE("formats label the two cost models and keep keys unique") {
        const ComplexityReport rep = complexity_report(qfw_run(t::g5div()).counters, 5);
        const std::string text = format_text(rep);
        CHECK(text.find("superposed cost model") != std::string::npos);
        CHECK(text.find("classical simulation") != std::string::npos);
        std::istringstream kv(format_kv(rep));
        std::set<std::string> keys;
        std::string line;
        std::size_t lines = 0;
        while (std::getline(kv, line)) {
            ++lines;
            const auto eq = line.find('=');
            REQUIRE(eq != std::string::npos);
            keys.insert(line.substr(0, eq));
        }
        CHECK(keys.size() == lines);
        CHECK(keys.contains("superposed_model.hadamard_gates"));
        CHECK(keys.contains("simulation.branch_evaluations"));
        CHECK(format_kv(rep).find("classical.relaxations=125\n") != std::string::npos);
    }
}
