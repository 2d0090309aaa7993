#include "spikecsp/compiler.hpp"
#include "spikecsp/oracle.hpp"
#include "spikecsp/problems.hpp"
#include "spikecsp/readout.hpp"
#include "spikecsp/sampler.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <numeric>

using namespace spikecsp;
using testing_support::enumerate_all;
using testing_support::values_of;

namespace {

std::set<std::vector<ValueIndex>> as_set(const ExhaustiveResult& r) {
    std::set<std::vector<ValueIndex>> out;
    for (const auto& a : r.solutions) out.insert(values_of(a));
    return out;
}

Network bias_only(const std::vector<double>& b) {
    std::vector<MotifInstance> motifs;
    for (std::size_t i = 0; i < b.size(); ++i) {
        motifs.push_back({MotifKind::bias, {i}, {}, b[i], i, {}, {{i, b[i]}}});
    }
    return Network::from_motifs(std::vector<std::size_t>(b.size(), 1), 0, motifs);
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("K3 with 3 colors has 6 solutions") {
    const auto r = solve_exhaustive(complete_graph_coloring(3, 3));
    CHECK(r.complete);
    CHECK(r.solutions.size() == 6);
}

TEST_CASE("two-clause CNF has the single solution x1=F, x2=T") {
    const auto r = solve_exhaustive(parse_dimacs_string("p cnf 2 2\n1 2 0\n-1 0\n"));
    CHECK(r.complete);
    REQUIRE(r.solutions.size() == 1);
    CHECK(values_of(r.solutions[0]) == std::vector<ValueIndex>{kFalse, kTrue});
}

TEST_CASE("triangle 2-coloring is unsatisfiable") {
    const auto r = solve_exhaustive(complete_graph_coloring(3, 2));
    CHECK(r.complete);
    CHECK(r.solutions.empty());
}

TEST_CASE("solution counts") {
    CHECK(count_solutions(ising_to_csp(IsingTopology::ring(10), Coupling::antiferro)) == 2);
    CHECK(count_solutions(complete_graph_coloring(4, 4)) == 24);
    CHECK(count_solutions(complete_graph_coloring(5, 4)) == 0);
    CHECK(count_coloring_classes(complete_graph_coloring(4, 4)) == 1);
}

TEST_CASE("a limit stops the search early") {
    const auto r = solve_exhaustive(complete_graph_coloring(4, 4), 5);
    CHECK(r.solutions.size() == 5);
    CHECK_FALSE(r.complete);
    const auto all = solve_exhaustive(complete_graph_coloring(4, 4), 24);
    CHECK(all.solutions.size() == 24);
}

TEST_CASE("exhaustive search agrees with naive enumeration") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        const Csp sat = gen_random_ksat(12, 45, 3, seed);
        const auto r = solve_exhaustive(sat);
        CHECK(r.complete);
        CHECK(as_set(r) == enumerate_all(sat));
        CHECK(r.solutions.size() == as_set(r).size());

        const Csp col = gen_planar_coloring(8, 0.9, 3, seed);
        CHECK(as_set(solve_exhaustive(col)) == enumerate_all(col));

        const Csp mixed = gen_random_ksat(10, 30, 2, seed);
        CHECK(as_set(solve_exhaustive(mixed)) == enumerate_all(mixed));
    }
}

TEST_CASE("coloring classes match a canonical recount") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Csp csp = gen_planar_coloring(8, 0.8, 3, seed);
        std::set<std::vector<std::size_t>> classes;
        for (const auto& s : enumerate_all(csp)) classes.insert(canonical_coloring(csp, Assignment(s)));
        CHECK(count_coloring_classes(csp) == classes.size());
    }
}

TEST_CASE("mined instances have exactly one coloring class") {
    const auto r = mine_unique_solution_instances(9, 3, 4, 5);
    CHECK(r.fulfilled);
    REQUIRE(r.instances.size() == 5);
    CHECK(r.attempts >= 5);
    for (std::size_t i = 0; i < r.instances.size(); ++i) {
        const Csp& csp = r.instances[i];
        CHECK(count_solutions(csp) == 6);
        std::set<std::vector<std::size_t>> classes;
        for (const auto& s : enumerate_all(csp)) classes.insert(canonical_coloring(csp, Assignment(s)));
        CHECK(classes.size() == 1);
        CHECK(csp == gen_planar_coloring(9, 0.8, 3, r.instance_seeds[i]));
    }
}

TEST_CASE("the sampler finds the single class of a mined instance") {
    const auto r = mine_unique_solution_instances(9, 3, 11, 1);
    REQUIRE(r.fulfilled);
    const Csp& csp = r.instances[0];
    const auto truth = enumerate_all(csp);
    CompilerParams cp;
    cp.heuristic_enabled = false;
    SamplerParams sp;
    sp.max_sweeps = 100000;
    const RunRecord rec = run(compile(csp, cp), csp, sp);
    REQUIRE(rec.solved);
    CHECK(rec.n_classes == 1);
    CHECK(truth.count(values_of(rec.solutions[0].assignment)) == 1);
}

TEST_CASE("4-color unique instances are rarer than 3-color ones") {
    const auto three = mine_unique_solution_instances(9, 3, 1, 5, 0.8, 2000);
    const auto four = mine_unique_solution_instances(9, 4, 1, 5, 0.8, 2000);
    REQUIRE(three.fulfilled);
    CHECK(four.attempts > three.attempts);
    if (!four.fulfilled) CHECK(four.attempts == 2000);
}

TEST_CASE("state index round trip") {
    for (std::uint64_t s = 0; s < 64; ++s) CHECK(state_index(state_from_index(s, 6)) == s);
    CHECK(state_from_index(5, 3) == std::vector<std::uint8_t>{1, 0, 1});
}

TEST_CASE("exact Boltzmann examples") {
    const auto flat = exact_boltzmann(bias_only({0.0, 0.0}));
    REQUIRE(flat.size() == 4);
    for (double p : flat) CHECK(p == doctest::Approx(0.25).epsilon(1e-15));
    const auto single = exact_boltzmann(bias_only({0.0}));
    CHECK(single == std::vector<double>{0.5, 0.5});

    MotifInstance wta{MotifKind::variable_wta, {0, 1, 2}, {}, 1.0, 0,
                      {{0, 1, -1.0}, {0, 2, -1.0}, {1, 2, -1.0}}, {}};
    const auto p = exact_boltzmann(Network::from_motifs({3}, 0, {wta}));
    for (std::uint64_t one : {1U, 2U, 4U}) CHECK(p[one] > p[7]);
}

TEST_CASE("exact Boltzmann is normalized and positive") {
    const Network net = compile(parse_dimacs_string("p cnf 4 2\n1 2 3 0\n2 -3 -4 0\n"),
                                CompilerParams{});
    const auto p = exact_boltzmann(net);
    REQUIRE(p.size() == 4096);
    double sum = 0.0;
    for (double v : p) {
        CHECK(v > 0.0);
        sum += v;
    }
    CHECK(std::abs(sum - 1.0) <= 1e-12);
    // Ratios follow the energy difference.
    const auto a = state_from_index(17, 12), b = state_from_index(300, 12);
    CHECK(std::log(p[17] / p[300]) ==
          doctest::Approx(energy(net, b) - energy(net, a)).epsilon(1e-9));
}

TEST_CASE("exact Boltzmann refuses large networks") {
    CHECK_THROWS_AS(exact_boltzmann(bias_only(std::vector<double>(21, 0.0))), std::length_error);
}

TEST_CASE("auxiliary-minimized energy takes the best completion") {
    const Network net = compile(parse_dimacs_string("p cnf 1 1\n1 0\n"), CompilerParams{});
    REQUIRE(net.num_auxiliary() == 2);
    const std::vector<std::uint8_t> p = {1, 0};
    double best = 1e300;
    for (std::uint64_t a = 0; a < 4; ++a) {
        best = std::min(best, energy(net, std::vector<std::uint8_t>{1, 0, std::uint8_t(a & 1U),
                                                                    std::uint8_t(a >> 1)}));
    }
    CHECK(auxiliary_minimized_energy(net, p) == best);
}

TEST_CASE("total variation examples") {
    const std::vector<double> p = {0.6, 0.4}, q = {0.5, 0.5};
    CHECK(tv_distance(p, p) == 0.0);
    CHECK(tv_distance(std::vector<double>{1.0, 0.0}, std::vector<double>{0.0, 1.0}) == 1.0);
    CHECK(tv_distance(p, q) == doctest::Approx(0.1).epsilon(1e-12));
    CHECK_THROWS_AS(tv_distance(p, std::vector<double>{1.0}), std::invalid_argument);
}

}  // TEST_SUITE
