#include "spikecsp/compiler.hpp"
#include "spikecsp/problems.hpp"
#include "spikecsp/random.hpp"
#include "spikecsp/readout.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace spikecsp;
using testing_support::naive_satisfied;

namespace {

Assignment colors(std::initializer_list<ValueIndex> v) {
    return Assignment(std::vector<ValueIndex>(v));
}

// Path B - A - C with three colors, as in the multi-valued map example.
Csp path3() {
    return coloring_csp(3, {{0, 1}, {0, 2}}, 3, {"A", "B", "C"});
}

std::vector<std::vector<ValueIndex>> brute_force(const MultiAssignment& m, const Csp& csp) {
    std::vector<std::vector<ValueIndex>> out;
    const std::size_t n = m.values.size();
    std::vector<std::size_t> idx(n, 0);
    while (true) {
        std::vector<ValueIndex> a(n);
        for (std::size_t v = 0; v < n; ++v) a[v] = m.values[v][idx[v]];
        if (naive_satisfied(csp, a)) out.push_back(a);
        // Last variable varies fastest, so the output is lexicographic.
        std::size_t v = n;
        while (v > 0 && ++idx[v - 1] == m.values[v - 1].size()) idx[--v] = 0;
        if (v == 0) break;
    }
    return out;
}

}  // namespace

TEST_SUITE("readout") {

TEST_CASE("decode of the silent state gives empty sets") {
    const Csp csp = path3();
    const Network net = compile(csp, CompilerParams{});
    const auto m = decode(net, State(net.size(), 0));
    REQUIRE(m.values.size() == 3);
    for (const auto& s : m.values) CHECK(s.empty());
    CHECK_FALSE(m.expandable());
    CHECK(m.product_size(100) == 0);
    CHECK_THROWS_AS(decode(net, State(net.size() + 1, 0)), std::invalid_argument);
}

TEST_CASE("one-hot state decodes to singleton sets") {
    const Csp csp = parse_dimacs_string("p cnf 4 2\n1 2 3 0\n2 -3 -4 0\n");
    const Network net = compile(csp, CompilerParams{});
    State x(net.size(), 0);
    const std::vector<ValueIndex> values = {0, 1, 1, 0};
    for (VarIndex v = 0; v < 4; ++v) x[net.neuron_of({v, values[v]})] = 1;
    // Auxiliary activity is ignored.
    for (NeuronId i = net.num_principal(); i < net.size(); ++i) x[i] = 1;
    const auto m = decode(net, x);
    for (VarIndex v = 0; v < 4; ++v) CHECK(m.values[v] == std::vector<ValueIndex>{values[v]});
    const auto e = expand_solutions(m, csp);
    REQUIRE(e.solutions.size() == 1);
    CHECK(e.solutions[0] == Assignment(values));
}

TEST_CASE("multi-valued variable between two same-colored neighbors yields 2 solutions") {
    const Csp csp = path3();
    const Network net = compile(csp, CompilerParams{});
    State x(net.size(), 0);
    x[net.neuron_of({0, 0})] = 1;  // A: red
    x[net.neuron_of({0, 1})] = 1;  // A: green
    x[net.neuron_of({1, 2})] = 1;  // B: blue
    x[net.neuron_of({2, 2})] = 1;  // C: blue
    const auto m = decode(net, x);
    CHECK(m.values[0].size() == 2);
    CHECK(m.product_size(100) == 2);
    const auto e = expand_solutions(m, csp);
    CHECK(e.expandable);
    CHECK_FALSE(e.truncated);
    CHECK(e.solutions == std::vector<Assignment>{colors({0, 2, 2}), colors({1, 2, 2})});
}

TEST_CASE("invalid combinations are filtered from the product") {
    const Csp csp = path3();
    MultiAssignment m{{{0, 1, 2}, {0, 1}, {2}}};
    // 6 combinations; A=0,B=0 and A=1,B=1 clash on the first edge and A=2 clashes with C.
    const auto e = expand_solutions(m, csp);
    CHECK(e.solutions.size() == 6 - 4);
    CHECK(e.solutions == std::vector<Assignment>{colors({0, 1, 2}), colors({1, 0, 2})});
}

TEST_CASE("expansion agrees with a brute-force product") {
    Rng rng(12);
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const Csp csp = gen_planar_coloring(7, 0.7, 3, seed);
        MultiAssignment m;
        for (VarIndex v = 0; v < 7; ++v) {
            std::vector<ValueIndex> set;
            for (ValueIndex c = 0; c < 3; ++c) {
                if (rng.below(2)) set.push_back(c);
            }
            if (set.empty()) set.push_back(rng.below(3));
            m.values.push_back(set);
        }
        const auto expected = brute_force(m, csp);
        const auto e = expand_solutions(m, csp, 1U << 20);
        REQUIRE(e.solutions.size() == expected.size());
        for (std::size_t i = 0; i < expected.size(); ++i) {
            CHECK(e.solutions[i] == Assignment(expected[i]));
        }
    }
}

TEST_CASE("expansion of SAT multi-assignments agrees with brute force") {
    Rng rng(5);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Csp csp = gen_random_ksat(8, 20, 3, seed);
        MultiAssignment m;
        for (VarIndex v = 0; v < 8; ++v) {
            const auto r = rng.below(3);
            m.values.push_back(r == 2 ? std::vector<ValueIndex>{0, 1}
                                      : std::vector<ValueIndex>{r});
        }
        const auto expected = brute_force(m, csp);
        const auto e = expand_solutions(m, csp);
        REQUIRE(e.solutions.size() == expected.size());
        for (const auto& s : e.solutions) CHECK(check_assignment(csp, s).satisfied());
    }
}

TEST_CASE("the cap truncates to a lexicographic prefix") {
    const Csp csp = complete_graph_coloring(3, 3);
    const MultiAssignment m{{{0, 1, 2}, {0, 1, 2}, {0, 1, 2}}};
    CHECK(m.product_size(10) == 10);
    CHECK(m.product_size(100) == 27);
    const auto full = expand_solutions(m, csp, 27);
    CHECK(full.solutions.size() == 6);
    CHECK_FALSE(full.truncated);
    // The first 10 combinations contain (0,1,2) and (0,2,1).
    const auto cut = expand_solutions(m, csp, 10);
    CHECK(cut.truncated);
    CHECK(cut.solutions == std::vector<Assignment>{colors({0, 1, 2}), colors({0, 2, 1})});
}

TEST_CASE("an empty variable set is not expandable") {
    const Csp csp = path3();
    const auto e = expand_solutions(MultiAssignment{{{0}, {}, {1}}}, csp);
    CHECK_FALSE(e.expandable);
    CHECK(e.solutions.empty());
    CHECK_THROWS_AS(expand_solutions(MultiAssignment{{{0}}}, csp), std::invalid_argument);
}

TEST_CASE("canonical coloring examples") {
    const Csp csp4 = coloring_csp(4, {}, 4);
    // r=0, g=1, b=2
    CHECK(canonical_coloring(csp4, colors({0, 1, 0, 2})) == std::vector<std::size_t>{1, 2, 1, 3});
    CHECK(canonical_coloring(csp4, colors({1, 2, 1, 0})) == std::vector<std::size_t>{1, 2, 1, 3});
    const Csp csp3 = coloring_csp(3, {}, 3);
    CHECK(canonical_coloring(csp3, colors({0, 1, 2})) == canonical_coloring(csp3, colors({0, 2, 1})));
    CHECK(canonical_coloring(csp3, colors({0, 0, 1})) == std::vector<std::size_t>{1, 1, 2});
    CHECK(canonical_coloring(csp3, colors({0, 1, 1})) == std::vector<std::size_t>{1, 2, 2});
}

TEST_CASE("canonical coloring is permutation invariant and idempotent") {
    const Csp csp = coloring_csp(6, {}, 4);
    Rng rng(8);
    for (int k = 0; k < 200; ++k) {
        std::vector<ValueIndex> a(6);
        for (auto& v : a) v = rng.below(4);
        std::vector<ValueIndex> perm = {0, 1, 2, 3};
        rng.shuffle(perm);
        std::vector<ValueIndex> b(6);
        for (std::size_t i = 0; i < 6; ++i) b[i] = perm[a[i]];
        const auto ca = canonical_coloring(csp, Assignment(a));
        CHECK(ca == canonical_coloring(csp, Assignment(b)));
        std::vector<ValueIndex> again;
        for (auto c : ca) again.push_back(c - 1);
        CHECK(canonical_coloring(csp, Assignment(again)) == ca);
    }
}

TEST_CASE("canonical coloring errors") {
    const Csp sat = parse_dimacs_string("p cnf 1 1\n1 0\n");
    CHECK_THROWS_AS(canonical_coloring(sat, colors({0})), std::invalid_argument);
    const Csp csp = coloring_csp(2, {}, 2);
    CHECK_THROWS_AS(canonical_coloring(csp, Assignment(2)), std::invalid_argument);
}

TEST_CASE("diversity report examples") {
    const Csp k3 = complete_graph_coloring(3, 3);
    CHECK(diversity_report({colors({0, 1, 2})}, k3) == DiversityReport{1, 1, 0});
    CHECK(diversity_report({colors({0, 1, 2}), colors({1, 2, 0})}, k3) ==
          DiversityReport{2, 1, 0});
    std::vector<Assignment> all;
    for (const auto& s : testing_support::enumerate_all(k3)) all.emplace_back(s);
    CHECK(diversity_report(all, k3) == DiversityReport{6, 1, 0});
    all.push_back(all.front());
    CHECK(diversity_report(all, k3) == DiversityReport{7, 1, 1});

    const Csp sat = parse_dimacs_string("p cnf 2 1\n1 2 0\n");
    CHECK(diversity_report({colors({0, 0}), colors({0, 1}), colors({0, 0})}, sat) ==
          DiversityReport{3, 2, 1});
}

}  // TEST_SUITE
