// oracle.hpp - ground truth: exhaustive CSP enumeration, unique-solution
//  instance mining and exact Boltzmann distributions of small networks.
#ifndef SPIKECSP_ORACLE_HPP
#define SPIKECSP_ORACLE_HPP

#include "spikecsp/compiler.hpp"
#include "spikecsp/csp.hpp"

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace spikecsp {

struct ExhaustiveResult {
    std::vector<Assignment> solutions;
    bool complete = false;  // the whole space was searched
};

/// Depth-first backtracking, variables by descending constraint-graph degree
/// (ties by index), values in domain order. Mutex pairs and clauses are
/// forward-checked against the unassigned variables.
ExhaustiveResult solve_exhaustive(const Csp& csp,
                                  std::uint64_t limit = std::numeric_limits<std::uint64_t>::max());

std::uint64_t count_solutions(const Csp& csp);

/// Number of color-permutation classes among all solutions, stopping early
/// once more than `stop_above` classes are seen.
std::size_t count_coloring_classes(const Csp& csp,
                                   std::size_t stop_above = std::numeric_limits<std::size_t>::max());

struct MiningResult {
    std::vector<Csp> instances;
    std::vector<std::uint64_t> instance_seeds;
    std::size_t attempts = 0;
    bool fulfilled = false;  // n_wanted instances were found
};

/// Random planar k-colorings whose solutions form exactly one
/// color-permutation class.
MiningResult mine_unique_solution_instances(std::size_t n_nodes, std::size_t k_colors,
                                            std::uint64_t seed, std::size_t n_wanted,
                                            double density = 0.8,
                                            std::size_t max_attempts = 100000);

/// Bit i of a state index is neuron i.
std::vector<std::uint8_t> state_from_index(std::uint64_t index, std::size_t n);
std::uint64_t state_index(std::span<const std::uint8_t> x);

/// p(x) = exp(-E(x)) / Z over all 2^N states, N <= 20 (std::length_error
/// otherwise).
std::vector<double> exact_boltzmann(const Network& net);

/// min over auxiliary neurons of E(principal, aux), with at most 20
/// auxiliaries.
double auxiliary_minimized_energy(const Network& net, std::span<const std::uint8_t> principal);

/// 1/2 sum |p - q|. Throws std::invalid_argument on a size mismatch.
double tv_distance(std::span<const double> p, std::span<const double> q);

}  // namespace spikecsp

#endif  // SPIKECSP_ORACLE_HPP
