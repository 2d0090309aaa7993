// sampler.hpp - discrete-time neural sampling.
//
// A neuron that spikes stays in state 1 for a window of `tau` ticks and then
// returns to 0; it cannot re-fire while active. Updates are asynchronous: each
// step picks one neuron uniformly at random and, if it is inactive, lets it
// fire with probability min(1, exp(u) / tau) where u is its membrane
// potential. One sweep is N steps (N = number of neurons) and ages every
// neuron by one tick, so an active neuron stays up for exactly tau * N steps.
#ifndef SPIKECSP_SAMPLER_HPP
#define SPIKECSP_SAMPLER_HPP

#include "spikecsp/compiler.hpp"
#include "spikecsp/csp.hpp"
#include "spikecsp/random.hpp"

#include <cstdint>
#include <deque>
#include <functional>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace spikecsp {

struct SamplerParams {
    int tau = 20;
    std::uint64_t max_sweeps = 1'000'000;
    std::uint64_t seed = 1;
    bool record_trace = false;
    std::uint64_t expansion_cap = 4096;
    /// End the run after the first sweep that yields any solution.
    bool stop_at_first_event = true;
    /// End the run once this many distinct solutions are known (0 = off).
    std::size_t target_solutions = 0;

    void validate() const;
};

/// u_i = b_i + sum_j w_ij x_j.
double membrane_potential(const Network& net, std::span<const std::uint8_t> x, NeuronId i);

/// min(1, exp(u) / tau).
double fire_probability(double u, int tau);

/// Chain state plus cached potentials and energy. Active neurons carry the
/// step index at which they lapse; because every spike lasts the same number
/// of steps, lapses happen in firing order and a FIFO suffices.
class Sampler {
public:
    Sampler(const Network& net, int tau, std::uint64_t seed);

    /// One asynchronous update.
    void step();
    /// N updates.
    void sweep();

    const State& state() const { return x_; }
    std::uint64_t steps() const { return step_; }
    std::uint64_t sweeps() const { return step_ / n_; }
    int tau() const { return tau_; }
    double potential(NeuronId i) const { return u_[i]; }
    double current_energy() const { return energy_; }
    std::size_t active_count() const { return active_.size(); }
    /// Remaining window in ticks (0 when inactive).
    double remaining_ticks(NeuronId i) const;

private:
    void set_active(NeuronId i, bool on);

    const Network& net_;
    int tau_;
    std::uint64_t n_;
    std::uint64_t lifetime_;  // tau * N steps
    Rng rng_;
    State x_;
    std::vector<double> u_;
    std::vector<std::uint64_t> lapse_at_;
    std::deque<NeuronId> active_;
    std::uint64_t step_ = 0;
    double energy_ = 0.0;
};

struct FoundSolution {
    Assignment assignment;
    std::uint64_t sweep = 0;
    std::vector<std::size_t> canonical;  // coloring problems only

    friend bool operator==(const FoundSolution&, const FoundSolution&) = default;
};

struct TraceRow {
    std::uint64_t sweep = 0;
    double energy = 0.0;
    std::size_t n_active = 0;
    std::size_t solutions_found = 0;

    friend bool operator==(const TraceRow&, const TraceRow&) = default;
};

/// Outcome of one run. Times are sweep counts; `wall_ms` is informational.
struct RunRecord {
    std::string instance_id;
    std::string variant;
    std::uint64_t seed = 0;
    bool solved = false;
    std::uint64_t sweeps_first = 0;  // meaningful only when solved
    std::uint64_t sweeps_run = 0;
    std::vector<FoundSolution> solutions;  // distinct, in discovery order
    std::size_t n_classes = 0;
    std::size_t duplicates = 0;  // rediscoveries of an already known solution
    std::size_t solution_events = 0;
    bool truncated = false;
    double final_energy = 0.0;
    double wall_ms = 0.0;
    std::vector<TraceRow> trace;

    std::uint64_t sweeps_last() const { return solutions.empty() ? 0 : solutions.back().sweep; }

    friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

/// Return false to end the run.
using SolutionCallback = std::function<bool(const FoundSolution&)>;

/// Samples until max_sweeps or a stop condition. After every sweep the
/// principal state is decoded and expanded; each previously unseen solution
/// is recorded with its discovery sweep and passed to `on_solution`.
RunRecord run(const Network& net, const Csp& csp, const SamplerParams& params,
              const SolutionCallback& on_solution = {});

/// `sweep,energy,n_active,solutions_found` with a header row.
void write_trace_csv(std::ostream& out, const std::vector<TraceRow>& trace);

/// JSON list of {assignment: {variable: value label}, discovery_sweep,
/// canonical_class}.
void write_solutions_json(std::ostream& out, const Csp& csp,
                          const std::vector<FoundSolution>& solutions);
/// Inverse of write_solutions_json; discovery_sweep and canonical_class are
/// optional. Throws std::invalid_argument on malformed JSON, unknown
/// variables or values, or a variable missing from an assignment.
std::vector<FoundSolution> read_solutions_json(std::istream& in, const Csp& csp);

}  // namespace spikecsp

#endif  // SPIKECSP_SAMPLER_HPP
