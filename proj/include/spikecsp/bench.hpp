// bench.hpp - paired heuristic/baseline experiments, per-solution and
//  total-time metrics, sequential-rerun comparison and record export.
#ifndef SPIKECSP_BENCH_HPP
#define SPIKECSP_BENCH_HPP

#include "spikecsp/compiler.hpp"
#include "spikecsp/csp.hpp"
#include "spikecsp/sampler.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace spikecsp {

inline constexpr const char* kHeuristic = "heuristic";
inline constexpr const char* kBaseline = "baseline";

/// Where the instances of an experiment come from.
///   planar:  `instances` random planar graphs (nodes, density, colors)
///   ksat:    `instances` satisfiable random k-SAT formulas (variables,
///            clauses, k); unsatisfiable draws are skipped via the oracle
///   unique:  `instances` mined planar colorings with one solution class
///   list:    explicit problems, each a file path or generator spec
struct ProblemSpec {
    std::string family = "planar";
    std::size_t instances = 1;
    std::uint64_t seed = 1;
    std::size_t nodes = 9;
    double density = 0.8;
    std::size_t colors = 4;
    std::size_t variables = 20;
    std::size_t clauses = 91;
    std::size_t k = 3;
    std::vector<std::string> problems;

    friend bool operator==(const ProblemSpec&, const ProblemSpec&) = default;
};

struct ExperimentConfig {
    std::string name = "experiment";
    ProblemSpec problem;
    std::size_t trials = 1;
    SamplerParams sampler;
    CompilerParams compiler;  // heuristic_enabled is set per variant
    std::vector<std::string> variants = {kHeuristic, kBaseline};
    std::uint64_t seed_base = 1;
    std::string output;  // default directory for exports
    std::size_t jobs = 1;
    bool wall_clock = false;  // false leaves wall_ms at 0 so exports are reproducible

    void validate() const;
};

struct Instance {
    std::string id;
    Csp csp;
};

/// Materializes the instances of a problem spec in a fixed order.
std::vector<Instance> build_instances(const ProblemSpec& spec);

/// Trial seed shared by both variants of one (instance, trial) pair.
std::uint64_t trial_seed(std::uint64_t seed_base, std::size_t instance, std::size_t trial);

/// Runs every (instance, variant, trial) and returns the records ordered by
/// instance, then variant as listed in the config, then trial. Networks are
/// compiled once per (instance, variant); `jobs` threads share the work
/// without affecting the result.
std::vector<RunRecord> run_experiment(const ExperimentConfig& cfg);
std::vector<RunRecord> run_experiment(const ExperimentConfig& cfg,
                                      const std::vector<Instance>& instances);

struct Stats {
    std::size_t count = 0;
    double mean = 0.0;
    double median = 0.0;
    double min = 0.0;
    double max = 0.0;
    double stddev = 0.0;
};

Stats summarize(std::vector<double> values);

struct Histogram {
    std::vector<double> edges;  // bin i is [edges[i], edges[i+1])
    std::vector<std::size_t> counts;
};

struct InstanceMetrics {
    std::string instance_id;
    double time_per_solution_baseline = 0.0;
    double time_per_solution_heuristic = 0.0;
    double total_time_baseline = 0.0;
    double total_time_heuristic = 0.0;
    double speedup = 0.0;
    double slowdown = 0.0;
};

struct Metrics {
    Stats time_per_solution_heuristic;
    Stats time_per_solution_baseline;
    Stats total_time_heuristic;
    Stats total_time_baseline;
    Stats speedup;   // over instances
    Stats slowdown;  // over instances
    Histogram speedup_histogram;
    std::size_t unsolved_heuristic = 0;
    std::size_t unsolved_baseline = 0;
    std::size_t unpaired_instances = 0;  // a variant never solved it
    std::vector<InstanceMetrics> per_instance;
    // Diversity of heuristic runs.
    std::size_t heuristic_runs = 0;
    std::size_t heuristic_duplicates = 0;
    double multi_class_fraction = 0.0;  // solved runs spanning >= 2 classes
};

/// time_per_solution(record) = sweeps at last discovery / distinct solutions.
/// Per instance: speedup = baseline mean time per solution / heuristic mean,
/// slowdown = heuristic mean time to first solution / baseline mean. Unsolved
/// records are counted but never averaged. Throws std::invalid_argument when
/// no instance has solved records of both variants.
Metrics compute_metrics(const std::vector<RunRecord>& records);

struct SequentialResult {
    bool reached = false;
    std::uint64_t sweeps = 0;    // summed cost of the reruns used
    std::size_t runs_used = 0;
    std::size_t repeats = 0;     // reruns that found nothing new
    std::size_t distinct = 0;
};

/// Replays baseline records in the given order as sequential reruns until
/// `target` distinct solutions are collected. A rerun costs sweeps_first
/// when solved and sweeps_run otherwise. For coloring records (non-empty
/// canonical forms) a solution counts only if its color-permutation class is
/// new. Throws std::invalid_argument if fewer than `target` records exist.
SequentialResult sequential_equivalent(const std::vector<RunRecord>& baseline,
                                       std::size_t target);

inline constexpr const char* kCsvHeader =
    "instance_id,variant,seed,solved,sweeps_first,n_solutions,n_classes,duplicates,wall_ms,"
    "truncated";

void write_csv(std::ostream& out, const std::vector<RunRecord>& records);
void write_json(std::ostream& out, const std::vector<RunRecord>& records);
std::vector<RunRecord> read_json(std::istream& in);

/// Writes records to `path` as csv or json; throws std::runtime_error on I/O
/// failure.
void export_records(const std::vector<RunRecord>& records, const std::string& format,
                    const std::string& path);

/// Human-readable summary of the metrics.
void write_summary(std::ostream& out, const Metrics& m);
/// The same figures as JSON.
void write_metrics_json(std::ostream& out, const Metrics& m);

// Declarative config files mirror ExperimentConfig as JSON; omitted fields
// keep their defaults.
ExperimentConfig config_from_json(const std::string& text);
std::string config_to_json(const ExperimentConfig& cfg);
/// FNV-1a of the canonical JSON form, ignoring jobs and output.
std::uint64_t config_hash(const ExperimentConfig& cfg);

/// Built-in suites: planar9, planar25, planar36, planar49, sat20, sat50,
/// sat75, unique3, maps, small.
std::optional<ExperimentConfig> builtin_suite(const std::string& name);
std::vector<std::string> builtin_suite_names();

}  // namespace spikecsp

#endif  // SPIKECSP_BENCH_HPP
