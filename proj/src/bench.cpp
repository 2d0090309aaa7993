#include "spikecsp/bench.hpp"

#include "spikecsp/oracle.hpp"
#include "spikecsp/problems.hpp"
#include "spikecsp/random.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace spikecsp {

using json = nlohmann::ordered_json;

namespace {

const std::vector<std::string> kFamilies = {"planar", "ksat", "unique", "list"};

std::string padded(std::size_t i, int width = 3) {
    std::ostringstream ss;
    ss << std::setw(width) << std::setfill('0') << i;
    return ss.str();
}

std::string problem_id(const std::string& spec) {
    const std::filesystem::path p(spec);
    if (p.has_extension() && (p.extension() == ".cnf" || p.extension() == ".col" ||
                              p.extension() == ".sdk")) {
        return p.stem().string();
    }
    return spec;
}

}  // namespace

void ExperimentConfig::validate() const {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (jobs < 1) throw std::invalid_argument("jobs must be >= 1");
    if (variants.empty()) throw std::invalid_argument("at least one variant is required");
    std::set<std::string> seen;
    for (const auto& v : variants) {
        if (v != kHeuristic && v != kBaseline) {
            throw std::invalid_argument("unknown variant '" + v + "' (heuristic or baseline)");
        }
        if (!seen.insert(v).second) throw std::invalid_argument("duplicate variant '" + v + "'");
    }
    if (std::find(kFamilies.begin(), kFamilies.end(), problem.family) == kFamilies.end()) {
        throw std::invalid_argument("unknown problem family '" + problem.family + "'");
    }
    if (problem.family == "list") {
        if (problem.problems.empty()) throw std::invalid_argument("problem list is empty");
    } else if (problem.instances < 1) {
        throw std::invalid_argument("instances must be >= 1");
    }
    sampler.validate();
    compiler.validate();
}

std::vector<Instance> build_instances(const ProblemSpec& spec) {
    std::vector<Instance> out;
    if (spec.family == "planar") {
        for (std::size_t i = 0; i < spec.instances; ++i) {
            out.push_back({"planar" + std::to_string(spec.nodes) + "-" + padded(i),
                           gen_planar_coloring(spec.nodes, spec.density, spec.colors,
                                               derive_seed(spec.seed, i))});
        }
    } else if (spec.family == "ksat") {
        const std::string prefix = "rand" + std::to_string(spec.k) + "sat-" +
                                   std::to_string(spec.variables) + "-" +
                                   std::to_string(spec.clauses) + "-";
        const std::size_t max_draws = 100 * spec.instances + 100;
        for (std::size_t draw = 0; out.size() < spec.instances; ++draw) {
            if (draw == max_draws) {
                throw std::runtime_error("too few satisfiable formulas among " +
                                         std::to_string(max_draws) + " draws");
            }
            auto csp = gen_random_ksat(spec.variables, spec.clauses, spec.k,
                                       derive_seed(spec.seed, draw));
            if (solve_exhaustive(csp, 1).solutions.empty()) continue;
            out.push_back({prefix + padded(out.size()), std::move(csp)});
        }
    } else if (spec.family == "unique") {
        auto mined = mine_unique_solution_instances(spec.nodes, spec.colors, spec.seed,
                                                    spec.instances, spec.density);
        if (!mined.fulfilled) {
            throw std::runtime_error("mined only " + std::to_string(mined.instances.size()) +
                                     " unique-solution instances in " +
                                     std::to_string(mined.attempts) + " attempts");
        }
        for (std::size_t i = 0; i < mined.instances.size(); ++i) {
            out.push_back({"unique" + std::to_string(spec.colors) + "-" +
                               std::to_string(spec.nodes) + "-" + padded(i),
                           std::move(mined.instances[i])});
        }
    } else if (spec.family == "list") {
        for (const auto& p : spec.problems) out.push_back({problem_id(p), load_problem(p)});
    } else {
        throw std::invalid_argument("unknown problem family '" + spec.family + "'");
    }
    return out;
}

std::uint64_t trial_seed(std::uint64_t seed_base, std::size_t instance, std::size_t trial) {
    return derive_seed(seed_base, instance, trial);
}

std::vector<RunRecord> run_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    return run_experiment(cfg, build_instances(cfg.problem));
}

std::vector<RunRecord> run_experiment(const ExperimentConfig& cfg,
                                      const std::vector<Instance>& instances) {
    cfg.validate();
    const std::size_t n_var = cfg.variants.size();
    std::vector<Network> networks;
    networks.reserve(instances.size() * n_var);
    for (const auto& inst : instances) {
        for (const auto& variant : cfg.variants) {
            CompilerParams cp = cfg.compiler;
            cp.heuristic_enabled = variant == kHeuristic;
            networks.push_back(compile(inst.csp, cp));
        }
    }

    const std::size_t total = instances.size() * n_var * cfg.trials;
    std::vector<RunRecord> records(total);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        for (std::size_t task = next++; task < total; task = next++) {
            const std::size_t trial = task % cfg.trials;
            const std::size_t variant = (task / cfg.trials) % n_var;
            const std::size_t instance = task / (cfg.trials * n_var);
            try {
                SamplerParams sp = cfg.sampler;
                sp.seed = trial_seed(cfg.seed_base, instance, trial);
                RunRecord rec = run(networks[instance * n_var + variant],
                                    instances[instance].csp, sp);
                rec.instance_id = instances[instance].id;
                rec.variant = cfg.variants[variant];
                if (!cfg.wall_clock) rec.wall_ms = 0.0;
                records[task] = std::move(rec);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = total;
            }
        }
    };

    const std::size_t n_threads = std::min(cfg.jobs, std::max<std::size_t>(total, 1));
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);
    return records;
}

Stats summarize(std::vector<double> values) {
    Stats s;
    s.count = values.size();
    if (values.empty()) return s;
    std::sort(values.begin(), values.end());
    s.min = values.front();
    s.max = values.back();
    const std::size_t n = values.size();
    s.median = n % 2 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
    s.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(n);
    if (n > 1) {
        double ss = 0.0;
        for (double v : values) ss += (v - s.mean) * (v - s.mean);
        s.stddev = std::sqrt(ss / static_cast<double>(n - 1));
    }
    return s;
}

namespace {

double time_per_solution(const RunRecord& r) {
    return static_cast<double>(r.sweeps_last()) / static_cast<double>(r.solutions.size());
}

double mean(const std::vector<double>& v) {
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

Histogram speedup_histogram(const std::vector<double>& speedups) {
    Histogram h;
    h.edges = {0.0, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0, 50.0, 100.0, 200.0, 500.0, 1000.0,
               std::numeric_limits<double>::infinity()};
    h.counts.assign(h.edges.size() - 1, 0);
    for (double s : speedups) {
        const auto it = std::upper_bound(h.edges.begin(), h.edges.end(), s);
        const auto bin = static_cast<std::size_t>(it - h.edges.begin()) - 1;
        ++h.counts[std::min(bin, h.counts.size() - 1)];
    }
    return h;
}

}  // namespace

Metrics compute_metrics(const std::vector<RunRecord>& records) {
    struct Group {
        std::vector<double> tps[2];
        std::vector<double> first[2];
    };
    std::vector<std::string> order;
    std::map<std::string, Group> groups;
    Metrics m;
    std::vector<double> tps_all[2], first_all[2];
    std::size_t heuristic_solved = 0, multi_class = 0;

    for (const auto& r : records) {
        int v = 0;
        if (r.variant == kHeuristic) {
            v = 1;
        } else if (r.variant != kBaseline) {
            throw std::invalid_argument("unknown variant '" + r.variant + "' in records");
        }
        if (!groups.count(r.instance_id)) order.push_back(r.instance_id);
        auto& g = groups[r.instance_id];
        if (v == 1) {
            ++m.heuristic_runs;
            m.heuristic_duplicates += r.duplicates;
        }
        if (!r.solved || r.solutions.empty()) {
            ++(v == 1 ? m.unsolved_heuristic : m.unsolved_baseline);
            continue;
        }
        if (v == 1) {
            ++heuristic_solved;
            if (r.n_classes >= 2) ++multi_class;
        }
        g.tps[v].push_back(time_per_solution(r));
        g.first[v].push_back(static_cast<double>(r.sweeps_first));
        tps_all[v].push_back(g.tps[v].back());
        first_all[v].push_back(g.first[v].back());
    }

    std::vector<double> speedups, slowdowns;
    for (const auto& id : order) {
        const auto& g = groups[id];
        if (g.tps[0].empty() || g.tps[1].empty()) {
            ++m.unpaired_instances;
            continue;
        }
        InstanceMetrics im;
        im.instance_id = id;
        im.time_per_solution_baseline = mean(g.tps[0]);
        im.time_per_solution_heuristic = mean(g.tps[1]);
        im.total_time_baseline = mean(g.first[0]);
        im.total_time_heuristic = mean(g.first[1]);
        im.speedup = im.time_per_solution_baseline / im.time_per_solution_heuristic;
        im.slowdown = im.total_time_heuristic / im.total_time_baseline;
        speedups.push_back(im.speedup);
        slowdowns.push_back(im.slowdown);
        m.per_instance.push_back(std::move(im));
    }
    if (m.per_instance.empty()) {
        throw std::invalid_argument("no instance has solved records of both variants");
    }
    m.time_per_solution_baseline = summarize(tps_all[0]);
    m.time_per_solution_heuristic = summarize(tps_all[1]);
    m.total_time_baseline = summarize(first_all[0]);
    m.total_time_heuristic = summarize(first_all[1]);
    m.speedup = summarize(speedups);
    m.slowdown = summarize(slowdowns);
    m.speedup_histogram = speedup_histogram(speedups);
    m.multi_class_fraction =
        heuristic_solved ? static_cast<double>(multi_class) / static_cast<double>(heuristic_solved)
                         : 0.0;
    return m;
}

SequentialResult sequential_equivalent(const std::vector<RunRecord>& baseline, std::size_t target) {
    if (baseline.size() < target) {
        throw std::invalid_argument("sequential_equivalent needs at least " +
                                    std::to_string(target) + " baseline records, got " +
                                    std::to_string(baseline.size()));
    }
    SequentialResult out;
    if (target == 0) {
        out.reached = true;
        return out;
    }
    std::set<std::vector<std::size_t>> seen;
    for (const auto& r : baseline) {
        ++out.runs_used;
        out.sweeps += r.solved ? r.sweeps_first : r.sweeps_run;
        bool progress = false;
        for (const auto& s : r.solutions) {
            std::vector<std::size_t> key = s.canonical;
            if (key.empty()) {
                for (const auto& v : s.assignment.values) key.push_back(v.value_or(0));
            }
            if (seen.insert(std::move(key)).second) {
                progress = true;
                if (++out.distinct == target) break;
            }
        }
        if (!progress) ++out.repeats;
        if (out.distinct >= target) {
            out.reached = true;
            break;
        }
    }
    return out;
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + '"';
}

json record_to_json(const RunRecord& r) {
    json sols = json::array();
    for (const auto& s : r.solutions) {
        json values = json::array();
        for (const auto& v : s.assignment.values) {
            if (v) {
                values.push_back(*v);
            } else {
                values.push_back(nullptr);
            }
        }
        sols.push_back({{"assignment", values},
                        {"discovery_sweep", s.sweep},
                        {"canonical_class", s.canonical}});
    }
    json trace = json::array();
    for (const auto& t : r.trace) trace.push_back({t.sweep, t.energy, t.n_active, t.solutions_found});
    return {{"instance_id", r.instance_id},
            {"variant", r.variant},
            {"seed", r.seed},
            {"solved", r.solved},
            {"sweeps_first", r.sweeps_first},
            {"sweeps_run", r.sweeps_run},
            {"n_solutions", r.solutions.size()},
            {"n_classes", r.n_classes},
            {"duplicates", r.duplicates},
            {"solution_events", r.solution_events},
            {"truncated", r.truncated},
            {"final_energy", r.final_energy},
            {"wall_ms", r.wall_ms},
            {"solutions", sols},
            {"trace", trace}};
}

RunRecord record_from_json(const json& j) {
    RunRecord r;
    r.instance_id = j.at("instance_id").get<std::string>();
    r.variant = j.at("variant").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.solved = j.at("solved").get<bool>();
    r.sweeps_first = j.at("sweeps_first").get<std::uint64_t>();
    r.sweeps_run = j.at("sweeps_run").get<std::uint64_t>();
    r.n_classes = j.at("n_classes").get<std::size_t>();
    r.duplicates = j.at("duplicates").get<std::size_t>();
    r.solution_events = j.at("solution_events").get<std::size_t>();
    r.truncated = j.at("truncated").get<bool>();
    r.final_energy = j.at("final_energy").get<double>();
    r.wall_ms = j.at("wall_ms").get<double>();
    for (const auto& s : j.at("solutions")) {
        FoundSolution f;
        const auto& values = s.at("assignment");
        f.assignment = Assignment(values.size());
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (!values[i].is_null()) f.assignment.values[i] = values[i].get<ValueIndex>();
        }
        f.sweep = s.at("discovery_sweep").get<std::uint64_t>();
        f.canonical = s.at("canonical_class").get<std::vector<std::size_t>>();
        r.solutions.push_back(std::move(f));
    }
    for (const auto& t : j.at("trace")) {
        r.trace.push_back({t.at(0).get<std::uint64_t>(), t.at(1).get<double>(),
                           t.at(2).get<std::size_t>(), t.at(3).get<std::size_t>()});
    }
    return r;
}

json stats_json(const Stats& s) {
    return {{"count", s.count}, {"mean", s.mean},     {"median", s.median},
            {"min", s.min},     {"max", s.max},       {"stddev", s.stddev}};
}

}  // namespace

void write_csv(std::ostream& out, const std::vector<RunRecord>& records) {
    out << kCsvHeader << '\n';
    for (const auto& r : records) {
        out << csv_field(r.instance_id) << ',' << csv_field(r.variant) << ',' << r.seed << ','
            << (r.solved ? 1 : 0) << ',';
        if (r.solved) out << r.sweeps_first;
        std::ostringstream wall;
        wall << std::fixed << std::setprecision(3) << r.wall_ms;
        out << ',' << r.solutions.size() << ',' << r.n_classes << ',' << r.duplicates << ','
            << wall.str() << ',' << (r.truncated ? 1 : 0) << '\n';
    }
}

void write_json(std::ostream& out, const std::vector<RunRecord>& records) {
    json arr = json::array();
    for (const auto& r : records) arr.push_back(record_to_json(r));
    out << arr.dump(1) << '\n';
}

std::vector<RunRecord> read_json(std::istream& in) {
    std::vector<RunRecord> out;
    try {
        const json arr = json::parse(in);
        if (!arr.is_array()) throw std::invalid_argument("record file must hold a JSON array");
        for (const auto& j : arr) out.push_back(record_from_json(j));
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed record JSON: ") + e.what());
    }
    return out;
}

void export_records(const std::vector<RunRecord>& records, const std::string& format,
                    const std::string& path) {
    if (format != "csv" && format != "json") {
        throw std::invalid_argument("export format must be csv or json");
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    if (format == "csv") {
        write_csv(out, records);
    } else {
        write_json(out, records);
    }
    out.flush();
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

void write_summary(std::ostream& out, const Metrics& m) {
    auto line = [&](const char* label, const Stats& s) {
        out << label << ": mean " << s.mean << ", median " << s.median << ", min " << s.min
            << ", max " << s.max << " (n=" << s.count << ")\n";
    };
    line("time per solution, heuristic [sweeps]", m.time_per_solution_heuristic);
    line("time per solution, baseline [sweeps]", m.time_per_solution_baseline);
    line("time to first solution, heuristic [sweeps]", m.total_time_heuristic);
    line("time to first solution, baseline [sweeps]", m.total_time_baseline);
    line("per-solution speedup", m.speedup);
    line("total-time slowdown", m.slowdown);
    out << "unsolved runs: heuristic " << m.unsolved_heuristic << ", baseline "
        << m.unsolved_baseline << "; unpaired instances " << m.unpaired_instances << '\n';
    out << "heuristic runs spanning >= 2 classes: " << m.multi_class_fraction
        << "; exact duplicates within heuristic runs: " << m.heuristic_duplicates << '\n';
    out << "speedup histogram:";
    for (std::size_t i = 0; i < m.speedup_histogram.counts.size(); ++i) {
        out << " [" << m.speedup_histogram.edges[i] << ',' << m.speedup_histogram.edges[i + 1]
            << "):" << m.speedup_histogram.counts[i];
    }
    out << '\n';
}

void write_metrics_json(std::ostream& out, const Metrics& m) {
    json per = json::array();
    for (const auto& im : m.per_instance) {
        per.push_back({{"instance_id", im.instance_id},
                       {"time_per_solution_baseline", im.time_per_solution_baseline},
                       {"time_per_solution_heuristic", im.time_per_solution_heuristic},
                       {"total_time_baseline", im.total_time_baseline},
                       {"total_time_heuristic", im.total_time_heuristic},
                       {"speedup", im.speedup},
                       {"slowdown", im.slowdown}});
    }
    json edges = json::array();
    for (double e : m.speedup_histogram.edges) {
        if (std::isfinite(e)) {
            edges.push_back(e);
        } else {
            edges.push_back(nullptr);
        }
    }
    json j = {{"time_per_solution_heuristic", stats_json(m.time_per_solution_heuristic)},
              {"time_per_solution_baseline", stats_json(m.time_per_solution_baseline)},
              {"total_time_heuristic", stats_json(m.total_time_heuristic)},
              {"total_time_baseline", stats_json(m.total_time_baseline)},
              {"speedup", stats_json(m.speedup)},
              {"slowdown", stats_json(m.slowdown)},
              {"speedup_histogram", {{"edges", edges}, {"counts", m.speedup_histogram.counts}}},
              {"unsolved_heuristic", m.unsolved_heuristic},
              {"unsolved_baseline", m.unsolved_baseline},
              {"unpaired_instances", m.unpaired_instances},
              {"heuristic_runs", m.heuristic_runs},
              {"heuristic_duplicates", m.heuristic_duplicates},
              {"multi_class_fraction", m.multi_class_fraction},
              {"per_instance", per}};
    out << j.dump(1) << '\n';
}

namespace {

json config_json(const ExperimentConfig& cfg) {
    const auto& p = cfg.problem;
    return {{"name", cfg.name},
            {"problem",
             {{"family", p.family},
              {"instances", p.instances},
              {"seed", p.seed},
              {"nodes", p.nodes},
              {"density", p.density},
              {"colors", p.colors},
              {"variables", p.variables},
              {"clauses", p.clauses},
              {"k", p.k},
              {"problems", p.problems}}},
            {"trials", cfg.trials},
            {"seed_base", cfg.seed_base},
            {"variants", cfg.variants},
            {"sampler",
             {{"tau", cfg.sampler.tau},
              {"max_sweeps", cfg.sampler.max_sweeps},
              {"expansion_cap", cfg.sampler.expansion_cap},
              {"stop_at_first_event", cfg.sampler.stop_at_first_event},
              {"target_solutions", cfg.sampler.target_solutions},
              {"record_trace", cfg.sampler.record_trace}}},
            {"compiler",
             {{"w_max", cfg.compiler.w_max},
              {"bias_default", cfg.compiler.bias_default},
              {"or_push_strength", cfg.compiler.or_push_strength}}},
            {"output", cfg.output},
            {"jobs", cfg.jobs},
            {"wall_clock", cfg.wall_clock}};
}

template <typename T>
void take(const json& obj, const char* key, T& field) {
    if (obj.contains(key)) field = obj.at(key).get<T>();
}

void reject_unknown(const json& obj, const json& reference, const std::string& where) {
    if (!obj.is_object()) throw std::invalid_argument(where + " must be a JSON object");
    for (const auto& item : obj.items()) {
        if (!reference.contains(item.key())) {
            throw std::invalid_argument("unknown config key '" + where + item.key() + "'");
        }
    }
}

}  // namespace

ExperimentConfig config_from_json(const std::string& text) {
    ExperimentConfig cfg;
    const json reference = config_json(cfg);
    try {
        const json j = json::parse(text);
        reject_unknown(j, reference, "");
        take(j, "name", cfg.name);
        take(j, "trials", cfg.trials);
        take(j, "seed_base", cfg.seed_base);
        take(j, "variants", cfg.variants);
        take(j, "output", cfg.output);
        take(j, "jobs", cfg.jobs);
        take(j, "wall_clock", cfg.wall_clock);
        if (j.contains("problem")) {
            const auto& p = j.at("problem");
            reject_unknown(p, reference.at("problem"), "problem.");
            take(p, "family", cfg.problem.family);
            take(p, "instances", cfg.problem.instances);
            take(p, "seed", cfg.problem.seed);
            take(p, "nodes", cfg.problem.nodes);
            take(p, "density", cfg.problem.density);
            take(p, "colors", cfg.problem.colors);
            take(p, "variables", cfg.problem.variables);
            take(p, "clauses", cfg.problem.clauses);
            take(p, "k", cfg.problem.k);
            take(p, "problems", cfg.problem.problems);
        }
        if (j.contains("sampler")) {
            const auto& s = j.at("sampler");
            reject_unknown(s, reference.at("sampler"), "sampler.");
            take(s, "tau", cfg.sampler.tau);
            take(s, "max_sweeps", cfg.sampler.max_sweeps);
            take(s, "expansion_cap", cfg.sampler.expansion_cap);
            take(s, "stop_at_first_event", cfg.sampler.stop_at_first_event);
            take(s, "target_solutions", cfg.sampler.target_solutions);
            take(s, "record_trace", cfg.sampler.record_trace);
        }
        if (j.contains("compiler")) {
            const auto& c = j.at("compiler");
            reject_unknown(c, reference.at("compiler"), "compiler.");
            take(c, "w_max", cfg.compiler.w_max);
            take(c, "bias_default", cfg.compiler.bias_default);
            take(c, "or_push_strength", cfg.compiler.or_push_strength);
        }
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed config: ") + e.what());
    }
    cfg.validate();
    return cfg;
}

std::string config_to_json(const ExperimentConfig& cfg) { return config_json(cfg).dump(2); }

std::uint64_t config_hash(const ExperimentConfig& cfg) {
    // Thread count and output location do not affect the records.
    ExperimentConfig key = cfg;
    key.jobs = 1;
    key.output.clear();
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : config_json(key).dump()) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::optional<ExperimentConfig> builtin_suite(const std::string& name) {
    ExperimentConfig cfg;
    cfg.name = name;
    cfg.trials = 20;
    auto& p = cfg.problem;
    if (name == "planar9" || name == "planar25" || name == "planar36" || name == "planar49") {
        p.family = "planar";
        p.nodes = std::stoul(name.substr(6));
        p.instances = p.nodes == 9 ? 100 : 20;
    } else if (name == "sat20" || name == "sat50" || name == "sat75") {
        p.family = "ksat";
        p.variables = std::stoul(name.substr(3));
        p.clauses = p.variables == 20 ? 91 : p.variables == 50 ? 218 : 325;
        p.instances = 10;
        cfg.trials = 5;
        cfg.variants = {kBaseline};
    } else if (name == "unique3") {
        p.family = "unique";
        p.nodes = 10;
        p.colors = 3;
        p.instances = 10;
    } else if (name == "maps") {
        p.family = "list";
        p.problems = {"map:australia:3", "map:canada:3"};
    } else if (name == "small") {
        p.family = "list";
        p.problems = {"complete:3:3", "complete:4:4", "ring:10:antiferro", "map:australia:3"};
        cfg.trials = 5;
    } else {
        return std::nullopt;
    }
    return cfg;
}

std::vector<std::string> builtin_suite_names() {
    return {"planar9", "planar25", "planar36", "planar49", "sat20",
            "sat50",   "sat75",    "unique3",  "maps",     "small"};
}

}  // namespace spikecsp
