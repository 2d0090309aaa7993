// spikecsp command-line front end: solve, bench, verify, compile-dump.
//
// Exit codes: 0 ok, 1 usage or input error, 2 unsolved within the sweep
// budget, 3 verification failure.

#include "spikecsp/bench.hpp"
#include "spikecsp/compiler.hpp"
#include "spikecsp/problems.hpp"
#include "spikecsp/sampler.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace spikecsp;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kUnsolved = 2;
constexpr int kVerifyFailed = 3;

const char* kOutDirEnv = "SPIKECSP_OUT_DIR";

struct CompilerFlags {
    std::string heuristic = "on";
    double w_max = CompilerParams{}.w_max;
    double bias = CompilerParams{}.bias_default;
    double or_strength = CompilerParams{}.or_push_strength;

    void add(CLI::App* cmd) {
        cmd->add_option("--heuristic", heuristic, "Degree-based WTA weights")
            ->check(CLI::IsMember({"on", "off"}))
            ->capture_default_str();
        cmd->add_option("--w-max", w_max, "Saturated WTA strength")->capture_default_str();
        cmd->add_option("--bias", bias, "Principal neuron bias")->capture_default_str();
        cmd->add_option("--or-strength", or_strength, "OR motif strength")->capture_default_str();
    }

    CompilerParams params() const {
        CompilerParams p;
        p.heuristic_enabled = heuristic == "on";
        p.w_max = w_max;
        p.bias_default = bias;
        p.or_push_strength = or_strength;
        p.validate();
        return p;
    }
};

std::string default_out_dir() {
    const char* env = std::getenv(kOutDirEnv);
    return env && *env ? env : ".";
}

std::ofstream open_out(const std::string& path) {
    const fs::path p(path);
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    return out;
}

// --- solve ------------------------------------------------------------------

struct SolveArgs {
    std::string problem;
    CompilerFlags compiler;
    std::uint64_t seed = 1;
    std::uint64_t max_sweeps = SamplerParams{}.max_sweeps;
    int tau = SamplerParams{}.tau;
    std::size_t target = 0;
    std::string out;
    std::string trace;
};

int cmd_solve(const SolveArgs& a) {
    const Csp csp = load_problem(a.problem);
    const Network net = compile(csp, a.compiler.params());
    SamplerParams sp;
    sp.seed = a.seed;
    sp.max_sweeps = a.max_sweeps;
    sp.tau = a.tau;
    sp.record_trace = !a.trace.empty();
    if (a.target > 0) {
        sp.stop_at_first_event = false;
        sp.target_solutions = a.target;
    }
    const RunRecord rec = run(net, csp, sp);

    if (!a.trace.empty()) {
        auto out = open_out(a.trace);
        write_trace_csv(out, rec.trace);
    }
    std::string out_path = a.out;
    if (out_path.empty() && std::getenv(kOutDirEnv)) {
        out_path = (fs::path(default_out_dir()) / "solutions.json").string();
    }
    if (!out_path.empty()) {
        auto out = open_out(out_path);
        write_solutions_json(out, csp, rec.solutions);
    }

    std::size_t bad = 0;
    for (const auto& s : rec.solutions) {
        if (!check_assignment(csp, s.assignment).satisfied()) ++bad;
    }
    if (!rec.solved) {
        std::cout << "unsolved after " << rec.sweeps_run << " sweeps\n";
        return kUnsolved;
    }
    std::cout << "solved at sweep " << rec.sweeps_first << ": " << rec.solutions.size()
              << " solution(s), " << rec.n_classes << " class(es)"
              << (rec.truncated ? ", expansion truncated" : "") << '\n';
    for (const auto& s : rec.solutions) {
        std::cout << "  sweep " << s.sweep << ':';
        for (VarIndex v = 0; v < csp.num_variables(); ++v) {
            std::cout << ' ' << csp.variables()[v] << '=' << csp.domain(v)[*s.assignment[v]];
        }
        std::cout << '\n';
    }
    if (bad > 0) {
        std::cerr << bad << " reported solution(s) failed verification\n";
        return kVerifyFailed;
    }
    return kOk;
}

// --- bench ------------------------------------------------------------------

struct BenchArgs {
    std::string suite;
    std::size_t trials = 0;
    std::uint64_t seed_base = 0;
    bool seed_set = false;
    std::string out_dir;
    std::size_t jobs = 1;
    std::uint64_t max_sweeps = 0;
    std::size_t instances = 0;
    bool wall_clock = false;
};

void sat_summary(std::ostream& out, const std::vector<RunRecord>& records) {
    std::vector<double> first;
    std::size_t unsolved = 0;
    for (const auto& r : records) {
        if (r.solved) {
            first.push_back(static_cast<double>(r.sweeps_first));
        } else {
            ++unsolved;
        }
    }
    const Stats s = summarize(first);
    out << "time to first solution [sweeps]: median " << s.median << ", mean " << s.mean
        << ", min " << s.min << ", max " << s.max << " (solved " << s.count << ", unsolved "
        << unsolved << ")\n";
}

int cmd_bench(const BenchArgs& a) {
    ExperimentConfig cfg;
    if (auto suite = builtin_suite(a.suite)) {
        cfg = *suite;
    } else if (fs::is_regular_file(a.suite)) {
        std::ifstream in(a.suite);
        std::stringstream text;
        text << in.rdbuf();
        cfg = config_from_json(text.str());
    } else {
        std::cerr << "unknown suite '" << a.suite << "'; available:";
        for (const auto& n : builtin_suite_names()) std::cerr << ' ' << n;
        std::cerr << " (or a JSON config file)\n";
        return kUsage;
    }
    if (a.trials > 0) cfg.trials = a.trials;
    if (a.seed_set) cfg.seed_base = a.seed_base;
    if (a.max_sweeps > 0) cfg.sampler.max_sweeps = a.max_sweeps;
    if (a.instances > 0) cfg.problem.instances = a.instances;
    if (a.wall_clock) cfg.wall_clock = true;
    cfg.jobs = a.jobs;
    std::string out_dir = a.out_dir;
    if (out_dir.empty()) out_dir = cfg.output.empty() ? default_out_dir() : cfg.output;
    cfg.validate();

    const auto records = run_experiment(cfg);
    fs::create_directories(out_dir);
    const fs::path base = fs::path(out_dir) / cfg.name;
    export_records(records, "csv", base.string() + ".csv");
    export_records(records, "json", base.string() + ".json");

    std::ostringstream summary;
    summary << "suite " << cfg.name << ": " << records.size() << " records, config hash "
            << std::hex << config_hash(cfg) << std::dec << '\n';
    const bool paired = cfg.variants.size() == 2;
    if (paired) {
        const Metrics m = compute_metrics(records);
        write_summary(summary, m);
        auto mj = open_out(base.string() + "_metrics.json");
        write_metrics_json(mj, m);
    } else {
        sat_summary(summary, records);
    }
    auto so = open_out(base.string() + "_summary.txt");
    so << summary.str();
    std::cout << summary.str() << "wrote " << base.string() << ".{csv,json}\n";
    return kOk;
}

// --- verify -----------------------------------------------------------------

int cmd_verify(const std::string& problem, const std::string& solutions_path) {
    const Csp csp = load_problem(problem);
    std::ifstream in(solutions_path);
    if (!in) throw std::invalid_argument("cannot open '" + solutions_path + "'");
    const auto solutions = read_solutions_json(in, csp);
    if (solutions.empty()) {
        std::cerr << "warning: solutions list is empty\n";
        return kOk;
    }
    std::size_t failed = 0;
    for (std::size_t i = 0; i < solutions.size(); ++i) {
        const Verdict v = check_assignment(csp, solutions[i].assignment);
        if (v.satisfied()) continue;
        ++failed;
        std::cout << "solution " << i << " violates constraint(s)";
        for (auto c : v.violations) std::cout << ' ' << c;
        std::cout << '\n';
    }
    std::cout << solutions.size() - failed << '/' << solutions.size() << " solution(s) verified\n";
    return failed ? kVerifyFailed : kOk;
}

// --- compile-dump -----------------------------------------------------------

int cmd_compile_dump(const std::string& problem, const CompilerFlags& flags,
                     const std::string& out_path) {
    const Csp csp = load_problem(problem);
    const Network net = compile(csp, flags.params());
    if (out_path.empty()) {
        dump_network_json(net, csp, std::cout);
    } else {
        auto out = open_out(out_path);
        dump_network_json(net, csp, out);
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Neuromorphic CSP solver toolkit"};
    app.require_subcommand(1);

    SolveArgs solve;
    auto* s = app.add_subcommand("solve", "Sample one problem until a solution appears");
    s->add_option("--problem", solve.problem, "File (.cnf/.col/.sdk) or generator spec")
        ->required();
    solve.compiler.add(s);
    s->add_option("--seed", solve.seed)->capture_default_str();
    s->add_option("--max-sweeps", solve.max_sweeps)->capture_default_str();
    s->add_option("--tau", solve.tau)->capture_default_str();
    s->add_option("--target", solve.target, "Keep sampling until this many distinct solutions");
    s->add_option("--out", solve.out, "Solutions JSON path");
    s->add_option("--trace", solve.trace, "Per-sweep trace CSV path");

    BenchArgs bench;
    auto* b = app.add_subcommand("bench", "Run a heuristic vs baseline experiment");
    b->add_option("--suite", bench.suite, "Built-in suite name or JSON config file")->required();
    b->add_option("--trials", bench.trials, "Trials per instance and variant");
    b->add_option("--seed-base", bench.seed_base)->each([&](const std::string&) {
        bench.seed_set = true;
    });
    b->add_option("--out-dir", bench.out_dir,
                  std::string("Output directory (default $") + kOutDirEnv + " or .)");
    b->add_option("--jobs", bench.jobs)->check(CLI::PositiveNumber)->capture_default_str();
    b->add_option("--max-sweeps", bench.max_sweeps, "Override the sweep budget");
    b->add_option("--instances", bench.instances, "Override the generated instance count");
    b->add_flag("--wall-clock", bench.wall_clock, "Record wall-clock times in the exports");

    std::string verify_problem, verify_solutions;
    auto* v = app.add_subcommand("verify", "Check solutions against a problem");
    v->add_option("--problem", verify_problem)->required();
    v->add_option("--solutions", verify_solutions)->required();

    std::string dump_problem, dump_out;
    CompilerFlags dump_flags;
    auto* d = app.add_subcommand("compile-dump", "Print the compiled network as JSON");
    d->add_option("--problem", dump_problem)->required();
    dump_flags.add(d);
    d->add_option("--out", dump_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (s->parsed()) return cmd_solve(solve);
        if (b->parsed()) return cmd_bench(bench);
        if (v->parsed()) return cmd_verify(verify_problem, verify_solutions);
        if (d->parsed()) return cmd_compile_dump(dump_problem, dump_flags, dump_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
