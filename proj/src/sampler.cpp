#include "spikecsp/sampler.hpp"

#include "spikecsp/readout.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <set>
#include <stdexcept>

namespace spikecsp {

void SamplerParams::validate() const {
    if (tau < 1) throw std::invalid_argument("tau must be >= 1");
    if (max_sweeps < 1) throw std::invalid_argument("max_sweeps must be >= 1");
}

double membrane_potential(const Network& net, std::span<const std::uint8_t> x, NeuronId i) {
    double u = net.bias(i);
    for (const auto& nb : net.neighbors(i)) {
        if (x[nb.neuron]) u += nb.weight;
    }
    return u;
}

double fire_probability(double u, int tau) {
    if (tau < 1) throw std::invalid_argument("tau must be >= 1");
    const double p = std::exp(u) / static_cast<double>(tau);
    return p < 1.0 ? p : 1.0;
}

Sampler::Sampler(const Network& net, int tau, std::uint64_t seed)
    : net_(net),
      tau_(tau),
      n_(net.size()),
      lifetime_(static_cast<std::uint64_t>(tau) * net.size()),
      rng_(seed),
      x_(net.size(), 0),
      u_(net.biases()),
      lapse_at_(net.size(), 0) {
    if (tau < 1) throw std::invalid_argument("tau must be >= 1");
    if (n_ == 0) throw std::invalid_argument("cannot sample an empty network");
}

double Sampler::remaining_ticks(NeuronId i) const {
    if (!x_[i]) return 0.0;
    return static_cast<double>(lapse_at_[i] - step_) / static_cast<double>(n_);
}

void Sampler::set_active(NeuronId i, bool on) {
    const double sign = on ? 1.0 : -1.0;
    energy_ -= sign * u_[i];
    x_[i] = on ? 1 : 0;
    for (const auto& nb : net_.neighbors(i)) u_[nb.neuron] += sign * nb.weight;
}

void Sampler::step() {
    ++step_;
    while (!active_.empty() && lapse_at_[active_.front()] <= step_) {
        const NeuronId i = active_.front();
        active_.pop_front();
        set_active(i, false);
    }
    const auto i = static_cast<NeuronId>(rng_.below(n_));
    if (x_[i]) return;
    const double p = fire_probability(u_[i], tau_);
    if (rng_.uniform() < p) {
        set_active(i, true);
        lapse_at_[i] = step_ + lifetime_;
        active_.push_back(i);
    }
}

void Sampler::sweep() {
    for (std::uint64_t k = 0; k < n_; ++k) step();
    // Incremental updates accumulate rounding; refresh from scratch now and then.
    if (sweeps() % 1024 == 0) {
        for (NeuronId i = 0; i < n_; ++i) u_[i] = membrane_potential(net_, x_, i);
        energy_ = energy(net_, x_);
    }
}

RunRecord run(const Network& net, const Csp& csp, const SamplerParams& params,
              const SolutionCallback& on_solution) {
    params.validate();
    if (net.num_variables() != csp.num_variables() || net.num_principal() != csp.num_literals()) {
        throw std::invalid_argument("network was not compiled from this problem");
    }
    const auto start = std::chrono::steady_clock::now();
    const bool coloring = csp.kind() == ProblemKind::coloring;

    RunRecord rec;
    rec.seed = params.seed;
    Sampler sampler(net, params.tau, params.seed);
    SolutionExpander expander(csp);
    std::set<Assignment> known;
    std::set<std::vector<std::size_t>> classes;

    bool stop = false;
    for (std::uint64_t sweep = 1; sweep <= params.max_sweeps && !stop; ++sweep) {
        sampler.sweep();
        rec.sweeps_run = sweep;
        const auto m = decode(net, sampler.state());
        if (m.expandable()) {
            auto e = expander.expand(m, params.expansion_cap);
            rec.truncated = rec.truncated || e.truncated;
            if (!e.solutions.empty()) {
                ++rec.solution_events;
                if (!rec.solved) {
                    rec.solved = true;
                    rec.sweeps_first = sweep;
                }
                for (auto& a : e.solutions) {
                    if (!known.insert(a).second) {
                        ++rec.duplicates;
                        continue;
                    }
                    FoundSolution found{std::move(a), sweep, {}};
                    if (coloring) {
                        found.canonical = canonical_coloring(csp, found.assignment);
                        classes.insert(found.canonical);
                    }
                    rec.solutions.push_back(std::move(found));
                    if (on_solution && !on_solution(rec.solutions.back())) {
                        stop = true;
                        break;
                    }
                }
                if (params.stop_at_first_event) stop = true;
                if (params.target_solutions > 0 && known.size() >= params.target_solutions) {
                    stop = true;
                }
            }
        }
        if (params.record_trace) {
            rec.trace.push_back({sweep, sampler.current_energy(), sampler.active_count(),
                                 rec.solutions.size()});
        }
    }
    rec.n_classes = coloring ? classes.size() : rec.solutions.size();
    rec.final_energy = energy(net, sampler.state());
    rec.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rec;
}

void write_trace_csv(std::ostream& out, const std::vector<TraceRow>& trace) {
    out << "sweep,energy,n_active,solutions_found\n";
    for (const auto& row : trace) {
        out << row.sweep << ',' << row.energy << ',' << row.n_active << ','
            << row.solutions_found << '\n';
    }
}

void write_solutions_json(std::ostream& out, const Csp& csp,
                          const std::vector<FoundSolution>& solutions) {
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const auto& s : solutions) {
        nlohmann::ordered_json assignment = nlohmann::ordered_json::object();
        for (VarIndex v = 0; v < csp.num_variables(); ++v) {
            const auto& value = s.assignment[v];
            if (value) assignment[csp.variables()[v]] = csp.domain(v)[*value];
        }
        list.push_back({{"assignment", assignment},
                        {"discovery_sweep", s.sweep},
                        {"canonical_class", s.canonical}});
    }
    out << list.dump(1) << '\n';
}

std::vector<FoundSolution> read_solutions_json(std::istream& in, const Csp& csp) {
    std::vector<FoundSolution> out;
    try {
        const auto list = nlohmann::json::parse(in);
        if (!list.is_array()) throw std::invalid_argument("solutions file must hold a JSON list");
        for (const auto& entry : list) {
            const auto& assignment = entry.at("assignment");
            if (!assignment.is_object()) {
                throw std::invalid_argument("assignment must map variables to values");
            }
            FoundSolution f;
            f.assignment = Assignment(csp.num_variables());
            for (const auto& [name, label] : assignment.items()) {
                VarIndex v = 0;
                try {
                    v = csp.variable_index(name);
                } catch (const std::out_of_range&) {
                    throw std::invalid_argument("unknown variable '" + name + "'");
                }
                const auto value = csp.value_index(v, label.get<std::string>());
                if (!value) {
                    throw std::invalid_argument("value '" + label.get<std::string>() +
                                                "' not in the domain of '" + name + "'");
                }
                f.assignment.values[v] = *value;
            }
            for (VarIndex v = 0; v < csp.num_variables(); ++v) {
                if (!f.assignment[v]) {
                    throw std::invalid_argument("assignment lacks variable '" +
                                                csp.variables()[v] + "'");
                }
            }
            f.sweep = entry.value("discovery_sweep", std::uint64_t{0});
            if (entry.contains("canonical_class")) {
                f.canonical = entry.at("canonical_class").get<std::vector<std::size_t>>();
            }
            out.push_back(std::move(f));
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed solutions JSON: ") + e.what());
    }
    return out;
}

}  // namespace spikecsp
