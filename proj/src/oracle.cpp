#include "spikecsp/oracle.hpp"

#include "spikecsp/problems.hpp"
#include "spikecsp/random.hpp"
#include "spikecsp/readout.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace spikecsp {

namespace {

class Backtracker {
public:
    Backtracker(const Csp& csp, std::uint64_t limit) : csp_(csp), limit_(limit) {
        const std::size_t n = csp.num_variables();
        const auto graph = constraint_graph(csp);
        order_.resize(n);
        std::iota(order_.begin(), order_.end(), VarIndex{0});
        std::stable_sort(order_.begin(), order_.end(), [&](VarIndex a, VarIndex b) {
            return graph.degree(a) > graph.degree(b);
        });

        first_.resize(n + 1, 0);
        for (VarIndex v = 0; v < n; ++v) first_[v + 1] = first_[v] + csp.domain_size(v);
        mutex_.resize(first_[n]);
        clauses_of_.resize(n);
        for (std::size_t ci = 0; ci < csp.num_constraints(); ++ci) {
            const auto& c = csp.constraints()[ci];
            if (const auto* m = std::get_if<MutexPair>(&c)) {
                mutex_[id(m->a)].push_back(m->b);
                mutex_[id(m->b)].push_back(m->a);
            } else {
                for (auto v : constraint_variables(c)) clauses_of_[v].push_back(ci);
            }
        }
        pruned_.assign(first_[n], 0);
        live_.resize(n);
        for (VarIndex v = 0; v < n; ++v) live_[v] = csp.domain_size(v);
        current_ = Assignment(n);
    }

    ExhaustiveResult run() {
        result_.complete = search(0);
        return std::move(result_);
    }

private:
    std::size_t id(const Literal& l) const { return first_[l.var] + l.value; }

    void prune(const Literal& l) {
        if (pruned_[id(l)]++ == 0) --live_[l.var];
        trail_.push_back(l);
    }

    void undo(std::size_t mark) {
        while (trail_.size() > mark) {
            const Literal l = trail_.back();
            trail_.pop_back();
            if (--pruned_[id(l)] == 0) ++live_[l.var];
        }
    }

    // Applies forward checking for var := val; false on a wipe-out or a
    // falsified clause.
    bool propagate(VarIndex var, ValueIndex val) {
        for (const auto& other : mutex_[id({var, val})]) {
            if (current_[other.var].has_value()) {
                if (*current_[other.var] == other.value) return false;
                continue;
            }
            prune(other);
            if (live_[other.var] == 0) return false;
        }
        for (auto ci : clauses_of_[var]) {
            const auto& lits = std::get<Clause>(csp_.constraints()[ci]).literals;
            bool satisfied = false;
            std::optional<VarIndex> open;
            bool several_open = false;
            for (const auto& l : lits) {
                if (current_[l.var].has_value()) {
                    if (*current_[l.var] == l.value) {
                        satisfied = true;
                        break;
                    }
                } else if (!open || *open == l.var) {
                    open = l.var;
                } else {
                    several_open = true;
                }
            }
            if (satisfied || several_open) continue;
            if (!open) return false;
            const VarIndex u = *open;
            for (ValueIndex value = 0; value < csp_.domain_size(u); ++value) {
                const bool in_clause = std::any_of(lits.begin(), lits.end(), [&](const Literal& l) {
                    return l.var == u && l.value == value;
                });
                if (!in_clause) prune({u, value});
            }
            if (live_[u] == 0) return false;
        }
        return true;
    }

    // Returns true when the subtree was fully explored.
    bool search(std::size_t depth) {
        if (depth == order_.size()) {
            result_.solutions.push_back(current_);
            return result_.solutions.size() < limit_;
        }
        const VarIndex var = order_[depth];
        for (ValueIndex val = 0; val < csp_.domain_size(var); ++val) {
            if (pruned_[id({var, val})]) continue;
            const std::size_t mark = trail_.size();
            current_[var] = val;
            const bool ok = propagate(var, val);
            const bool keep_going = !ok || search(depth + 1);
            undo(mark);
            current_[var].reset();
            if (!keep_going) return false;
        }
        return true;
    }

    const Csp& csp_;
    std::uint64_t limit_;
    std::vector<VarIndex> order_;
    std::vector<std::size_t> first_;
    std::vector<std::vector<Literal>> mutex_;
    std::vector<std::vector<std::size_t>> clauses_of_;
    std::vector<std::uint32_t> pruned_;
    std::vector<std::size_t> live_;
    std::vector<Literal> trail_;
    Assignment current_;
    ExhaustiveResult result_;
};

}  // namespace

ExhaustiveResult solve_exhaustive(const Csp& csp, std::uint64_t limit) {
    if (limit == 0) return {{}, false};
    // Hitting the limit reports incomplete even if that was the last leaf.
    return Backtracker(csp, limit).run();
}

std::uint64_t count_solutions(const Csp& csp) {
    return solve_exhaustive(csp).solutions.size();
}

std::size_t count_coloring_classes(const Csp& csp, std::size_t stop_above) {
    std::set<std::vector<std::size_t>> classes;
    for (const auto& s : solve_exhaustive(csp).solutions) {
        classes.insert(canonical_coloring(csp, s));
        if (classes.size() > stop_above) break;
    }
    return classes.size();
}

MiningResult mine_unique_solution_instances(std::size_t n_nodes, std::size_t k_colors,
                                            std::uint64_t seed, std::size_t n_wanted,
                                            double density, std::size_t max_attempts) {
    if (n_nodes > 12) throw std::invalid_argument("mining is limited to 12 nodes");
    std::uint64_t class_size = 1;
    for (std::size_t c = 2; c <= k_colors; ++c) class_size *= c;

    MiningResult out;
    while (out.instances.size() < n_wanted && out.attempts < max_attempts) {
        const std::uint64_t s = derive_seed(seed, out.attempts);
        ++out.attempts;
        auto csp = gen_planar_coloring(n_nodes, density, k_colors, s);
        // A single class holds at most k! colorings.
        auto found = solve_exhaustive(csp, class_size + 1);
        if (found.solutions.empty() || found.solutions.size() > class_size) continue;
        std::set<std::vector<std::size_t>> classes;
        for (const auto& a : found.solutions) classes.insert(canonical_coloring(csp, a));
        if (classes.size() != 1) continue;
        out.instances.push_back(std::move(csp));
        out.instance_seeds.push_back(s);
    }
    out.fulfilled = out.instances.size() >= n_wanted;
    return out;
}

std::vector<std::uint8_t> state_from_index(std::uint64_t index, std::size_t n) {
    std::vector<std::uint8_t> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = static_cast<std::uint8_t>((index >> i) & 1U);
    return x;
}

std::uint64_t state_index(std::span<const std::uint8_t> x) {
    std::uint64_t index = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i]) index |= std::uint64_t{1} << i;
    }
    return index;
}

std::vector<double> exact_boltzmann(const Network& net) {
    const std::size_t n = net.size();
    if (n > 20) throw std::length_error("exact_boltzmann supports at most 20 neurons");
    const std::uint64_t states = std::uint64_t{1} << n;
    std::vector<double> log_weight(states);
    for (std::uint64_t s = 0; s < states; ++s) {
        log_weight[s] = -energy(net, state_from_index(s, n));
    }
    const double top = *std::max_element(log_weight.begin(), log_weight.end());
    double z = 0.0;
    for (auto& w : log_weight) {
        w = std::exp(w - top);
        z += w;
    }
    for (auto& w : log_weight) w /= z;
    return log_weight;
}

double auxiliary_minimized_energy(const Network& net, std::span<const std::uint8_t> principal) {
    if (principal.size() != net.num_principal()) {
        throw std::invalid_argument("principal state dimension mismatch");
    }
    const std::size_t n_aux = net.num_auxiliary();
    if (n_aux > 20) throw std::length_error("too many auxiliary neurons to enumerate");
    State x(net.size(), 0);
    std::copy(principal.begin(), principal.end(), x.begin());
    double best = std::numeric_limits<double>::infinity();
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << n_aux); ++a) {
        for (std::size_t k = 0; k < n_aux; ++k) {
            x[net.num_principal() + k] = static_cast<std::uint8_t>((a >> k) & 1U);
        }
        best = std::min(best, energy(net, x));
    }
    return best;
}

double tv_distance(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size()) throw std::invalid_argument("distributions differ in size");
    double sum = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) sum += std::abs(p[i] - q[i]);
    return 0.5 * sum;
}

}  // namespace spikecsp
