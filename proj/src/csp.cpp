#include "spikecsp/csp.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace spikecsp {

namespace {

void check_literal(const std::vector<std::vector<std::string>>& domains,
                   const Literal& lit, std::size_t constraint_index) {
    if (lit.var >= domains.size()) {
        throw std::invalid_argument("constraint " + std::to_string(constraint_index) +
                                    " references undeclared variable " +
                                    std::to_string(lit.var));
    }
    if (lit.value >= domains[lit.var].size()) {
        throw std::invalid_argument("constraint " + std::to_string(constraint_index) +
                                    " references out-of-domain value " +
                                    std::to_string(lit.value));
    }
}

}  // namespace

std::string_view to_string(ProblemKind kind) {
    switch (kind) {
    case ProblemKind::sat: return "sat";
    case ProblemKind::coloring: return "coloring";
    case ProblemKind::sudoku: return "sudoku";
    case ProblemKind::ising: return "ising";
    case ProblemKind::generic: return "generic";
    }
    return "generic";
}

ProblemKind problem_kind_from_string(std::string_view name) {
    for (auto k : {ProblemKind::sat, ProblemKind::coloring, ProblemKind::sudoku,
                   ProblemKind::ising, ProblemKind::generic}) {
        if (to_string(k) == name) return k;
    }
    throw std::invalid_argument("unknown problem kind '" + std::string(name) + "'");
}

Assignment::Assignment(const std::vector<ValueIndex>& complete)
    : values(complete.begin(), complete.end()) {}

bool Assignment::complete() const {
    return std::all_of(values.begin(), values.end(),
                       [](const auto& v) { return v.has_value(); });
}

Csp::Csp(std::vector<std::string> variables,
         std::vector<std::vector<std::string>> domains,
         std::vector<Constraint> constraints, ProblemKind kind)
    : variables_(std::move(variables)),
      domains_(std::move(domains)),
      constraints_(std::move(constraints)),
      kind_(kind) {
    if (variables_.size() != domains_.size()) {
        throw std::invalid_argument("variable and domain counts differ");
    }
    std::unordered_set<std::string> seen;
    for (std::size_t v = 0; v < variables_.size(); ++v) {
        if (!seen.insert(variables_[v]).second) {
            throw std::invalid_argument("duplicate variable id '" + variables_[v] + "'");
        }
        if (domains_[v].empty()) {
            throw std::invalid_argument("empty domain for variable '" + variables_[v] + "'");
        }
    }
    for (std::size_t i = 0; i < constraints_.size(); ++i) {
        if (const auto* m = std::get_if<MutexPair>(&constraints_[i])) {
            check_literal(domains_, m->a, i);
            check_literal(domains_, m->b, i);
            if (m->a == m->b) {
                throw std::invalid_argument("mutex pair " + std::to_string(i) +
                                            " has identical endpoints");
            }
        } else {
            const auto& clause = std::get<Clause>(constraints_[i]);
            if (clause.literals.empty()) {
                throw std::invalid_argument("clause " + std::to_string(i) + " is empty");
            }
            for (const auto& lit : clause.literals) check_literal(domains_, lit, i);
            auto sorted = clause.literals;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
                throw std::invalid_argument("clause " + std::to_string(i) +
                                            " has duplicate literals");
            }
        }
    }
}

VarIndex Csp::variable_index(std::string_view name) const {
    auto it = std::find(variables_.begin(), variables_.end(), name);
    if (it == variables_.end()) {
        throw std::out_of_range("unknown variable '" + std::string(name) + "'");
    }
    return static_cast<VarIndex>(it - variables_.begin());
}

std::optional<ValueIndex> Csp::value_index(VarIndex var, std::string_view label) const {
    const auto& d = domains_.at(var);
    auto it = std::find(d.begin(), d.end(), label);
    if (it == d.end()) return std::nullopt;
    return static_cast<ValueIndex>(it - d.begin());
}

std::size_t Csp::num_literals() const {
    std::size_t n = 0;
    for (const auto& d : domains_) n += d.size();
    return n;
}

bool operator==(const Csp& a, const Csp& b) {
    return a.kind_ == b.kind_ && a.variables_ == b.variables_ && a.domains_ == b.domains_ &&
           a.constraints_ == b.constraints_;
}

std::size_t ConstraintGraph::num_edges() const {
    std::size_t twice = 0;
    for (const auto& adj : adjacency) twice += adj.size();
    return twice / 2;
}

bool ConstraintGraph::has_edge(VarIndex u, VarIndex v) const {
    const auto& adj = adjacency.at(u);
    return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<VarIndex> constraint_variables(const Constraint& c) {
    std::vector<VarIndex> vars;
    if (const auto* m = std::get_if<MutexPair>(&c)) {
        vars = {m->a.var, m->b.var};
    } else {
        for (const auto& lit : std::get<Clause>(c).literals) vars.push_back(lit.var);
    }
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
}

ConstraintGraph constraint_graph(const Csp& csp) {
    ConstraintGraph g;
    g.adjacency.resize(csp.num_variables());
    for (const auto& c : csp.constraints()) {
        auto vars = constraint_variables(c);
        for (std::size_t i = 0; i < vars.size(); ++i) {
            for (std::size_t j = i + 1; j < vars.size(); ++j) {
                g.adjacency[vars[i]].push_back(vars[j]);
                g.adjacency[vars[j]].push_back(vars[i]);
            }
        }
    }
    for (auto& adj : g.adjacency) {
        std::sort(adj.begin(), adj.end());
        adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    }
    return g;
}

std::size_t variable_degree(const Csp& csp, VarIndex var) {
    if (var >= csp.num_variables()) {
        throw std::out_of_range("unknown variable index " + std::to_string(var));
    }
    std::unordered_set<VarIndex> neighbors;
    for (const auto& c : csp.constraints()) {
        auto vars = constraint_variables(c);
        if (!std::binary_search(vars.begin(), vars.end(), var)) continue;
        for (auto u : vars) {
            if (u != var) neighbors.insert(u);
        }
    }
    return neighbors.size();
}

std::size_t variable_degree(const Csp& csp, std::string_view var) {
    return variable_degree(csp, csp.variable_index(var));
}

Verdict check_assignment(const Csp& csp, const Assignment& a) {
    if (a.size() != csp.num_variables()) {
        throw std::invalid_argument("assignment has " + std::to_string(a.size()) +
                                    " entries, expected " +
                                    std::to_string(csp.num_variables()));
    }
    if (!a.complete()) {
        throw std::invalid_argument("check_assignment requires a complete assignment");
    }
    Verdict verdict;
    const auto& cs = csp.constraints();
    for (std::size_t i = 0; i < cs.size(); ++i) {
        bool ok;
        if (const auto* m = std::get_if<MutexPair>(&cs[i])) {
            ok = !(literal_holds(a, m->a) && literal_holds(a, m->b));
        } else {
            const auto& lits = std::get<Clause>(cs[i]).literals;
            ok = std::any_of(lits.begin(), lits.end(),
                             [&](const Literal& l) { return literal_holds(a, l); });
        }
        if (!ok) verdict.violations.push_back(i);
    }
    for (VarIndex v = 0; v < a.size(); ++v) {
        if (*a[v] >= csp.domain_size(v)) {
            throw std::invalid_argument("value out of domain for variable '" +
                                        csp.variables()[v] + "'");
        }
    }
    return verdict;
}

}  // namespace spikecsp
