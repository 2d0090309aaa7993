// csp.hpp - constraint satisfaction problem model: variables with finite
//  domains, pairwise mutual exclusions and disjunctive clauses.
#ifndef SPIKECSP_CSP_HPP
#define SPIKECSP_CSP_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace spikecsp {

using VarIndex = std::size_t;
using ValueIndex = std::size_t;

/// One (variable, value) pair. For SAT a negated literal is the False value.
struct Literal {
    VarIndex var = 0;
    ValueIndex value = 0;

    friend bool operator==(const Literal&, const Literal&) = default;
    friend auto operator<=>(const Literal&, const Literal&) = default;
};

/// The two assignments may not hold simultaneously.
struct MutexPair {
    Literal a;
    Literal b;

    friend bool operator==(const MutexPair&, const MutexPair&) = default;
};

/// At least one literal must hold.
struct Clause {
    std::vector<Literal> literals;

    friend bool operator==(const Clause&, const Clause&) = default;
};

using Constraint = std::variant<MutexPair, Clause>;

enum class ProblemKind { sat, coloring, sudoku, ising, generic };

std::string_view to_string(ProblemKind kind);
ProblemKind problem_kind_from_string(std::string_view name);

/// Value per variable; std::nullopt marks an unassigned variable.
struct Assignment {
    std::vector<std::optional<ValueIndex>> values;

    Assignment() = default;
    explicit Assignment(std::size_t n_vars) : values(n_vars) {}
    explicit Assignment(const std::vector<ValueIndex>& complete);

    bool complete() const;
    std::size_t size() const { return values.size(); }
    const std::optional<ValueIndex>& operator[](VarIndex v) const { return values[v]; }
    std::optional<ValueIndex>& operator[](VarIndex v) { return values[v]; }

    friend bool operator==(const Assignment&, const Assignment&) = default;
    friend auto operator<=>(const Assignment&, const Assignment&) = default;
};

/// Result of checking a complete assignment.
struct Verdict {
    std::vector<std::size_t> violations;  // indices into Csp::constraints()

    bool satisfied() const { return violations.empty(); }
};

/// Immutable <variables, domains, constraints> triplet. The constructor
/// validates every invariant and throws std::invalid_argument otherwise.
class Csp {
public:
    Csp(std::vector<std::string> variables,
        std::vector<std::vector<std::string>> domains,
        std::vector<Constraint> constraints,
        ProblemKind kind = ProblemKind::generic);

    std::size_t num_variables() const { return variables_.size(); }
    std::size_t num_constraints() const { return constraints_.size(); }
    const std::vector<std::string>& variables() const { return variables_; }
    const std::vector<std::vector<std::string>>& domains() const { return domains_; }
    const std::vector<std::string>& domain(VarIndex v) const { return domains_.at(v); }
    std::size_t domain_size(VarIndex v) const { return domains_.at(v).size(); }
    const std::vector<Constraint>& constraints() const { return constraints_; }
    ProblemKind kind() const { return kind_; }

    /// Index of a named variable; throws std::out_of_range if unknown.
    VarIndex variable_index(std::string_view name) const;
    /// Index of a value label in a variable's domain, if present.
    std::optional<ValueIndex> value_index(VarIndex var, std::string_view label) const;

    /// Total number of (variable, value) pairs.
    std::size_t num_literals() const;

    friend bool operator==(const Csp& a, const Csp& b);

private:
    std::vector<std::string> variables_;
    std::vector<std::vector<std::string>> domains_;
    std::vector<Constraint> constraints_;
    ProblemKind kind_;
};

/// Undirected simple graph over variables. Adjacency lists are sorted.
struct ConstraintGraph {
    std::vector<std::vector<VarIndex>> adjacency;

    std::size_t num_nodes() const { return adjacency.size(); }
    std::size_t num_edges() const;
    std::size_t degree(VarIndex v) const { return adjacency.at(v).size(); }
    bool has_edge(VarIndex u, VarIndex v) const;
};

/// Edge (u,v) iff some constraint mentions both u and v. A clause couples
/// every pair of its variables.
ConstraintGraph constraint_graph(const Csp& csp);

/// Throws std::out_of_range for an unknown variable.
std::size_t variable_degree(const Csp& csp, VarIndex var);
std::size_t variable_degree(const Csp& csp, std::string_view var);

/// Throws std::invalid_argument when `a` is partial or mis-sized.
Verdict check_assignment(const Csp& csp, const Assignment& a);

/// True when the literal holds under a complete or partial assignment.
inline bool literal_holds(const Assignment& a, const Literal& lit) {
    return a[lit.var].has_value() && *a[lit.var] == lit.value;
}

std::vector<VarIndex> constraint_variables(const Constraint& c);

}  // namespace spikecsp

#endif  // SPIKECSP_CSP_HPP
