#include "spikecsp/readout.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace spikecsp {

bool MultiAssignment::expandable() const {
    return std::none_of(values.begin(), values.end(), [](const auto& s) { return s.empty(); });
}

std::uint64_t MultiAssignment::product_size(std::uint64_t limit) const {
    std::uint64_t p = 1;
    for (const auto& s : values) {
        if (s.empty()) return 0;
        if (p > limit / s.size()) return limit;
        p *= s.size();
    }
    return std::min(p, limit);
}

MultiAssignment decode(const Network& net, std::span<const std::uint8_t> x) {
    if (x.size() != net.size()) throw std::invalid_argument("state dimension mismatch");
    MultiAssignment m;
    m.values.resize(net.num_variables());
    for (VarIndex v = 0; v < net.num_variables(); ++v) {
        const NeuronId first = net.first_neuron(v);
        for (ValueIndex val = 0; val < net.domain_size(v); ++val) {
            if (x[first + val]) m.values[v].push_back(val);
        }
    }
    return m;
}

SolutionExpander::SolutionExpander(const Csp& csp) : csp_(csp), closing_(csp.num_variables()) {
    for (std::size_t ci = 0; ci < csp.num_constraints(); ++ci) {
        const auto vars = constraint_variables(csp.constraints()[ci]);
        closing_[vars.back()].push_back(ci);
    }
}

namespace {

struct Search {
    const Csp& csp;
    const std::vector<std::vector<std::size_t>>& closing;
    const MultiAssignment& m;
    std::vector<std::uint64_t> subtree;  // leaves below depth d, saturated
    std::uint64_t budget;
    Assignment current;
    std::vector<Assignment> out;

    bool consistent(VarIndex depth) const {
        for (auto ci : closing[depth]) {
            const auto& c = csp.constraints()[ci];
            if (const auto* mp = std::get_if<MutexPair>(&c)) {
                if (literal_holds(current, mp->a) && literal_holds(current, mp->b)) return false;
            } else {
                const auto& lits = std::get<Clause>(c).literals;
                if (std::none_of(lits.begin(), lits.end(),
                                 [&](const Literal& l) { return literal_holds(current, l); })) {
                    return false;
                }
            }
        }
        return true;
    }

    void descend(VarIndex depth) {
        const std::size_t n = m.values.size();
        for (auto val : m.values[depth]) {
            if (budget == 0) return;
            current[depth] = val;
            if (!consistent(depth)) {
                budget -= std::min(budget, subtree[depth + 1]);
                continue;
            }
            if (depth + 1 == n) {
                out.push_back(current);
                --budget;
            } else {
                descend(depth + 1);
            }
        }
        current[depth].reset();
    }
};

}  // namespace

Expansion SolutionExpander::expand(const MultiAssignment& m, std::uint64_t cap) const {
    if (m.values.size() != csp_.num_variables()) {
        throw std::invalid_argument("multi-assignment size mismatch");
    }
    Expansion result;
    result.expandable = m.expandable();
    if (!result.expandable || cap == 0) return result;

    const std::size_t n = m.values.size();
    const std::uint64_t limit = cap + 1;
    Search s{csp_, closing_, m, std::vector<std::uint64_t>(n + 1, 1), cap, Assignment(n), {}};
    for (std::size_t d = n; d-- > 0;) {
        const std::uint64_t size = m.values[d].size();
        s.subtree[d] = s.subtree[d + 1] > limit / size ? limit : s.subtree[d + 1] * size;
    }
    result.truncated = s.subtree[0] > cap;
    if (n > 0) s.descend(0);

    for (const auto& a : s.out) {
        for (VarIndex v = 0; v < n; ++v) {
            if (std::find(m.values[v].begin(), m.values[v].end(), *a[v]) == m.values[v].end()) {
                throw std::logic_error("expansion left the multi-assignment");
            }
        }
        if (!check_assignment(csp_, a).satisfied()) {
            throw std::logic_error("expansion produced an invalid solution");
        }
    }
    result.solutions = std::move(s.out);
    return result;
}

Expansion expand_solutions(const MultiAssignment& m, const Csp& csp, std::uint64_t cap) {
    return SolutionExpander(csp).expand(m, cap);
}

std::vector<std::size_t> canonical_coloring(const Csp& csp, const Assignment& a) {
    if (csp.kind() != ProblemKind::coloring) {
        throw std::invalid_argument("canonical_coloring needs a coloring problem");
    }
    if (a.size() != csp.num_variables() || !a.complete()) {
        throw std::invalid_argument("canonical_coloring needs a complete assignment");
    }
    std::vector<std::size_t> relabel;
    std::vector<ValueIndex> seen;
    relabel.reserve(a.size());
    for (const auto& v : a.values) {
        auto it = std::find(seen.begin(), seen.end(), *v);
        if (it == seen.end()) {
            seen.push_back(*v);
            relabel.push_back(seen.size());
        } else {
            relabel.push_back(static_cast<std::size_t>(it - seen.begin()) + 1);
        }
    }
    return relabel;
}

DiversityReport diversity_report(const std::vector<Assignment>& solutions, const Csp& csp) {
    DiversityReport r;
    r.n_solutions = solutions.size();
    std::set<Assignment> distinct;
    std::set<std::vector<std::size_t>> classes;
    for (const auto& s : solutions) {
        if (!distinct.insert(s).second) ++r.duplicate_count;
        if (csp.kind() == ProblemKind::coloring) classes.insert(canonical_coloring(csp, s));
    }
    r.n_classes = csp.kind() == ProblemKind::coloring ? classes.size() : distinct.size();
    return r;
}

}  // namespace spikecsp
