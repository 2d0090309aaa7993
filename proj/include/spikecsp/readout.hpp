// readout.hpp - turns network states into multi-valued assignments, expands
//  them into verified solutions and groups colorings by color permutation.
#ifndef SPIKECSP_READOUT_HPP
#define SPIKECSP_READOUT_HPP

#include "spikecsp/compiler.hpp"
#include "spikecsp/csp.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace spikecsp {

/// Set of active domain values per variable (empty or several allowed).
struct MultiAssignment {
    std::vector<std::vector<ValueIndex>> values;

    bool expandable() const;
    /// Cartesian product size, saturating at `limit`.
    std::uint64_t product_size(std::uint64_t limit) const;
};

/// Principal neuron (v, val) active => val in the set of v. Auxiliary
/// neurons are ignored.
MultiAssignment decode(const Network& net, std::span<const std::uint8_t> x);

struct Expansion {
    std::vector<Assignment> solutions;
    bool expandable = false;  // false when some variable has no active value
    bool truncated = false;   // product exceeded the cap
};

/// Enumerates the Cartesian product of a MultiAssignment in lexicographic
/// order (variable 0 most significant) and keeps the combinations that pass
/// check_assignment. When the product exceeds `cap`, only its first `cap`
/// combinations are examined and the result is flagged truncated.
class SolutionExpander {
public:
    explicit SolutionExpander(const Csp& csp);

    Expansion expand(const MultiAssignment& m, std::uint64_t cap) const;

private:
    const Csp& csp_;
    // Constraints grouped by the highest variable index they mention.
    std::vector<std::vector<std::size_t>> closing_;
};

Expansion expand_solutions(const MultiAssignment& m, const Csp& csp, std::uint64_t cap = 4096);

/// Colors relabelled 1, 2, ... by first appearance over the variable order.
/// Throws std::invalid_argument for a non-coloring Csp or a partial
/// assignment.
std::vector<std::size_t> canonical_coloring(const Csp& csp, const Assignment& a);

struct DiversityReport {
    std::size_t n_solutions = 0;
    std::size_t n_classes = 0;
    std::size_t duplicate_count = 0;

    friend bool operator==(const DiversityReport&, const DiversityReport&) = default;
};

/// Classes are color-permutation classes for coloring problems and distinct
/// assignments otherwise.
DiversityReport diversity_report(const std::vector<Assignment>& solutions, const Csp& csp);

}  // namespace spikecsp

#endif  // SPIKECSP_READOUT_HPP
