// problems.hpp - readers and generators for the benchmark problem families
//  (CNF-SAT, planar and map coloring, Sudoku, Ising spin systems).
#ifndef SPIKECSP_PROBLEMS_HPP
#define SPIKECSP_PROBLEMS_HPP

#include "spikecsp/csp.hpp"

#include <array>
#include <cstdint>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace spikecsp {

/// Malformed input; `line()` is 1-based, 0 when not attributable.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// SAT literals: value 0 is True, value 1 is False.
inline constexpr ValueIndex kTrue = 0;
inline constexpr ValueIndex kFalse = 1;

using Edge = std::pair<std::size_t, std::size_t>;

/// DIMACS CNF. A line starting with '%' ends the clause section (SATLIB
/// convention). Negative literal -k maps to (x_k, False).
Csp parse_dimacs(std::istream& in);
Csp parse_dimacs_string(std::string_view text);

/// Uniform random k-CNF with `n_clauses` clauses over distinct variables.
/// Satisfiability is not guaranteed.
Csp gen_random_ksat(std::size_t n_vars, std::size_t n_clauses, std::size_t k,
                    std::uint64_t seed);

/// Graph k-coloring: one variable per node, and per edge k same-color mutex
/// pairs.
Csp coloring_csp(std::size_t n_nodes, const std::vector<Edge>& edges, std::size_t k_colors,
                 std::vector<std::string> node_names = {});

/// Complete graph K_n with k colors.
Csp complete_graph_coloring(std::size_t n_nodes, std::size_t k_colors);

/// Random planar graph: maximal planar graph over seeded points (Delaunay
/// triangulation closed over the outer face) thinned to
/// floor(density * (3n - 6)) uniformly chosen edges. Edges are sorted.
std::vector<Edge> gen_planar_graph(std::size_t n_nodes, double density, std::uint64_t seed);

Csp gen_planar_coloring(std::size_t n_nodes, double density, std::size_t k_colors,
                        std::uint64_t seed);

/// Adjacency-list coloring format:
///   nodes <n> colors <k>
///   name <id> <label>     (optional)
///   <u> <v>               (0-based node ids)
/// '#' starts a comment.
Csp parse_coloring(std::istream& in);
Csp parse_coloring_string(std::string_view text);

using SudokuGrid = std::array<int, 81>;

/// 81 characters row-major; '0' or '.' for blanks. Whitespace ignored.
SudokuGrid parse_sudoku(std::string_view text);

/// Givens restrict the cell's domain to a singleton; every same-unit cell
/// pair gets a mutex per shared value.
Csp sudoku_to_csp(const SudokuGrid& grid);

struct IsingTopology {
    enum class Shape { ring, cube };
    Shape shape = Shape::ring;
    std::size_t nx = 2, ny = 1, nz = 1;

    static IsingTopology ring(std::size_t n) { return {Shape::ring, n, 1, 1}; }
    static IsingTopology cube(std::size_t x, std::size_t y, std::size_t z) {
        return {Shape::cube, x, y, z};
    }
};

enum class Coupling { ferro, antiferro };

// Spin values: 0 is +1, 1 is -1. Cubes use open boundaries.
Csp ising_to_csp(const IsingTopology& topology, Coupling coupling);

/// Political map coloring: "australia" (7 regions) or "canada" (13
/// provinces and territories).
Csp map_coloring(std::string_view region, std::size_t k_colors);

/// Loads a problem from a file (.cnf, .col, .sdk) or a generator spec:
///   planar:<n>:<density>:<k>:<seed>   ksat:<n>:<m>:<k>:<seed>
///   complete:<n>:<k>                  map:<region>:<k>
///   ring:<n>:<ferro|antiferro>        cube:<x>:<y>:<z>:<ferro|antiferro>
///   sudoku:<81 chars>
/// Throws std::invalid_argument for an unknown spec and ParseError for a
/// malformed file.
Csp load_problem(std::string_view spec);

}  // namespace spikecsp

#endif  // SPIKECSP_PROBLEMS_HPP
