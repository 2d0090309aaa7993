#include "spikecsp/problems.hpp"

#include "spikecsp/random.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace spikecsp {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
      line_(line) {}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

long long parse_int(const std::string& tok, std::size_t line_no) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw ParseError(line_no, "expected integer, got '" + tok + "'");
    }
    return value;
}

std::vector<std::vector<std::string>> boolean_domains(std::size_t n) {
    return std::vector<std::vector<std::string>>(n, {"true", "false"});
}

std::vector<std::string> numbered(std::string_view prefix, std::size_t n, std::size_t first = 0) {
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(prefix) + std::to_string(i + first));
    return names;
}

std::vector<std::string> color_labels(std::size_t k) {
    static const std::array<const char*, 6> palette = {"red", "green", "blue",
                                                       "yellow", "cyan", "magenta"};
    std::vector<std::string> labels;
    for (std::size_t c = 0; c < k; ++c) {
        labels.push_back(c < palette.size() ? palette[c] : "color" + std::to_string(c + 1));
    }
    return labels;
}

// --- Delaunay triangulation (Bowyer-Watson) ---------------------------------

struct Point {
    double x, y;
};

struct Triangle {
    std::array<std::size_t, 3> v;
};

bool in_circumcircle(const std::vector<Point>& pts, const Triangle& t, const Point& p) {
    const Point& a = pts[t.v[0]];
    const Point& b = pts[t.v[1]];
    const Point& c = pts[t.v[2]];
    const double ax = a.x - p.x, ay = a.y - p.y;
    const double bx = b.x - p.x, by = b.y - p.y;
    const double cx = c.x - p.x, cy = c.y - p.y;
    const double det = (ax * ax + ay * ay) * (bx * cy - cx * by) -
                       (bx * bx + by * by) * (ax * cy - cx * ay) +
                       (cx * cx + cy * cy) * (ax * by - bx * ay);
    const double orient = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return orient > 0 ? det > 0 : det < 0;
}

// Triangles of the Delaunay triangulation of `input`.
std::vector<Triangle> delaunay(const std::vector<Point>& input) {
    std::vector<Point> pts = input;
    const std::size_t n = input.size();
    // Super triangle enclosing the unit square.
    pts.push_back({-10.0, -10.0});
    pts.push_back({30.0, -10.0});
    pts.push_back({-10.0, 30.0});
    std::vector<Triangle> tris = {{{n, n + 1, n + 2}}};

    for (std::size_t p = 0; p < n; ++p) {
        std::vector<Triangle> keep;
        std::map<Edge, int> boundary;
        for (const auto& t : tris) {
            if (in_circumcircle(pts, t, pts[p])) {
                for (int e = 0; e < 3; ++e) {
                    auto a = t.v[e], b = t.v[(e + 1) % 3];
                    ++boundary[{std::min(a, b), std::max(a, b)}];
                }
            } else {
                keep.push_back(t);
            }
        }
        for (const auto& [edge, count] : boundary) {
            if (count == 1) keep.push_back({{edge.first, edge.second, p}});
        }
        tris = std::move(keep);
    }
    std::erase_if(tris, [n](const Triangle& t) {
        return t.v[0] >= n || t.v[1] >= n || t.v[2] >= n;
    });
    return tris;
}

// Maximal planar graph: the triangulation plus chords through the outer
// face, each joining two hull vertices at distance two along the outer cycle,
// until the outer face is itself a triangle.
std::set<Edge> maximal_planar_edges(std::size_t n, Rng& rng) {
    std::vector<Point> pts(n);
    for (auto& p : pts) {
        p.x = rng.uniform();
        p.y = rng.uniform();
    }
    std::map<Edge, int> incidence;
    for (const auto& t : delaunay(pts)) {
        for (int e = 0; e < 3; ++e) {
            auto a = t.v[e], b = t.v[(e + 1) % 3];
            ++incidence[{std::min(a, b), std::max(a, b)}];
        }
    }
    std::set<Edge> edges;
    std::vector<std::vector<std::size_t>> hull_adj(n);
    for (const auto& [edge, count] : incidence) {
        edges.insert(edge);
        if (count == 1) {
            hull_adj[edge.first].push_back(edge.second);
            hull_adj[edge.second].push_back(edge.first);
        }
    }

    std::vector<std::size_t> cycle;
    for (std::size_t v = 0; v < n; ++v) {
        if (!hull_adj[v].empty()) {
            cycle.push_back(v);
            break;
        }
    }
    if (cycle.empty()) throw std::logic_error("degenerate point set");
    std::size_t prev = cycle.front(), cur = hull_adj[prev].front();
    while (cur != cycle.front()) {
        cycle.push_back(cur);
        const auto& nb = hull_adj[cur];
        std::size_t next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
    }

    auto has = [&](std::size_t a, std::size_t b) {
        return edges.count({std::min(a, b), std::max(a, b)}) > 0;
    };
    while (cycle.size() > 3) {
        const std::size_t m = cycle.size();
        const std::size_t offset = rng.below(m);
        bool added = false;
        for (std::size_t k = 0; k < m && !added; ++k) {
            const std::size_t i = (offset + k) % m;
            const std::size_t a = cycle[(i + m - 1) % m], b = cycle[(i + 1) % m];
            if (!has(a, b)) {
                edges.insert({std::min(a, b), std::max(a, b)});
                cycle.erase(cycle.begin() + static_cast<std::ptrdiff_t>(i));
                added = true;
            }
        }
        if (!added) throw std::logic_error("outer face cannot be closed");
    }
    return edges;
}

}  // namespace

// --- SAT --------------------------------------------------------------------

Csp parse_dimacs(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    std::size_t header_line = 0;
    long long n_vars = -1, n_clauses = -1;
    std::vector<Constraint> clauses;
    std::vector<Literal> current;
    std::size_t clause_start_line = 0;

    while (std::getline(in, line)) {
        ++line_no;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks[0][0] == 'c') continue;
        if (toks[0][0] == '%') break;
        if (toks[0] == "p") {
            if (n_vars >= 0) throw ParseError(line_no, "duplicate problem line");
            if (toks.size() != 4 || toks[1] != "cnf") {
                throw ParseError(line_no, "malformed header, expected 'p cnf <vars> <clauses>'");
            }
            n_vars = parse_int(toks[2], line_no);
            n_clauses = parse_int(toks[3], line_no);
            if (n_vars < 1 || n_clauses < 0) throw ParseError(line_no, "malformed header counts");
            header_line = line_no;
            continue;
        }
        if (n_vars < 0) throw ParseError(line_no, "clause data before 'p cnf' header");
        for (const auto& tok : toks) {
            const long long lit = parse_int(tok, line_no);
            if (lit == 0) {
                if (current.empty()) throw ParseError(line_no, "empty clause");
                std::sort(current.begin(), current.end());
                current.erase(std::unique(current.begin(), current.end()), current.end());
                clauses.emplace_back(Clause{std::move(current)});
                current.clear();
                continue;
            }
            if (current.empty()) clause_start_line = line_no;
            if (std::llabs(lit) > n_vars) {
                throw ParseError(line_no, "literal " + tok + " out of range 1.." +
                                              std::to_string(n_vars));
            }
            current.push_back({static_cast<VarIndex>(std::llabs(lit) - 1),
                               lit > 0 ? kTrue : kFalse});
        }
    }
    if (n_vars < 0) throw ParseError(line_no, "missing 'p cnf' header");
    if (!current.empty()) throw ParseError(clause_start_line, "clause not terminated by 0");
    if (static_cast<long long>(clauses.size()) != n_clauses) {
        throw ParseError(header_line, "header declares " + std::to_string(n_clauses) +
                                          " clauses, found " + std::to_string(clauses.size()));
    }
    const auto n = static_cast<std::size_t>(n_vars);
    return Csp(numbered("x", n, 1), boolean_domains(n), std::move(clauses), ProblemKind::sat);
}

Csp parse_dimacs_string(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_dimacs(in);
}

Csp gen_random_ksat(std::size_t n_vars, std::size_t n_clauses, std::size_t k,
                    std::uint64_t seed) {
    if (k == 0 || k > n_vars) throw std::invalid_argument("clause width must be in 1..n_vars");
    Rng rng(seed);
    std::vector<Constraint> clauses;
    clauses.reserve(n_clauses);
    for (std::size_t c = 0; c < n_clauses; ++c) {
        std::vector<Literal> lits;
        while (lits.size() < k) {
            const auto v = static_cast<VarIndex>(rng.below(n_vars));
            if (std::any_of(lits.begin(), lits.end(), [v](const Literal& l) { return l.var == v; })) {
                continue;
            }
            lits.push_back({v, rng.below(2) == 0 ? kTrue : kFalse});
        }
        clauses.emplace_back(Clause{std::move(lits)});
    }
    return Csp(numbered("x", n_vars, 1), boolean_domains(n_vars), std::move(clauses),
               ProblemKind::sat);
}

// --- coloring ---------------------------------------------------------------

Csp coloring_csp(std::size_t n_nodes, const std::vector<Edge>& edges, std::size_t k_colors,
                 std::vector<std::string> node_names) {
    if (k_colors == 0) throw std::invalid_argument("need at least one color");
    if (node_names.empty()) node_names = numbered("v", n_nodes);
    if (node_names.size() != n_nodes) throw std::invalid_argument("node name count mismatch");
    std::set<Edge> unique;
    for (auto [u, v] : edges) {
        if (u >= n_nodes || v >= n_nodes) throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop on node " + std::to_string(u));
        unique.insert({std::min(u, v), std::max(u, v)});
    }
    std::vector<Constraint> constraints;
    for (auto [u, v] : unique) {
        for (std::size_t c = 0; c < k_colors; ++c) {
            constraints.emplace_back(MutexPair{{u, c}, {v, c}});
        }
    }
    return Csp(std::move(node_names),
               std::vector<std::vector<std::string>>(n_nodes, color_labels(k_colors)),
               std::move(constraints), ProblemKind::coloring);
}

Csp complete_graph_coloring(std::size_t n_nodes, std::size_t k_colors) {
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < n_nodes; ++u) {
        for (std::size_t v = u + 1; v < n_nodes; ++v) edges.emplace_back(u, v);
    }
    return coloring_csp(n_nodes, edges, k_colors);
}

std::vector<Edge> gen_planar_graph(std::size_t n_nodes, double density, std::uint64_t seed) {
    if (n_nodes < 3) throw std::invalid_argument("planar generator needs at least 3 nodes");
    if (!(density > 0.0) || density > 1.0) {
        throw std::invalid_argument("density must lie in (0, 1]");
    }
    const std::size_t max_edges = 3 * n_nodes - 6;
    const auto target = static_cast<std::size_t>(std::floor(density * max_edges + 1e-9));
    if (target == 0) throw std::invalid_argument("density too low: no edges would remain");

    Rng rng(seed);
    const auto all = maximal_planar_edges(n_nodes, rng);
    if (all.size() != max_edges) throw std::logic_error("triangulation is not maximal planar");
    std::vector<Edge> edges(all.begin(), all.end());
    rng.shuffle(edges);
    edges.resize(target);
    std::sort(edges.begin(), edges.end());
    return edges;
}

Csp gen_planar_coloring(std::size_t n_nodes, double density, std::size_t k_colors,
                        std::uint64_t seed) {
    return coloring_csp(n_nodes, gen_planar_graph(n_nodes, density, seed), k_colors);
}

Csp parse_coloring(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    long long n = -1, k = -1;
    std::vector<Edge> edges;
    std::vector<std::string> names;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks[0] == "nodes") {
            if (n >= 0) throw ParseError(line_no, "duplicate header");
            if (toks.size() != 4 || toks[2] != "colors") {
                throw ParseError(line_no, "malformed header, expected 'nodes <n> colors <k>'");
            }
            n = parse_int(toks[1], line_no);
            k = parse_int(toks[3], line_no);
            if (n < 1 || k < 1) throw ParseError(line_no, "header counts must be positive");
            names = numbered("v", static_cast<std::size_t>(n));
            continue;
        }
        if (n < 0) throw ParseError(line_no, "data before 'nodes <n> colors <k>' header");
        if (toks[0] == "name") {
            if (toks.size() != 3) throw ParseError(line_no, "expected 'name <id> <label>'");
            const auto id = parse_int(toks[1], line_no);
            if (id < 0 || id >= n) throw ParseError(line_no, "node id out of range");
            names[static_cast<std::size_t>(id)] = toks[2];
            continue;
        }
        if (toks.size() != 2) throw ParseError(line_no, "expected '<u> <v>'");
        const auto u = parse_int(toks[0], line_no);
        const auto v = parse_int(toks[1], line_no);
        if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(line_no, "node id out of range");
        if (u == v) throw ParseError(line_no, "self-loop");
        edges.emplace_back(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
    }
    if (n < 0) throw ParseError(line_no, "missing 'nodes <n> colors <k>' header");
    try {
        return coloring_csp(static_cast<std::size_t>(n), edges, static_cast<std::size_t>(k),
                            std::move(names));
    } catch (const std::invalid_argument& e) {
        throw ParseError(0, e.what());
    }
}

Csp parse_coloring_string(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_coloring(in);
}

// --- Sudoku -----------------------------------------------------------------

SudokuGrid parse_sudoku(std::string_view text) {
    SudokuGrid grid{};
    std::size_t i = 0;
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        if (i >= 81) throw ParseError(0, "sudoku string longer than 81 cells");
        if (ch == '.' || ch == '0') {
            grid[i] = 0;
        } else if (ch >= '1' && ch <= '9') {
            grid[i] = ch - '0';
        } else {
            throw ParseError(0, std::string("invalid sudoku character '") + ch + "'");
        }
        ++i;
    }
    if (i != 81) throw ParseError(0, "sudoku string has " + std::to_string(i) + " cells, need 81");
    return grid;
}

Csp sudoku_to_csp(const SudokuGrid& grid) {
    auto peers = [](std::size_t a, std::size_t b) {
        const std::size_t ra = a / 9, ca = a % 9, rb = b / 9, cb = b % 9;
        return ra == rb || ca == cb || (ra / 3 == rb / 3 && ca / 3 == cb / 3);
    };
    std::vector<std::string> names;
    std::vector<std::vector<std::string>> domains;
    for (std::size_t cell = 0; cell < 81; ++cell) {
        const int g = grid[cell];
        if (g < 0 || g > 9) throw std::invalid_argument("sudoku cell value out of range");
        names.push_back("r" + std::to_string(cell / 9 + 1) + "c" + std::to_string(cell % 9 + 1));
        if (g == 0) {
            domains.push_back(numbered("", 9, 1));
        } else {
            domains.push_back({std::to_string(g)});
        }
    }
    for (std::size_t a = 0; a < 81; ++a) {
        for (std::size_t b = a + 1; b < 81; ++b) {
            if (grid[a] != 0 && grid[a] == grid[b] && peers(a, b)) {
                throw std::invalid_argument("contradictory givens at " + names[a] + " and " +
                                            names[b]);
            }
        }
    }
    std::vector<Constraint> constraints;
    for (std::size_t a = 0; a < 81; ++a) {
        for (std::size_t b = a + 1; b < 81; ++b) {
            if (!peers(a, b)) continue;
            for (std::size_t va = 0; va < domains[a].size(); ++va) {
                for (std::size_t vb = 0; vb < domains[b].size(); ++vb) {
                    if (domains[a][va] == domains[b][vb]) {
                        constraints.emplace_back(MutexPair{{a, va}, {b, vb}});
                    }
                }
            }
        }
    }
    return Csp(std::move(names), std::move(domains), std::move(constraints), ProblemKind::sudoku);
}

// --- Ising ------------------------------------------------------------------

Csp ising_to_csp(const IsingTopology& topology, Coupling coupling) {
    std::vector<Edge> edges;
    std::size_t n = 0;
    if (topology.shape == IsingTopology::Shape::ring) {
        n = topology.nx;
        if (n < 2) throw std::invalid_argument("ring needs at least 2 spins");
        for (std::size_t i = 0; i < n; ++i) {
            auto j = (i + 1) % n;
            edges.emplace_back(std::min(i, j), std::max(i, j));
        }
    } else {
        const auto nx = topology.nx, ny = topology.ny, nz = topology.nz;
        if (nx < 2 || ny < 2 || nz < 2) {
            throw std::invalid_argument("cube needs at least 2 spins per dimension");
        }
        n = nx * ny * nz;
        auto id = [&](std::size_t x, std::size_t y, std::size_t z) { return (z * ny + y) * nx + x; };
        for (std::size_t z = 0; z < nz; ++z) {
            for (std::size_t y = 0; y < ny; ++y) {
                for (std::size_t x = 0; x < nx; ++x) {
                    if (x + 1 < nx) edges.emplace_back(id(x, y, z), id(x + 1, y, z));
                    if (y + 1 < ny) edges.emplace_back(id(x, y, z), id(x, y + 1, z));
                    if (z + 1 < nz) edges.emplace_back(id(x, y, z), id(x, y, z + 1));
                }
            }
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    std::vector<Constraint> constraints;
    for (auto [u, v] : edges) {
        if (coupling == Coupling::antiferro) {
            constraints.emplace_back(MutexPair{{u, 0}, {v, 0}});
            constraints.emplace_back(MutexPair{{u, 1}, {v, 1}});
        } else {
            constraints.emplace_back(MutexPair{{u, 0}, {v, 1}});
            constraints.emplace_back(MutexPair{{u, 1}, {v, 0}});
        }
    }
    return Csp(numbered("s", n),
               std::vector<std::vector<std::string>>(n, {"+1", "-1"}),
               std::move(constraints), ProblemKind::ising);
}

Csp map_coloring(std::string_view region, std::size_t k_colors) {
    std::vector<std::string> names;
    std::vector<std::pair<std::string_view, std::string_view>> borders;
    if (region == "australia") {
        names = {"WA", "NT", "SA", "Q", "NSW", "V", "T"};
        borders = {{"WA", "NT"}, {"WA", "SA"}, {"NT", "SA"}, {"NT", "Q"},  {"SA", "Q"},
                   {"SA", "NSW"}, {"SA", "V"}, {"Q", "NSW"}, {"NSW", "V"}};
    } else if (region == "canada") {
        names = {"YT", "NT", "NU", "BC", "AB", "SK", "MB", "ON", "QC", "NB", "NS", "PE", "NL"};
        borders = {{"YT", "NT"}, {"YT", "BC"}, {"NT", "NU"}, {"NT", "BC"}, {"NT", "AB"},
                   {"NT", "SK"}, {"NU", "MB"}, {"BC", "AB"}, {"AB", "SK"}, {"SK", "MB"},
                   {"MB", "ON"}, {"ON", "QC"}, {"QC", "NB"}, {"QC", "NL"}, {"NB", "NS"}};
    } else {
        throw std::invalid_argument("unknown map '" + std::string(region) +
                                    "' (available: australia, canada)");
    }
    auto index = [&](std::string_view name) {
        return static_cast<std::size_t>(std::find(names.begin(), names.end(), name) - names.begin());
    };
    std::vector<Edge> edges;
    for (auto [a, b] : borders) edges.emplace_back(index(a), index(b));
    const std::size_t n = names.size();
    return coloring_csp(n, edges, k_colors, std::move(names));
}

namespace {

std::vector<std::string> split(std::string_view text, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        parts.emplace_back(text.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

std::uint64_t spec_uint(const std::string& tok, std::string_view spec) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw std::invalid_argument("bad number '" + tok + "' in problem spec '" +
                                    std::string(spec) + "'");
    }
    return value;
}

Coupling spec_coupling(const std::string& tok) {
    if (tok == "ferro") return Coupling::ferro;
    if (tok == "antiferro") return Coupling::antiferro;
    throw std::invalid_argument("coupling must be ferro or antiferro, got '" + tok + "'");
}

bool ends_with(std::string_view s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

}  // namespace

Csp load_problem(std::string_view spec) {
    if (ends_with(spec, ".cnf") || ends_with(spec, ".col") || ends_with(spec, ".sdk")) {
        std::ifstream in{std::string(spec)};
        if (!in) throw std::invalid_argument("cannot open '" + std::string(spec) + "'");
        if (ends_with(spec, ".cnf")) return parse_dimacs(in);
        if (ends_with(spec, ".col")) return parse_coloring(in);
        std::stringstream text;
        text << in.rdbuf();
        return sudoku_to_csp(parse_sudoku(text.str()));
    }
    const auto parts = split(spec, ':');
    const auto& family = parts.front();
    auto expect = [&](std::size_t n) {
        if (parts.size() != n + 1) {
            throw std::invalid_argument("problem spec '" + std::string(spec) + "' needs " +
                                        std::to_string(n) + " fields after '" + family + "'");
        }
    };
    auto num = [&](std::size_t i) { return spec_uint(parts[i], spec); };
    if (family == "planar") {
        expect(4);
        double density = 0.0;
        try {
            density = std::stod(parts[2]);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad density '" + parts[2] + "'");
        }
        return gen_planar_coloring(num(1), density, num(3), num(4));
    }
    if (family == "ksat") {
        expect(4);
        return gen_random_ksat(num(1), num(2), num(3), num(4));
    }
    if (family == "complete") {
        expect(2);
        return complete_graph_coloring(num(1), num(2));
    }
    if (family == "map") {
        expect(2);
        return map_coloring(parts[1], num(2));
    }
    if (family == "ring") {
        expect(2);
        return ising_to_csp(IsingTopology::ring(num(1)), spec_coupling(parts[2]));
    }
    if (family == "cube") {
        expect(4);
        return ising_to_csp(IsingTopology::cube(num(1), num(2), num(3)), spec_coupling(parts[4]));
    }
    if (family == "sudoku") {
        expect(1);
        return sudoku_to_csp(parse_sudoku(parts[1]));
    }
    throw std::invalid_argument("unknown problem '" + std::string(spec) +
                                "' (expected a .cnf/.col/.sdk file or a generator spec)");
}

}  // namespace spikecsp
