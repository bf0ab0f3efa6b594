#include "drc/formulations.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace drc {

namespace {

// Node-row colors from a candidate already rounded by the formulation's
// assignment-type projection.
std::vector<int> colorsFromRounded(const Matrix& z, int n)
{
    std::vector<int> colors(n, 0);
    const int m = static_cast<int>(z.cols());
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < m; ++k)
            if (z(i, k) == 1.0) {
                colors[i] = k + 1;
                break;
            }
    }
    return colors;
}

nlohmann::json colorsJson(const std::vector<int>& colors)
{
    return nlohmann::json{{"colors", colors}};
}

std::vector<int> colorsFromJson(const nlohmann::json& solution)
{
    return solution.at("colors").get<std::vector<int>>();
}

void checkLists(const AdmissibleLists& lists, int n, int m)
{
    if (static_cast<int>(lists.size()) != n)
        throw InvalidParameter("admissible list count must equal node count");
    for (const auto& list : lists) {
        if (list.empty())
            throw EmptyAdmissibleList("every node needs at least one admissible color");
        for (int c : list)
            if (c < 1 || c > m)
                throw IndexOutOfRange("admissible color out of range");
    }
}

ProjectionOp couplingOp(int n, const std::vector<Edge>& edges,
                        const std::vector<std::vector<int>>& cliques)
{
    return makeNullspaceOp(AffineProjector::build(buildCouplingMatrix(n, edges, cliques)));
}

} // namespace

Formulation standardColoring(const Graph& g, int m, bool useCliques, bool pinFirst,
                             bool useAllColors)
{
    if (m < 1)
        throw InvalidParameter("need at least one color");
    if (useCliques && g.cliques.empty())
        throw MissingCliques("graph carries no clique information");

    const std::vector<std::vector<int>> cliques = useCliques ? g.cliques : std::vector<std::vector<int>>{};
    const int r = static_cast<int>(g.edges.size() + cliques.size());

    Formulation f;
    f.name = "coloring";
    f.nodeCount = g.n;
    f.rows = g.n + r;
    f.colors = m;
    f.ops.push_back(makeOneColorPerRowOp(g.n));
    if (r > 0)
        f.ops.push_back(couplingOp(g.n, g.edges, cliques));
    if (useAllColors)
        f.ops.push_back(makeEveryColorUsedOp(g.n));
    if (pinFirst)
        f.ops.push_back(makePinFirstNodeOp());

    const int n = g.n;
    f.decode = [n](const Matrix& z) { return colorsJson(colorsFromRounded(z, n)); };
    f.validate = [g, m, pinFirst, useAllColors](const nlohmann::json& solution) {
        const auto colors = colorsFromJson(solution);
        for (int c : colors)
            if (c < 1 || c > m)
                return false;
        if (!isProperColoring(g, colors))
            return false;
        if (pinFirst && colors[0] != 1)
            return false;
        if (useAllColors) {
            std::set<int> used(colors.begin(), colors.end());
            if (static_cast<int>(used.size()) != m)
                return false;
        }
        return true;
    };
    return f;
}

Formulation listColoringExtension(const Graph& g, int m, const AdmissibleLists& lists)
{
    checkLists(lists, g.n, m);

    std::vector<Edge> edges = g.edges;
    for (int c1 = 1; c1 <= m; ++c1)
        for (int c2 = c1 + 1; c2 <= m; ++c2)
            edges.push_back({g.n + c1, g.n + c2});
    for (int i = 1; i <= g.n; ++i) {
        std::set<int> allowed(lists[i - 1].begin(), lists[i - 1].end());
        for (int c = 1; c <= m; ++c)
            if (!allowed.count(c))
                edges.push_back({i, g.n + c});
    }
    const Graph extended = makeGraph(g.n + m, std::move(edges));
    const int lStar = static_cast<int>(extended.edges.size());

    Formulation f;
    f.name = "list-coloring-extension";
    f.nodeCount = extended.n;
    f.rows = extended.n + lStar;
    f.colors = m;
    f.ops.push_back(makeOneColorPerRowOp(extended.n));
    f.ops.push_back(couplingOp(extended.n, extended.edges, {}));
    f.ops.push_back(makeEveryColorUsedOp(extended.n));
    f.ops.push_back(makePinColorNodesOp(g.n));

    const int n = g.n;
    f.decode = [n, total = extended.n](const Matrix& z) {
        auto colors = colorsFromRounded(z, total);
        colors.resize(n); // drop the color-representative nodes
        return colorsJson(colors);
    };
    f.validate = [g, m, lists](const nlohmann::json& solution) {
        const auto colors = colorsFromJson(solution);
        for (int c : colors)
            if (c < 1 || c > m)
                return false;
        if (!isProperColoring(g, colors))
            return false;
        for (int i = 0; i < g.n; ++i)
            if (std::find(lists[i].begin(), lists[i].end(), colors[i]) == lists[i].end())
                return false;
        return true;
    };
    return f;
}

Formulation listColoringDirect(const Graph& g, int m, const AdmissibleLists& lists, bool useCliques)
{
    checkLists(lists, g.n, m);
    if (useCliques && g.cliques.empty())
        throw MissingCliques("graph carries no clique information");

    const std::vector<std::vector<int>> cliques = useCliques ? g.cliques : std::vector<std::vector<int>>{};
    const int r = static_cast<int>(g.edges.size() + cliques.size());

    Formulation f;
    f.name = "list-coloring-direct";
    f.nodeCount = g.n;
    f.rows = g.n + r;
    f.colors = m;
    f.ops.push_back(makeAdmissibleColorOp(g.n, lists));
    if (r > 0)
        f.ops.push_back(couplingOp(g.n, g.edges, cliques));
    f.ops.push_back(makeEveryColorUsedOp(g.n));

    const int n = g.n;
    f.decode = [n](const Matrix& z) { return colorsJson(colorsFromRounded(z, n)); };
    f.validate = [g, m, lists](const nlohmann::json& solution) {
        const auto colors = colorsFromJson(solution);
        for (int c : colors)
            if (c < 1 || c > m)
                return false;
        if (!isProperColoring(g, colors))
            return false;
        for (int i = 0; i < g.n; ++i)
            if (std::find(lists[i].begin(), lists[i].end(), colors[i]) == lists[i].end())
                return false;
        return true;
    };
    return f;
}

// ---- 3-SAT -------------------------------------------------------------

bool evaluateCnf(const CnfFormula& f, const std::vector<bool>& assignment)
{
    if (static_cast<int>(assignment.size()) != f.variables)
        throw InvalidParameter("assignment size does not match variable count");
    for (const auto& clause : f.clauses) {
        bool satisfied = false;
        for (int literal : clause) {
            const int v = std::abs(literal) - 1;
            if (literal > 0 ? assignment[v] : !assignment[v]) {
                satisfied = true;
                break;
            }
        }
        if (!satisfied)
            return false;
    }
    return true;
}

namespace {

int literalNode(int literal)
{
    const int v = std::abs(literal);
    return literal > 0 ? 2 * v + 2 : 2 * v + 3;
}

void checkCnf(const CnfFormula& f)
{
    if (f.variables < 1)
        throw InvalidParameter("formula needs at least one variable");
    for (const auto& clause : f.clauses)
        for (int literal : clause)
            if (literal == 0 || std::abs(literal) > f.variables)
                throw IndexOutOfRange("literal out of range");
}

} // namespace

Graph satGadgetGraph(const CnfFormula& f, ClauseGadget gadget)
{
    checkCnf(f);
    const int T = 1, F = 2, G = 3;
    const int n = f.variables;
    const int perClause = gadget == ClauseGadget::FourNode ? 4 : 5;
    const int total = 3 + 2 * n + perClause * static_cast<int>(f.clauses.size());

    std::vector<Edge> edges{{T, F}, {F, G}, {T, G}};
    std::vector<std::vector<int>> cliques{{T, F, G}};
    for (int v = 1; v <= n; ++v) {
        const int pos = literalNode(v), neg = literalNode(-v);
        edges.push_back({pos, neg});
        edges.push_back({pos, G});
        edges.push_back({neg, G});
        cliques.push_back({G, pos, neg});
    }

    int base = 3 + 2 * n;
    for (const auto& clause : f.clauses) {
        const int t1 = literalNode(clause[0]);
        const int t2 = literalNode(clause[1]);
        const int t3 = literalNode(clause[2]);
        if (gadget == ClauseGadget::FourNode) {
            const int c0 = base + 1, c1 = base + 2, c2 = base + 3, c3 = base + 4;
            for (Edge e : {Edge{t1, c0}, {c0, c3}, {c3, t3}, {t2, c1}, {c1, c2}, {c2, c3},
                           {c0, T}, {c1, T}, {c2, F}})
                edges.push_back(e);
        } else {
            const int c0 = base + 1, c1 = base + 2, c2 = base + 3, e0 = base + 4, e1 = base + 5;
            for (Edge e : {Edge{t1, c0}, {c0, e0}, {e0, e1}, {t2, c1}, {t3, c2}, {c2, e1},
                           {c0, c1}, {c1, e0}, {c2, T}, {T, e1}})
                edges.push_back(e);
            cliques.push_back({c0, c1, e0});
            cliques.push_back({T, c2, e1});
        }
        base += perClause;
    }
    return makeGraph(total, std::move(edges), std::move(cliques));
}

Formulation satColoring(const CnfFormula& f, ClauseGadget gadget, bool useCliques)
{
    const Graph graph = satGadgetGraph(f, gadget);
    Formulation base = standardColoring(graph, 3, useCliques);
    base.name = gadget == ClauseGadget::FourNode ? "sat-4-node" : "sat-5-node";
    if (useCliques)
        base.name += "-cliques";

    const int variables = f.variables;
    base.decode = [variables, total = graph.n](const Matrix& z) {
        const auto colors = colorsFromRounded(z, total);
        std::vector<bool> assignment(variables);
        for (int v = 1; v <= variables; ++v)
            assignment[v - 1] = colors[literalNode(v) - 1] == colors[0];
        nlohmann::json j;
        j["assignment"] = assignment;
        return j;
    };
    base.validate = [f](const nlohmann::json& solution) {
        const auto assignment = solution.at("assignment").get<std::vector<bool>>();
        return evaluateCnf(f, assignment);
    };
    return base;
}

// ---- Sudoku ------------------------------------------------------------

namespace {

constexpr int kSudokuUnits = 27;

// unit u -> the 9 cell indices (0-based) it contains
std::array<int, 9> sudokuUnit(int u)
{
    std::array<int, 9> cells{};
    const int which = u / 9, idx = u % 9;
    for (int k = 0; k < 9; ++k) {
        if (which == 0)
            cells[k] = idx * 9 + k;
        else if (which == 1)
            cells[k] = k * 9 + idx;
        else {
            const int r = (idx / 3) * 3 + k / 3;
            const int c = (idx % 3) * 3 + k % 3;
            cells[k] = r * 9 + c;
        }
    }
    return cells;
}

} // namespace

bool sudokuGivensConsistent(const SudokuGrid& grid)
{
    for (int u = 0; u < kSudokuUnits; ++u) {
        std::array<int, 10> seen{};
        for (int cell : sudokuUnit(u)) {
            const int d = grid.cells[cell];
            if (d < 0 || d > 9)
                return false;
            if (d != 0 && ++seen[d] > 1)
                return false;
        }
    }
    return true;
}

bool sudokuSolutionValid(const SudokuGrid& puzzle, const std::array<int, 81>& solution)
{
    for (int i = 0; i < 81; ++i) {
        if (solution[i] < 1 || solution[i] > 9)
            return false;
        if (puzzle.cells[i] != 0 && puzzle.cells[i] != solution[i])
            return false;
    }
    for (int u = 0; u < kSudokuUnits; ++u) {
        std::array<int, 10> seen{};
        for (int cell : sudokuUnit(u))
            if (++seen[solution[cell]] > 1)
                return false;
    }
    return true;
}

Formulation sudokuFormulation(const SudokuGrid& grid, SudokuMode mode)
{
    if (!sudokuGivensConsistent(grid))
        throw ConflictingGivens("puzzle givens violate a row, column or box");

    AdmissibleLists lists(81);
    for (int i = 0; i < 81; ++i) {
        if (grid.cells[i] != 0)
            lists[i] = {grid.cells[i]};
        else
            lists[i] = {1, 2, 3, 4, 5, 6, 7, 8, 9};
    }

    const Graph graph = sudokuGraph();
    Formulation f = mode == SudokuMode::Direct ? listColoringDirect(graph, 9, lists, true)
                                               : listColoringExtension(graph, 9, lists);
    f.name = mode == SudokuMode::Direct ? "sudoku-direct" : "sudoku-extension";

    auto innerDecode = f.decode;
    f.decode = [innerDecode](const Matrix& z) {
        auto colors = innerDecode(z).at("colors").get<std::vector<int>>();
        return nlohmann::json{{"grid", colors}};
    };
    f.validate = [grid](const nlohmann::json& solution) {
        const auto digits = solution.at("grid").get<std::vector<int>>();
        if (digits.size() != 81)
            return false;
        std::array<int, 81> full{};
        std::copy(digits.begin(), digits.end(), full.begin());
        return sudokuSolutionValid(grid, full);
    };
    return f;
}

// ---- Queens ------------------------------------------------------------

Formulation queensFormulation(const Graph& boardG, int m, int q)
{
    if (m < 1 || q < 1)
        throw InvalidParameter("need at least one color and one piece per color");
    if (q > boardG.n || static_cast<long long>(q) * m > boardG.n)
        throw TooManyQueens("more pieces than cells");

    const int r = static_cast<int>(boardG.edges.size() + boardG.cliques.size());

    Formulation f;
    f.name = "queens";
    f.nodeCount = boardG.n;
    f.rows = boardG.n + r;
    f.colors = m;
    f.ops.push_back(makeAtMostOneColorOp(boardG.n));
    if (r > 0)
        f.ops.push_back(couplingOp(boardG.n, boardG.edges, boardG.cliques));
    f.ops.push_back(makeColorUsedExactlyOp(boardG.n, q));

    const int n = boardG.n;
    f.decode = [n, m](const Matrix& z) {
        std::vector<std::vector<int>> placement(m);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < m; ++k)
                if (z(i, k) == 1.0)
                    placement[k].push_back(i + 1);
        return nlohmann::json{{"placement", placement}};
    };
    f.validate = [boardG, m, q](const nlohmann::json& solution) {
        const auto placement = solution.at("placement").get<std::vector<std::vector<int>>>();
        if (static_cast<int>(placement.size()) != m)
            return false;
        std::set<int> used;
        for (const auto& cells : placement) {
            if (static_cast<int>(cells.size()) != q)
                return false;
            for (std::size_t a = 0; a < cells.size(); ++a) {
                if (!used.insert(cells[a]).second)
                    return false;
                for (std::size_t b = a + 1; b < cells.size(); ++b)
                    if (boardG.adjacent(cells[a], cells[b]))
                        return false;
            }
        }
        return true;
    };
    return f;
}

// ---- Hamiltonian paths -------------------------------------------------

Formulation hamiltonianPath(const Graph& g, bool withFullSpace)
{
    if (g.n < 2)
        throw InvalidParameter("path needs at least two nodes");
    if (g.edges.empty())
        throw NoEdges("path needs at least one edge");

    Formulation f;
    f.name = withFullSpace ? "hamiltonian-path" : "hamiltonian-path-lean";
    f.nodeCount = g.n;
    f.rows = g.n;
    f.colors = g.n;
    f.ops.push_back(makeOneColorPerRowOp(g.n));
    if (withFullSpace)
        f.ops.push_back(makeIdentityOp());
    f.ops.push_back(makeLinkedColumnsOp(g.edges, Parity::Odd));
    f.ops.push_back(makeLinkedColumnsOp(g.edges, Parity::Even));

    const int n = g.n;
    f.decode = [n](const Matrix& z) {
        std::vector<int> sequence(n, 0);
        for (int k = 0; k < n; ++k) {
            int hit = 0, node = 0;
            for (int i = 0; i < n; ++i)
                if (z(i, k) == 1.0) {
                    ++hit;
                    node = i + 1;
                }
            sequence[k] = hit == 1 ? node : 0;
        }
        return nlohmann::json{{"sequence", sequence}};
    };
    f.validate = [g](const nlohmann::json& solution) {
        const auto sequence = solution.at("sequence").get<std::vector<int>>();
        if (static_cast<int>(sequence.size()) != g.n)
            return false;
        std::vector<char> seen(g.n + 1, 0);
        for (int node : sequence) {
            if (node < 1 || node > g.n || seen[node])
                return false;
            seen[node] = 1;
        }
        for (std::size_t k = 0; k + 1 < sequence.size(); ++k)
            if (!g.adjacent(sequence[k], sequence[k + 1]))
                return false;
        return true;
    };
    return f;
}

PathReduction cycleToPath(const Graph& g, int v)
{
    if (v < 1 || v > g.n)
        throw NodeNotFound("node " + std::to_string(v) + " not in graph");

    PathReduction red;
    red.original = v;
    red.copyNode = g.n + 1;
    red.tailNode = g.n + 2;
    red.headNode = g.n + 3;

    std::vector<Edge> edges = g.edges;
    for (int u : g.neighbors(v))
        edges.push_back({u, red.copyNode});
    edges.push_back({v, red.tailNode});
    edges.push_back({red.copyNode, red.headNode});
    red.graph = makeGraph(g.n + 3, std::move(edges));
    return red;
}

std::vector<int> cycleFromReducedPath(const PathReduction& red, const std::vector<int>& sequence)
{
    const int n = red.graph.n - 3;
    if (static_cast<int>(sequence.size()) != red.graph.n)
        throw InvalidParameter("sequence length does not match reduced graph");
    std::vector<int> seq = sequence;
    if (seq.front() == red.headNode)
        std::reverse(seq.begin(), seq.end());
    if (seq.front() != red.tailNode || seq.back() != red.headNode)
        throw InvalidParameter("path does not run between the pendant nodes");
    std::vector<int> cycle(seq.begin() + 1, seq.end() - 2);
    if (static_cast<int>(cycle.size()) != n || cycle.front() != red.original)
        throw InvalidParameter("reduced path does not decode to a cycle");
    // seq ends ... copyNode, headNode; the copy closes the cycle back to
    // the original node.
    if (seq[seq.size() - 2] != red.copyNode)
        throw InvalidParameter("path does not end at the copied node");
    return cycle;
}

Formulation hamiltonianCycle(const Graph& g, bool withFullSpace, int v)
{
    const PathReduction red = cycleToPath(g, v);
    Formulation f = hamiltonianPath(red.graph, withFullSpace);
    f.name = withFullSpace ? "hamiltonian-cycle" : "hamiltonian-cycle-lean";

    auto innerDecode = f.decode;
    f.decode = [innerDecode, red](const Matrix& z) {
        nlohmann::json j = innerDecode(z);
        try {
            j["cycle"] = cycleFromReducedPath(red, j.at("sequence").get<std::vector<int>>());
        } catch (const InvalidParameter&) {
            j["cycle"] = nlohmann::json::array();
        }
        return j;
    };
    f.validate = [g](const nlohmann::json& solution) {
        const auto cycle = solution.at("cycle").get<std::vector<int>>();
        if (static_cast<int>(cycle.size()) != g.n)
            return false;
        std::vector<char> seen(g.n + 1, 0);
        for (int node : cycle) {
            if (node < 1 || node > g.n || seen[node])
                return false;
            seen[node] = 1;
        }
        for (std::size_t k = 0; k + 1 < cycle.size(); ++k)
            if (!g.adjacent(cycle[k], cycle[k + 1]))
                return false;
        return g.adjacent(cycle.front(), cycle.back());
    };
    return f;
}

} // namespace drc
