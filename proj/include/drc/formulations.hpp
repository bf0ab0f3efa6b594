#ifndef DRC_FORMULATIONS_HPP
#define DRC_FORMULATIONS_HPP

#include <array>
#include <vector>

#include "drc/solver.hpp"

namespace drc {

// ---- 3-SAT -------------------------------------------------------------

struct CnfFormula {
    int variables = 0;
    std::vector<std::array<int, 3>> clauses; // signed 1-based literals
};

bool evaluateCnf(const CnfFormula& f, const std::vector<bool>& assignment);

enum class ClauseGadget { FourNode, FiveNode };

// The 3-coloring gadget graph: node 1 is the truth anchor, 2 the false
// anchor, 3 the ground node; variable i occupies nodes 2i+2 (positive)
// and 2i+3 (negated); clause gadgets follow, clause by clause.
Graph satGadgetGraph(const CnfFormula& f, ClauseGadget gadget);

Formulation satColoring(const CnfFormula& f, ClauseGadget gadget, bool useCliques);

// ---- Sudoku ------------------------------------------------------------

struct SudokuGrid {
    std::array<int, 81> cells{}; // row-major, 0 = blank
};

// Row/column/box uniqueness among the nonzero entries.
bool sudokuGivensConsistent(const SudokuGrid& grid);

// Full valid solution that preserves every given of the puzzle.
bool sudokuSolutionValid(const SudokuGrid& puzzle, const std::array<int, 81>& solution);

enum class SudokuMode { Direct, Extension };

Formulation sudokuFormulation(const SudokuGrid& grid, SudokuMode mode = SudokuMode::Direct);

// ---- Coloring families -------------------------------------------------

Formulation standardColoring(const Graph& g, int m, bool useCliques, bool pinFirst = true,
                             bool useAllColors = true);

using AdmissibleLists = std::vector<std::vector<int>>; // lists[i]: colors for node i+1

// Reduction through m extra color-representative nodes wired to the
// inadmissible vertices.
Formulation listColoringExtension(const Graph& g, int m, const AdmissibleLists& lists);

// Restriction of the per-row assignment set to the admissible colors; no
// extra nodes, no pin.
Formulation listColoringDirect(const Graph& g, int m, const AdmissibleLists& lists, bool useCliques);

// ---- Queens ------------------------------------------------------------

// Partial coloring: each of the m colors used exactly q times, colored
// cells pairwise non-attacking.  boardG must come from boardGraph().
Formulation queensFormulation(const Graph& boardG, int m, int q);

// ---- Hamiltonian paths -------------------------------------------------

Formulation hamiltonianPath(const Graph& g, bool withFullSpace = true);

struct PathReduction {
    Graph graph;
    int copyNode = 0; // duplicate of the chosen node
    int tailNode = 0; // degree-one node attached to the original
    int headNode = 0; // degree-one node attached to the copy
    int original = 0; // the duplicated node
};

PathReduction cycleToPath(const Graph& g, int v);

// Hamiltonian cycle through the path reduction on a copy of node v.  The
// decoded solution carries both the reduced-path sequence and the cycle.
Formulation hamiltonianCycle(const Graph& g, bool withFullSpace = true, int v = 1);

// Maps a Hamiltonian path of the reduced graph back to a cycle of the
// original: strips the degree-one endpoints and identifies the copy with
// the original node.  Throws InvalidParameter if the path does not run
// between the two pendant nodes.
std::vector<int> cycleFromReducedPath(const PathReduction& red, const std::vector<int>& sequence);

} // namespace drc

#endif
