#ifndef DRC_GRAPH_HPP
#define DRC_GRAPH_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "drc/errors.hpp"

namespace drc {

using Edge = std::pair<int, int>; // unordered, stored with first < second

// Undirected simple graph.  Nodes are 1-based throughout, matching the
// DIMACS convention.  Cliques are optional extra structure: every listed
// subset must induce a complete subgraph.
struct Graph {
    int n = 0;
    std::vector<Edge> edges;               // canonical: i < j, sorted, unique
    std::vector<std::vector<int>> cliques; // each sorted ascending

    bool adjacent(int i, int j) const;
    std::vector<int> neighbors(int node) const;
};

// Validates, canonicalizes and returns the graph.  Throws InvalidParameter
// on self loops or out-of-range endpoints, and if a clique subset is not
// complete in the edge set.
Graph makeGraph(int n, std::vector<Edge> edges, std::vector<std::vector<int>> cliques = {});

Graph petersenGraph();
Graph completeGraph(int n);
Graph wheelGraph(int n, bool withTriangles = false); // node 1 is the hub
Graph cycleGraph(int n);
Graph windmillGraph(int a, int b); // node 1 is the shared hub

struct BoardMask {
    int rows = 0, cols = 0;
    std::vector<std::uint8_t> cells; // row-major, nonzero = active

    static BoardMask full(int rows, int cols);
    bool active(int r, int c) const { return cells[static_cast<std::size_t>(r) * cols + c] != 0; }
    int activeCount() const;
};

enum class PieceKind { Queen, Knight };

// One node per active cell (numbered row-major over active cells).  Queen
// boards link cells sharing a row, column or diagonal segment; a hole
// breaks the line, so cells on opposite sides of a hole are not adjacent.
// Queen boards also carry the maximal straight segments as cliques.
Graph boardGraph(PieceKind kind, const BoardMask& board);

// 81 cells row-major, same row/column/3x3 box adjacency, 27 cliques.
Graph sudokuGraph();

// colors[i-1] in {1..m}; 0 means unassigned and raises UnassignedNode.
bool isProperColoring(const Graph& g, const std::vector<int>& colors);

// Exhaustive count, guarded to small instances.  Used as the counting
// oracle against known closed forms.
long long countProperColorings(const Graph& g, int m);

// Bron-Kerbosch with pivoting; returns all maximal cliques of size >= 3.
// Throws CliqueExplosion if more than capCount cliques are found.
std::vector<std::vector<int>> maximalCliques(const Graph& g, std::size_t capCount = 100000);

} // namespace drc

#endif
