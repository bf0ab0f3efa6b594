#ifndef DRC_PROJECTIONS_HPP
#define DRC_PROJECTIONS_HPP

#include <functional>
#include <string>
#include <vector>

#include "drc/graph.hpp"
#include "drc/linalg.hpp"

namespace drc {

// Iterate layout convention: rows 0..n-1 are node rows, any rows past n
// are auxiliary rows tied to edges/cliques of the formulation.

// Assembles the linear coupling matrix whose nullspace expresses
// "endpoints of an edge (members of a clique) share a color at most
// once": one row per edge then per clique, each with a fresh -1 column.
// Shape r x (n + r) with r = |edges| + |cliques|; full row rank by the
// -1 block.
Matrix buildCouplingMatrix(int n, const std::vector<Edge>& edges,
                           const std::vector<std::vector<int>>& cliques);

// round() with ties at .5 going up, clamped to [0, 1].
double clampRound(double x);

// Each node row becomes the unit vector at its argmax (lowest index on
// ties); auxiliary rows pass through.
Matrix projectOneColorPerRow(Matrix z, int n);

// Node row argmax restricted to the admissible list of that row; entries
// outside the list go to 0; auxiliary rows pass through.  lists[i] holds
// 1-based colors for node i+1 and must be nonempty.
Matrix projectAdmissibleColorPerRow(Matrix z, int n, const std::vector<std::vector<int>>& lists);

// Node row: the argmax entry is clamp-rounded (possibly to 0), the other
// node entries go to 0; auxiliary rows pass through.
Matrix projectAtMostOneColorPerRow(Matrix z, int n);

// Per column: the top node row is forced to 1, every other entry
// clamp-rounds to {0,1}.
Matrix projectEveryColorUsed(Matrix z, int n);

// Per column: the q largest node entries become 1, the remaining node
// entries 0, auxiliary entries clamp-round.
Matrix projectColorUsedExactly(Matrix z, int n, int q);

// Pins entry (1,1) to 1; everything else unchanged.
Matrix projectPinFirstNode(Matrix z);

// Pins the color-representative rows n+k to color k; everything else
// unchanged.
Matrix projectPinColorNodes(Matrix z, int n);

enum class Parity { Odd, Even };

// Position-coupling projection for path formulations on square matrices:
// for every consecutive column pair starting at the given parity, the
// best linked ordered node pair is forced to 1; all other entries
// clamp-round.
Matrix projectLinkedColumns(Matrix x, const std::vector<Edge>& edges, Parity parity);

// A compiled constraint set: a name plus its (idempotent) projection.
struct ProjectionOp {
    std::string name;
    std::function<Matrix(const Matrix&)> apply;
};

ProjectionOp makeOneColorPerRowOp(int n);
ProjectionOp makeAdmissibleColorOp(int n, std::vector<std::vector<int>> lists);
ProjectionOp makeAtMostOneColorOp(int n);
ProjectionOp makeNullspaceOp(AffineProjector projector);
ProjectionOp makeEveryColorUsedOp(int n);
ProjectionOp makeColorUsedExactlyOp(int n, int q);
ProjectionOp makePinFirstNodeOp();
ProjectionOp makePinColorNodesOp(int n);
ProjectionOp makeIdentityOp();
ProjectionOp makeLinkedColumnsOp(std::vector<Edge> edges, Parity parity);

} // namespace drc

#endif
