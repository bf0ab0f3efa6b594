#include "drc/projections.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace drc {

Matrix buildCouplingMatrix(int n, const std::vector<Edge>& edges,
                           const std::vector<std::vector<int>>& cliques)
{
    const int r = static_cast<int>(edges.size() + cliques.size());
    if (r == 0)
        throw InvalidParameter("coupling matrix needs at least one edge or clique");
    Matrix a = Matrix::Zero(r, n + r);
    int p = 0;
    auto fillRow = [&](const std::vector<int>& members) {
        for (int q : members) {
            if (q < 1 || q > n)
                throw IndexOutOfRange("edge/clique member out of range");
            a(p, q - 1) = 1.0;
        }
        a(p, n + p) = -1.0;
        ++p;
    };
    for (const auto& [i, j] : edges)
        fillRow({i, j});
    for (const auto& clique : cliques)
        fillRow(clique);
    return a;
}

double clampRound(double x)
{
    double r = std::floor(x + 0.5); // ties at .5 round up
    return std::clamp(r, 0.0, 1.0);
}

namespace {

void checkNodeRows(const Matrix& z, int n)
{
    if (n < 0 || n > z.rows())
        throw ShapeMismatch("node row count exceeds matrix rows");
}

int rowArgmax(const Matrix& z, int row, int cols)
{
    int best = 0;
    for (int k = 1; k < cols; ++k)
        if (z(row, k) > z(row, best))
            best = k;
    return best;
}

} // namespace

Matrix projectOneColorPerRow(Matrix z, int n)
{
    checkNodeRows(z, n);
    const int m = static_cast<int>(z.cols());
    for (int i = 0; i < n; ++i) {
        int best = rowArgmax(z, i, m);
        for (int k = 0; k < m; ++k)
            z(i, k) = k == best ? 1.0 : 0.0;
    }
    return z;
}

Matrix projectAdmissibleColorPerRow(Matrix z, int n, const std::vector<std::vector<int>>& lists)
{
    checkNodeRows(z, n);
    if (static_cast<int>(lists.size()) < n)
        throw ShapeMismatch("admissible list count below node count");
    const int m = static_cast<int>(z.cols());
    for (int i = 0; i < n; ++i) {
        if (lists[i].empty())
            throw EmptyAdmissibleList("node " + std::to_string(i + 1) + " has no admissible colors");
        int best = -1;
        for (int color : lists[i]) {
            int k = color - 1;
            if (k < 0 || k >= m)
                throw IndexOutOfRange("admissible color out of range");
            if (best < 0 || z(i, k) > z(i, best))
                best = k;
        }
        for (int k = 0; k < m; ++k)
            z(i, k) = k == best ? 1.0 : 0.0;
    }
    return z;
}

Matrix projectAtMostOneColorPerRow(Matrix z, int n)
{
    checkNodeRows(z, n);
    const int m = static_cast<int>(z.cols());
    for (int i = 0; i < n; ++i) {
        int best = rowArgmax(z, i, m);
        double pinned = clampRound(z(i, best));
        for (int k = 0; k < m; ++k)
            z(i, k) = k == best ? pinned : 0.0;
    }
    return z;
}

Matrix projectEveryColorUsed(Matrix z, int n)
{
    checkNodeRows(z, n);
    if (n == 0)
        throw ShapeMismatch("needs at least one node row");
    const int m = static_cast<int>(z.cols());
    const int rows = static_cast<int>(z.rows());
    for (int k = 0; k < m; ++k) {
        int best = 0;
        for (int i = 1; i < n; ++i)
            if (z(i, k) > z(best, k))
                best = i;
        for (int i = 0; i < rows; ++i)
            z(i, k) = i == best ? 1.0 : clampRound(z(i, k));
    }
    return z;
}

Matrix projectColorUsedExactly(Matrix z, int n, int q)
{
    checkNodeRows(z, n);
    if (q > n)
        throw QTooLarge("cannot place more pieces per color than nodes");
    const int m = static_cast<int>(z.cols());
    const int rows = static_cast<int>(z.rows());
    std::vector<int> order(n);
    for (int k = 0; k < m; ++k) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return z(a, k) > z(b, k); });
        std::vector<char> chosen(n, 0);
        for (int s = 0; s < q; ++s)
            chosen[order[s]] = 1;
        for (int i = 0; i < n; ++i)
            z(i, k) = chosen[i] ? 1.0 : 0.0;
        for (int i = n; i < rows; ++i)
            z(i, k) = clampRound(z(i, k));
    }
    return z;
}

Matrix projectPinFirstNode(Matrix z)
{
    if (z.rows() < 1 || z.cols() < 1)
        throw ShapeMismatch("empty matrix");
    z(0, 0) = 1.0;
    return z;
}

Matrix projectPinColorNodes(Matrix z, int n)
{
    const int m = static_cast<int>(z.cols());
    if (n + m > z.rows())
        throw ShapeMismatch("color-representative rows missing");
    for (int k = 0; k < m; ++k)
        z(n + k, k) = 1.0;
    return z;
}

namespace {

// Penalty kernel for the path-link selection: entries above 0.5 count as
// already-set and contribute nothing.
double linkPenalty(double x)
{
    double h = x <= 0.5 ? x : 1.0;
    return (1.0 - h) * (1.0 - h);
}

} // namespace

Matrix projectLinkedColumns(Matrix x, const std::vector<Edge>& edges, Parity parity)
{
    if (x.rows() != x.cols())
        throw ShapeMismatch("path iterate must be square");
    if (edges.empty())
        throw NoEdges("path projection needs a nonempty edge set");
    const int n = static_cast<int>(x.rows());

    // Ordered pairs, sorted so that ties in the arg min go to the lowest
    // (i, j) pair.
    std::vector<std::pair<int, int>> ordered;
    ordered.reserve(edges.size() * 2);
    for (const auto& [i, j] : edges) {
        ordered.push_back({i, j});
        ordered.push_back({j, i});
    }
    std::sort(ordered.begin(), ordered.end());

    const int firstCol = parity == Parity::Odd ? 1 : 2; // 1-based k
    std::vector<std::pair<int, int>> pins; // (row, col), 0-based
    for (int k = firstCol; k < n; k += 2) {
        const int k1 = k - 1, k2 = k; // 0-based column pair
        double bestScore = 0;
        std::pair<int, int> bestPair{-1, -1};
        for (const auto& [i, j] : ordered) {
            double score = linkPenalty(x(i - 1, k1)) + linkPenalty(x(j - 1, k2));
            if (bestPair.first < 0 || score < bestScore) {
                bestScore = score;
                bestPair = {i, j};
            }
        }
        pins.push_back({bestPair.first - 1, k1});
        pins.push_back({bestPair.second - 1, k2});
    }

    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            x(i, k) = clampRound(x(i, k));
    for (auto [i, k] : pins)
        x(i, k) = 1.0;
    return x;
}

ProjectionOp makeOneColorPerRowOp(int n)
{
    return {"one-color-per-row", [n](const Matrix& z) { return projectOneColorPerRow(z, n); }};
}

ProjectionOp makeAdmissibleColorOp(int n, std::vector<std::vector<int>> lists)
{
    return {"admissible-color-per-row",
            [n, lists = std::move(lists)](const Matrix& z) {
                return projectAdmissibleColorPerRow(z, n, lists);
            }};
}

ProjectionOp makeAtMostOneColorOp(int n)
{
    return {"at-most-one-color-per-row",
            [n](const Matrix& z) { return projectAtMostOneColorPerRow(z, n); }};
}

ProjectionOp makeNullspaceOp(AffineProjector projector)
{
    return {"coupling-nullspace",
            [p = std::move(projector)](const Matrix& z) { return p.apply(z); }};
}

ProjectionOp makeEveryColorUsedOp(int n)
{
    return {"every-color-used", [n](const Matrix& z) { return projectEveryColorUsed(z, n); }};
}

ProjectionOp makeColorUsedExactlyOp(int n, int q)
{
    return {"color-used-exactly-" + std::to_string(q),
            [n, q](const Matrix& z) { return projectColorUsedExactly(z, n, q); }};
}

ProjectionOp makePinFirstNodeOp()
{
    return {"pin-first-node", [](const Matrix& z) { return projectPinFirstNode(z); }};
}

ProjectionOp makePinColorNodesOp(int n)
{
    return {"pin-color-nodes", [n](const Matrix& z) { return projectPinColorNodes(z, n); }};
}

ProjectionOp makeIdentityOp()
{
    return {"whole-space", [](const Matrix& z) { return z; }};
}

ProjectionOp makeLinkedColumnsOp(std::vector<Edge> edges, Parity parity)
{
    const char* name = parity == Parity::Odd ? "linked-columns-odd" : "linked-columns-even";
    return {name, [edges = std::move(edges), parity](const Matrix& z) {
                return projectLinkedColumns(z, edges, parity);
            }};
}

} // namespace drc
