#include "drc/graph.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>
#include <string>

namespace drc {

bool Graph::adjacent(int i, int j) const
{
    if (i == j)
        return false;
    Edge e{std::min(i, j), std::max(i, j)};
    return std::binary_search(edges.begin(), edges.end(), e);
}

std::vector<int> Graph::neighbors(int node) const
{
    std::vector<int> out;
    for (const auto& [a, b] : edges) {
        if (a == node)
            out.push_back(b);
        else if (b == node)
            out.push_back(a);
    }
    return out;
}

Graph makeGraph(int n, std::vector<Edge> edges, std::vector<std::vector<int>> cliques)
{
    if (n <= 0)
        throw InvalidParameter("node count must be positive");
    for (auto& [a, b] : edges) {
        if (a == b)
            throw InvalidParameter("self loop on node " + std::to_string(a));
        if (a < 1 || b < 1 || a > n || b > n)
            throw InvalidParameter("edge endpoint out of range");
        if (a > b)
            std::swap(a, b);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    Graph g;
    g.n = n;
    g.edges = std::move(edges);

    for (auto& clique : cliques) {
        std::sort(clique.begin(), clique.end());
        if (clique.size() < 2)
            throw InvalidParameter("clique must have at least 2 nodes");
        for (std::size_t i = 0; i < clique.size(); ++i)
            for (std::size_t j = i + 1; j < clique.size(); ++j)
                if (!g.adjacent(clique[i], clique[j]))
                    throw InvalidParameter("clique subset is not complete");
    }
    g.cliques = std::move(cliques);
    return g;
}

Graph petersenGraph()
{
    // Outer 5-cycle on 1..5, spokes i -- i+5, inner pentagram on 6..10.
    std::vector<Edge> edges;
    for (int i = 1; i <= 5; ++i) {
        edges.push_back({i, i % 5 + 1});
        edges.push_back({i, i + 5});
        edges.push_back({i + 5, (i + 1) % 5 + 6});
    }
    return makeGraph(10, std::move(edges));
}

Graph completeGraph(int n)
{
    if (n < 1)
        throw InvalidParameter("complete graph needs n >= 1");
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            edges.push_back({i, j});
    std::vector<std::vector<int>> cliques;
    if (n >= 3) {
        std::vector<int> all(n);
        for (int i = 0; i < n; ++i)
            all[i] = i + 1;
        cliques.push_back(std::move(all));
    }
    return makeGraph(n, std::move(edges), std::move(cliques));
}

Graph wheelGraph(int n, bool withTriangles)
{
    if (n < 4)
        throw InvalidParameter("wheel graph needs n >= 4");
    std::vector<Edge> edges;
    std::vector<std::vector<int>> cliques;
    for (int i = 2; i <= n; ++i) {
        edges.push_back({1, i});
        int next = i == n ? 2 : i + 1;
        edges.push_back({i, next});
        if (withTriangles)
            cliques.push_back({1, i, next});
    }
    return makeGraph(n, std::move(edges), std::move(cliques));
}

Graph cycleGraph(int n)
{
    if (n < 3)
        throw InvalidParameter("cycle graph needs n >= 3");
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i)
        edges.push_back({i, i % n + 1});
    return makeGraph(n, std::move(edges));
}

Graph windmillGraph(int a, int b)
{
    if (a < 2 || b < 2)
        throw InvalidParameter("windmill graph needs a >= 2 and b >= 2");
    const int n = b * (a - 1) + 1;
    std::vector<Edge> edges;
    std::vector<std::vector<int>> cliques;
    for (int blade = 0; blade < b; ++blade) {
        std::vector<int> members{1};
        int first = 2 + blade * (a - 1);
        for (int v = first; v < first + a - 1; ++v)
            members.push_back(v);
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                edges.push_back({members[i], members[j]});
        if (a >= 3)
            cliques.push_back(std::move(members));
    }
    return makeGraph(n, std::move(edges), std::move(cliques));
}

BoardMask BoardMask::full(int rows, int cols)
{
    BoardMask m;
    m.rows = rows;
    m.cols = cols;
    m.cells.assign(static_cast<std::size_t>(rows) * cols, 1);
    return m;
}

int BoardMask::activeCount() const
{
    int count = 0;
    for (auto c : cells)
        count += c != 0;
    return count;
}

namespace {

// Walks every maximal run of contiguous active cells along the four line
// directions of the board and hands the run (as node ids) to sink.
template <typename Sink>
void forEachQueenSegment(const BoardMask& board, const std::vector<int>& nodeOf, Sink&& sink)
{
    const int R = board.rows, C = board.cols;
    auto walk = [&](int r0, int c0, int dr, int dc) {
        std::vector<int> run;
        int r = r0, c = c0;
        while (r >= 0 && r < R && c >= 0 && c < C) {
            if (board.active(r, c)) {
                run.push_back(nodeOf[static_cast<std::size_t>(r) * C + c]);
            } else if (!run.empty()) {
                sink(run);
                run.clear();
            }
            r += dr;
            c += dc;
        }
        if (!run.empty())
            sink(run);
    };
    for (int r = 0; r < R; ++r)
        walk(r, 0, 0, 1); // rows
    for (int c = 0; c < C; ++c)
        walk(0, c, 1, 0); // columns
    for (int c = 0; c < C; ++c)
        walk(0, c, 1, 1); // diagonals starting on top edge
    for (int r = 1; r < R; ++r)
        walk(r, 0, 1, 1); // diagonals starting on left edge
    for (int c = 0; c < C; ++c)
        walk(0, c, 1, -1); // anti-diagonals starting on top edge
    for (int r = 1; r < R; ++r)
        walk(r, C - 1, 1, -1); // anti-diagonals starting on right edge
}

} // namespace

Graph boardGraph(PieceKind kind, const BoardMask& board)
{
    if (board.activeCount() == 0)
        throw EmptyBoard("board mask has no active cells");

    const int R = board.rows, C = board.cols;
    std::vector<int> nodeOf(static_cast<std::size_t>(R) * C, 0);
    int next = 1;
    for (int r = 0; r < R; ++r)
        for (int c = 0; c < C; ++c)
            if (board.active(r, c))
                nodeOf[static_cast<std::size_t>(r) * C + c] = next++;
    const int n = next - 1;

    std::vector<Edge> edges;
    std::vector<std::vector<int>> cliques;

    if (kind == PieceKind::Queen) {
        forEachQueenSegment(board, nodeOf, [&](const std::vector<int>& run) {
            if (run.size() < 2)
                return;
            for (std::size_t i = 0; i < run.size(); ++i)
                for (std::size_t j = i + 1; j < run.size(); ++j)
                    edges.push_back({run[i], run[j]});
            cliques.push_back(run);
        });
    } else {
        static constexpr std::array<std::pair<int, int>, 4> moves{{{1, 2}, {2, 1}, {2, -1}, {1, -2}}};
        for (int r = 0; r < R; ++r)
            for (int c = 0; c < C; ++c) {
                if (!board.active(r, c))
                    continue;
                for (auto [dr, dc] : moves) {
                    int rr = r + dr, cc = c + dc;
                    if (rr < 0 || rr >= R || cc < 0 || cc >= C || !board.active(rr, cc))
                        continue;
                    edges.push_back({nodeOf[static_cast<std::size_t>(r) * C + c],
                                     nodeOf[static_cast<std::size_t>(rr) * C + cc]});
                }
            }
    }
    return makeGraph(n, std::move(edges), std::move(cliques));
}

Graph sudokuGraph()
{
    auto cellRow = [](int cell) { return cell / 9; };
    auto cellCol = [](int cell) { return cell % 9; };
    auto cellBox = [&](int cell) { return (cellRow(cell) / 3) * 3 + cellCol(cell) / 3; };

    std::vector<Edge> edges;
    for (int a = 0; a < 81; ++a)
        for (int b = a + 1; b < 81; ++b)
            if (cellRow(a) == cellRow(b) || cellCol(a) == cellCol(b) || cellBox(a) == cellBox(b))
                edges.push_back({a + 1, b + 1});

    std::vector<std::vector<int>> cliques;
    for (int unit = 0; unit < 9; ++unit) {
        std::vector<int> row, col, box;
        for (int k = 0; k < 9; ++k) {
            row.push_back(unit * 9 + k + 1);
            col.push_back(k * 9 + unit + 1);
            int r = (unit / 3) * 3 + k / 3;
            int c = (unit % 3) * 3 + k % 3;
            box.push_back(r * 9 + c + 1);
        }
        cliques.push_back(std::move(row));
        cliques.push_back(std::move(col));
        cliques.push_back(std::move(box));
    }
    return makeGraph(81, std::move(edges), std::move(cliques));
}

bool isProperColoring(const Graph& g, const std::vector<int>& colors)
{
    if (static_cast<int>(colors.size()) != g.n)
        throw InvalidParameter("color assignment size does not match node count");
    for (int c : colors)
        if (c == 0)
            throw UnassignedNode("coloring has an unassigned node");
    for (const auto& [a, b] : g.edges)
        if (colors[a - 1] == colors[b - 1])
            return false;
    return true;
}

long long countProperColorings(const Graph& g, int m)
{
    if (g.n > 20 || std::pow(static_cast<double>(m), g.n) > 1e8)
        throw InstanceTooLarge("coloring enumeration guard exceeded");

    // Precompute, for each node, the neighbors with lower index.
    std::vector<std::vector<int>> earlier(g.n);
    for (const auto& [a, b] : g.edges)
        earlier[b - 1].push_back(a - 1);

    std::vector<int> color(g.n, 0);
    long long count = 0;
    auto recurse = [&](auto&& self, int node) -> void {
        if (node == g.n) {
            ++count;
            return;
        }
        for (int c = 1; c <= m; ++c) {
            bool ok = true;
            for (int nb : earlier[node])
                if (color[nb] == c) {
                    ok = false;
                    break;
                }
            if (ok) {
                color[node] = c;
                self(self, node + 1);
            }
        }
        color[node] = 0;
    };
    recurse(recurse, 0);
    return count;
}

namespace {

using NodeSet = std::vector<int>; // sorted

NodeSet intersect(const NodeSet& a, const NodeSet& b)
{
    NodeSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

void bronKerbosch(NodeSet r, NodeSet p, NodeSet x, const std::vector<NodeSet>& adj,
                  std::vector<std::vector<int>>& out, std::size_t cap)
{
    if (p.empty() && x.empty()) {
        if (r.size() >= 3) {
            if (out.size() >= cap)
                throw CliqueExplosion("maximal clique count exceeds cap");
            out.push_back(r);
        }
        return;
    }
    // Pivot: the vertex of P u X with the most neighbors in P.
    int pivot = -1;
    std::size_t best = 0;
    for (const NodeSet* side : {&p, &x})
        for (int u : *side) {
            std::size_t deg = intersect(p, adj[u - 1]).size();
            if (pivot < 0 || deg > best) {
                pivot = u;
                best = deg;
            }
        }
    NodeSet candidates;
    std::set_difference(p.begin(), p.end(), adj[pivot - 1].begin(), adj[pivot - 1].end(),
                        std::back_inserter(candidates));
    for (int v : candidates) {
        NodeSet r2 = r;
        r2.insert(std::lower_bound(r2.begin(), r2.end(), v), v);
        bronKerbosch(std::move(r2), intersect(p, adj[v - 1]), intersect(x, adj[v - 1]), adj, out, cap);
        p.erase(std::find(p.begin(), p.end(), v));
        x.insert(std::lower_bound(x.begin(), x.end(), v), v);
    }
}

} // namespace

std::vector<std::vector<int>> maximalCliques(const Graph& g, std::size_t capCount)
{
    if (g.n > 200)
        throw InstanceTooLarge("clique enumeration limited to 200 nodes");
    std::vector<NodeSet> adj(g.n);
    for (const auto& [a, b] : g.edges) {
        adj[a - 1].push_back(b);
        adj[b - 1].push_back(a);
    }
    for (auto& list : adj)
        std::sort(list.begin(), list.end());

    NodeSet all(g.n);
    for (int i = 0; i < g.n; ++i)
        all[i] = i + 1;
    std::vector<std::vector<int>> out;
    bronKerbosch({}, std::move(all), {}, adj, out, capCount);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace drc
