#include <doctest.h>

#include <set>

#include "drc/formulations.hpp"

using drc::CnfFormula;
using drc::Formulation;
using drc::Matrix;

namespace {

// worked example used throughout: (x1 v x2 v x3) & (-x1 v x2 v -x3)
CnfFormula exampleFormula()
{
    CnfFormula f;
    f.variables = 3;
    f.clauses = {{1, 2, 3}, {-1, 2, -3}};
    return f;
}

bool bruteForceSatisfiable(const CnfFormula& f)
{
    for (int mask = 0; mask < (1 << f.variables); ++mask) {
        std::vector<bool> assignment(f.variables);
        for (int v = 0; v < f.variables; ++v)
            assignment[v] = (mask >> v) & 1;
        if (drc::evaluateCnf(f, assignment))
            return true;
    }
    return false;
}

} // namespace

TEST_CASE("cnf evaluation")
{
    CnfFormula f = exampleFormula();
    CHECK(drc::evaluateCnf(f, {true, false, false}));
    CHECK(drc::evaluateCnf(f, {false, true, false}));
    CHECK(!drc::evaluateCnf(f, {true, false, true}));
    CHECK_THROWS_AS(drc::evaluateCnf(f, {true, false}), drc::InvalidParameter);
}

TEST_CASE("sat gadget graphs match the size formulas")
{
    CnfFormula f = exampleFormula();
    const int n = f.variables, m = static_cast<int>(f.clauses.size());

    auto four = drc::satGadgetGraph(f, drc::ClauseGadget::FourNode);
    CHECK(four.n == 3 + 2 * n + 4 * m);          // 17
    CHECK((int)four.edges.size() == 3 + 3 * n + 9 * m); // 30
    CHECK((int)four.cliques.size() == n + 1);    // 4

    auto five = drc::satGadgetGraph(f, drc::ClauseGadget::FiveNode);
    CHECK(five.n == 3 + 2 * n + 5 * m);          // 18
    CHECK((int)five.edges.size() == 3 + 3 * n + 10 * m); // 33
    CHECK((int)five.cliques.size() == n + 1 + 2 * m);    // 8

    // formulas hold for other formula sizes too
    CnfFormula g;
    g.variables = 4;
    g.clauses = {{1, -2, 3}, {2, 3, -4}, {-1, -3, 4}};
    auto gg = drc::satGadgetGraph(g, drc::ClauseGadget::FourNode);
    CHECK(gg.n == 3 + 2 * 4 + 4 * 3);
    CHECK((int)gg.edges.size() == 3 + 3 * 4 + 9 * 3);

    CnfFormula bad;
    bad.variables = 2;
    bad.clauses = {{1, 2, 3}};
    CHECK_THROWS_AS(drc::satGadgetGraph(bad, drc::ClauseGadget::FourNode), drc::IndexOutOfRange);
}

TEST_CASE("satisfiability transfers to 3-colorability of the gadget graph")
{
    // single satisfiable clause: small enough for exhaustive counting
    CnfFormula f;
    f.variables = 3;
    f.clauses = {{1, -2, 3}};
    CHECK(bruteForceSatisfiable(f));
    CHECK(drc::countProperColorings(drc::satGadgetGraph(f, drc::ClauseGadget::FourNode), 3) > 0);
    CHECK(drc::countProperColorings(drc::satGadgetGraph(f, drc::ClauseGadget::FiveNode), 3) > 0);
}

TEST_CASE("sat formulation naming, shape and validation")
{
    CnfFormula f = exampleFormula();
    auto plain = drc::satColoring(f, drc::ClauseGadget::FourNode, false);
    CHECK(plain.name == "sat-4-node");
    CHECK(plain.rows == 17 + 30);
    CHECK(plain.colors == 3);

    auto cliqued = drc::satColoring(f, drc::ClauseGadget::FiveNode, true);
    CHECK(cliqued.name == "sat-5-node-cliques");
    CHECK(cliqued.rows == 18 + 33 + 8);

    nlohmann::json good{{"assignment", {true, false, false}}};
    nlohmann::json badSol{{"assignment", {true, false, true}}};
    CHECK(plain.validate(good));
    CHECK(!plain.validate(badSol));
}

TEST_CASE("standard coloring formulation shapes")
{
    auto petersen = drc::standardColoring(drc::petersenGraph(), 3, false);
    CHECK(petersen.rows == 25);
    CHECK(petersen.colors == 3);
    CHECK(petersen.ops.size() == 4);

    auto windmill = drc::standardColoring(drc::windmillGraph(10, 5), 10, true);
    CHECK(windmill.rows == 46 + 225 + 5);

    CHECK_THROWS_AS(drc::standardColoring(drc::petersenGraph(), 3, true), drc::MissingCliques);
    CHECK_THROWS_AS(drc::standardColoring(drc::petersenGraph(), 0, false), drc::InvalidParameter);
}

TEST_CASE("standard coloring validation rules")
{
    auto f = drc::standardColoring(drc::cycleGraph(4), 2, false);
    CHECK(f.validate(nlohmann::json{{"colors", {1, 2, 1, 2}}}));
    CHECK(!f.validate(nlohmann::json{{"colors", {1, 1, 2, 2}}})); // improper
    CHECK(!f.validate(nlohmann::json{{"colors", {2, 1, 2, 1}}})); // pin broken
    auto g = drc::standardColoring(drc::cycleGraph(4), 3, false);
    CHECK(!g.validate(nlohmann::json{{"colors", {1, 2, 1, 2}}})); // color 3 unused
}

TEST_CASE("list coloring reductions")
{
    // full lists degenerate to |E| + m(m-1)/2 extra auxiliary rows
    drc::AdmissibleLists full(4, {1, 2});
    auto ext = drc::listColoringExtension(drc::cycleGraph(4), 2, full);
    CHECK(ext.rows == (4 + 2) + (4 + 1));
    CHECK(ext.nodeCount == 6);

    // restricted lists on the path 1-2-3: unique solution 1,2,1
    auto path = drc::makeGraph(3, {{1, 2}, {2, 3}});
    drc::AdmissibleLists lists{{1}, {1, 2}, {1}};
    auto direct = drc::listColoringDirect(path, 2, lists, false);
    CHECK(direct.validate(nlohmann::json{{"colors", {1, 2, 1}}}));
    CHECK(!direct.validate(nlohmann::json{{"colors", {2, 1, 2}}})); // off-list
    CHECK(!direct.validate(nlohmann::json{{"colors", {1, 1, 1}}})); // improper

    drc::SolverConfig config;
    config.maxIterations = 500;
    config.seed = 5;
    bool solvedDirect = false, solvedExt = false;
    for (const auto& r : drc::runBatch(direct, config, 5))
        solvedDirect = solvedDirect || r.status == drc::RunStatus::Solved;
    for (const auto& r : drc::runBatch(drc::listColoringExtension(path, 2, lists), config, 5))
        solvedExt = solvedExt || r.status == drc::RunStatus::Solved;
    CHECK(solvedDirect);
    CHECK(solvedExt);

    CHECK_THROWS_AS(drc::listColoringDirect(path, 2, {{1}, {}, {1}}, false),
                    drc::EmptyAdmissibleList);
    CHECK_THROWS_AS(drc::listColoringDirect(path, 2, {{1}, {3}, {1}}, false),
                    drc::IndexOutOfRange);
}

TEST_CASE("sudoku plumbing")
{
    drc::SudokuGrid empty;
    CHECK(drc::sudokuGivensConsistent(empty));
    drc::SudokuGrid clash;
    clash.cells[0] = 5;
    clash.cells[8] = 5; // same row
    CHECK(!drc::sudokuGivensConsistent(clash));
    CHECK_THROWS_AS(drc::sudokuFormulation(clash), drc::ConflictingGivens);

    auto f = drc::sudokuFormulation(empty, drc::SudokuMode::Direct);
    CHECK(f.name == "sudoku-direct");
    CHECK(f.rows == 81 + 810 + 27);
    CHECK(f.colors == 9);

    // a known valid completed grid
    std::array<int, 81> solved{};
    for (int r = 0; r < 9; ++r)
        for (int c = 0; c < 9; ++c)
            solved[r * 9 + c] = (r * 3 + r / 3 + c) % 9 + 1;
    CHECK(drc::sudokuSolutionValid(empty, solved));

    drc::SudokuGrid givens;
    givens.cells[0] = solved[0];
    givens.cells[40] = solved[40];
    CHECK(drc::sudokuSolutionValid(givens, solved));
    auto wrong = solved;
    std::swap(wrong[0], wrong[1]);
    CHECK(!drc::sudokuSolutionValid(givens, wrong));

    // decode reads node rows of a rounded iterate
    auto g = drc::sudokuFormulation(givens, drc::SudokuMode::Direct);
    Matrix z = Matrix::Zero(g.rows, 9);
    for (int i = 0; i < 81; ++i)
        z(i, solved[i] - 1) = 1.0;
    auto decoded = g.decode(z);
    CHECK(decoded.at("grid").get<std::vector<int>>() ==
          std::vector<int>(solved.begin(), solved.end()));
    CHECK(g.validate(decoded));
}

TEST_CASE("queens formulation")
{
    auto board = drc::boardGraph(drc::PieceKind::Queen, drc::BoardMask::full(3, 3));
    CHECK_THROWS_AS(drc::queensFormulation(board, 1, 10), drc::TooManyQueens);
    CHECK_THROWS_AS(drc::queensFormulation(board, 5, 2), drc::TooManyQueens);

    auto f = drc::queensFormulation(board, 1, 2);
    // cells 2 and 7 (middle of top row / of bottom row) do not attack
    CHECK(f.validate(nlohmann::json{{"placement", {{2, 9}}}}));
    CHECK(!f.validate(nlohmann::json{{"placement", {{1, 9}}}}));    // diagonal attack
    CHECK(!f.validate(nlohmann::json{{"placement", {{2}}}}));       // wrong count
    CHECK(!f.validate(nlohmann::json{{"placement", {{2, 2}}}}));    // duplicate

    drc::SolverConfig config;
    config.maxIterations = 1000;
    config.seed = 2;
    bool solved = false;
    for (const auto& r : drc::runBatch(f, config, 5))
        if (r.status == drc::RunStatus::Solved) {
            solved = true;
            CHECK(f.validate(r.solution));
        }
    CHECK(solved);
}

TEST_CASE("hamiltonian path formulation")
{
    auto c5 = drc::cycleGraph(5);
    auto f = drc::hamiltonianPath(c5);
    CHECK(f.rows == 5);
    CHECK(f.colors == 5);
    CHECK(f.ops.size() == 4);
    CHECK(drc::hamiltonianPath(c5, false).ops.size() == 3);

    CHECK(f.validate(nlohmann::json{{"sequence", {1, 2, 3, 4, 5}}}));
    CHECK(f.validate(nlohmann::json{{"sequence", {3, 2, 1, 5, 4}}}));
    CHECK(!f.validate(nlohmann::json{{"sequence", {1, 3, 2, 4, 5}}})); // 1-3 not an edge
    CHECK(!f.validate(nlohmann::json{{"sequence", {1, 2, 3, 4, 4}}})); // repeat
    CHECK(!f.validate(nlohmann::json{{"sequence", {1, 2, 3, 4, 0}}})); // hole

    drc::SolverConfig config;
    config.maxIterations = 1000;
    config.seed = 1;
    bool solved = false;
    for (const auto& r : drc::runBatch(f, config, 5))
        if (r.status == drc::RunStatus::Solved) {
            solved = true;
            CHECK(f.validate(r.solution));
        }
    CHECK(solved);

    CHECK_THROWS_AS(drc::hamiltonianPath(drc::makeGraph(3, {})), drc::NoEdges);
}

TEST_CASE("cycle-to-path reduction")
{
    auto c5 = drc::cycleGraph(5);
    auto red = drc::cycleToPath(c5, 1);
    CHECK(red.graph.n == 8);
    CHECK(red.copyNode == 6);
    CHECK(red.tailNode == 7);
    CHECK(red.headNode == 8);
    CHECK(red.graph.adjacent(1, 7));
    CHECK(red.graph.adjacent(6, 8));
    CHECK(red.graph.adjacent(2, 6)); // copy inherits neighbors of 1
    CHECK(red.graph.adjacent(5, 6));
    CHECK(!red.graph.adjacent(3, 6));

    std::vector<int> seq{7, 1, 2, 3, 4, 5, 6, 8};
    CHECK(drc::cycleFromReducedPath(red, seq) == std::vector<int>{1, 2, 3, 4, 5});
    std::reverse(seq.begin(), seq.end());
    CHECK(drc::cycleFromReducedPath(red, seq) == std::vector<int>{1, 2, 3, 4, 5});

    CHECK_THROWS_AS(drc::cycleFromReducedPath(red, {1, 7, 2, 3, 4, 5, 6, 8}),
                    drc::InvalidParameter);
    CHECK_THROWS_AS(drc::cycleFromReducedPath(red, {7, 1, 2}), drc::InvalidParameter);
    CHECK_THROWS_AS(drc::cycleToPath(c5, 9), drc::NodeNotFound);
}

TEST_CASE("hamiltonian cycle formulation decodes through the reduction")
{
    auto c5 = drc::cycleGraph(5);
    auto f = drc::hamiltonianCycle(c5);
    CHECK(f.rows == 8);

    CHECK(f.validate(nlohmann::json{{"cycle", {1, 2, 3, 4, 5}}}));
    CHECK(f.validate(nlohmann::json{{"cycle", {3, 4, 5, 1, 2}}}));
    CHECK(!f.validate(nlohmann::json{{"cycle", {1, 2, 3, 5, 4}}}));
    CHECK(!f.validate(nlohmann::json{{"cycle", nlohmann::json::array()}}));

    drc::SolverConfig config;
    config.maxIterations = 2000;
    config.seed = 1;
    bool solved = false;
    for (const auto& r : drc::runBatch(f, config, 10))
        if (r.status == drc::RunStatus::Solved) {
            solved = true;
            CHECK(f.validate(r.solution));
            CHECK(r.solution.at("cycle").size() == 5);
        }
    CHECK(solved);
}
