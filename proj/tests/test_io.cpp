#include <doctest.h>

#include <sstream>

#include "drc/io.hpp"

TEST_CASE("dimacs graph parsing and round trip")
{
    std::istringstream in("c a triangle\n"
                          "p edge 3 3\n"
                          "e 1 2\n"
                          "e 2 3\n"
                          "e 1 3\n"
                          "q 1 2 3\n");
    auto g = drc::readDimacsGraph(in);
    CHECK(g.n == 3);
    CHECK(g.edges.size() == 3);
    CHECK(g.cliques.size() == 1);

    std::ostringstream out;
    drc::writeDimacsGraph(out, g, true);
    std::istringstream back(out.str());
    auto g2 = drc::readDimacsGraph(back);
    CHECK(g2.n == g.n);
    CHECK(g2.edges == g.edges);
    CHECK(g2.cliques == g.cliques);
}

TEST_CASE("dimacs graph error reporting")
{
    std::istringstream missing("e 1 2\n");
    CHECK_THROWS_AS(drc::readDimacsGraph(missing), drc::ParseError);

    std::istringstream badTag("p edge 2 1\nx 1 2\n");
    CHECK_THROWS_WITH_AS(drc::readDimacsGraph(badTag),
                         doctest::Contains("line 2"), drc::ParseError);

    std::istringstream outOfRange("p edge 2 1\ne 1 5\n");
    CHECK_THROWS_AS(drc::readDimacsGraph(outOfRange), drc::ParseError);

    std::istringstream badClique("p edge 3 2\ne 1 2\ne 2 3\nq 1 3\n");
    CHECK_THROWS_AS(drc::readDimacsGraph(badClique), drc::ParseError); // not complete

    CHECK_THROWS_AS(drc::readDimacsGraphFile("/nonexistent/file.col"), drc::ParseError);
}

TEST_CASE("dimacs cnf parsing")
{
    std::istringstream in("c comment\n"
                          "p cnf 3 2\n"
                          "1 2 3 0\n"
                          "-1 2 -3 0\n"
                          "%\n"
                          "0\n");
    auto f = drc::readDimacsCnf(in);
    CHECK(f.variables == 3);
    REQUIRE(f.clauses.size() == 2);
    CHECK(f.clauses[0] == std::array<int, 3>{1, 2, 3});
    CHECK(f.clauses[1] == std::array<int, 3>{-1, 2, -3});

    // clauses may span lines
    std::istringstream multiline("p cnf 2 1\n1 -2\n1 0\n");
    auto spanned = drc::readDimacsCnf(multiline);
    REQUIRE(spanned.clauses.size() == 1);
    CHECK(spanned.clauses[0] == std::array<int, 3>{1, -2, 1});
}

TEST_CASE("dimacs cnf error cases")
{
    std::istringstream noHeader("1 2 3 0\n");
    CHECK_THROWS_AS(drc::readDimacsCnf(noHeader), drc::ParseError);

    std::istringstream shortClause("p cnf 3 1\n1 2 0\n");
    CHECK_THROWS_AS(drc::readDimacsCnf(shortClause), drc::ParseError);

    std::istringstream unterminated("p cnf 3 1\n1 2 3\n");
    CHECK_THROWS_AS(drc::readDimacsCnf(unterminated), drc::ParseError);

    std::istringstream range("p cnf 2 1\n1 2 3 0\n");
    CHECK_THROWS_AS(drc::readDimacsCnf(range), drc::ParseError);
}

TEST_CASE("sudoku text parsing")
{
    std::string text;
    for (int i = 0; i < 81; ++i)
        text += '.';
    auto grid = drc::readSudoku(text);
    for (int c : grid.cells)
        CHECK(c == 0);

    text[0] = '5';
    text[1] = '3';
    auto given = drc::readSudoku(text);
    CHECK(given.cells[0] == 5);
    CHECK(given.cells[1] == 3);

    CHECK_THROWS_AS(drc::readSudoku("12345"), drc::ParseError);          // short
    CHECK_THROWS_AS(drc::readSudoku(text + "1"), drc::ParseError);       // long
    std::string badChar = text;
    badChar[2] = 'x';
    CHECK_THROWS_AS(drc::readSudoku(badChar), drc::ParseError);
    std::string clash = text;
    clash[2] = '5'; // same row as the 5 at cell 0
    CHECK_THROWS_AS(drc::readSudoku(clash), drc::ConflictingGivens);
}

TEST_CASE("board mask parsing")
{
    std::istringstream in("###\n"
                          "#.#\n");
    auto mask = drc::readBoardMask(in);
    CHECK(mask.rows == 2);
    CHECK(mask.cols == 3);
    CHECK(mask.activeCount() == 5);
    CHECK(mask.active(0, 1));
    CHECK(!mask.active(1, 1));

    std::istringstream ragged("###\n##\n");
    CHECK_THROWS_AS(drc::readBoardMask(ragged), drc::ParseError);

    std::istringstream empty("\n\n");
    CHECK_THROWS_AS(drc::readBoardMask(empty), drc::EmptyBoard);

    std::istringstream badChar("#x#\n");
    CHECK_THROWS_AS(drc::readBoardMask(badChar), drc::ParseError);
}
