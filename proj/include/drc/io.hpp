#ifndef DRC_IO_HPP
#define DRC_IO_HPP

#include <iosfwd>
#include <string>

#include "drc/formulations.hpp"
#include "drc/graph.hpp"

namespace drc {

// DIMACS .col: "c" comments, "p edge <n> <m>", "e <i> <j>" (1-based).
// Clique side information rides along as "q <i1> ... <ik>" lines.
Graph readDimacsGraph(std::istream& in);
Graph readDimacsGraphFile(const std::string& path);
void writeDimacsGraph(std::ostream& out, const Graph& g, bool withCliques = true);

// DIMACS CNF restricted to exactly three literals per clause.
CnfFormula readDimacsCnf(std::istream& in);
CnfFormula readDimacsCnfFile(const std::string& path);

// 81 characters; digits 1-9, '0' or '.' for blanks; whitespace ignored.
SudokuGrid readSudoku(const std::string& text);
SudokuGrid readSudokuFile(const std::string& path);

// Rows of '#' (active) and '.' (hole).
BoardMask readBoardMask(std::istream& in);
BoardMask readBoardMaskFile(const std::string& path);

} // namespace drc

#endif
