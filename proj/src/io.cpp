#include "drc/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace drc {

namespace {

std::ifstream openFile(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open file: " + path);
    return in;
}

[[noreturn]] void badLine(const std::string& what, int lineNo, const std::string& line)
{
    throw ParseError(what + " at line " + std::to_string(lineNo) + ": " + line);
}

} // namespace

Graph readDimacsGraph(std::istream& in)
{
    int n = -1;
    long declaredEdges = -1;
    std::vector<Edge> edges;
    std::vector<std::vector<int>> cliques;

    std::string line;
    int lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag == "c")
            continue;
        if (tag == "p") {
            std::string format;
            if (!(ls >> format >> n >> declaredEdges) || format != "edge" || n < 1)
                badLine("malformed problem line", lineNo, line);
        } else if (tag == "e") {
            int a, b;
            if (!(ls >> a >> b))
                badLine("malformed edge line", lineNo, line);
            edges.push_back({a, b});
        } else if (tag == "q") {
            std::vector<int> clique;
            int v;
            while (ls >> v)
                clique.push_back(v);
            if (clique.size() < 2)
                badLine("clique line needs at least two nodes", lineNo, line);
            cliques.push_back(std::move(clique));
        } else {
            badLine("unknown line tag '" + tag + "'", lineNo, line);
        }
    }
    if (n < 0)
        throw ParseError("missing 'p edge' line");
    try {
        return makeGraph(n, std::move(edges), std::move(cliques));
    } catch (const InvalidParameter& e) {
        throw ParseError(std::string("invalid graph: ") + e.what());
    }
}

Graph readDimacsGraphFile(const std::string& path)
{
    auto in = openFile(path);
    return readDimacsGraph(in);
}

void writeDimacsGraph(std::ostream& out, const Graph& g, bool withCliques)
{
    out << "p edge " << g.n << ' ' << g.edges.size() << '\n';
    for (const auto& [a, b] : g.edges)
        out << "e " << a << ' ' << b << '\n';
    if (withCliques)
        for (const auto& clique : g.cliques) {
            out << 'q';
            for (int v : clique)
                out << ' ' << v;
            out << '\n';
        }
}

CnfFormula readDimacsCnf(std::istream& in)
{
    CnfFormula f;
    long declaredClauses = -1;
    std::vector<int> pending;

    std::string line;
    int lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first) || first == "c" || first == "%" || first == "0")
            continue;
        if (first == "p") {
            std::string format;
            if (!(ls >> format >> f.variables >> declaredClauses) || format != "cnf" || f.variables < 1)
                badLine("malformed problem line", lineNo, line);
            continue;
        }
        ls.clear();
        ls.str(line);
        int literal;
        while (ls >> literal) {
            if (literal == 0) {
                if (pending.size() != 3)
                    badLine("clause must have exactly 3 literals", lineNo, line);
                f.clauses.push_back({pending[0], pending[1], pending[2]});
                pending.clear();
            } else {
                pending.push_back(literal);
            }
        }
    }
    if (f.variables < 1)
        throw ParseError("missing 'p cnf' line");
    if (!pending.empty())
        throw ParseError("unterminated clause at end of input");
    for (const auto& clause : f.clauses)
        for (int literal : clause)
            if (std::abs(literal) > f.variables)
                throw ParseError("literal out of declared variable range");
    return f;
}

CnfFormula readDimacsCnfFile(const std::string& path)
{
    auto in = openFile(path);
    return readDimacsCnf(in);
}

SudokuGrid readSudoku(const std::string& text)
{
    SudokuGrid grid;
    int filled = 0;
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch)))
            continue;
        if (filled >= 81)
            throw ParseError("sudoku text has more than 81 cells");
        if (ch == '.' || ch == '0')
            grid.cells[filled++] = 0;
        else if (ch >= '1' && ch <= '9')
            grid.cells[filled++] = ch - '0';
        else
            throw ParseError(std::string("invalid sudoku character '") + ch + "'");
    }
    if (filled != 81)
        throw ParseError("sudoku text has " + std::to_string(filled) + " cells, expected 81");
    if (!sudokuGivensConsistent(grid))
        throw ConflictingGivens("sudoku givens conflict");
    return grid;
}

SudokuGrid readSudokuFile(const std::string& path)
{
    auto in = openFile(path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return readSudoku(buffer.str());
}

BoardMask readBoardMask(std::istream& in)
{
    std::vector<std::string> rows;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
            line.pop_back();
        if (line.empty())
            continue;
        rows.push_back(line);
    }
    if (rows.empty())
        throw EmptyBoard("board mask is empty");

    BoardMask mask;
    mask.rows = static_cast<int>(rows.size());
    mask.cols = static_cast<int>(rows.front().size());
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != mask.cols)
            throw ParseError("ragged board mask rows");
        for (char ch : row) {
            if (ch == '#')
                mask.cells.push_back(1);
            else if (ch == '.')
                mask.cells.push_back(0);
            else
                throw ParseError(std::string("invalid board mask character '") + ch + "'");
        }
    }
    return mask;
}

BoardMask readBoardMaskFile(const std::string& path)
{
    auto in = openFile(path);
    return readBoardMask(in);
}

} // namespace drc
