#include "drc/bench.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "drc/io.hpp"

namespace drc {

std::vector<ProfileCurve> performanceProfile(const std::vector<ProblemResult>& results)
{
    std::set<std::string> formulations, problems;
    for (const auto& r : results) {
        formulations.insert(r.formulation);
        problems.insert(r.problem);
    }
    if (formulations.size() < 2 || problems.empty())
        throw InvalidParameter("profile needs at least two formulations and one problem");

    // Reference time per problem: fastest mean among formulations with
    // at least one success.
    std::map<std::string, double> reference;
    for (const auto& r : results)
        if (r.successShare > 0.0) {
            auto it = reference.find(r.problem);
            if (it == reference.end() || r.meanSecondsSolved < it->second)
                reference[r.problem] = r.meanSecondsSolved;
        }
    if (reference.empty())
        throw NoSuccessfulRuns("no formulation solved any problem");

    const double np = static_cast<double>(problems.size());

    // Per-formulation (ratio, share) events.
    std::map<std::string, std::vector<std::pair<double, double>>> events;
    std::set<double> taus{1.0};
    for (const auto& r : results) {
        if (r.successShare <= 0.0)
            continue;
        auto ref = reference.find(r.problem);
        if (ref == reference.end() || ref->second <= 0.0) {
            // Degenerate zero reference time: everything that succeeded
            // with zero mean time ties at tau = 1.
            double ratio = r.meanSecondsSolved == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
            if (std::isfinite(ratio)) {
                events[r.formulation].push_back({ratio, r.successShare});
                taus.insert(ratio);
            }
            continue;
        }
        double ratio = std::max(1.0, r.meanSecondsSolved / ref->second);
        events[r.formulation].push_back({ratio, r.successShare});
        taus.insert(ratio);
    }

    std::vector<ProfileCurve> curves;
    for (const auto& name : formulations) {
        ProfileCurve curve;
        curve.formulation = name;
        auto evs = events[name];
        std::sort(evs.begin(), evs.end());
        for (double tau : taus) {
            double mass = 0.0;
            for (const auto& [ratio, share] : evs)
                if (ratio <= tau)
                    mass += share;
            curve.points.push_back({tau, mass / np});
        }
        curves.push_back(std::move(curve));
    }
    return curves;
}

double profileValue(const ProfileCurve& curve, double tau)
{
    double value = 0.0;
    for (const auto& [t, v] : curve.points) {
        if (t > tau)
            break;
        value = v;
    }
    return value;
}

void writeProfileCsv(std::ostream& out, const std::vector<ProfileCurve>& curves)
{
    out << "formulation,tau,pi\n";
    for (const auto& curve : curves)
        for (const auto& [tau, value] : curve.points)
            out << curve.formulation << ',' << tau << ',' << value << '\n';
}

void writeHistogramCsv(std::ostream& out, const std::string& label, const BatchSummary& summary)
{
    out << "label,bucket,count,cumulative_pct\n";
    int cumulative = 0;
    for (std::size_t b = 0; b + 1 < summary.bucketEdges.size(); ++b) {
        cumulative += summary.bucketCounts[b];
        out << label << ',' << summary.bucketEdges[b] << '-' << summary.bucketEdges[b + 1] - 1 << ','
            << summary.bucketCounts[b] << ','
            << 100.0 * cumulative / std::max(1, summary.starts) << '\n';
    }
    out << label << ",unsolved," << summary.unsolved << ",100\n";
}

void writeNormTraceCsv(std::ostream& out, const std::vector<RunRecord>& records)
{
    out << "seed,status,iteration,norm\n";
    for (const auto& r : records) {
        if (r.normTrace.empty())
            throw MissingTrace("run has no recorded norm trace");
        for (std::size_t k = 0; k < r.normTrace.size(); ++k)
            out << r.seed << ',' << toString(r.status) << ',' << k << ',' << r.normTrace[k] << '\n';
    }
}

void writeJsonl(std::ostream& out, const std::vector<RunRecord>& records, bool includeTrace)
{
    for (const auto& r : records)
        out << toJson(r, includeTrace).dump() << '\n';
}

// ---- Formulation construction from tokens ------------------------------

namespace {

[[noreturn]] void usageError(const std::string& message)
{
    throw ParseError(message);
}

bool parsePair(const std::string& text, char sep, int& a, int& b)
{
    auto pos = text.find(sep);
    if (pos == std::string::npos)
        return false;
    try {
        a = std::stoi(text.substr(0, pos));
        b = std::stoi(text.substr(pos + 1));
    } catch (...) {
        return false;
    }
    return true;
}

Graph builtinOrFileGraph(const std::string& name)
{
    if (name == "petersen")
        return petersenGraph();
    int a = 0, b = 0;
    if (name.rfind("complete:", 0) == 0)
        return completeGraph(std::stoi(name.substr(9)));
    if (name.rfind("wheel:", 0) == 0)
        return wheelGraph(std::stoi(name.substr(6)));
    if (name.rfind("cycle:", 0) == 0)
        return cycleGraph(std::stoi(name.substr(6)));
    if (name.rfind("windmill:", 0) == 0) {
        if (!parsePair(name.substr(9), ':', a, b))
            usageError("windmill spec must be windmill:A:B");
        return windmillGraph(a, b);
    }
    if (name.rfind("knight:", 0) == 0) {
        if (!parsePair(name.substr(7), 'x', a, b))
            usageError("knight spec must be knight:RxC");
        return boardGraph(PieceKind::Knight, BoardMask::full(a, b));
    }
    if (name.rfind("queenboard:", 0) == 0) {
        if (!parsePair(name.substr(11), 'x', a, b))
            usageError("queenboard spec must be queenboard:RxC");
        return boardGraph(PieceKind::Queen, BoardMask::full(a, b));
    }
    return readDimacsGraphFile(name);
}

struct TokenReader {
    const std::vector<std::string>& args;
    std::size_t pos = 0;

    bool done() const { return pos >= args.size(); }
    const std::string& next()
    {
        if (done())
            usageError("unexpected end of arguments");
        return args[pos++];
    }
    const std::string& expectValue(const std::string& flag)
    {
        if (done())
            usageError("flag " + flag + " needs a value");
        return args[pos++];
    }
};

Formulation buildColor(TokenReader& tr)
{
    std::string source = tr.next();
    int colors = -1;
    bool pin = true, allColors = true;
    std::string cliqueSpec;
    while (!tr.done()) {
        const std::string flag = tr.next();
        if (flag == "--colors")
            colors = std::stoi(tr.expectValue(flag));
        else if (flag == "--cliques")
            cliqueSpec = tr.expectValue(flag);
        else if (flag == "--no-pin")
            pin = false;
        else if (flag == "--no-all-colors")
            allColors = false;
        else
            usageError("unknown color flag: " + flag);
    }
    if (colors < 1)
        usageError("color requires --colors M with M >= 1");

    Graph g = builtinOrFileGraph(source);
    bool useCliques = false;
    if (!cliqueSpec.empty()) {
        useCliques = true;
        if (cliqueSpec == "auto") {
            if (g.cliques.empty())
                g.cliques = maximalCliques(g);
        } else {
            Graph sidecar = readDimacsGraphFile(cliqueSpec);
            g = makeGraph(g.n, g.edges, sidecar.cliques);
        }
    }
    return standardColoring(g, colors, useCliques, pin, allColors);
}

Formulation buildSat(TokenReader& tr)
{
    const std::string file = tr.next();
    int gadget = 4;
    bool cliques = false;
    while (!tr.done()) {
        const std::string flag = tr.next();
        if (flag == "--gadget")
            gadget = std::stoi(tr.expectValue(flag));
        else if (flag == "--cliques")
            cliques = true;
        else
            usageError("unknown sat flag: " + flag);
    }
    if (gadget != 4 && gadget != 5)
        usageError("--gadget must be 4 or 5");
    return satColoring(readDimacsCnfFile(file),
                       gadget == 4 ? ClauseGadget::FourNode : ClauseGadget::FiveNode, cliques);
}

Formulation buildSudoku(TokenReader& tr)
{
    const std::string file = tr.next();
    SudokuMode mode = SudokuMode::Direct;
    while (!tr.done()) {
        const std::string flag = tr.next();
        if (flag == "--mode") {
            const std::string value = tr.expectValue(flag);
            if (value == "direct")
                mode = SudokuMode::Direct;
            else if (value == "extension")
                mode = SudokuMode::Extension;
            else
                usageError("--mode must be direct or extension");
        } else {
            usageError("unknown sudoku flag: " + flag);
        }
    }
    return sudokuFormulation(readSudokuFile(file), mode);
}

Formulation buildQueens(TokenReader& tr)
{
    std::string board;
    int colors = 1, queens = -1;
    bool cover = false;
    while (!tr.done()) {
        const std::string flag = tr.next();
        if (flag == "--board")
            board = tr.expectValue(flag);
        else if (flag == "--colors")
            colors = std::stoi(tr.expectValue(flag));
        else if (flag == "--queens")
            queens = std::stoi(tr.expectValue(flag));
        else if (flag == "--cover")
            cover = true;
        else
            usageError("unknown queens flag: " + flag);
    }
    if (board.empty())
        usageError("queens requires --board FILE|RxC");

    int r = 0, c = 0;
    Graph g = parsePair(board, 'x', r, c)
                  ? boardGraph(PieceKind::Queen, BoardMask::full(r, c))
                  : boardGraph(PieceKind::Queen, readBoardMaskFile(board));
    if (cover)
        return standardColoring(g, colors, true);
    if (queens < 1)
        usageError("queens requires --queens Q (or --cover)");
    return queensFormulation(g, colors, queens);
}

Formulation buildHamilton(TokenReader& tr)
{
    const std::string source = tr.next();
    bool cycle = false, withFullSpace = true;
    while (!tr.done()) {
        const std::string flag = tr.next();
        if (flag == "--cycle")
            cycle = true;
        else if (flag == "--no-c2")
            withFullSpace = false;
        else
            usageError("unknown hamilton flag: " + flag);
    }
    const Graph g = builtinOrFileGraph(source);
    return cycle ? hamiltonianCycle(g, withFullSpace) : hamiltonianPath(g, withFullSpace);
}

} // namespace

Formulation formulationFromArgs(const std::vector<std::string>& args)
{
    if (args.empty())
        usageError("empty formulation spec");
    TokenReader tr{args, 1};
    const std::string& kind = args[0];
    if (kind == "color")
        return buildColor(tr);
    if (kind == "sat")
        return buildSat(tr);
    if (kind == "sudoku")
        return buildSudoku(tr);
    if (kind == "queens")
        return buildQueens(tr);
    if (kind == "hamilton")
        return buildHamilton(tr);
    usageError("unknown subcommand: " + kind);
}

// ---- Campaigns ---------------------------------------------------------

Campaign readCampaign(std::istream& in)
{
    Campaign campaign;
    std::string line;
    int lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag[0] == '#')
            continue;
        if (tag == "starts")
            ls >> campaign.starts;
        else if (tag == "workers")
            ls >> campaign.workers;
        else if (tag == "seed")
            ls >> campaign.config.seed;
        else if (tag == "max-iters")
            ls >> campaign.config.maxIterations;
        else if (tag == "check-every")
            ls >> campaign.config.checkEvery;
        else if (tag == "timeout") {
            double seconds;
            ls >> seconds;
            campaign.config.timeCapSeconds = seconds;
        } else if (tag == "buckets") {
            campaign.bucketEdges.clear();
            long edge;
            while (ls >> edge)
                campaign.bucketEdges.push_back(edge);
        } else if (tag == "instance") {
            CampaignInstance instance;
            if (!(ls >> instance.name))
                throw ParseError("instance line needs a name (line " + std::to_string(lineNo) + ")");
            std::string token;
            while (ls >> token)
                instance.args.push_back(token);
            if (instance.args.empty())
                throw ParseError("instance line needs a formulation spec (line " +
                                 std::to_string(lineNo) + ")");
            campaign.instances.push_back(std::move(instance));
        } else {
            throw ParseError("unknown campaign directive '" + tag + "' (line " +
                             std::to_string(lineNo) + ")");
        }
    }
    if (campaign.instances.empty())
        throw InvalidParameter("campaign has no instances");
    if (campaign.starts < 1)
        throw InvalidParameter("campaign needs at least one start");
    return campaign;
}

Campaign readCampaignFile(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open campaign file: " + path);
    return readCampaign(in);
}

CampaignOutcome runCampaign(const Campaign& campaign)
{
    CampaignOutcome outcome;
    for (const auto& instance : campaign.instances) {
        Formulation f = formulationFromArgs(instance.args);
        auto records = runBatch(f, campaign.config, campaign.starts, campaign.workers);
        auto edges = campaign.bucketEdges;
        if (edges.empty() || edges.back() <= campaign.config.maxIterations)
            edges.push_back(campaign.config.maxIterations + 1);
        outcome.names.push_back(instance.name);
        outcome.summaries.push_back(summarize(records, std::move(edges)));
        outcome.records.push_back(std::move(records));
    }
    return outcome;
}

void writeCampaignSummary(std::ostream& out, const Campaign& campaign, const CampaignOutcome& outcome)
{
    out << "instance,starts,solved,success_pct,mean_seconds_solved\n";
    for (std::size_t i = 0; i < outcome.names.size(); ++i) {
        const auto& s = outcome.summaries[i];
        out << outcome.names[i] << ',' << s.starts << ',' << s.solved << ','
            << 100.0 * s.successRate << ',' << s.meanSecondsSolved << '\n';
    }
    (void)campaign;
}

} // namespace drc
