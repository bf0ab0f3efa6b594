#ifndef DRC_BENCH_HPP
#define DRC_BENCH_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "drc/solver.hpp"

namespace drc {

// Aggregated outcome of one formulation on one problem.
struct ProblemResult {
    std::string formulation;
    std::string problem;
    double successShare = 0.0;      // portion of successful runs
    double meanSecondsSolved = 0.0; // over successful runs only
};

struct ProfileCurve {
    std::string formulation;
    std::vector<std::pair<double, double>> points; // (tau, value), step function
};

// Success-weighted performance profiles.  The per-problem reference time
// is the fastest mean among formulations that solved the problem at
// least once; formulations with no success on a problem never enter its
// ratio set and contribute zero there.
std::vector<ProfileCurve> performanceProfile(const std::vector<ProblemResult>& results);

double profileValue(const ProfileCurve& curve, double tau);

void writeProfileCsv(std::ostream& out, const std::vector<ProfileCurve>& curves);
void writeHistogramCsv(std::ostream& out, const std::string& label, const BatchSummary& summary);
void writeNormTraceCsv(std::ostream& out, const std::vector<RunRecord>& records);
void writeJsonl(std::ostream& out, const std::vector<RunRecord>& records, bool includeTrace = false);

// ---- Campaigns ---------------------------------------------------------

struct CampaignInstance {
    std::string name;
    std::vector<std::string> args; // formulation spec, see formulationFromArgs
};

struct Campaign {
    std::vector<CampaignInstance> instances;
    int starts = 10;
    int workers = 1;
    SolverConfig config;
    std::vector<long> bucketEdges{0, 100, 200, 300, 500};
};

// Line-oriented campaign description:
//   starts N | workers N | seed N | max-iters N | check-every N | timeout SECONDS
//   buckets E1 E2 ... Ek
//   instance <name> <subcommand> <args...>
Campaign readCampaign(std::istream& in);
Campaign readCampaignFile(const std::string& path);

// Builds a formulation from a tokenized subcommand line, e.g.
//   color petersen --colors 3
//   color graphs/my.col --colors 4 --cliques auto
//   sat instance.cnf --gadget 4 --cliques
//   sudoku puzzle.txt --mode direct
//   queens --board 8x8 --colors 1 --queens 8
//   hamilton knight:5x5 --no-c2
// Builtin graph names: petersen, complete:N, wheel:N, cycle:N,
// windmill:A:B, knight:RxC, queenboard:RxC.
Formulation formulationFromArgs(const std::vector<std::string>& args);

struct CampaignOutcome {
    std::vector<std::string> names;
    std::vector<BatchSummary> summaries;
    std::vector<std::vector<RunRecord>> records;
};

CampaignOutcome runCampaign(const Campaign& campaign);

void writeCampaignSummary(std::ostream& out, const Campaign& campaign, const CampaignOutcome& outcome);

} // namespace drc

#endif
