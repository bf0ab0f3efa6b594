#ifndef DRC_SOLVER_HPP
#define DRC_SOLVER_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "drc/projections.hpp"

namespace drc {

// A feasibility problem ready for the solver: an ordered list of
// constraint sets over a fixed matrix shape, plus the domain-level
// decode/validate pair.  decode receives the candidate after rounding by
// ops[roundingOp] and emits a JSON solution; validate re-checks that
// solution without looking at solver internals.
struct Formulation {
    std::string name;
    int rows = 0;
    int colors = 0;
    int nodeCount = 0;
    std::vector<ProjectionOp> ops;
    std::size_t roundingOp = 0;
    std::function<nlohmann::json(const Matrix&)> decode;
    std::function<bool(const nlohmann::json&)> validate;
};

enum class RunStatus { Solved, IterationCapReached, TimeCapReached, DivergenceDetected };

std::string toString(RunStatus status);

struct SolverConfig {
    long maxIterations = 500;
    std::uint64_t seed = 0;
    int checkEvery = 1;
    int divergenceWindow = 100;
    // Sustained growth of the iterate norm by this factor per window, for
    // three windows in a row, flags divergence.  Calibrated on the
    // feasible/infeasible instance pair exercised by the acceptance suite.
    double divergenceRatio = 1.25;
    std::optional<double> timeCapSeconds;
    bool recordTrace = false;
};

struct RunRecord {
    RunStatus status = RunStatus::IterationCapReached;
    long iterations = 0;
    double seconds = 0.0;
    std::uint64_t seed = 0;
    std::string formulation;
    std::vector<double> normTrace; // governing iterate norm, sampled every checkEvery
    nlohmann::json solution;       // null unless Solved
};

struct BatchSummary {
    int starts = 0;
    int solved = 0;
    double successRate = 0.0;
    double meanSecondsSolved = 0.0;
    std::vector<long> bucketEdges;  // bucket b covers [edges[b], edges[b+1])
    std::vector<int> bucketCounts;  // solved runs per iteration bucket
    int unsolved = 0;
};

// Shared i.i.d. uniform [0,1) start, seeded.
Matrix randomStart(int rows, int cols, std::uint64_t seed);

// One step of the product-space splitting iteration: the diagonal plays
// the first role, the product of constraint sets the second, so the
// consensus mean of the state is the candidate shadow.
void drStepInPlace(std::vector<Matrix>& state, const std::vector<ProjectionOp>& ops);

Matrix consensus(const std::vector<Matrix>& state);

RunRecord solve(const Formulation& f, const SolverConfig& config);

// Independent runs with seeds config.seed + 0 .. nStarts-1.  With more
// than one worker the runs are spread over threads; the returned order
// (and hence every aggregate) is still by seed.
std::vector<RunRecord> runBatch(const Formulation& f, const SolverConfig& config, int nStarts,
                                int workers = 1);

BatchSummary summarize(const std::vector<RunRecord>& records, std::vector<long> bucketEdges);

nlohmann::json toJson(const RunRecord& record, bool includeTrace = false);
RunRecord runRecordFromJson(const nlohmann::json& j);

} // namespace drc

#endif
