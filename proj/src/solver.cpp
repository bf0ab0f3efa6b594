#include "drc/solver.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <random>
#include <thread>

namespace drc {

std::string toString(RunStatus status)
{
    switch (status) {
    case RunStatus::Solved:
        return "Solved";
    case RunStatus::IterationCapReached:
        return "IterationCapReached";
    case RunStatus::TimeCapReached:
        return "TimeCapReached";
    case RunStatus::DivergenceDetected:
        return "DivergenceDetected";
    }
    return "Unknown";
}

Matrix randomStart(int rows, int cols, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k)
            m(i, k) = uniform(rng);
    return m;
}

Matrix consensus(const std::vector<Matrix>& state)
{
    Matrix mean = state.front();
    for (std::size_t i = 1; i < state.size(); ++i)
        mean += state[i];
    mean /= static_cast<double>(state.size());
    return mean;
}

void drStepInPlace(std::vector<Matrix>& state, const std::vector<ProjectionOp>& ops)
{
    if (state.size() != ops.size())
        throw ShapeMismatch("state/operator count mismatch");
    const Matrix mean = consensus(state);
    // x_i <- x_i + P_{C_i}(2 mean - x_i) - mean, which is the averaged
    // reflect-reflect step with the diagonal reflected first.
    for (std::size_t i = 0; i < state.size(); ++i) {
        Matrix reflected = 2.0 * mean - state[i];
        state[i] += ops[i].apply(reflected) - mean;
    }
}

namespace {

// Norm of the governing product-space iterate.  For infeasible
// instances this is what grows without bound; the consensus mean can
// stay bounded even then, so it is the wrong divergence signal.
double stateNorm(const std::vector<Matrix>& state)
{
    double sq = 0.0;
    for (const Matrix& x : state)
        sq += x.squaredNorm();
    return std::sqrt(sq);
}

void checkFormulation(const Formulation& f)
{
    if (f.rows <= 0 || f.colors <= 0 || f.nodeCount <= 0)
        throw MalformedFormulation("formulation shape must be positive");
    if (f.ops.size() < 2)
        throw MalformedFormulation("formulation needs at least two constraint sets");
    if (f.roundingOp >= f.ops.size())
        throw MalformedFormulation("rounding operator index out of range");
    if (!f.decode || !f.validate)
        throw MalformedFormulation("formulation needs decode and validate");
}

} // namespace

RunRecord solve(const Formulation& f, const SolverConfig& config)
{
    checkFormulation(f);
    if (config.maxIterations < 1 || config.checkEvery < 1 || config.divergenceWindow < 1)
        throw InvalidParameter("solver config values must be positive");

    const auto start = std::chrono::steady_clock::now();
    auto elapsed = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    };

    RunRecord record;
    record.seed = config.seed;
    record.formulation = f.name;

    const Matrix initial = randomStart(f.rows, f.colors, config.seed);
    std::vector<Matrix> state(f.ops.size(), initial);

    auto accept = [&](const Matrix& candidate, long iteration) {
        const Matrix rounded = f.ops[f.roundingOp].apply(candidate);
        nlohmann::json solution = f.decode(rounded);
        if (!f.validate(solution))
            return false;
        record.status = RunStatus::Solved;
        record.iterations = iteration;
        record.solution = std::move(solution);
        return true;
    };

    if (config.recordTrace)
        record.normTrace.push_back(stateNorm(state));
    if (accept(initial, 0)) {
        record.seconds = elapsed();
        return record;
    }

    double previousWindowNorm = stateNorm(state);
    int growthStreak = 0;

    for (long k = 1; k <= config.maxIterations; ++k) {
        drStepInPlace(state, f.ops);
        const Matrix candidate = consensus(state);
        const double norm = stateNorm(state);

        if (config.recordTrace && k % config.checkEvery == 0)
            record.normTrace.push_back(norm);

        if (k % config.checkEvery == 0 && accept(candidate, k)) {
            record.seconds = elapsed();
            return record;
        }

        if (k % config.divergenceWindow == 0) {
            if (norm > config.divergenceRatio * previousWindowNorm)
                ++growthStreak;
            else
                growthStreak = 0;
            previousWindowNorm = norm;
            if (growthStreak >= 3) {
                record.status = RunStatus::DivergenceDetected;
                record.iterations = k;
                record.seconds = elapsed();
                return record;
            }
        }

        if (config.timeCapSeconds && elapsed() > *config.timeCapSeconds) {
            record.status = RunStatus::TimeCapReached;
            record.iterations = k;
            record.seconds = elapsed();
            return record;
        }
    }

    record.status = RunStatus::IterationCapReached;
    record.iterations = config.maxIterations;
    record.seconds = elapsed();
    return record;
}

std::vector<RunRecord> runBatch(const Formulation& f, const SolverConfig& config, int nStarts,
                                int workers)
{
    if (nStarts < 1)
        throw InvalidParameter("need at least one start");
    if (workers < 1)
        throw InvalidParameter("need at least one worker");

    std::vector<RunRecord> records(nStarts);
    auto runOne = [&](int s) {
        SolverConfig c = config;
        c.seed = config.seed + static_cast<std::uint64_t>(s);
        records[s] = solve(f, c);
    };

    if (workers == 1 || nStarts == 1) {
        for (int s = 0; s < nStarts; ++s)
            runOne(s);
        return records;
    }

    std::atomic<int> next{0};
    auto worker = [&] {
        for (int s = next.fetch_add(1); s < nStarts; s = next.fetch_add(1))
            runOne(s);
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < std::min(workers, nStarts); ++w)
        pool.emplace_back(worker);
    for (auto& t : pool)
        t.join();
    return records;
}

BatchSummary summarize(const std::vector<RunRecord>& records, std::vector<long> bucketEdges)
{
    BatchSummary summary;
    summary.starts = static_cast<int>(records.size());
    summary.bucketEdges = std::move(bucketEdges);
    if (summary.bucketEdges.size() >= 2)
        summary.bucketCounts.assign(summary.bucketEdges.size() - 1, 0);

    double solvedSeconds = 0.0;
    for (const auto& r : records) {
        if (r.status != RunStatus::Solved) {
            ++summary.unsolved;
            continue;
        }
        ++summary.solved;
        solvedSeconds += r.seconds;
        for (std::size_t b = 0; b + 1 < summary.bucketEdges.size(); ++b)
            if (r.iterations >= summary.bucketEdges[b] && r.iterations < summary.bucketEdges[b + 1]) {
                ++summary.bucketCounts[b];
                break;
            }
    }
    if (summary.starts > 0)
        summary.successRate = static_cast<double>(summary.solved) / summary.starts;
    if (summary.solved > 0)
        summary.meanSecondsSolved = solvedSeconds / summary.solved;
    return summary;
}

nlohmann::json toJson(const RunRecord& record, bool includeTrace)
{
    nlohmann::json j{
        {"status", toString(record.status)},
        {"iterations", record.iterations},
        {"seconds", record.seconds},
        {"seed", record.seed},
        {"formulation", record.formulation},
        {"solution", record.solution},
    };
    if (includeTrace)
        j["norm_trace"] = record.normTrace;
    return j;
}

RunRecord runRecordFromJson(const nlohmann::json& j)
{
    RunRecord r;
    const std::string status = j.at("status");
    if (status == "Solved")
        r.status = RunStatus::Solved;
    else if (status == "IterationCapReached")
        r.status = RunStatus::IterationCapReached;
    else if (status == "TimeCapReached")
        r.status = RunStatus::TimeCapReached;
    else if (status == "DivergenceDetected")
        r.status = RunStatus::DivergenceDetected;
    else
        throw ParseError("unknown run status: " + status);
    r.iterations = j.at("iterations");
    r.seconds = j.at("seconds");
    r.seed = j.at("seed");
    r.formulation = j.value("formulation", "");
    r.solution = j.value("solution", nlohmann::json());
    if (j.contains("norm_trace"))
        r.normTrace = j.at("norm_trace").get<std::vector<double>>();
    return r;
}

} // namespace drc
