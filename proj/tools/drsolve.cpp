// Command-line front end: builds a feasibility formulation from the
// subcommand arguments, runs a batch of seeded starts, and reports the
// first solution found.  Exit code 0 = solved (or campaign completed),
// 1 = no run solved the instance, 2 = usage or input error.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "drc/bench.hpp"
#include "drc/errors.hpp"

namespace {

void printSolution(const drc::RunRecord& record)
{
    const auto& s = record.solution;
    if (s.contains("assignment")) {
        // Satisfying assignment as signed literals.
        const auto& assignment = s.at("assignment");
        for (std::size_t i = 0; i < assignment.size(); ++i)
            std::cout << (assignment[i].get<bool>() ? "" : "-") << i + 1
                      << (i + 1 < assignment.size() ? " " : "\n");
        return;
    }
    if (s.contains("grid")) {
        const auto& grid = s.at("grid");
        for (int row = 0; row < 9; ++row) {
            for (int col = 0; col < 9; ++col)
                std::cout << grid[9 * row + col].get<int>();
            std::cout << '\n';
        }
        return;
    }
    std::cout << s.dump() << '\n';
}

int runSingle(const std::vector<std::string>& spec, const drc::SolverConfig& config, int starts,
              int workers, const std::string& jsonOut, bool includeTrace)
{
    drc::Formulation f = drc::formulationFromArgs(spec);
    auto records = drc::runBatch(f, config, starts, workers);

    if (!jsonOut.empty()) {
        std::ofstream out(jsonOut);
        if (!out)
            throw drc::ParseError("cannot open output file: " + jsonOut);
        drc::writeJsonl(out, records, includeTrace);
    }

    auto summary = drc::summarize(records, {});
    std::cerr << f.name << ": " << summary.solved << "/" << summary.starts << " starts solved";
    if (summary.solved > 0)
        std::cerr << ", mean " << summary.meanSecondsSolved << " s per solved run";
    std::cerr << '\n';

    for (const auto& r : records)
        if (r.status == drc::RunStatus::Solved) {
            std::cerr << "seed " << r.seed << " solved after " << r.iterations << " iterations\n";
            printSolution(r);
            return 0;
        }
    return 1;
}

int runCampaignFile(const std::string& path, const std::string& jsonOut, bool includeTrace)
{
    drc::Campaign campaign = drc::readCampaignFile(path);
    auto outcome = drc::runCampaign(campaign);
    drc::writeCampaignSummary(std::cout, campaign, outcome);
    if (!jsonOut.empty()) {
        std::ofstream out(jsonOut);
        if (!out)
            throw drc::ParseError("cannot open output file: " + jsonOut);
        for (const auto& records : outcome.records)
            drc::writeJsonl(out, records, includeTrace);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Projection-splitting solver for graph coloring and its reductions"};
    app.allow_extras();

    int starts = 1;
    int workers = 1;
    std::string jsonOut;
    drc::SolverConfig config;
    double timeout = 0.0;

    app.add_option("--starts", starts, "number of random starts");
    app.add_option("--workers", workers, "worker threads for the batch");
    app.add_option("--seed", config.seed, "base seed; start s uses seed+s");
    app.add_option("--max-iters", config.maxIterations, "iteration cap per run");
    auto* timeoutOpt = app.add_option("--timeout", timeout, "wall-clock cap per run, seconds");
    app.add_option("--check-every", config.checkEvery, "candidate check period");
    app.add_option("--json", jsonOut, "write JSONL run records to this file");
    bool trace = false;
    app.add_flag("--trace", trace, "record iterate norms (adds norm_trace to JSONL)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    if (timeoutOpt->count() > 0)
        config.timeCapSeconds = timeout;
    config.recordTrace = trace;

    std::vector<std::string> rest = app.remaining();
    try {
        if (rest.empty())
            throw drc::ParseError(
                "expected a subcommand: color | sat | sudoku | queens | hamilton | bench");
        if (rest[0] == "bench") {
            if (rest.size() != 2)
                throw drc::ParseError("bench expects exactly one campaign file");
            return runCampaignFile(rest[1], jsonOut, trace);
        }
        return runSingle(rest, config, starts, workers, jsonOut, trace);
    } catch (const drc::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
