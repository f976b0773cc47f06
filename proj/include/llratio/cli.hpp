#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace llr {

// Exit codes shared by every subcommand.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,     // bad flags, bad combinations, unexpected errors
    kExitTolerance = 2, // a check or sanity bound failed
    kExitBadModulus = 3 // q is not an odd prime
};

struct RunConfig {
    std::vector<int64_t> qs;
    std::vector<int> ks;
    uint64_t truncation = 10000000;
    double grid_start = 0.0;
    double grid_stop = 8.0;
    double grid_step = 0.01;
    std::vector<double> thresholds = {1.0, 4.0, 9.0, 16.0};
    std::string format; // "", "csv" or "json"; empty picks the natural one
    std::string out;    // empty = stdout
    std::string suite = "all";
    int jobs = 0; // 0 = LLRATIO_JOBS or hardware default
};

// Subcommand bodies. Each returns an ExitCode; they throw only for conditions
// main() maps to exit codes (InvalidModulusError -> 3, ToleranceError -> 2,
// anything else -> 1).
int cmd_lvalues(const RunConfig& cfg);   // CSV of L(1), L'(1), ratio per character
int cmd_dist(const RunConfig& cfg);      // CSV of empirical CDFs on a t-grid
int cmd_mk(const RunConfig& cfg);        // JSON moment enclosures
int cmd_empirical(const RunConfig& cfg); // JSON convergence reports across moduli
int cmd_stieltjes(const RunConfig& cfg); // CSV of gamma_0, gamma_1 at a/q
int cmd_tail(const RunConfig& cfg);      // CSV or JSON upper-tail report
int cmd_verify(const RunConfig& cfg);    // self-check suites

} // namespace llr
