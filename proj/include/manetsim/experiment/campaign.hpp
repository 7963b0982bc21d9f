#pragma once

#include "manetsim/experiment/scenario_config.hpp"
#include "manetsim/experiment/stats.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace manetsim {

struct RunResult {
    std::string protocol;
    std::string channel;
    std::uint64_t seed = 0;
    std::uint64_t sent = 0;
    std::uint64_t delivered = 0;
    double pdr = 0.0;

    bool operator==(const RunResult&) const = default;
};

struct AggregateResult {
    std::string protocol;
    std::string channel;
    int n = 0;
    double mean_pdr = 0.0;
    double ci_half_width = 0.0; // NaN marks "not available" (single run)
};

struct ResultsTable {
    std::vector<RunResult> runs;
    std::vector<AggregateResult> aggregates;

    const AggregateResult& aggregate(const std::string& protocol,
                                     const std::string& channel) const;
};

// Runs the cross product protocols x channels x seeds
// {base_seed .. base_seed + runs - 1}. Every cell reuses the same seed set,
// so each protocol and channel sees identical mobility and traffic
// realizations. Independent runs execute on `jobs` worker threads
// (0 = hardware concurrency); results are ordered by (protocol, channel,
// seed) regardless.
ResultsTable run_campaign(const ScenarioConfig& base, const std::vector<std::string>& protocols,
                          const std::vector<std::string>& channels, int runs,
                          unsigned jobs = 0);

// CSV: per-run rows `protocol,channel,seed,sent,delivered,pdr`, then
// aggregate rows `protocol,channel,AGG,n,mean_pdr,ci_halfwidth`. Floats use
// shortest round-trip formatting, so re-parsing reproduces the table
// exactly and identical campaigns produce byte-identical files.
void write_results_csv(std::ostream& out, const ResultsTable& table);
void write_results_csv_file(const std::string& path, const ResultsTable& table);
ResultsTable parse_results_csv(std::istream& in);

} // namespace manetsim
