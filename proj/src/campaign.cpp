#include "manetsim/experiment/campaign.hpp"

#include "manetsim/experiment/world.hpp"

#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace manetsim {

namespace {

std::string format_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

double parse_double_or_throw(const std::string& s, const char* what) {
    if (s == "na")
        return std::nan("");
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw std::runtime_error(std::string("results CSV: bad ") + what + ": " + s);
    return v;
}

std::uint64_t parse_u64_or_throw(const std::string& s, const char* what) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw std::runtime_error(std::string("results CSV: bad ") + what + ": " + s);
    return v;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ','))
        fields.push_back(field);
    return fields;
}

} // namespace

const AggregateResult& ResultsTable::aggregate(const std::string& protocol,
                                               const std::string& channel) const {
    for (const auto& agg : aggregates)
        if (agg.protocol == protocol && agg.channel == channel)
            return agg;
    throw std::out_of_range("no aggregate for " + protocol + "/" + channel);
}

ResultsTable run_campaign(const ScenarioConfig& base, const std::vector<std::string>& protocols,
                          const std::vector<std::string>& channels, int runs, unsigned jobs) {
    if (runs < 1)
        throw ConfigError("campaign needs at least one run");
    if (protocols.empty() || channels.empty())
        throw ConfigError("campaign needs at least one protocol and one channel");

    struct Cell {
        ScenarioConfig cfg;
        std::uint64_t seed;
        std::size_t index;
    };
    std::vector<Cell> cells;
    for (const auto& protocol : protocols)
        for (const auto& channel : channels)
            for (int k = 0; k < runs; ++k) {
                ScenarioConfig cfg = base;
                cfg.protocol = protocol;
                cfg.channel = channel;
                cfg.validate();
                cells.push_back({cfg, base.seed + static_cast<std::uint64_t>(k), cells.size()});
            }

    std::vector<RunResult> results(cells.size());
    std::atomic<std::size_t> next{0};
    const unsigned worker_count =
        jobs > 0 ? jobs : std::max(1u, std::thread::hardware_concurrency());
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= cells.size())
                return;
            const Cell& cell = cells[i];
            const RunStats stats = run_scenario(cell.cfg, cell.seed);
            results[cell.index] = {cell.cfg.protocol, cell.cfg.channel, cell.seed, stats.sent,
                                   stats.delivered,   pdr(stats)};
        }
    };
    if (worker_count <= 1 || cells.size() <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < std::min<std::size_t>(worker_count, cells.size()); ++i)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }

    ResultsTable table;
    table.runs = std::move(results);
    for (const auto& protocol : protocols)
        for (const auto& channel : channels) {
            std::vector<double> samples;
            for (const auto& run : table.runs)
                if (run.protocol == protocol && run.channel == channel)
                    samples.push_back(run.pdr);
            AggregateResult agg;
            agg.protocol = protocol;
            agg.channel = channel;
            agg.n = static_cast<int>(samples.size());
            if (samples.size() >= 2) {
                const ConfidenceInterval ci = confidence_interval(samples);
                agg.mean_pdr = ci.mean;
                agg.ci_half_width = ci.half_width;
            } else {
                agg.mean_pdr = samples.empty() ? 0.0 : samples.front();
                agg.ci_half_width = std::nan(""); // not available for a single run
            }
            table.aggregates.push_back(agg);
        }
    return table;
}

void write_results_csv(std::ostream& out, const ResultsTable& table) {
    out << "protocol,channel,seed,sent,delivered,pdr\n";
    for (const auto& run : table.runs)
        out << run.protocol << ',' << run.channel << ',' << run.seed << ',' << run.sent << ','
            << run.delivered << ',' << format_double(run.pdr) << '\n';
    for (const auto& agg : table.aggregates) {
        out << agg.protocol << ',' << agg.channel << ",AGG," << agg.n << ','
            << format_double(agg.mean_pdr) << ',';
        if (std::isnan(agg.ci_half_width))
            out << "na";
        else
            out << format_double(agg.ci_half_width);
        out << '\n';
    }
}

void write_results_csv_file(const std::string& path, const ResultsTable& table) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write results file: " + path);
    write_results_csv(out, table);
}

ResultsTable parse_results_csv(std::istream& in) {
    ResultsTable table;
    std::string line;
    if (!std::getline(in, line) || split_csv(line) !=
            std::vector<std::string>{"protocol", "channel", "seed", "sent", "delivered", "pdr"})
        throw std::runtime_error("results CSV: missing header");
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        const auto fields = split_csv(line);
        if (fields.size() != 6)
            throw std::runtime_error("results CSV: expected 6 fields: " + line);
        if (fields[2] == "AGG") {
            AggregateResult agg;
            agg.protocol = fields[0];
            agg.channel = fields[1];
            agg.n = static_cast<int>(parse_u64_or_throw(fields[3], "aggregate n"));
            agg.mean_pdr = parse_double_or_throw(fields[4], "mean pdr");
            agg.ci_half_width = parse_double_or_throw(fields[5], "ci half-width");
            table.aggregates.push_back(agg);
        } else {
            RunResult run;
            run.protocol = fields[0];
            run.channel = fields[1];
            run.seed = parse_u64_or_throw(fields[2], "seed");
            run.sent = parse_u64_or_throw(fields[3], "sent");
            run.delivered = parse_u64_or_throw(fields[4], "delivered");
            run.pdr = parse_double_or_throw(fields[5], "pdr");
            table.runs.push_back(run);
        }
    }
    return table;
}

} // namespace manetsim
