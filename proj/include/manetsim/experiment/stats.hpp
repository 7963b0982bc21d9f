#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace manetsim {

// Per-run counters collected at the application sink.
struct RunStats {
    std::uint64_t sent = 0;      // application packets originated (post warm-up)
    std::uint64_t delivered = 0; // received at the sink (post warm-up originations)
    std::uint64_t control_bytes = 0;
    std::vector<double> latencies; // filled only when latency recording is on
};

// delivered / sent. Throws when no traffic was originated.
double pdr(const RunStats& stats);

struct ConfidenceInterval {
    double mean = 0.0;
    double half_width = 0.0;
};

// Student-t confidence interval: mean +/- t_{(1+level)/2, n-1} * s / sqrt(n).
// Requires at least two samples.
ConfidenceInterval confidence_interval(std::span<const double> samples, double level = 0.95);

// Two-sided Student-t quantile for probability p and the given degrees of
// freedom, computed by inverting the regularized incomplete beta CDF.
double student_t_quantile(double p, int dof);

double sample_mean(std::span<const double> samples);
double sample_stddev(std::span<const double> samples);

} // namespace manetsim
