#include "manetsim/experiment/stats.hpp"

#include <cmath>
#include <stdexcept>

namespace manetsim {

double pdr(const RunStats& stats) {
    if (stats.sent == 0)
        throw std::invalid_argument("pdr: no traffic originated");
    return static_cast<double>(stats.delivered) / static_cast<double>(stats.sent);
}

double sample_mean(std::span<const double> samples) {
    double sum = 0.0;
    for (double s : samples)
        sum += s;
    return sum / static_cast<double>(samples.size());
}

double sample_stddev(std::span<const double> samples) {
    const double mean = sample_mean(samples);
    double ss = 0.0;
    for (double s : samples)
        ss += (s - mean) * (s - mean);
    return std::sqrt(ss / static_cast<double>(samples.size() - 1));
}

namespace {

// Continued fraction for the regularized incomplete beta function
// (Lentz's method).
double betacf(double a, double b, double x) {
    constexpr int kMaxIter = 300;
    constexpr double kEps = 3e-16;
    constexpr double kFpMin = 1e-300;
    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kFpMin)
        d = kFpMin;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kFpMin)
            d = kFpMin;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kFpMin)
            c = kFpMin;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kFpMin)
            d = kFpMin;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kFpMin)
            c = kFpMin;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEps)
            break;
    }
    return h;
}

double ibeta(double a, double b, double x) {
    if (x <= 0.0)
        return 0.0;
    if (x >= 1.0)
        return 1.0;
    const double ln_bt = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                         a * std::log(x) + b * std::log(1.0 - x);
    const double bt = std::exp(ln_bt);
    if (x < (a + 1.0) / (a + b + 2.0))
        return bt * betacf(a, b, x) / a;
    return 1.0 - bt * betacf(b, a, 1.0 - x) / b;
}

// CDF of the Student-t distribution with `dof` degrees of freedom.
double student_t_cdf(double t, int dof) {
    const double v = static_cast<double>(dof);
    const double x = v / (v + t * t);
    const double tail = 0.5 * ibeta(v / 2.0, 0.5, x);
    return t >= 0.0 ? 1.0 - tail : tail;
}

} // namespace

double student_t_quantile(double p, int dof) {
    if (dof < 1)
        throw std::invalid_argument("student_t_quantile: dof must be >= 1");
    if (p <= 0.0 || p >= 1.0)
        throw std::invalid_argument("student_t_quantile: p must lie in (0,1)");
    if (p == 0.5)
        return 0.0;
    const bool upper = p > 0.5;
    const double target = upper ? p : 1.0 - p;
    double lo = 0.0;
    double hi = 1.0;
    while (student_t_cdf(hi, dof) < target)
        hi *= 2.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (student_t_cdf(mid, dof) < target)
            lo = mid;
        else
            hi = mid;
    }
    const double q = 0.5 * (lo + hi);
    return upper ? q : -q;
}

ConfidenceInterval confidence_interval(std::span<const double> samples, double level) {
    if (samples.size() < 2)
        throw std::invalid_argument("confidence_interval: need at least 2 samples");
    if (level <= 0.0 || level >= 1.0)
        throw std::invalid_argument("confidence_interval: level must lie in (0,1)");
    const double mean = sample_mean(samples);
    const double s = sample_stddev(samples);
    const double t = student_t_quantile((1.0 + level) / 2.0, static_cast<int>(samples.size()) - 1);
    return {mean, t * s / std::sqrt(static_cast<double>(samples.size()))};
}

} // namespace manetsim
