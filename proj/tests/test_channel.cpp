#include "manetsim/channel/medium.hpp"

#include <doctest.h>

#include <cmath>

using namespace manetsim;

namespace {

ChannelModel reference_channel(double alpha, ChannelMode mode = ChannelMode::Deterministic) {
    ChannelModel m;
    m.carrier_frequency_hz = 2.4e9;
    m.path_loss_exponent = alpha;
    m.nakagami_m = 2;
    m.tx_power_dbm = 20.0;      // 100 mW
    m.sensitivity_dbm = -83.0;
    m.mode = mode;
    return m;
}

// Upper tail of Gamma(shape m, mean mu) at threshold x, for integer m:
// Q(m, m*x/mu) = exp(-y) * sum_{k<m} y^k / k!. Closed-form oracle,
// independent of the sampling path under test.
double gamma_tail_oracle(int m, double mu, double threshold) {
    const double y = m * threshold / mu;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < m; ++k) {
        term *= y / k;
        sum += term;
    }
    return std::exp(-y) * sum;
}

} // namespace

TEST_CASE("free-space reference loss at 1 m and 2.4 GHz") {
    const ChannelModel m = reference_channel(2.0);
    CHECK(m.reference_loss_db() == doctest::Approx(40.05).epsilon(1e-4));
    CHECK(m.path_loss_db(1.0) == doctest::Approx(40.05).epsilon(1e-4));
}

TEST_CASE("path loss at 100 m with exponent 2") {
    const ChannelModel m = reference_channel(2.0);
    CHECK(m.path_loss_db(100.0) == doctest::Approx(80.05).epsilon(1e-4));
}

TEST_CASE("one decade adds 10*alpha dB") {
    const ChannelModel m = reference_channel(2.75);
    CHECK(m.path_loss_db(10.0) - m.path_loss_db(1.0) == doctest::Approx(27.5).epsilon(1e-12));
}

TEST_CASE("path loss below the reference distance clamps, non-positive throws") {
    const ChannelModel m = reference_channel(2.0);
    CHECK(m.path_loss_db(0.2) == m.path_loss_db(1.0));
    CHECK_THROWS_AS(m.path_loss_db(0.0), std::invalid_argument);
    CHECK_THROWS_AS(m.path_loss_db(-5.0), std::invalid_argument);
}

TEST_CASE("path loss increases strictly with distance") {
    const ChannelModel m = reference_channel(2.75);
    double prev = m.path_loss_db(1.0);
    for (double d = 1.5; d < 2000.0; d *= 1.37) {
        const double pl = m.path_loss_db(d);
        CHECK(pl > prev);
        prev = pl;
    }
}

TEST_CASE("max_distance inverts the mean path loss") {
    SUBCASE("independent bisection oracle at several exponents") {
        for (double alpha : {2.0, 2.25, 2.75, 3.5}) {
            const ChannelModel m = reference_channel(alpha);
            // Bisect path_loss_db for the distance where rx power equals
            // the sensitivity.
            double lo = 1.0;
            double hi = 1e6;
            for (int i = 0; i < 200; ++i) {
                const double mid = 0.5 * (lo + hi);
                if (m.tx_power_dbm - m.path_loss_db(mid) >= m.sensitivity_dbm)
                    lo = mid;
                else
                    hi = mid;
            }
            CHECK(m.max_distance() == doctest::Approx(0.5 * (lo + hi)).epsilon(1e-9));
        }
    }
    SUBCASE("round-trip identity within 1e-9 dB") {
        for (double alpha : {2.0, 2.25, 2.75, 3.5}) {
            const ChannelModel m = reference_channel(alpha);
            const double budget = m.tx_power_dbm - m.sensitivity_dbm;
            CHECK(std::fabs(m.path_loss_db(m.max_distance()) - budget) < 1e-9);
        }
    }
    SUBCASE("103 dB budget reaches about 1.4 km in free space") {
        CHECK(reference_channel(2.0).max_distance() == doctest::Approx(1404.6).epsilon(1e-3));
    }
    SUBCASE("103 dB budget reaches about 194.6 m at alpha 2.75") {
        CHECK(std::fabs(reference_channel(2.75).max_distance() - 194.6) < 0.5);
    }
    SUBCASE("no budget, no range") {
        ChannelModel m = reference_channel(2.0);
        m.tx_power_dbm = -90.0;
        CHECK_THROWS_AS(m.max_distance(), std::invalid_argument);
    }
}

TEST_CASE("deterministic reception is a sharp monotone threshold") {
    const ChannelModel m = reference_channel(2.75);
    RandomStream rng(1, 1);
    const double d_max = m.max_distance();
    CHECK(m.reception_success(0.5 * d_max, rng));
    CHECK_FALSE(m.reception_success(1.01 * d_max, rng));
    bool failed_before = false;
    for (double d = 1.0; d < 2.0 * d_max; d += 7.3) {
        const bool ok = m.reception_success(d, rng);
        if (!ok)
            failed_before = true;
        CHECK(ok == !failed_before); // success never resumes past a failure
    }
}

TEST_CASE("Nakagami m=2 reception at mean power equal to sensitivity") {
    ChannelModel m = reference_channel(2.75, ChannelMode::Stochastic);
    RandomStream rng(99, 1);
    const double d_edge = m.max_distance(); // mean rx power == sensitivity here
    constexpr int kTrials = 1'000'000;
    int successes = 0;
    for (int i = 0; i < kTrials; ++i)
        if (m.reception_success(d_edge, rng))
            ++successes;
    const double rate = double(successes) / kTrials;
    const double expected = gamma_tail_oracle(2, 1.0, 1.0); // e^-2 * 3 = 0.40601
    CHECK(expected == doctest::Approx(0.406).epsilon(1e-3));
    CHECK(std::fabs(rate - expected) < 0.002);
}

TEST_CASE("Nakagami reception matches the Gamma tail at several distances") {
    ChannelModel m = reference_channel(2.75, ChannelMode::Stochastic);
    RandomStream rng(7, 1);
    const double d_max = m.max_distance();
    constexpr int kTrials = 200'000;
    for (double frac : {0.4, 0.7, 0.9, 1.0, 1.2}) {
        const double d = frac * d_max;
        int successes = 0;
        for (int i = 0; i < kTrials; ++i)
            if (m.reception_success(d, rng))
                ++successes;
        const double rate = double(successes) / kTrials;
        const double mean_mw = dbm_to_mw(m.mean_rx_power_dbm(d));
        const double p = gamma_tail_oracle(2, mean_mw, dbm_to_mw(m.sensitivity_dbm));
        const double sigma = std::sqrt(std::max(p * (1 - p), 1e-12) / kTrials);
        CHECK(std::fabs(rate - p) <= 3.0 * sigma + 1e-4);
    }
}

TEST_CASE("reception approaches certainty well inside the range") {
    ChannelModel m = reference_channel(2.75, ChannelMode::Stochastic);
    RandomStream rng(13, 1);
    // 20 dB of headroom above the sensitivity.
    const double d = m.max_distance() * std::pow(10.0, -20.0 / (10.0 * m.path_loss_exponent));
    constexpr int kTrials = 100'000;
    int successes = 0;
    for (int i = 0; i < kTrials; ++i)
        if (m.reception_success(d, rng))
            ++successes;
    CHECK(double(successes) / kTrials >= 0.999);
}

TEST_CASE("broadcast airtime and range filtering") {
    ChannelModel model = reference_channel(2.75);
    RandomStream rng(3, 1);
    Medium medium(model, rng);

    SUBCASE("1460-byte frame at 54 Mbit/s takes about 216.3 us") {
        const Transmission tx{0, 1460.0, 0.0, 54e6};
        CHECK(tx.airtime() == doctest::Approx(1460.0 * 8.0 / 54e6).epsilon(1e-12));
        CHECK(tx.airtime() == doctest::Approx(216.3e-6).epsilon(1e-3));
    }
    SUBCASE("in-range receivers get the frame after airtime plus propagation") {
        const std::vector<NodePose> poses{{0, {0, 0, 0}}, {1, {100, 0, 0}}, {2, {500, 0, 0}}};
        const Transmission tx{0, 1460.0, 1.0, 54e6};
        const auto deliveries = medium.broadcast(tx, poses);
        REQUIRE(deliveries.size() == 1); // node 2 is beyond d_max ~ 194.6 m
        CHECK(deliveries[0].receiver == 1);
        CHECK(deliveries[0].at ==
              doctest::Approx(1.0 + tx.airtime() + 100.0 / kSpeedOfLight).epsilon(1e-12));
    }
    SUBCASE("no other nodes, no deliveries") {
        const std::vector<NodePose> poses{{0, {0, 0, 0}}};
        CHECK(medium.broadcast({0, 100.0, 0.0, 54e6}, poses).empty());
    }
    SUBCASE("unknown sender is an error") {
        const std::vector<NodePose> poses{{1, {0, 0, 0}}};
        CHECK_THROWS_AS(medium.broadcast({0, 100.0, 0.0, 54e6}, poses),
                        std::invalid_argument);
    }
}
