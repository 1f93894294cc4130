#pragma once

#include <utility>
#include <vector>

#include "maxant/scenario.hpp"

namespace maxant {

struct InsufficientData : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BerPoint {
    double snr_db = 0.0;
    Scheme scheme = Scheme::MaxSel;
    int trials = 0;
    long long bits_sent = 0;
    long long bit_errors = 0;
    double ber = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
};

/// Points sorted by scheme (sweep order) then snr_db.
struct SweepResult {
    ScenarioConfig config;
    std::vector<BerPoint> points;
};

struct SlopeFit {
    double slope = 0.0;  // diversity order d, BER ~ SNR^-d
    double intercept = 0.0;
    double slope_stderr = 0.0;
    std::pair<double, double> snr_window_db{0.0, 0.0};
    double r_squared = 0.0;
    int points_used = 0;
};

/// Wilson score interval for bit_errors/bits_sent at the given confidence
/// level.
std::pair<double, double> confidence_interval(long long bit_errors,
                                              long long bits_sent,
                                              double level);

/// Runs the configured sweep for each scheme. Per point, trials run in
/// index order until trials_per_point or max_bit_errors is reached; the
/// stop trial depends only on per-trial outcomes, so the result is
/// identical for any thread count. Schemes share trial substreams (common
/// random numbers).
SweepResult ber_sweep(const ScenarioConfig& config,
                      const std::vector<Scheme>& schemes);

/// PER under i.i.d. bit errors: 1 - (1 - ber)^packet_bits.
double per_from_ber(double ber, int packet_bits);

/// Least-squares fit of log10(ber) against snr_db/10 over the window,
/// using points with >= 10 bit errors. Throws InsufficientData below 3
/// usable points.
SlopeFit fit_diversity_order(const std::vector<BerPoint>& points,
                             std::pair<double, double> window_db);

/// Top-10-dB window ending at the highest SNR point that still has >= 10
/// bit errors.
std::pair<double, double> default_slope_window(
    const std::vector<BerPoint>& points);

}  // namespace maxant
