#include "maxant/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace maxant {

namespace {

// Acklam's rational approximation to the standard normal quantile,
// |error| < 1.2e-9.
double normal_quantile(double p) {
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double plow = 0.02425;
    double q, r;
    if (p < plow) {
        q = std::sqrt(-2.0 * std::log(p));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q +
                c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    if (p > 1.0 - plow) {
        return -normal_quantile(1.0 - p);
    }
    q = p - 0.5;
    r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r +
            a[5]) *
           q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

// Fixed chunk so the early-stop trial index is independent of the thread
// count.
constexpr int kChunkTrials = 64;

struct PointAccumulator {
    long long bits = 0;
    long long errors = 0;
    int trials = 0;
};

PointAccumulator run_point(const ScenarioConfig& config, double snr_db,
                           int threads) {
    PointAccumulator acc;
    std::vector<TrialOutcome> outcomes(kChunkTrials);
    while (acc.trials < config.trials_per_point &&
           acc.errors < config.max_bit_errors) {
        const int n =
            std::min(kChunkTrials, config.trials_per_point - acc.trials);
        const int first = acc.trials;
        if (threads <= 1 || n == 1) {
            for (int i = 0; i < n; ++i) {
                outcomes[static_cast<std::size_t>(i)] =
                    run_trial(config, snr_db, first + i);
            }
        } else {
            const int workers = std::min(threads, n);
            std::vector<std::thread> pool;
            pool.reserve(static_cast<std::size_t>(workers));
            for (int w = 0; w < workers; ++w) {
                pool.emplace_back([&, w]() {
                    for (int i = w; i < n; i += workers) {
                        outcomes[static_cast<std::size_t>(i)] =
                            run_trial(config, snr_db, first + i);
                    }
                });
            }
            for (auto& t : pool) t.join();
        }
        for (int i = 0; i < n; ++i) {
            const auto& o = outcomes[static_cast<std::size_t>(i)];
            acc.bits += o.bits_sent;
            acc.errors += o.bit_errors;
            acc.trials += 1;
            if (acc.errors >= config.max_bit_errors) break;
        }
    }
    return acc;
}

}  // namespace

std::pair<double, double> confidence_interval(long long bit_errors,
                                              long long bits_sent,
                                              double level) {
    if (bits_sent <= 0 || bit_errors < 0 || bit_errors > bits_sent) {
        throw InvalidInput("confidence_interval: bad counts");
    }
    if (!(level > 0.0 && level < 1.0)) {
        throw InvalidInput("confidence_interval: level must be in (0,1)");
    }
    const double z = normal_quantile(0.5 + level / 2.0);
    const double n = static_cast<double>(bits_sent);
    const double p = static_cast<double>(bit_errors) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2.0 * n)) / denom;
    const double half =
        z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    // the bound is exact at the boundary proportions; avoid rounding dust
    const double lo = bit_errors == 0 ? 0.0 : std::max(0.0, center - half);
    const double hi =
        bit_errors == bits_sent ? 1.0 : std::min(1.0, center + half);
    return {lo, hi};
}

SweepResult ber_sweep(const ScenarioConfig& config,
                      const std::vector<Scheme>& schemes) {
    validate(config);
    int threads = config.threads;
    if (threads == 0) {
        threads = static_cast<int>(std::thread::hardware_concurrency());
        if (threads < 1) threads = 1;
    }
    SweepResult result;
    result.config = config;
    for (Scheme scheme : schemes) {
        ScenarioConfig cfg = config;
        cfg.link.scheme = scheme;
        for (double snr_db : sweep_points(config.snr)) {
            const PointAccumulator acc = run_point(cfg, snr_db, threads);
            BerPoint point;
            point.snr_db = snr_db;
            point.scheme = scheme;
            point.trials = acc.trials;
            point.bits_sent = acc.bits;
            point.bit_errors = acc.errors;
            point.ber = static_cast<double>(acc.errors) /
                        static_cast<double>(acc.bits);
            std::tie(point.ci_low, point.ci_high) =
                confidence_interval(acc.errors, acc.bits, config.ci_level);
            result.points.push_back(point);
        }
    }
    return result;
}

double per_from_ber(double ber, int packet_bits) {
    if (!(ber >= 0.0 && ber <= 1.0)) {
        throw InvalidInput("per_from_ber: ber must be in [0,1]");
    }
    if (packet_bits < 1) {
        throw InvalidInput("per_from_ber: packet_bits must be >= 1");
    }
    if (ber == 1.0) return 1.0;
    return -std::expm1(static_cast<double>(packet_bits) * std::log1p(-ber));
}

SlopeFit fit_diversity_order(const std::vector<BerPoint>& points,
                             std::pair<double, double> window_db) {
    std::vector<double> xs, ys;
    for (const auto& p : points) {
        if (p.snr_db < window_db.first || p.snr_db > window_db.second) continue;
        if (p.bit_errors < 10) continue;
        xs.push_back(p.snr_db / 10.0);
        ys.push_back(std::log10(p.ber));
    }
    const int n = static_cast<int>(xs.size());
    if (n < 3) {
        throw InsufficientData(
            "fit_diversity_order: fewer than 3 points with >= 10 errors in "
            "window");
    }
    double sx = 0, sy = 0;
    for (int i = 0; i < n; ++i) {
        sx += xs[static_cast<std::size_t>(i)];
        sy += ys[static_cast<std::size_t>(i)];
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0, sxy = 0;
    for (int i = 0; i < n; ++i) {
        const double dx = xs[static_cast<std::size_t>(i)] - mx;
        sxx += dx * dx;
        sxy += dx * (ys[static_cast<std::size_t>(i)] - my);
    }
    if (sxx == 0.0) {
        throw InsufficientData("fit_diversity_order: degenerate SNR window");
    }
    const double b = sxy / sxx;
    SlopeFit fit;
    fit.slope = -b;
    fit.intercept = my - b * mx;
    fit.snr_window_db = window_db;
    fit.points_used = n;
    double ssr = 0, sst = 0;
    for (int i = 0; i < n; ++i) {
        const double yhat =
            fit.intercept + b * xs[static_cast<std::size_t>(i)];
        const double dy = ys[static_cast<std::size_t>(i)] - yhat;
        ssr += dy * dy;
        const double dt = ys[static_cast<std::size_t>(i)] - my;
        sst += dt * dt;
    }
    fit.r_squared = sst > 0.0 ? 1.0 - ssr / sst : 1.0;
    fit.slope_stderr =
        n > 2 ? std::sqrt(ssr / (n - 2) / sxx) : 0.0;
    return fit;
}

std::pair<double, double> default_slope_window(
    const std::vector<BerPoint>& points) {
    double hi = -1e300;
    for (const auto& p : points) {
        if (p.bit_errors >= 10 && p.snr_db > hi) hi = p.snr_db;
    }
    if (hi == -1e300) {
        throw InsufficientData("default_slope_window: no point has >= 10 errors");
    }
    return {hi - 10.0, hi};
}

}  // namespace maxant
