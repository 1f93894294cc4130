#include "maxant/plot.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace maxant {

namespace {

constexpr double kBerFloor = 1e-8;
constexpr double kWidth = 720.0, kHeight = 520.0;
constexpr double kLeft = 70.0, kRight = 690.0, kTop = 30.0, kBottom = 460.0;

std::string fmt(double v) {
    std::ostringstream out;
    out.precision(6);
    out << v;
    return out.str();
}

}  // namespace

std::string ber_plot_svg(const std::vector<BerPoint>& points) {
    if (points.empty()) {
        throw InvalidInput("ber_plot_svg: no data points");
    }
    double snr_min = points.front().snr_db, snr_max = points.front().snr_db;
    for (const auto& p : points) {
        snr_min = std::min(snr_min, p.snr_db);
        snr_max = std::max(snr_max, p.snr_db);
    }
    if (snr_max == snr_min) snr_max = snr_min + 1.0;

    const double log_lo = std::log10(kBerFloor);
    const double log_hi = 0.0;
    const auto x_of = [&](double snr) {
        return kLeft + (snr - snr_min) / (snr_max - snr_min) * (kRight - kLeft);
    };
    const auto y_of = [&](double ber) {
        const double l =
            std::clamp(std::log10(std::max(ber, kBerFloor)), log_lo, log_hi);
        return kBottom - (l - log_lo) / (log_hi - log_lo) * (kBottom - kTop);
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
        << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " "
        << kHeight << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // log-decade grid and labels
    for (int d = 0; d >= static_cast<int>(std::log10(kBerFloor)); --d) {
        const double y = y_of(std::pow(10.0, d));
        svg << "<line x1=\"" << kLeft << "\" y1=\"" << fmt(y) << "\" x2=\""
            << kRight << "\" y2=\"" << fmt(y)
            << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        svg << "<text x=\"" << kLeft - 8 << "\" y=\"" << fmt(y + 4)
            << "\" text-anchor=\"end\" font-size=\"12\">1e" << d
            << "</text>\n";
    }
    const double snr_span = snr_max - snr_min;
    const double snr_tick = snr_span > 30 ? 5.0 : 2.0;
    for (double s = std::ceil(snr_min / snr_tick) * snr_tick; s <= snr_max + 1e-9;
         s += snr_tick) {
        const double x = x_of(s);
        svg << "<line x1=\"" << fmt(x) << "\" y1=\"" << kTop << "\" x2=\""
            << fmt(x) << "\" y2=\"" << kBottom
            << "\" stroke=\"#eeeeee\" stroke-width=\"1\"/>\n";
        svg << "<text x=\"" << fmt(x) << "\" y=\"" << kBottom + 18
            << "\" text-anchor=\"middle\" font-size=\"12\">" << fmt(s)
            << "</text>\n";
    }
    svg << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\""
        << kRight - kLeft << "\" height=\"" << kBottom - kTop
        << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
    svg << "<text x=\"" << (kLeft + kRight) / 2 << "\" y=\"" << kBottom + 40
        << "\" text-anchor=\"middle\" font-size=\"14\">SNR (dB)</text>\n";
    svg << "<text x=\"16\" y=\"" << (kTop + kBottom) / 2
        << "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 "
           "16 "
        << (kTop + kBottom) / 2 << ")\">BER</text>\n";

    const Scheme schemes[] = {Scheme::Stbc, Scheme::MaxSel};
    const char* colors[] = {"#d62728", "#1f77b4"};
    for (int s = 0; s < 2; ++s) {
        std::vector<BerPoint> curve;
        for (const auto& p : points) {
            if (p.scheme == schemes[s]) curve.push_back(p);
        }
        if (curve.empty()) continue;
        std::sort(curve.begin(), curve.end(),
                  [](const BerPoint& a, const BerPoint& b) {
                      return a.snr_db < b.snr_db;
                  });
        svg << "<polyline fill=\"none\" stroke=\"" << colors[s]
            << "\" stroke-width=\"1.5\" points=\"";
        for (const auto& p : curve) {
            svg << fmt(x_of(p.snr_db)) << ',' << fmt(y_of(p.ber)) << ' ';
        }
        svg << "\"/>\n";
        for (const auto& p : curve) {
            const double x = x_of(p.snr_db);
            // CI whisker
            if (p.ci_high > p.ci_low) {
                svg << "<line x1=\"" << fmt(x) << "\" y1=\""
                    << fmt(y_of(std::max(p.ci_low, kBerFloor))) << "\" x2=\""
                    << fmt(x) << "\" y2=\"" << fmt(y_of(p.ci_high))
                    << "\" stroke=\"" << colors[s]
                    << "\" stroke-width=\"1\"/>\n";
            }
            // zero-BER points sit on the floor as open markers
            const bool floored = p.ber <= 0.0;
            svg << "<circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y_of(p.ber))
                << "\" r=\"3.5\" stroke=\"" << colors[s] << "\" fill=\""
                << (floored ? "white" : colors[s]) << "\"/>\n";
        }
        svg << "<text x=\"" << kRight - 8 << "\" y=\"" << kTop + 20 + 18 * s
            << "\" text-anchor=\"end\" font-size=\"13\" fill=\"" << colors[s]
            << "\">" << scheme_name(schemes[s]) << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace maxant
