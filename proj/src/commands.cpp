#include "maxant/commands.hpp"

#include <sstream>

#include "maxant/csv.hpp"
#include "maxant/plot.hpp"

namespace maxant {

void cmd_sweep(const std::string& config_path, const std::string& out_path,
               const std::vector<KeyValue>& overrides) {
    const ScenarioConfig config = load_scenario_config(config_path, overrides);
    const SweepResult result =
        ber_sweep(config, {Scheme::Stbc, Scheme::MaxSel});
    write_text_file(out_path, sweep_csv(result.points));
}

std::string cmd_per(double ber, int packet_bits) {
    const double per = per_from_ber(ber, packet_bits);
    std::ostringstream out;
    out << "ber=" << format_real(ber) << " packet_bits=" << packet_bits
        << " per=" << format_real(per);
    return out.str();
}

std::vector<std::string> cmd_slope(const std::string& in_csv_path,
                                   bool have_window, double window_lo,
                                   double window_hi) {
    const std::vector<BerPoint> points =
        parse_sweep_csv(read_text_file(in_csv_path));
    std::vector<std::string> lines;
    for (Scheme scheme : {Scheme::Stbc, Scheme::MaxSel}) {
        std::vector<BerPoint> own;
        for (const auto& p : points) {
            if (p.scheme == scheme) own.push_back(p);
        }
        if (own.empty()) continue;
        const std::pair<double, double> window =
            have_window ? std::make_pair(window_lo, window_hi)
                        : default_slope_window(own);
        const SlopeFit fit = fit_diversity_order(own, window);
        std::ostringstream out;
        out << "scheme=" << scheme_name(scheme)
            << " slope=" << format_real(fit.slope)
            << " stderr=" << format_real(fit.slope_stderr)
            << " r_squared=" << format_real(fit.r_squared) << " window_db=["
            << format_real(fit.snr_window_db.first) << ","
            << format_real(fit.snr_window_db.second) << "]"
            << " points=" << fit.points_used;
        lines.push_back(out.str());
    }
    if (lines.empty()) {
        throw InsufficientData("slope: no data rows in sweep csv");
    }
    return lines;
}

std::string timeline_path_for(const std::string& out_path) {
    const auto dot = out_path.rfind('.');
    const auto slash = out_path.find_last_of("/\\");
    if (dot == std::string::npos ||
        (slash != std::string::npos && dot < slash)) {
        return out_path + "_timeline";
    }
    return out_path.substr(0, dot) + "_timeline" + out_path.substr(dot);
}

void cmd_mac(const std::string& config_path, const std::string& out_path,
             const std::vector<KeyValue>& overrides) {
    const MacRunConfig config = load_mac_config(config_path, overrides);
    const MacEpisodeSummary summary =
        run_mac_episode(config.mac, config.n_aps, config.episodes);
    write_text_file(out_path, mac_summary_csv(summary, config.mac));
    write_text_file(timeline_path_for(out_path),
                    timeline_csv(summary.timeline));
}

void cmd_plot(const std::string& in_csv_path, const std::string& out_path) {
    const std::vector<BerPoint> points =
        parse_sweep_csv(read_text_file(in_csv_path));
    // render before opening the output so a bad CSV leaves no file behind
    const std::string svg = ber_plot_svg(points);
    write_text_file(out_path, svg);
}

}  // namespace maxant
