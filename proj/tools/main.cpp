#include <CLI11.hpp>
#include <iostream>

#include "maxant/commands.hpp"
#include "maxant/montecarlo.hpp"

namespace {

std::vector<maxant::KeyValue> parse_sets(const std::vector<std::string>& sets) {
    std::vector<maxant::KeyValue> out;
    for (const auto& s : sets) {
        const auto eq = s.find('=');
        if (eq == std::string::npos) {
            throw maxant::ConfigError("--set expects key=value, got '" + s +
                                      "'");
        }
        out.emplace_back(s.substr(0, eq), s.substr(eq + 1));
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "WLAN interference simulator: max-antenna selection diversity vs "
        "space-time block coding under hidden-node interference, plus the "
        "controller-coordinated simultaneous-transmission MAC.\n\n"
        "Scenario defaults: 4x4 link, BPSK over flat Rayleigh fading, 3 "
        "hidden STBC interferers, SNR sweep 0..20 dB in 2 dB steps, 4000-bit "
        "packets, early stop at 200 bit errors per point."};
    app.require_subcommand(1);

    std::string config_path, out_path, in_path;
    std::vector<std::string> sets;
    double ber = 0.0;
    int bits = 4000;
    std::string window;

    auto* sweep = app.add_subcommand(
        "sweep", "Run the BER sweep for both schemes and write a CSV");
    sweep->add_option("--config", config_path, "scenario config file")
        ->required();
    sweep->add_option("--out", out_path, "output CSV path")->required();
    sweep->add_option("--set", sets,
                      "override a config key, e.g. --set mc.seed=7");

    auto* per = app.add_subcommand(
        "per", "Packet error rate from a BER under i.i.d. bit errors");
    per->add_option("--ber", ber, "bit error rate in [0,1]")->required();
    per->add_option("--bits", bits, "packet length in bits (default 4000)");

    auto* slope = app.add_subcommand(
        "slope", "Fit diversity order (log-log slope) from a sweep CSV");
    slope->add_option("--in", in_path, "sweep CSV path")->required();
    slope->add_option("--window", window,
                      "SNR window lo:hi in dB (default: top 10 dB with >= 10 "
                      "errors per point)");

    auto* mac = app.add_subcommand(
        "mac",
        "Run controller-coordinated MAC episodes; writes summary and "
        "timeline CSVs");
    mac->add_option("--config", config_path, "mac config file")->required();
    mac->add_option("--out", out_path, "summary CSV path")->required();
    mac->add_option("--set", sets, "override a config key, e.g. --set "
                                   "mac.per_ap_sounding=true");

    auto* plot = app.add_subcommand(
        "plot", "Render a sweep CSV as an SVG (log BER vs SNR dB)");
    plot->add_option("--in", in_path, "sweep CSV path")->required();
    plot->add_option("--out", out_path, "output SVG path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (sweep->parsed()) {
            maxant::cmd_sweep(config_path, out_path, parse_sets(sets));
        } else if (per->parsed()) {
            std::cout << maxant::cmd_per(ber, bits) << "\n";
        } else if (slope->parsed()) {
            bool have_window = false;
            double lo = 0.0, hi = 0.0;
            if (!window.empty()) {
                const auto colon = window.find(':');
                if (colon == std::string::npos) {
                    throw maxant::ConfigError(
                        "--window expects lo:hi, got '" + window + "'");
                }
                lo = std::stod(window.substr(0, colon));
                hi = std::stod(window.substr(colon + 1));
                have_window = true;
            }
            for (const auto& line :
                 maxant::cmd_slope(in_path, have_window, lo, hi)) {
                std::cout << line << "\n";
            }
        } else if (mac->parsed()) {
            maxant::cmd_mac(config_path, out_path, parse_sets(sets));
        } else if (plot->parsed()) {
            maxant::cmd_plot(in_path, out_path);
        }
    } catch (const maxant::InsufficientData& e) {
        std::cerr << "error: " << e.what() << "\n";
        return maxant::kExitInsufficientData;
    } catch (const maxant::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return maxant::kExitIoError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return maxant::kExitConfigError;
    }
    return maxant::kExitOk;
}
