#pragma once

#include <string>
#include <vector>

#include "maxant/config.hpp"

namespace maxant {

/// Exit codes shared by the CLI and the command helpers.
enum ExitCode {
    kExitOk = 0,
    kExitConfigError = 1,
    kExitIoError = 2,
    kExitInsufficientData = 3,
};

/// `sweep`: run the configured BER sweep for both schemes and write the
/// sweep CSV to out_path.
void cmd_sweep(const std::string& config_path, const std::string& out_path,
               const std::vector<KeyValue>& overrides = {});

/// `per`: PER for a given BER and packet length; returns the formatted
/// line printed by the CLI.
std::string cmd_per(double ber, int packet_bits);

/// `slope`: fitted diversity orders per scheme from a sweep CSV; one
/// formatted line per scheme. Empty window means the default top-10-dB
/// window per scheme.
std::vector<std::string> cmd_slope(const std::string& in_csv_path,
                                   bool have_window, double window_lo,
                                   double window_hi);

/// `mac`: run the MAC episodes; writes the summary CSV to out_path and the
/// timeline CSV next to it (suffix `_timeline` before the extension).
void cmd_mac(const std::string& config_path, const std::string& out_path,
             const std::vector<KeyValue>& overrides = {});

std::string timeline_path_for(const std::string& out_path);

/// `plot`: render a sweep CSV as an SVG.
void cmd_plot(const std::string& in_csv_path, const std::string& out_path);

}  // namespace maxant
