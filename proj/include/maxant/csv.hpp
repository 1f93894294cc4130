#pragma once

#include <string>
#include <vector>

#include "maxant/config.hpp"
#include "maxant/montecarlo.hpp"

namespace maxant {

/// Scientific notation, 10 significant digits; the reproducible on-disk
/// number format.
std::string format_real(double v);

extern const char* const kSweepCsvHeader;
extern const char* const kMacSummaryCsvHeader;
extern const char* const kTimelineCsvHeader;

std::string sweep_csv(const std::vector<BerPoint>& points);
std::string mac_summary_csv(const MacEpisodeSummary& summary,
                            const MacConfig& config);
std::string timeline_csv(const EventTimeline& timeline);

/// Parse a sweep CSV; diagnostics cite the 1-based row number.
std::vector<BerPoint> parse_sweep_csv(const std::string& text);

}  // namespace maxant
