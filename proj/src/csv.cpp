#include "maxant/csv.hpp"

#include <cstdio>
#include <sstream>

namespace maxant {

const char* const kSweepCsvHeader =
    "snr_db,scheme,trials,bits_sent,bit_errors,ber,ci_low,ci_high";
const char* const kMacSummaryCsvHeader =
    "group_size,sounding_ms,txop_ms,coordinated_ms,sequential_ms,gain,"
    "mean_link_ber";
const char* const kTimelineCsvHeader = "start_ms,duration_ms,kind,ap_ids";

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9e", v);
    return buf;
}

std::string sweep_csv(const std::vector<BerPoint>& points) {
    std::ostringstream out;
    out << kSweepCsvHeader << "\n";
    for (const auto& p : points) {
        out << format_real(p.snr_db) << ',' << scheme_name(p.scheme) << ','
            << p.trials << ',' << p.bits_sent << ',' << p.bit_errors << ','
            << format_real(p.ber) << ',' << format_real(p.ci_low) << ','
            << format_real(p.ci_high) << "\n";
    }
    return out.str();
}

std::string mac_summary_csv(const MacEpisodeSummary& summary,
                            const MacConfig& config) {
    std::ostringstream out;
    out << kMacSummaryCsvHeader << "\n";
    out << summary.group_size << ',' << format_real(config.sounding_ms) << ','
        << format_real(config.txop_ms) << ','
        << format_real(summary.airtime.coordinated_ms) << ','
        << format_real(summary.airtime.sequential_ms) << ','
        << format_real(summary.airtime.gain) << ','
        << format_real(summary.mean_link_ber) << "\n";
    return out.str();
}

std::string timeline_csv(const EventTimeline& timeline) {
    std::ostringstream out;
    out << kTimelineCsvHeader << "\n";
    for (const auto& e : timeline.events) {
        out << format_real(e.start_ms) << ',' << format_real(e.duration_ms)
            << ',' << mac_event_kind_name(e.kind) << ',';
        for (std::size_t i = 0; i < e.ap_ids.size(); ++i) {
            if (i > 0) out << ';';
            out << e.ap_ids[i];
        }
        out << "\n";
    }
    return out.str();
}

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, sep)) fields.push_back(field);
    if (!line.empty() && line.back() == sep) fields.push_back("");
    return fields;
}

[[noreturn]] void row_fail(int row, const std::string& what) {
    throw InvalidInput("sweep csv row " + std::to_string(row) + ": " + what);
}

double row_real(const std::string& s, int row, const char* field) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        row_fail(row, std::string("bad ") + field + " value '" + s + "'");
    }
}

long long row_int(const std::string& s, int row, const char* field) {
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        row_fail(row, std::string("bad ") + field + " value '" + s + "'");
    }
}

}  // namespace

std::vector<BerPoint> parse_sweep_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) {
        throw InvalidInput("sweep csv: empty input");
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kSweepCsvHeader) {
        throw InvalidInput("sweep csv row 1: bad header '" + line + "'");
    }
    std::vector<BerPoint> points;
    int row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const std::vector<std::string> f = split(line, ',');
        if (f.size() != 8) {
            row_fail(row, "expected 8 fields, got " +
                              std::to_string(f.size()));
        }
        BerPoint p;
        p.snr_db = row_real(f[0], row, "snr_db");
        try {
            p.scheme = scheme_from_name(f[1]);
        } catch (const std::exception&) {
            row_fail(row, "bad scheme value '" + f[1] + "'");
        }
        p.trials = static_cast<int>(row_int(f[2], row, "trials"));
        p.bits_sent = row_int(f[3], row, "bits_sent");
        p.bit_errors = row_int(f[4], row, "bit_errors");
        p.ber = row_real(f[5], row, "ber");
        p.ci_low = row_real(f[6], row, "ci_low");
        p.ci_high = row_real(f[7], row, "ci_high");
        points.push_back(p);
    }
    return points;
}

}  // namespace maxant
