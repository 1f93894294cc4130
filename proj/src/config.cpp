#include "maxant/config.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>

namespace maxant {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ConfigError(where + ": " + what);
}

long long parse_int(const std::string& value, const std::string& where) {
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        fail(where, "expected an integer, got '" + value + "'");
    }
}

double parse_real(const std::string& value, const std::string& where) {
    if (value == "inf") return std::numeric_limits<double>::infinity();
    try {
        std::size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        fail(where, "expected a number, got '" + value + "'");
    }
}

bool parse_bool(const std::string& value, const std::string& where) {
    if (value == "true" || value == "1") return true;
    if (value == "false" || value == "0") return false;
    fail(where, "expected true|false, got '" + value + "'");
}

Scheme parse_scheme(const std::string& value, const std::string& where) {
    try {
        return scheme_from_name(value);
    } catch (const std::exception&) {
        fail(where, "expected stbc|maxsel, got '" + value + "'");
    }
}

using KeySetter =
    std::function<void(const std::string& dotted, const std::string& value,
                       const std::string& where)>;

// Shared INI walk: section headers, key = value lines, '#' comments.
void parse_ini(const std::string& text, const KeySetter& set_key) {
    std::istringstream in(text);
    std::string line;
    std::string section;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        const std::string where = "line " + std::to_string(line_no);
        if (line.front() == '[') {
            if (line.back() != ']') fail(where, "unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            if (section.empty()) fail(where, "empty section name");
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            fail(where, "expected 'key = value', got '" + line + "'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) fail(where, "empty key");
        const std::string dotted = section.empty() ? key : section + "." + key;
        set_key(dotted, value, where + " ('" + dotted + "')");
    }
}

void apply_overrides(const std::vector<KeyValue>& overrides,
                     const KeySetter& set_key) {
    for (const auto& [key, value] : overrides) {
        set_key(key, value, "override '" + key + "'");
    }
}

KeySetter scenario_setter(ScenarioConfig& cfg) {
    return [&cfg](const std::string& dotted, const std::string& value,
                  const std::string& where) {
        if (dotted == "seed" || dotted == "mc.seed") {
            cfg.seed = static_cast<std::uint64_t>(parse_int(value, where));
        } else if (dotted == "link.nt") {
            cfg.link.nt = static_cast<int>(parse_int(value, where));
        } else if (dotted == "link.nr") {
            cfg.link.nr = static_cast<int>(parse_int(value, where));
        } else if (dotted == "interferers.count") {
            cfg.interferers.count = static_cast<int>(parse_int(value, where));
        } else if (dotted == "interferers.nt_each") {
            cfg.interferers.nt_each = static_cast<int>(parse_int(value, where));
        } else if (dotted == "interferers.scheme") {
            cfg.interferers.scheme = parse_scheme(value, where);
        } else if (dotted == "interferers.power_ratio_db") {
            cfg.interferers.power_ratio_db = parse_real(value, where);
        } else if (dotted == "interferers.track_sweep") {
            cfg.interferers.track_sweep = parse_bool(value, where);
        } else if (dotted == "interferers.reference_snr_db") {
            cfg.interferers.reference_snr_db = parse_real(value, where);
        } else if (dotted == "snr.start_db") {
            cfg.snr.start_db = parse_real(value, where);
        } else if (dotted == "snr.stop_db") {
            cfg.snr.stop_db = parse_real(value, where);
        } else if (dotted == "snr.step_db") {
            cfg.snr.step_db = parse_real(value, where);
        } else if (dotted == "mc.trials_per_point") {
            cfg.trials_per_point = static_cast<int>(parse_int(value, where));
        } else if (dotted == "mc.max_bit_errors") {
            cfg.max_bit_errors = static_cast<int>(parse_int(value, where));
        } else if (dotted == "mc.packet_bits") {
            cfg.packet_bits = static_cast<int>(parse_int(value, where));
        } else if (dotted == "mc.threads") {
            cfg.threads = static_cast<int>(parse_int(value, where));
        } else if (dotted == "mc.ci_level") {
            cfg.ci_level = parse_real(value, where);
        } else {
            fail(where, "unknown key '" + dotted + "'");
        }
    };
}

KeySetter mac_setter(MacRunConfig& cfg) {
    return [&cfg](const std::string& dotted, const std::string& value,
                  const std::string& where) {
        if (dotted == "seed" || dotted == "mac.seed") {
            cfg.mac.seed = static_cast<std::uint64_t>(parse_int(value, where));
        } else if (dotted == "mac.n_antennas") {
            cfg.mac.n_antennas = static_cast<int>(parse_int(value, where));
        } else if (dotted == "mac.sounding_ms") {
            cfg.mac.sounding_ms = parse_real(value, where);
        } else if (dotted == "mac.txop_ms") {
            cfg.mac.txop_ms = parse_real(value, where);
        } else if (dotted == "mac.snr_db") {
            cfg.mac.snr_db = parse_real(value, where);
        } else if (dotted == "mac.rssi_noise_db") {
            cfg.mac.rssi_noise_db = parse_real(value, where);
        } else if (dotted == "mac.per_ap_sounding") {
            cfg.mac.per_ap_sounding = parse_bool(value, where);
        } else if (dotted == "mac.bits_per_txop") {
            cfg.mac.bits_per_txop = static_cast<int>(parse_int(value, where));
        } else if (dotted == "mac.n_aps") {
            cfg.n_aps = static_cast<int>(parse_int(value, where));
        } else if (dotted == "mac.episodes") {
            cfg.episodes = static_cast<int>(parse_int(value, where));
        } else {
            fail(where, "unknown key '" + dotted + "'");
        }
    };
}

}  // namespace

ScenarioConfig parse_scenario_config(const std::string& text,
                                     const std::vector<KeyValue>& overrides) {
    ScenarioConfig cfg;
    const KeySetter setter = scenario_setter(cfg);
    parse_ini(text, setter);
    apply_overrides(overrides, setter);
    try {
        validate(cfg);
    } catch (const InvalidParameter& e) {
        throw ConfigError(e.what());
    }
    return cfg;
}

MacRunConfig parse_mac_config(const std::string& text,
                              const std::vector<KeyValue>& overrides) {
    MacRunConfig cfg;
    const KeySetter setter = mac_setter(cfg);
    parse_ini(text, setter);
    apply_overrides(overrides, setter);
    try {
        validate(cfg.mac);
        if (cfg.n_aps < 0) throw InvalidParameter("mac.n_aps must be >= 0");
        if (cfg.episodes < 1) {
            throw InvalidParameter("mac.episodes must be >= 1");
        }
    } catch (const InvalidParameter& e) {
        throw ConfigError(e.what());
    }
    return cfg;
}

ScenarioConfig load_scenario_config(const std::string& path,
                                    const std::vector<KeyValue>& overrides) {
    return parse_scenario_config(read_text_file(path), overrides);
}

MacRunConfig load_mac_config(const std::string& path,
                             const std::vector<KeyValue>& overrides) {
    return parse_mac_config(read_text_file(path), overrides);
}

namespace {

std::string real_repr(double v) {
    if (std::isinf(v)) return "inf";
    std::ostringstream out;
    out.precision(17);
    out << v;
    return out.str();
}

}  // namespace

std::string serialize(const ScenarioConfig& config) {
    std::ostringstream out;
    out << "[link]\n"
        << "nt = " << config.link.nt << "\n"
        << "nr = " << config.link.nr << "\n\n"
        << "[interferers]\n"
        << "count = " << config.interferers.count << "\n"
        << "nt_each = " << config.interferers.nt_each << "\n"
        << "scheme = " << scheme_name(config.interferers.scheme) << "\n"
        << "power_ratio_db = " << real_repr(config.interferers.power_ratio_db)
        << "\n"
        << "track_sweep = "
        << (config.interferers.track_sweep ? "true" : "false") << "\n"
        << "reference_snr_db = "
        << real_repr(config.interferers.reference_snr_db) << "\n\n"
        << "[snr]\n"
        << "start_db = " << real_repr(config.snr.start_db) << "\n"
        << "stop_db = " << real_repr(config.snr.stop_db) << "\n"
        << "step_db = " << real_repr(config.snr.step_db) << "\n\n"
        << "[mc]\n"
        << "trials_per_point = " << config.trials_per_point << "\n"
        << "max_bit_errors = " << config.max_bit_errors << "\n"
        << "packet_bits = " << config.packet_bits << "\n"
        << "seed = " << config.seed << "\n"
        << "threads = " << config.threads << "\n"
        << "ci_level = " << real_repr(config.ci_level) << "\n";
    return out.str();
}

std::string serialize(const MacRunConfig& config) {
    std::ostringstream out;
    out << "[mac]\n"
        << "n_antennas = " << config.mac.n_antennas << "\n"
        << "sounding_ms = " << real_repr(config.mac.sounding_ms) << "\n"
        << "txop_ms = " << real_repr(config.mac.txop_ms) << "\n"
        << "snr_db = " << real_repr(config.mac.snr_db) << "\n"
        << "rssi_noise_db = " << real_repr(config.mac.rssi_noise_db) << "\n"
        << "per_ap_sounding = "
        << (config.mac.per_ap_sounding ? "true" : "false") << "\n"
        << "bits_per_txop = " << config.mac.bits_per_txop << "\n"
        << "seed = " << config.mac.seed << "\n"
        << "n_aps = " << config.n_aps << "\n"
        << "episodes = " << config.episodes << "\n";
    return out.str();
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write '" + path + "'");
    out << content;
    if (!out) throw IoError("write failed for '" + path + "'");
}

}  // namespace maxant
