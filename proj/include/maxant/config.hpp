#pragma once

#include <string>
#include <utility>
#include <vector>

#include "maxant/macsim.hpp"
#include "maxant/scenario.hpp"

namespace maxant {

/// Config syntax, unknown-key, or invariant violation; message names the
/// offending key and line.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// MAC experiment description: the protocol parameters plus the episode
/// harness.
struct MacRunConfig {
    MacConfig mac;
    int n_aps = 4;
    int episodes = 1000;
};

using KeyValue = std::pair<std::string, std::string>;

/// Parse INI-style `key = value` text with [section] headers. Unknown keys
/// are rejected. `overrides` are dotted keys (e.g. "mc.seed=7") applied
/// after the file.
ScenarioConfig parse_scenario_config(const std::string& text,
                                     const std::vector<KeyValue>& overrides = {});
MacRunConfig parse_mac_config(const std::string& text,
                              const std::vector<KeyValue>& overrides = {});

ScenarioConfig load_scenario_config(const std::string& path,
                                    const std::vector<KeyValue>& overrides = {});
MacRunConfig load_mac_config(const std::string& path,
                             const std::vector<KeyValue>& overrides = {});

std::string serialize(const ScenarioConfig& config);
std::string serialize(const MacRunConfig& config);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace maxant
