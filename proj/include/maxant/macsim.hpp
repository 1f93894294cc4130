#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "maxant/scenario.hpp"

namespace maxant {

struct ApNode {
    int id = 0;
    int nt = 4;
    bool pending_downlink = false;
    std::optional<int> assigned_antenna;
};

struct ClientNode {
    int id = 0;
    int nr = 4;
    int serving_ap = 0;
};

/// Controller-selected AP group; order is the controller's priority index.
struct GroupSchedule {
    std::vector<int> ap_ids;

    int size() const { return static_cast<int>(ap_ids.size()); }
};

/// Per-transmit-antenna RSSI in dB, the reciprocity proxy for the column
/// norms of the downlink channel.
struct RssiReport {
    std::vector<double> per_antenna_rssi;
};

enum class MacEventKind { Sounding, Txop, Idle };

std::string mac_event_kind_name(MacEventKind kind);

struct MacEvent {
    double start_ms = 0.0;
    double duration_ms = 0.0;
    MacEventKind kind = MacEventKind::Idle;
    std::vector<int> ap_ids;
};

struct EventTimeline {
    std::vector<MacEvent> events;

    double total_ms() const;
};

struct MacConfig {
    int n_antennas = 4;       // N, per AP and per client
    double sounding_ms = 1.0;
    double txop_ms = 4.0;
    double snr_db = 25.0;
    double rssi_noise_db = 1.0;
    bool per_ap_sounding = false;  // charge sounding_ms per AP instead of per group
    int bits_per_txop = 400;
    std::uint64_t seed = 1;
};

void validate(const MacConfig& config);

struct AirtimeComparison {
    double coordinated_ms = 0.0;
    double sequential_ms = 0.0;
    double gain = 0.0;
};

struct MacEpisodeSummary {
    int episodes = 0;
    int group_size = 0;
    long long bits_sent = 0;
    long long bit_errors = 0;
    double mean_link_ber = 0.0;
    EventTimeline timeline;
    AirtimeComparison airtime;
};

/// First min(n, pending) pending APs in ascending id order.
GroupSchedule select_group(const std::vector<ApNode>& aps, int n);

/// Per-antenna RSSI: 20*log10(||h_i||) plus Gaussian dB noise; a zero
/// column reports the -100 dB floor.
RssiReport rssi_observe(const ChannelMatrix& h, double noise_db,
                        RngStream& stream);

/// Smallest index attaining the maximum RSSI.
int rssi_select(const RssiReport& report);

/// RSSI-based antenna assignment for each group member, in priority order.
/// `channels` holds each AP's serving downlink channel, aligned with the
/// group. Appends the Sounding span(s) to `timeline` when given.
std::vector<int> sounding_phase(const GroupSchedule& group,
                                const std::vector<ChannelMatrix>& channels,
                                const MacConfig& config, RngStream& stream,
                                EventTimeline* timeline = nullptr);

/// One shared TxOP: every AP sends a BPSK stream on its assigned antenna;
/// client i zero-forces the |group|-stream superposition through its own
/// channels and keeps its serving stream. client_channels[i][j] is the
/// channel from group member j to client i. A singular composite channel
/// marks that link's trial as outage (all bits errored).
std::vector<TrialOutcome> simultaneous_txop(
    const GroupSchedule& group, const std::vector<int>& assignments,
    const std::vector<std::vector<ChannelMatrix>>& client_channels,
    const MacConfig& config, RngStream& stream);

/// One sounding phase plus one shared TxOP versus group_size sequential
/// TxOPs.
AirtimeComparison airtime_compare(const MacConfig& config, int group_size);

/// select_group -> sounding_phase -> simultaneous_txop over fresh channels,
/// `episodes` times.
MacEpisodeSummary run_mac_episode(const MacConfig& config, int n_aps,
                                  int episodes);

}  // namespace maxant
