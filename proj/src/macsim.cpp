#include "maxant/macsim.hpp"

#include <algorithm>
#include <cmath>

namespace maxant {

namespace {

constexpr double kRssiFloorDb = -100.0;

// Episode substream tags.
constexpr std::uint64_t kTagChannelBase = 1u << 16;  // + client*256 + ap
constexpr std::uint64_t kTagBitsBase = 2u << 16;     // + ap
constexpr std::uint64_t kTagNoiseBase = 3u << 16;    // + client
constexpr std::uint64_t kTagRssi = 4u << 16;

}  // namespace

std::string mac_event_kind_name(MacEventKind kind) {
    switch (kind) {
        case MacEventKind::Sounding: return "sounding";
        case MacEventKind::Txop: return "txop";
        case MacEventKind::Idle: return "idle";
    }
    return "idle";
}

double EventTimeline::total_ms() const {
    double end = 0.0;
    for (const auto& e : events) {
        end = std::max(end, e.start_ms + e.duration_ms);
    }
    return end;
}

void validate(const MacConfig& config) {
    if (config.n_antennas < 1) {
        throw InvalidParameter("mac.n_antennas must be >= 1");
    }
    if (!(config.sounding_ms > 0.0)) {
        throw InvalidParameter("mac.sounding_ms must be > 0");
    }
    if (!(config.txop_ms > 0.0)) {
        throw InvalidParameter("mac.txop_ms must be > 0");
    }
    if (config.rssi_noise_db < 0.0) {
        throw InvalidParameter("mac.rssi_noise_db must be >= 0");
    }
    if (config.bits_per_txop < 1) {
        throw InvalidParameter("mac.bits_per_txop must be >= 1");
    }
}

GroupSchedule select_group(const std::vector<ApNode>& aps, int n) {
    if (n < 1) {
        throw InvalidParameter("select_group: n must be >= 1");
    }
    std::vector<int> pending;
    for (const auto& ap : aps) {
        if (ap.pending_downlink) pending.push_back(ap.id);
    }
    std::sort(pending.begin(), pending.end());
    if (static_cast<int>(pending.size()) > n) {
        pending.resize(static_cast<std::size_t>(n));
    }
    return GroupSchedule{std::move(pending)};
}

RssiReport rssi_observe(const ChannelMatrix& h, double noise_db,
                        RngStream& stream) {
    if (noise_db < 0.0) {
        throw InvalidParameter("rssi_observe: noise_db must be >= 0");
    }
    const Eigen::VectorXd norms = column_norms(h);
    RssiReport report;
    report.per_antenna_rssi.resize(static_cast<std::size_t>(norms.size()));
    for (Eigen::Index i = 0; i < norms.size(); ++i) {
        double rssi = norms[i] > 0.0 ? 20.0 * std::log10(norms[i])
                                     : kRssiFloorDb;
        if (noise_db > 0.0) {
            rssi += noise_db * stream.gauss();
        }
        report.per_antenna_rssi[static_cast<std::size_t>(i)] = rssi;
    }
    return report;
}

int rssi_select(const RssiReport& report) {
    if (report.per_antenna_rssi.empty()) {
        throw InvalidInput("rssi_select: empty report");
    }
    int best = 0;
    for (int i = 1; i < static_cast<int>(report.per_antenna_rssi.size()); ++i) {
        if (report.per_antenna_rssi[static_cast<std::size_t>(i)] >
            report.per_antenna_rssi[static_cast<std::size_t>(best)]) {
            best = i;
        }
    }
    return best;
}

std::vector<int> sounding_phase(const GroupSchedule& group,
                                const std::vector<ChannelMatrix>& channels,
                                const MacConfig& config, RngStream& stream,
                                EventTimeline* timeline) {
    if (channels.size() != group.ap_ids.size()) {
        throw InvalidInput("sounding_phase: one channel per group member");
    }
    std::vector<int> assignments;
    assignments.reserve(channels.size());
    RngStream rssi_stream = stream.substream(kTagRssi);
    for (std::size_t i = 0; i < channels.size(); ++i) {
        const RssiReport report =
            rssi_observe(channels[i], config.rssi_noise_db, rssi_stream);
        assignments.push_back(rssi_select(report));
    }
    if (timeline != nullptr) {
        const double t0 = timeline->total_ms();
        if (config.per_ap_sounding) {
            for (std::size_t i = 0; i < group.ap_ids.size(); ++i) {
                timeline->events.push_back(
                    MacEvent{t0 + static_cast<double>(i) * config.sounding_ms,
                             config.sounding_ms, MacEventKind::Sounding,
                             {group.ap_ids[i]}});
            }
        } else if (group.size() > 0) {
            timeline->events.push_back(MacEvent{
                t0, config.sounding_ms, MacEventKind::Sounding, group.ap_ids});
        }
    }
    return assignments;
}

std::vector<TrialOutcome> simultaneous_txop(
    const GroupSchedule& group, const std::vector<int>& assignments,
    const std::vector<std::vector<ChannelMatrix>>& client_channels,
    const MacConfig& config, RngStream& stream) {
    const int k = group.size();
    if (static_cast<int>(assignments.size()) != k ||
        static_cast<int>(client_channels.size()) != k) {
        throw InvalidInput("simultaneous_txop: group/assignment size mismatch");
    }
    const double snr_lin = std::pow(10.0, config.snr_db / 10.0);
    const double noise_variance = std::isinf(snr_lin) ? 0.0 : 1.0 / snr_lin;
    const int n_bits = config.bits_per_txop;

    // One BPSK stream per AP.
    std::vector<std::vector<int>> bits(static_cast<std::size_t>(k));
    Eigen::MatrixXcd streams(n_bits, k);
    for (int j = 0; j < k; ++j) {
        RngStream bs = stream.substream(kTagBitsBase + static_cast<std::uint64_t>(j));
        bits[static_cast<std::size_t>(j)].resize(static_cast<std::size_t>(n_bits));
        for (int t = 0; t < n_bits; ++t) {
            const int bit = static_cast<int>(bs.next_u64() & 1u);
            bits[static_cast<std::size_t>(j)][static_cast<std::size_t>(t)] = bit;
            streams(t, j) = bit ? Complex(-1, 0) : Complex(1, 0);
        }
    }

    std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        const auto& per_ap = client_channels[static_cast<std::size_t>(i)];
        if (static_cast<int>(per_ap.size()) != k) {
            throw InvalidInput("simultaneous_txop: client channel row size");
        }
        const Eigen::Index nr = per_ap[0].rows();
        if (k > nr) {
            throw InvalidInput("simultaneous_txop: group larger than client nr");
        }
        Eigen::MatrixXcd composite(nr, k);
        for (int j = 0; j < k; ++j) {
            composite.col(j) = per_ap[static_cast<std::size_t>(j)].col(
                assignments[static_cast<std::size_t>(j)]);
        }
        RngStream noise = stream.substream(kTagNoiseBase + static_cast<std::uint64_t>(i));
        const Eigen::MatrixXcd y =
            add_awgn(streams * composite.transpose(), noise_variance, noise);
        auto& out = outcomes[static_cast<std::size_t>(i)];
        out.bits_sent = n_bits;
        try {
            const std::vector<SoftSymbols> separated = zf_receive(y, composite);
            const std::vector<int> decoded =
                bpsk_demodulate(separated[static_cast<std::size_t>(i)]);
            for (int t = 0; t < n_bits; ++t) {
                out.bit_errors +=
                    decoded[static_cast<std::size_t>(t)] !=
                    bits[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)];
            }
        } catch (const SingularChannel&) {
            out.bit_errors = n_bits;  // outage
        }
    }
    return outcomes;
}

AirtimeComparison airtime_compare(const MacConfig& config, int group_size) {
    if (group_size < 0) {
        throw InvalidParameter("airtime_compare: group_size must be >= 0");
    }
    AirtimeComparison cmp;
    const double sounding_total = config.per_ap_sounding
                                      ? group_size * config.sounding_ms
                                      : config.sounding_ms;
    cmp.coordinated_ms = sounding_total + config.txop_ms;
    cmp.sequential_ms = group_size * config.txop_ms;
    cmp.gain = cmp.sequential_ms / cmp.coordinated_ms;
    return cmp;
}

MacEpisodeSummary run_mac_episode(const MacConfig& config, int n_aps,
                                  int episodes) {
    validate(config);
    if (n_aps < 0) throw InvalidParameter("run_mac_episode: n_aps must be >= 0");
    if (episodes < 1) {
        throw InvalidParameter("run_mac_episode: episodes must be >= 1");
    }
    const int n = config.n_antennas;
    MacEpisodeSummary summary;
    summary.episodes = episodes;
    for (int e = 0; e < episodes; ++e) {
        RngStream episode_stream(config.seed, static_cast<std::uint64_t>(e));

        std::vector<ApNode> aps;
        aps.reserve(static_cast<std::size_t>(n_aps));
        for (int a = 0; a < n_aps; ++a) {
            aps.push_back(ApNode{a, n, true, std::nullopt});
        }
        const GroupSchedule group = select_group(aps, n);
        const int k = group.size();

        // Channel from group member j to the client of group member i;
        // all links share the same dense-deployment statistics.
        std::vector<std::vector<ChannelMatrix>> client_channels(
            static_cast<std::size_t>(k));
        std::vector<ChannelMatrix> serving(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) {
            client_channels[static_cast<std::size_t>(i)].resize(
                static_cast<std::size_t>(k));
            for (int j = 0; j < k; ++j) {
                RngStream cs = episode_stream.substream(
                    kTagChannelBase +
                    static_cast<std::uint64_t>(i) * 256u +
                    static_cast<std::uint64_t>(j));
                client_channels[static_cast<std::size_t>(i)]
                               [static_cast<std::size_t>(j)] =
                                   sample_rayleigh(n, n, cs);
            }
            serving[static_cast<std::size_t>(i)] =
                client_channels[static_cast<std::size_t>(i)]
                               [static_cast<std::size_t>(i)];
        }

        EventTimeline timeline;
        const std::vector<int> assignments = sounding_phase(
            group, serving, config, episode_stream, &timeline);
        if (k > 0) {
            timeline.events.push_back(MacEvent{timeline.total_ms(),
                                               config.txop_ms,
                                               MacEventKind::Txop,
                                               group.ap_ids});
            const std::vector<TrialOutcome> outcomes = simultaneous_txop(
                group, assignments, client_channels, config, episode_stream);
            for (const auto& o : outcomes) {
                summary.bits_sent += o.bits_sent;
                summary.bit_errors += o.bit_errors;
            }
        }
        if (e == 0) {
            summary.timeline = timeline;
            summary.group_size = k;
            summary.airtime = airtime_compare(config, k);
        }
    }
    summary.mean_link_ber =
        summary.bits_sent > 0
            ? static_cast<double>(summary.bit_errors) /
                  static_cast<double>(summary.bits_sent)
            : 0.0;
    return summary;
}

}  // namespace maxant
