#include <doctest.h>

#include <cmath>
#include <limits>

#include "maxant/macsim.hpp"

using namespace maxant;

namespace {

std::vector<ApNode> make_aps(std::initializer_list<int> pending_ids,
                             int total) {
    std::vector<ApNode> aps;
    for (int a = 0; a < total; ++a) {
        ApNode node;
        node.id = a;
        node.pending_downlink = false;
        aps.push_back(node);
    }
    for (int id : pending_ids) {
        aps[static_cast<std::size_t>(id)].pending_downlink = true;
    }
    return aps;
}

}  // namespace

TEST_CASE("mac config validation") {
    CHECK_NOTHROW(validate(MacConfig{}));
    MacConfig bad;
    bad.sounding_ms = 0.0;
    CHECK_THROWS_AS(validate(bad), InvalidParameter);
    bad = MacConfig{};
    bad.n_antennas = 0;
    CHECK_THROWS_AS(validate(bad), InvalidParameter);
    bad = MacConfig{};
    bad.rssi_noise_db = -0.1;
    CHECK_THROWS_AS(validate(bad), InvalidParameter);
}

TEST_CASE("select_group keeps the lowest pending ids up to n") {
    const auto aps = make_aps({5, 1, 3, 0, 7}, 8);
    CHECK(select_group(aps, 4).ap_ids == std::vector<int>{0, 1, 3, 5});
    CHECK(select_group(aps, 10).ap_ids == std::vector<int>{0, 1, 3, 5, 7});
    CHECK(select_group(make_aps({}, 4), 4).ap_ids.empty());
    CHECK_THROWS_AS(select_group(aps, 0), InvalidParameter);
}

TEST_CASE("rssi_observe reports 20log10 of the column norms") {
    ChannelMatrix h(1, 2);
    h << Complex(1, 0), Complex(0, 2);
    RngStream s(1, 0);
    const RssiReport report = rssi_observe(h, 0.0, s);
    REQUIRE(report.per_antenna_rssi.size() == 2);
    CHECK(report.per_antenna_rssi[0] == doctest::Approx(0.0));
    CHECK(report.per_antenna_rssi[1] ==
          doctest::Approx(20.0 * std::log10(2.0)));
}

TEST_CASE("rssi_observe floors a dead antenna at -100 dB") {
    ChannelMatrix h = ChannelMatrix::Zero(3, 2);
    h(0, 1) = Complex(1, 0);
    RngStream s(1, 0);
    const RssiReport report = rssi_observe(h, 0.0, s);
    CHECK(report.per_antenna_rssi[0] == -100.0);
    CHECK(report.per_antenna_rssi[1] == doctest::Approx(0.0));
}

TEST_CASE("rssi noise has the configured dB spread") {
    ChannelMatrix h = ChannelMatrix::Ones(1, 1);
    RngStream s(2, 0);
    const int n = 20000;
    double sum = 0.0, sum_sq = 0.0;
    for (int i = 0; i < n; ++i) {
        const double r = rssi_observe(h, 3.0, s).per_antenna_rssi[0];
        sum += r;
        sum_sq += r * r;
    }
    const double mean = sum / n;
    const double sd = std::sqrt(sum_sq / n - mean * mean);
    CHECK(mean == doctest::Approx(0.0).epsilon(0.1));
    CHECK(sd == doctest::Approx(3.0).epsilon(0.05));
}

TEST_CASE("rssi_select takes the argmax with lowest-index ties") {
    CHECK(rssi_select(RssiReport{{-3.0, 4.0, 1.0}}) == 1);
    CHECK(rssi_select(RssiReport{{2.0, 2.0}}) == 0);
    CHECK(rssi_select(RssiReport{{-50.0}}) == 0);
    CHECK_THROWS_AS(rssi_select(RssiReport{{}}), InvalidInput);
}

TEST_CASE("noiseless sounding agrees with direct channel selection") {
    MacConfig cfg;
    cfg.rssi_noise_db = 0.0;
    RngStream channel_stream(3, 0);
    for (int rep = 0; rep < 10000; ++rep) {
        const ChannelMatrix h = sample_rayleigh(4, 4, channel_stream);
        RngStream episode(3, static_cast<std::uint64_t>(rep));
        const std::vector<int> chosen =
            sounding_phase(GroupSchedule{{0}}, {h}, cfg, episode);
        REQUIRE(chosen.size() == 1);
        CHECK(chosen[0] == select_best_antenna(h));
    }
}

TEST_CASE("sounding accuracy degrades monotonically with rssi noise") {
    RngStream channel_stream(4, 0);
    std::vector<ChannelMatrix> channels;
    for (int rep = 0; rep < 4000; ++rep) {
        channels.push_back(sample_rayleigh(4, 4, channel_stream));
    }
    double prev_accuracy = 2.0;
    for (double noise_db : {0.0, 1.0, 3.0, 6.0}) {
        MacConfig cfg;
        cfg.rssi_noise_db = noise_db;
        int hits = 0;
        for (std::size_t rep = 0; rep < channels.size(); ++rep) {
            RngStream episode(4, static_cast<std::uint64_t>(rep));
            const std::vector<int> chosen = sounding_phase(
                GroupSchedule{{0}}, {channels[rep]}, cfg, episode);
            hits += chosen[0] == select_best_antenna(channels[rep]);
        }
        const double accuracy =
            static_cast<double>(hits) / static_cast<double>(channels.size());
        CHECK(accuracy < prev_accuracy);
        if (noise_db == 0.0) CHECK(accuracy == 1.0);
        prev_accuracy = accuracy;
    }
}

TEST_CASE("sounding_phase records one group span, or one per AP") {
    MacConfig cfg;
    RngStream episode(5, 0);
    RngStream ch(5, 1);
    const GroupSchedule group{{0, 1, 2}};
    std::vector<ChannelMatrix> channels;
    for (int i = 0; i < 3; ++i) channels.push_back(sample_rayleigh(4, 4, ch));

    EventTimeline grouped;
    sounding_phase(group, channels, cfg, episode, &grouped);
    REQUIRE(grouped.events.size() == 1);
    CHECK(grouped.events[0].kind == MacEventKind::Sounding);
    CHECK(grouped.events[0].duration_ms == cfg.sounding_ms);
    CHECK(grouped.events[0].ap_ids == group.ap_ids);
    CHECK(grouped.total_ms() == doctest::Approx(cfg.sounding_ms));

    cfg.per_ap_sounding = true;
    EventTimeline per_ap;
    sounding_phase(group, channels, cfg, episode, &per_ap);
    REQUIRE(per_ap.events.size() == 3);
    CHECK(per_ap.total_ms() == doctest::Approx(3 * cfg.sounding_ms));
    CHECK(per_ap.events[2].ap_ids == std::vector<int>{2});
}

TEST_CASE("simultaneous_txop is error-free without noise") {
    MacConfig cfg;
    cfg.snr_db = std::numeric_limits<double>::infinity();
    const GroupSchedule group{{0, 1, 2, 3}};
    for (int rep = 0; rep < 50; ++rep) {
        RngStream episode(6, static_cast<std::uint64_t>(rep));
        std::vector<std::vector<ChannelMatrix>> client_channels(4);
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                RngStream cs = episode.substream(
                    1000 + static_cast<std::uint64_t>(i) * 16 +
                    static_cast<std::uint64_t>(j));
                client_channels[static_cast<std::size_t>(i)].push_back(
                    sample_rayleigh(4, 4, cs));
            }
        }
        const std::vector<TrialOutcome> out = simultaneous_txop(
            group, {0, 1, 2, 3}, client_channels, cfg, episode);
        REQUIRE(out.size() == 4);
        for (const TrialOutcome& o : out) {
            CHECK(o.bits_sent == cfg.bits_per_txop);
            CHECK(o.bit_errors == 0);
        }
    }
}

TEST_CASE("simultaneous_txop marks singular composites as outage") {
    MacConfig cfg;
    cfg.snr_db = std::numeric_limits<double>::infinity();
    const GroupSchedule group{{0, 1}};
    // both APs reach the client through identical columns -> rank 1
    ChannelMatrix shared = ChannelMatrix::Ones(2, 2);
    std::vector<std::vector<ChannelMatrix>> client_channels{
        {shared, shared}, {shared, shared}};
    RngStream episode(7, 0);
    const std::vector<TrialOutcome> out =
        simultaneous_txop(group, {0, 0}, client_channels, cfg, episode);
    CHECK(out[0].bit_errors == cfg.bits_per_txop);
    CHECK(out[1].bit_errors == cfg.bits_per_txop);
}

TEST_CASE("airtime comparison matches the coordination arithmetic") {
    MacConfig cfg;  // 1 ms sounding, 4 ms txop
    const AirtimeComparison cmp = airtime_compare(cfg, 4);
    CHECK(cmp.coordinated_ms == doctest::Approx(5.0));
    CHECK(cmp.sequential_ms == doctest::Approx(16.0));
    CHECK(cmp.gain == doctest::Approx(3.2));

    MacConfig per_ap = cfg;
    per_ap.per_ap_sounding = true;
    const AirtimeComparison slow = airtime_compare(per_ap, 4);
    CHECK(slow.coordinated_ms == doctest::Approx(8.0));
    CHECK(slow.gain == doctest::Approx(2.0));

    CHECK(airtime_compare(cfg, 1).gain < 1.0);  // no benefit for one AP
    CHECK_THROWS_AS(airtime_compare(cfg, -1), InvalidParameter);
}

TEST_CASE("run_mac_episode summary is deterministic and coherent") {
    MacConfig cfg;
    cfg.bits_per_txop = 100;
    const MacEpisodeSummary a = run_mac_episode(cfg, 6, 20);
    const MacEpisodeSummary b = run_mac_episode(cfg, 6, 20);
    CHECK(a.bit_errors == b.bit_errors);
    CHECK(a.group_size == 4);  // 6 pending APs truncated to N = 4
    CHECK(a.bits_sent == 20LL * 4 * 100);
    CHECK(a.mean_link_ber ==
          doctest::Approx(static_cast<double>(a.bit_errors) /
                          static_cast<double>(a.bits_sent)));
    REQUIRE(a.timeline.events.size() == 2);
    CHECK(a.timeline.events[0].kind == MacEventKind::Sounding);
    CHECK(a.timeline.events[1].kind == MacEventKind::Txop);
    CHECK(a.timeline.events[1].start_ms ==
          doctest::Approx(cfg.sounding_ms));
    CHECK(a.timeline.total_ms() == doctest::Approx(a.airtime.coordinated_ms));
    CHECK(a.airtime.gain == doctest::Approx(3.2));
}

TEST_CASE("run_mac_episode with fewer pending APs shrinks the group") {
    MacConfig cfg;
    cfg.bits_per_txop = 50;
    const MacEpisodeSummary s = run_mac_episode(cfg, 2, 5);
    CHECK(s.group_size == 2);
    CHECK(s.bits_sent == 5LL * 2 * 50);
    CHECK_THROWS_AS(run_mac_episode(cfg, 4, 0), InvalidParameter);
}

TEST_CASE("event kind names") {
    CHECK(mac_event_kind_name(MacEventKind::Sounding) == "sounding");
    CHECK(mac_event_kind_name(MacEventKind::Txop) == "txop");
    CHECK(mac_event_kind_name(MacEventKind::Idle) == "idle");
}
