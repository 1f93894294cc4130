#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "maxant/phy.hpp"

namespace maxant {

struct LinkSpec {
    int nt = 4;
    int nr = 4;
    Scheme scheme = Scheme::MaxSel;
    double snr_db = 10.0;
};

/// Hidden-node interferers. Their transmit power is power_ratio_db relative
/// to the victim's power at reference_snr_db; with track_sweep the ratio is
/// instead held at every sweep point, so interference grows with the
/// victim's power.
struct InterfererSpec {
    int count = 3;
    int nt_each = 4;
    Scheme scheme = Scheme::Stbc;
    double power_ratio_db = 0.0;
    bool track_sweep = false;
    double reference_snr_db = 10.0;
};

struct SnrSweepSpec {
    double start_db = 0.0;
    double stop_db = 20.0;
    double step_db = 2.0;
};

struct ScenarioConfig {
    LinkSpec link;
    InterfererSpec interferers;
    SnrSweepSpec snr;
    int trials_per_point = 25000;
    int max_bit_errors = 200;
    int packet_bits = 4000;
    std::uint64_t seed = 1;
    int threads = 1;
    double ci_level = 0.95;
};

struct TrialOutcome {
    long long bits_sent = 0;
    long long bit_errors = 0;
};

/// Validates the cross-field invariants; throws InvalidParameter with the
/// offending key name.
void validate(const ScenarioConfig& config);

/// SNR sweep points, start..stop inclusive (within half a step).
std::vector<double> sweep_points(const SnrSweepSpec& snr);

/// Victim channel draw for one trial; exposed so stream independence is
/// testable. Interferer channels come from disjoint substreams.
ChannelMatrix victim_channel(const ScenarioConfig& config, int trial_index);

/// y = C_d H_d^T + amp * sum_i C_i H_i^T + CN(0, noise_variance) noise.
/// Interferer blocks are cyclically extended or truncated to the victim's
/// block length.
Eigen::MatrixXcd compose_received(
    const Codeword& desired, const ChannelMatrix& h_d,
    const std::vector<std::pair<Codeword, ChannelMatrix>>& interferers,
    double interferer_amplitude, double noise_variance, RngStream& stream);

/// One Monte Carlo packet: fresh channels keyed by (seed, trial_index),
/// scheme-specific encode, interference composed, scheme receiver, errors
/// counted. Pure in (config, snr_db, trial_index).
TrialOutcome run_trial(const ScenarioConfig& config, double snr_db,
                       int trial_index);

}  // namespace maxant
