#include "maxant/scenario.hpp"

#include <cmath>

namespace maxant {

namespace {

// Substream roles within one trial. Keys must not depend on the victim's
// scheme so both schemes replay identical channels and noise (paired
// comparison).
constexpr std::uint64_t kRolesPerTrial = 1024;
constexpr std::uint64_t kRoleVictimChannel = 0;
constexpr std::uint64_t kRoleVictimBits = 1;
constexpr std::uint64_t kRoleNoise = 2;
constexpr std::uint64_t kRoleInterfererBase = 8;

RngStream trial_stream(const ScenarioConfig& config, int trial_index,
                       std::uint64_t role) {
    return RngStream(config.seed,
                     static_cast<std::uint64_t>(trial_index) * kRolesPerTrial +
                         role);
}

std::vector<int> random_bits(int n, RngStream& stream) {
    std::vector<int> bits(static_cast<std::size_t>(n));
    for (auto& b : bits) {
        b = static_cast<int>(stream.next_u64() & 1u);
    }
    return bits;
}

int stbc_symbols_per_block(int nt) { return nt; }

// Victim transmit block for the whole packet.
Codeword encode_victim(const ScenarioConfig& config, const ChannelMatrix& h,
                       const std::vector<int>& bits) {
    if (config.link.scheme == Scheme::MaxSel) {
        const int antenna = select_best_antenna(h);
        return selection_transmit(bpsk_modulate(bits), antenna, config.link.nt);
    }
    const int spb = stbc_symbols_per_block(config.link.nt);
    const int n_blocks = (static_cast<int>(bits.size()) + spb - 1) / spb;
    Eigen::VectorXcd symbols = Eigen::VectorXcd::Ones(n_blocks * spb);
    symbols.head(static_cast<Eigen::Index>(bits.size())) = bpsk_modulate(bits);
    const Eigen::Index block_len = config.link.nt == 2 ? 2 : 8;
    Eigen::MatrixXcd out(n_blocks * block_len, config.link.nt);
    for (int b = 0; b < n_blocks; ++b) {
        const Codeword block =
            config.link.nt == 2
                ? alamouti_encode(symbols.segment(2 * b, 2))
                : ostbc4_encode(symbols.segment(4 * b, 4));
        out.middleRows(b * block_len, block_len) = block.symbols;
    }
    return Codeword{std::move(out), n_blocks * spb};
}

// Asynchronous hidden-node burst: i.i.d. blocks regenerated to cover
// n_time channel uses. A MaxSel interferer picks its antenna on its own
// link, which is independent of the victim's, so it appears here as a
// uniformly random column.
Codeword interferer_burst(const InterfererSpec& spec, Eigen::Index n_time,
                          RngStream& stream) {
    if (spec.scheme == Scheme::MaxSel) {
        const int antenna =
            static_cast<int>(stream.next_u64() % static_cast<std::uint64_t>(
                                                     spec.nt_each));
        Eigen::VectorXcd s(n_time);
        for (Eigen::Index i = 0; i < n_time; ++i) {
            s[i] = (stream.next_u64() & 1u) ? Complex(-1, 0) : Complex(1, 0);
        }
        return selection_transmit(s, antenna, spec.nt_each);
    }
    const Eigen::Index block_len = spec.nt_each == 2 ? 2 : 8;
    const int spb = stbc_symbols_per_block(spec.nt_each);
    const Eigen::Index n_blocks = (n_time + block_len - 1) / block_len;
    Eigen::MatrixXcd out(n_blocks * block_len, spec.nt_each);
    Eigen::VectorXcd s(spb);
    for (Eigen::Index b = 0; b < n_blocks; ++b) {
        for (int k = 0; k < spb; ++k) {
            s[k] = (stream.next_u64() & 1u) ? Complex(-1, 0) : Complex(1, 0);
        }
        const Codeword block =
            spec.nt_each == 2 ? alamouti_encode(s) : ostbc4_encode(s);
        out.middleRows(b * block_len, block_len) = block.symbols;
    }
    out.conservativeResize(n_time, spec.nt_each);
    return Codeword{std::move(out),
                    static_cast<int>(n_blocks) * spb};
}

long long count_bit_errors(const std::vector<int>& sent,
                           const std::vector<int>& decoded) {
    long long errors = 0;
    for (std::size_t i = 0; i < sent.size(); ++i) {
        errors += sent[i] != decoded[i];
    }
    return errors;
}

}  // namespace

void validate(const ScenarioConfig& config) {
    if (config.link.nt < 1) throw InvalidParameter("link.nt must be >= 1");
    if (config.link.nr < 1) throw InvalidParameter("link.nr must be >= 1");
    if (config.link.scheme == Scheme::Stbc && config.link.nt != 2 &&
        config.link.nt != 4) {
        throw InvalidParameter("link.nt must be 2 or 4 for scheme stbc");
    }
    if (config.interferers.count < 0) {
        throw InvalidParameter("interferers.count must be >= 0");
    }
    if (config.interferers.nt_each < 1) {
        throw InvalidParameter("interferers.nt_each must be >= 1");
    }
    if (config.interferers.scheme == Scheme::Stbc &&
        config.interferers.nt_each != 2 && config.interferers.nt_each != 4) {
        throw InvalidParameter("interferers.nt_each must be 2 or 4 for scheme stbc");
    }
    if (!(config.snr.step_db > 0.0)) {
        throw InvalidParameter("snr.step_db must be > 0");
    }
    if (config.snr.stop_db < config.snr.start_db) {
        throw InvalidParameter("snr.stop_db must be >= snr.start_db");
    }
    if (config.trials_per_point < 1) {
        throw InvalidParameter("mc.trials_per_point must be >= 1");
    }
    if (config.max_bit_errors < 1) {
        throw InvalidParameter("mc.max_bit_errors must be >= 1");
    }
    if (config.packet_bits < 1) {
        throw InvalidParameter("mc.packet_bits must be >= 1");
    }
    if (config.threads < 0) {
        throw InvalidParameter("mc.threads must be >= 0");
    }
    if (!(config.ci_level > 0.0 && config.ci_level < 1.0)) {
        throw InvalidParameter("mc.ci_level must be in (0, 1)");
    }
}

std::vector<double> sweep_points(const SnrSweepSpec& snr) {
    std::vector<double> points;
    const int n = static_cast<int>(
        std::floor((snr.stop_db - snr.start_db) / snr.step_db + 0.5));
    for (int i = 0; i <= n; ++i) {
        points.push_back(snr.start_db + i * snr.step_db);
    }
    return points;
}

ChannelMatrix victim_channel(const ScenarioConfig& config, int trial_index) {
    RngStream stream = trial_stream(config, trial_index, kRoleVictimChannel);
    return sample_rayleigh(config.link.nr, config.link.nt, stream);
}

Eigen::MatrixXcd compose_received(
    const Codeword& desired, const ChannelMatrix& h_d,
    const std::vector<std::pair<Codeword, ChannelMatrix>>& interferers,
    double interferer_amplitude, double noise_variance, RngStream& stream) {
    const Eigen::Index n_time = desired.n_time();
    if (desired.n_tx() != h_d.cols()) {
        throw InvalidInput("compose_received: desired codeword width != nt");
    }
    Eigen::MatrixXcd y = desired.symbols * h_d.transpose();
    for (const auto& [codeword, h_i] : interferers) {
        if (h_i.rows() != h_d.rows()) {
            throw InvalidInput("compose_received: interferer nr mismatch");
        }
        if (codeword.n_tx() != h_i.cols()) {
            throw InvalidInput("compose_received: interferer codeword width");
        }
        if (codeword.n_time() == n_time) {
            y.noalias() += interferer_amplitude * codeword.symbols * h_i.transpose();
        } else {
            // cyclic extension/truncation to the victim's block length
            const Eigen::MatrixXcd contrib =
                codeword.symbols * h_i.transpose();
            for (Eigen::Index t = 0; t < n_time; ++t) {
                y.row(t) +=
                    interferer_amplitude * contrib.row(t % contrib.rows());
            }
        }
    }
    return add_awgn(y, noise_variance, stream);
}

TrialOutcome run_trial(const ScenarioConfig& config, double snr_db,
                       int trial_index) {
    const ChannelMatrix h = victim_channel(config, trial_index);

    RngStream bits_stream = trial_stream(config, trial_index, kRoleVictimBits);
    const std::vector<int> bits = random_bits(config.packet_bits, bits_stream);
    const Codeword codeword = encode_victim(config, h, bits);

    const double snr_lin = std::pow(10.0, snr_db / 10.0);
    const double energy_per_use =
        static_cast<double>(codeword.symbols_carried) /
        static_cast<double>(codeword.n_time());
    const double noise_variance =
        std::isinf(snr_lin) ? 0.0 : energy_per_use / snr_lin;

    double amplitude =
        std::pow(10.0, config.interferers.power_ratio_db / 20.0);
    if (!config.interferers.track_sweep) {
        amplitude *= std::pow(
            10.0, (config.interferers.reference_snr_db - snr_db) / 20.0);
    }

    std::vector<std::pair<Codeword, ChannelMatrix>> interference;
    interference.reserve(static_cast<std::size_t>(config.interferers.count));
    for (int i = 0; i < config.interferers.count; ++i) {
        RngStream ch_stream = trial_stream(
            config, trial_index,
            kRoleInterfererBase + 2 * static_cast<std::uint64_t>(i));
        RngStream sym_stream = trial_stream(
            config, trial_index,
            kRoleInterfererBase + 2 * static_cast<std::uint64_t>(i) + 1);
        ChannelMatrix h_i = sample_rayleigh(config.link.nr,
                                            config.interferers.nt_each,
                                            ch_stream);
        interference.emplace_back(
            interferer_burst(config.interferers, codeword.n_time(), sym_stream),
            std::move(h_i));
    }

    RngStream noise_stream = trial_stream(config, trial_index, kRoleNoise);
    const Eigen::MatrixXcd y = compose_received(
        codeword, h, interference, amplitude, noise_variance, noise_stream);

    std::vector<int> decoded;
    decoded.reserve(bits.size());
    if (config.link.scheme == Scheme::MaxSel) {
        const SoftSymbols soft =
            mrc_combine(y, h.col(select_best_antenna(h)));
        decoded = bpsk_demodulate(soft);
    } else {
        const StbcCombiner combiner(h);
        const Eigen::Index block_len = combiner.block_len();
        for (Eigen::Index b = 0; b * block_len < y.rows(); ++b) {
            const std::vector<int> block_bits = bpsk_demodulate(
                combiner.decode(y.middleRows(b * block_len, block_len)));
            decoded.insert(decoded.end(), block_bits.begin(), block_bits.end());
        }
        decoded.resize(bits.size());
    }
    return TrialOutcome{static_cast<long long>(bits.size()),
                        count_bit_errors(bits, decoded)};
}

}  // namespace maxant
