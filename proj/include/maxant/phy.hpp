#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "maxant/channel.hpp"

namespace maxant {

enum class Scheme { Stbc, MaxSel };

std::string scheme_name(Scheme s);
Scheme scheme_from_name(const std::string& name);

struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SingularChannel : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One transmit block: n_time x n_tx complex symbols carrying
/// symbols_carried information symbols-with total energy equal to
/// symbols_carried, so every scheme radiates unit energy per information
/// symbol.
struct Codeword {
    Eigen::MatrixXcd symbols;
    int symbols_carried = 0;

    Eigen::Index n_time() const { return symbols.rows(); }
    Eigen::Index n_tx() const { return symbols.cols(); }
};

/// Decoder output: one decision statistic per information symbol plus the
/// common post-combining channel gain.
struct SoftSymbols {
    Eigen::VectorXcd values;
    double effective_gain = 0.0;
};

/// bit 0 -> +1, bit 1 -> -1.
Eigen::VectorXcd bpsk_modulate(const std::vector<int>& bits);

/// bit = 0 iff Re(value) >= 0.
std::vector<int> bpsk_demodulate(const SoftSymbols& soft);

/// Alamouti block [[s1, s2], [-s2*, s1*]] / sqrt(2); block energy 2.
Codeword alamouti_encode(const Eigen::VectorXcd& symbols);

/// Rate-1/2 complex orthogonal design over 4 antennas and 8 channel uses;
/// block energy 4.
Codeword ostbc4_encode(const Eigen::VectorXcd& symbols);

/// Linear ML combining for the orthogonal designs above. H must have 2 or 4
/// columns; `received` must hold exactly one block. effective_gain is
/// ||H||_F^2 / 2 for Alamouti and ||H||_F^2 / 4 for the 4-antenna code.
SoftSymbols stbc_decode(const Eigen::MatrixXcd& received,
                        const ChannelMatrix& h);

/// Precomputed combiner for decoding many blocks through one channel.
/// Columns of phi are the stacked real responses to the unit symbols, so
/// phi^T is the matched filter; for the orthogonal designs phi^T phi = g*I.
class StbcCombiner {
public:
    explicit StbcCombiner(const ChannelMatrix& h);

    SoftSymbols decode(const Eigen::MatrixXcd& received) const;

    int symbols_per_block() const { return n_symbols_; }
    Eigen::Index block_len() const { return block_len_; }
    double gain() const { return gain_; }

private:
    Eigen::MatrixXd phi_;
    double gain_ = 0.0;
    int n_symbols_ = 0;
    Eigen::Index block_len_ = 0;
};

/// Single-antenna burst: symbols on column `antenna`, zeros elsewhere.
Codeword selection_transmit(const Eigen::VectorXcd& symbols, int antenna,
                            int nt);

/// Maximal ratio combining: per-symbol statistic h^H y,
/// effective_gain ||h||^2.
SoftSymbols mrc_combine(const Eigen::MatrixXcd& received,
                        const Eigen::VectorXcd& h);

/// Zero-forcing separation of K <= nr simultaneous streams; one SoftSymbols
/// per stream. Throws SingularChannel when h_composite is rank deficient.
std::vector<SoftSymbols> zf_receive(const Eigen::MatrixXcd& received,
                                    const Eigen::MatrixXcd& h_composite);

}  // namespace maxant
