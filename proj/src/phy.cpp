#include "maxant/phy.hpp"

namespace maxant {

std::string scheme_name(Scheme s) {
    return s == Scheme::Stbc ? "stbc" : "maxsel";
}

Scheme scheme_from_name(const std::string& name) {
    if (name == "stbc") return Scheme::Stbc;
    if (name == "maxsel") return Scheme::MaxSel;
    throw InvalidInput("unknown scheme '" + name + "' (expected stbc|maxsel)");
}

Eigen::VectorXcd bpsk_modulate(const std::vector<int>& bits) {
    Eigen::VectorXcd out(static_cast<Eigen::Index>(bits.size()));
    for (std::size_t i = 0; i < bits.size(); ++i) {
        out[static_cast<Eigen::Index>(i)] = bits[i] ? Complex(-1.0, 0.0)
                                                    : Complex(1.0, 0.0);
    }
    return out;
}

std::vector<int> bpsk_demodulate(const SoftSymbols& soft) {
    std::vector<int> bits(static_cast<std::size_t>(soft.values.size()));
    for (Eigen::Index i = 0; i < soft.values.size(); ++i) {
        bits[static_cast<std::size_t>(i)] = soft.values[i].real() >= 0.0 ? 0 : 1;
    }
    return bits;
}

Codeword alamouti_encode(const Eigen::VectorXcd& symbols) {
    if (symbols.size() != 2) {
        throw InvalidInput("alamouti_encode: expected exactly 2 symbols");
    }
    const double a = 0.7071067811865475244;  // 1/sqrt(2), block energy 2
    Eigen::MatrixXcd c(2, 2);
    c(0, 0) = a * symbols[0];
    c(0, 1) = a * symbols[1];
    c(1, 0) = -a * std::conj(symbols[1]);
    c(1, 1) = a * std::conj(symbols[0]);
    return Codeword{std::move(c), 2};
}

Codeword ostbc4_encode(const Eigen::VectorXcd& symbols) {
    if (symbols.size() != 4) {
        throw InvalidInput("ostbc4_encode: expected exactly 4 symbols");
    }
    const Complex s1 = symbols[0], s2 = symbols[1], s3 = symbols[2],
                  s4 = symbols[3];
    // Each symbol appears twice per antenna across the 8 uses; the scale
    // 1/sqrt(8) puts the block energy at 4.
    const double a = 0.35355339059327376220;  // 1/sqrt(8)
    Eigen::MatrixXcd c(8, 4);
    c << s1, s2, s3, s4,
        -s2, s1, -s4, s3,
        -s3, s4, s1, -s2,
        -s4, -s3, s2, s1,
        std::conj(s1), std::conj(s2), std::conj(s3), std::conj(s4),
        -std::conj(s2), std::conj(s1), -std::conj(s4), std::conj(s3),
        -std::conj(s3), std::conj(s4), std::conj(s1), -std::conj(s2),
        -std::conj(s4), -std::conj(s3), std::conj(s2), std::conj(s1);
    c *= a;
    return Codeword{std::move(c), 4};
}

namespace {

Codeword encode_for(const ChannelMatrix& h, const Eigen::VectorXcd& s) {
    return h.cols() == 2 ? alamouti_encode(s) : ostbc4_encode(s);
}

}  // namespace

StbcCombiner::StbcCombiner(const ChannelMatrix& h) {
    if (h.cols() != 2 && h.cols() != 4) {
        throw InvalidInput("stbc_decode: nt must be 2 or 4");
    }
    n_symbols_ = static_cast<int>(h.cols());
    block_len_ = h.cols() == 2 ? 2 : 8;
    const Eigen::Index m = 2 * block_len_ * h.rows();
    phi_.resize(m, 2 * n_symbols_);
    Eigen::VectorXcd basis = Eigen::VectorXcd::Zero(n_symbols_);
    for (int k = 0; k < 2 * n_symbols_; ++k) {
        const int sym = k % n_symbols_;
        basis[sym] = k < n_symbols_ ? Complex(1, 0) : Complex(0, 1);
        const Eigen::MatrixXcd resp = encode_for(h, basis).symbols * h.transpose();
        basis[sym] = Complex(0, 0);
        phi_.col(k).head(m / 2) = resp.reshaped().real();
        phi_.col(k).tail(m / 2) = resp.reshaped().imag();
    }
    gain_ = phi_.col(0).squaredNorm();
}

SoftSymbols StbcCombiner::decode(const Eigen::MatrixXcd& received) const {
    if (received.rows() != block_len_ || 2 * received.size() != phi_.rows()) {
        throw InvalidInput("stbc_decode: received block shape mismatch");
    }
    Eigen::VectorXd yre(phi_.rows());
    yre.head(received.size()) = received.reshaped().real();
    yre.tail(received.size()) = received.reshaped().imag();
    const Eigen::VectorXd stat = phi_.transpose() * yre;
    SoftSymbols out;
    out.effective_gain = gain_;
    out.values.resize(n_symbols_);
    if (gain_ == 0.0) {
        out.values.setZero();
        return out;
    }
    for (int k = 0; k < n_symbols_; ++k) {
        out.values[k] = Complex(stat[k], stat[n_symbols_ + k]) / gain_;
    }
    return out;
}

SoftSymbols stbc_decode(const Eigen::MatrixXcd& received,
                        const ChannelMatrix& h) {
    if (received.cols() != h.rows()) {
        throw InvalidInput("stbc_decode: receive antenna count mismatch");
    }
    return StbcCombiner(h).decode(received);
}

Codeword selection_transmit(const Eigen::VectorXcd& symbols, int antenna,
                            int nt) {
    if (nt < 1 || antenna < 0 || antenna >= nt) {
        throw InvalidInput("selection_transmit: antenna index out of range");
    }
    Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(symbols.size(), nt);
    c.col(antenna) = symbols;
    return Codeword{std::move(c), static_cast<int>(symbols.size())};
}

SoftSymbols mrc_combine(const Eigen::MatrixXcd& received,
                        const Eigen::VectorXcd& h) {
    if (received.cols() != h.size()) {
        throw InvalidInput("mrc_combine: h length must equal nr");
    }
    SoftSymbols out;
    out.values = received * h.conjugate();
    out.effective_gain = h.squaredNorm();
    return out;
}

std::vector<SoftSymbols> zf_receive(const Eigen::MatrixXcd& received,
                                    const Eigen::MatrixXcd& h_composite) {
    const Eigen::Index nr = h_composite.rows();
    const Eigen::Index k = h_composite.cols();
    if (k > nr) {
        throw InvalidInput("zf_receive: more streams than receive antennas");
    }
    if (received.cols() != nr) {
        throw InvalidInput("zf_receive: received width must equal nr");
    }
    const Eigen::MatrixXcd gram = h_composite.adjoint() * h_composite;
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(gram);
    if (lu.rank() < k) {
        throw SingularChannel("zf_receive: rank-deficient composite channel");
    }
    const Eigen::MatrixXcd gram_inv = lu.inverse();
    // x_hat = (H^H H)^-1 H^H y per channel use.
    const Eigen::MatrixXcd estimates =
        received * h_composite.conjugate() * gram_inv.transpose();
    std::vector<SoftSymbols> out(static_cast<std::size_t>(k));
    for (Eigen::Index s = 0; s < k; ++s) {
        out[static_cast<std::size_t>(s)].values = estimates.col(s);
        out[static_cast<std::size_t>(s)].effective_gain =
            1.0 / gram_inv(s, s).real();
    }
    return out;
}

}  // namespace maxant
