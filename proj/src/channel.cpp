#include "maxant/channel.hpp"

namespace maxant {

ChannelMatrix sample_rayleigh(int nr, int nt, RngStream& stream) {
    if (nr < 1 || nt < 1) {
        throw InvalidDimension("sample_rayleigh: nr and nt must be >= 1");
    }
    ChannelMatrix h(nr, nt);
    // Column-major fill so the draw order matches Eigen's storage.
    for (int j = 0; j < nt; ++j) {
        for (int i = 0; i < nr; ++i) {
            h(i, j) = stream.cnormal();
        }
    }
    return h;
}

Eigen::VectorXd column_norms(const ChannelMatrix& h) {
    return h.colwise().norm();
}

int select_best_antenna(const ChannelMatrix& h) {
    const Eigen::VectorXd norms = column_norms(h);
    int best = 0;
    for (int i = 1; i < norms.size(); ++i) {
        if (norms[i] > norms[best]) {
            best = i;
        }
    }
    return best;
}

ComplexMatrix add_awgn(const ComplexMatrix& signal, double noise_variance,
                       RngStream& stream) {
    if (noise_variance < 0.0) {
        throw InvalidParameter("add_awgn: noise_variance must be >= 0");
    }
    if (noise_variance == 0.0) {
        return signal;
    }
    const double scale = std::sqrt(noise_variance);
    ComplexMatrix out(signal.rows(), signal.cols());
    for (Eigen::Index j = 0; j < signal.cols(); ++j) {
        for (Eigen::Index i = 0; i < signal.rows(); ++i) {
            out(i, j) = signal(i, j) + scale * stream.cnormal();
        }
    }
    return out;
}

}  // namespace maxant
