#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>

#include "maxant/rng.hpp"

namespace maxant {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

/// nr x nt flat-fading channel realization, columns indexed by transmit
/// antenna.
using ChannelMatrix = Eigen::MatrixXcd;

struct InvalidDimension : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidParameter : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Draw an nr x nt matrix of i.i.d. CN(0,1) entries.
ChannelMatrix sample_rayleigh(int nr, int nt, RngStream& stream);

/// Per-column 2-norms, length nt.
Eigen::VectorXd column_norms(const ChannelMatrix& h);

/// Index of the column with the largest 2-norm; ties break to the lowest
/// index.
int select_best_antenna(const ChannelMatrix& h);

/// Add i.i.d. CN(0, noise_variance) to every entry.
ComplexMatrix add_awgn(const ComplexMatrix& signal, double noise_variance,
                       RngStream& stream);

}  // namespace maxant
