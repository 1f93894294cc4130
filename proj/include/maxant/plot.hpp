#pragma once

#include <string>
#include <vector>

#include "maxant/montecarlo.hpp"

namespace maxant {

/// SVG line plot of BER (log axis) versus SNR in dB, one curve per scheme,
/// with Wilson CI whiskers. Zero-BER points are drawn as open markers at
/// the 1e-8 floor.
std::string ber_plot_svg(const std::vector<BerPoint>& points);

}  // namespace maxant
