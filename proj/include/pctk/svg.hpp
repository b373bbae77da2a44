#pragma once

#include <complex>
#include <span>
#include <string>

#include "pctk/spectral.hpp"

namespace pctk {

/// Complex-plane picture of Gerschgorin discs with eigenvalue markers.
/// Fixed 640x640 viewport, axes scaled to 1.1x the largest disc, discs as
/// unfilled circles, eigenvalues as 4px dots. Output is byte-deterministic.
std::string disc_plot_svg(std::span<const GerschgorinDisc> discs,
                          std::span<const std::complex<double>> eigenvalues);

}  // namespace pctk
