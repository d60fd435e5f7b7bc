#pragma once

#include <cstdint>
#include <span>

#include "tcfv/state.hpp"

namespace tcfv {

/// Slope limiter 3r / (2r^2 - r + 2) (smooth Hemker-Koren form, used
/// unclamped). Symmetric: phi(r) = phi(1/r) for r > 0.
double slope_limiter_phi(double r);

/// Upwind-bias parameter giving quadratic reconstruction on smooth data.
inline constexpr double kMusclBias = 1.0 / 3.0;

/// One-sided face states of cell i: left state at face i+1/2 and right state
/// at face i-1/2.
struct MusclPair {
  PrimState left_at_plus;
  PrimState right_at_minus;
};

/// Face states from the (i-1, i, i+1) stencil. With limited=false this is the
/// plain bias-k reconstruction; with limited=true the slopes are limited
/// componentwise. Falls back to the cell average for a face whose
/// reconstructed density or pressure would be nonpositive.
MusclPair muscl_faces(const PrimState& wm, const PrimState& w0, const PrimState& wp, bool limited,
                      double k = kMusclBias);

/// Reconstructs one grid line of cells. ext holds n+4 cell states (two ghost
/// layers each side, ext[2] is cell 0); flags holds n+2 limit flags (one
/// ghost layer each side, flags[1] is cell 0). Writes n+1 face pairs:
/// left[f] / right[f] are the two one-sided states at face f (between cells
/// f-1 and f).
void reconstruct_line(std::span<const PrimState> ext, std::span<const std::uint8_t> flags,
                      std::span<PrimState> left, std::span<PrimState> right);

}  // namespace tcfv
