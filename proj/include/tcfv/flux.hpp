#pragma once

#include <array>

#include "tcfv/field.hpp"
#include "tcfv/state.hpp"

namespace tcfv {

/// Flux of (mass, x-momentum, y-momentum, energy) through a face, per unit
/// face length.
using FaceFlux = std::array<double, 4>;

enum class FluxScheme { kAusmPlus, kLaxFriedrichs };

/// Exact convective flux H(Q) . n for a single state.
FaceFlux physical_flux(const PrimState& w, Vec2 n);

/// AUSM+ flux with fourth-degree split Mach polynomials (beta = 1/8),
/// fifth-degree split pressures (alpha = 3/16) and the critical-speed common
/// sound speed a = min(aL^*^2/max(aL^*,|unL|), aR^*^2/max(aR^*,|unR|)).
FaceFlux ausm_plus(const PrimState& wl, const PrimState& wr, Vec2 n);

/// Local Lax-Friedrichs (Rusanov) flux with lambda = max over both states of
/// |un| + a.
FaceFlux lax_friedrichs(const PrimState& wl, const PrimState& wr, Vec2 n);

FaceFlux numerical_flux(FluxScheme scheme, const PrimState& wl, const PrimState& wr, Vec2 n);

}  // namespace tcfv
