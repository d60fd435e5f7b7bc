#pragma once

#include "tcfv/mesh.hpp"
#include "tcfv/state.hpp"

namespace tcfv {

/// Isentropic vortex of strength 5 centered at the origin, advecting with
/// freestream (rho, u, v, p) = (1, 1, 0, 1) on the periodic box [-5,5]^2.
/// The perturbation is the standard exponential one: the temperature deficit
/// scales with exp(1 - r^2), which keeps the entropy p/rho^gamma uniform.
PrimState isentropic_vortex_state(double x, double y, double t);

/// Exact solution sampled at cell centers at time t.
PrimField vortex_field(const StructuredMesh& mesh, double t);

inline constexpr double kVortexStrength = 5.0;
inline constexpr double kVortexDomainLo = -5.0;
inline constexpr double kVortexDomainHi = 5.0;

}  // namespace tcfv
