#pragma once

#include "tcfv/mesh.hpp"
#include "tcfv/state.hpp"

namespace tcfv {

/// Jump ratios and angles across an attached oblique shock.
struct ObliqueShockSolution {
  double pressure_ratio = 0.0;   // p2/p1
  double density_ratio = 0.0;    // rho2/rho1
  double deflection_deg = 0.0;   // flow turning angle theta
  double downstream_mach = 0.0;  // M2
};

/// Rankine-Hugoniot relations for upstream Mach M1 and shock angle beta
/// (degrees, measured from the upstream flow direction). Requires a
/// supersonic normal Mach number, M1*sin(beta) > 1.
ObliqueShockSolution oblique_shock_exact(double mach1, double beta_deg);

/// Straight shock segment placed in the domain, plus the flow it separates.
struct ShockSpec {
  double mach1 = 0.0;            // upstream Mach number
  double beta_deg = 0.0;         // shock angle w.r.t. the upstream flow
  double flow_angle_deg = 0.0;   // upstream flow direction w.r.t. the grid x-axis
  Vec2 p1;                       // two points on the shock line
  Vec2 p2;

  /// Shock line angle w.r.t. the grid x-axis.
  double grid_angle_deg() const { return beta_deg + flow_angle_deg; }
};

/// Uniform upstream state: rho = p = 1, speed M1*a1 along flow_angle_deg.
PrimState upstream_state(const ShockSpec& spec);

/// Downstream state from the exact jump relations; the flow leaves at
/// flow_angle + deflection.
PrimState downstream_state(const ShockSpec& spec);

/// True when (x,y) lies on the downstream side of the (infinite) shock line.
/// Points exactly on the line classify as downstream.
bool is_downstream(const ShockSpec& spec, double x, double y);

/// Piecewise-constant exact solution: upstream/downstream state by cell
/// center side.
PrimField shock_field(const ShockSpec& spec, const StructuredMesh& mesh);

/// Ramp flow sharing the same jump relations: the downstream flow direction
/// equals the ramp surface angle theta, so the shock along the block
/// interface is stationary.
PrimField ramp_field(double mach1, double beta_deg, const StructuredMesh& mesh, Vec2 corner);

}  // namespace tcfv
