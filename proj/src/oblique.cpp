#include "tcfv/oblique.hpp"

#include <cmath>

#include "tcfv/error.hpp"

namespace tcfv {

namespace {
constexpr double kPi = 3.14159265358979323846;
inline double rad(double deg) { return deg * kPi / 180.0; }
}  // namespace

ObliqueShockSolution oblique_shock_exact(double mach1, double beta_deg) {
  const double b = rad(beta_deg);
  const double mn1 = mach1 * std::sin(b);
  if (!(mn1 > 1.0))
    throw ConfigError("no attached shock: M1*sin(beta) = " + std::to_string(mn1) + " <= 1");

  const double mn1sq = mn1 * mn1;
  ObliqueShockSolution s;
  s.pressure_ratio = 1.0 + 2.0 * kGamma / (kGamma + 1.0) * (mn1sq - 1.0);
  s.density_ratio = (kGamma + 1.0) * mn1sq / ((kGamma - 1.0) * mn1sq + 2.0);
  const double tan_theta =
      2.0 / std::tan(b) * (mn1sq - 1.0) / (mach1 * mach1 * (kGamma + std::cos(2.0 * b)) + 2.0);
  s.deflection_deg = std::atan(tan_theta) * 180.0 / kPi;
  const double mn2sq = (1.0 + 0.5 * (kGamma - 1.0) * mn1sq) / (kGamma * mn1sq - 0.5 * (kGamma - 1.0));
  s.downstream_mach = std::sqrt(mn2sq) / std::sin(b - rad(s.deflection_deg));
  return s;
}

PrimState upstream_state(const ShockSpec& spec) {
  const double a1 = std::sqrt(kGamma);  // rho1 = p1 = 1
  const double speed = spec.mach1 * a1;
  const double ang = rad(spec.flow_angle_deg);
  return {1.0, speed * std::cos(ang), speed * std::sin(ang), 1.0};
}

PrimState downstream_state(const ShockSpec& spec) {
  const ObliqueShockSolution s = oblique_shock_exact(spec.mach1, spec.beta_deg);
  const double rho2 = s.density_ratio;
  const double p2 = s.pressure_ratio;
  const double a2 = std::sqrt(kGamma * p2 / rho2);
  const double speed = s.downstream_mach * a2;
  const double ang = rad(spec.flow_angle_deg + s.deflection_deg);
  return {rho2, speed * std::cos(ang), speed * std::sin(ang), p2};
}

bool is_downstream(const ShockSpec& spec, double x, double y) {
  // Normal of the shock line chosen so that it points with the incoming
  // flow (towards the downstream side) for any orientation.
  const double phi = rad(spec.grid_angle_deg());
  const double nx = std::sin(phi);
  const double ny = -std::cos(phi);
  const double d = (x - spec.p1.x) * nx + (y - spec.p1.y) * ny;
  return d >= 0.0;
}

PrimField shock_field(const ShockSpec& spec, const StructuredMesh& mesh) {
  const PrimState up = upstream_state(spec);
  const PrimState down = downstream_state(spec);
  PrimField w(mesh.nx(), mesh.ny());
  for (int j = 0; j < mesh.ny(); ++j)
    for (int i = 0; i < mesh.nx(); ++i) {
      const Vec2 c = mesh.center(i, j);
      w(i, j) = is_downstream(spec, c.x, c.y) ? down : up;
    }
  return w;
}

PrimField ramp_field(double mach1, double beta_deg, const StructuredMesh& mesh, Vec2 corner) {
  ShockSpec spec;
  spec.mach1 = mach1;
  spec.beta_deg = beta_deg;
  spec.flow_angle_deg = 0.0;
  spec.p1 = corner;
  spec.p2 = corner + Vec2{std::cos(rad(beta_deg)), std::sin(rad(beta_deg))};
  return shock_field(spec, mesh);
}

}  // namespace tcfv
