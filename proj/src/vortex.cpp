#include "tcfv/vortex.hpp"

#include <cmath>

namespace tcfv {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kUInf = 1.0;
constexpr double kVInf = 0.0;

inline double wrap_offset(double d) {
  // Nearest periodic image on a box of width 10.
  const double width = kVortexDomainHi - kVortexDomainLo;
  return d - width * std::round(d / width);
}
}  // namespace

PrimState isentropic_vortex_state(double x, double y, double t) {
  const double dx = wrap_offset(x - kUInf * t);
  const double dy = wrap_offset(y - kVInf * t);
  const double r2 = dx * dx + dy * dy;
  const double beta = kVortexStrength;

  const double gauss = std::exp(0.5 * (1.0 - r2));
  const double du = -beta / (2.0 * kPi) * gauss * dy;
  const double dv = beta / (2.0 * kPi) * gauss * dx;
  const double dT = -(kGamma - 1.0) * beta * beta / (8.0 * kGamma * kPi * kPi) * gauss * gauss;

  const double T = 1.0 + dT;
  PrimState w;
  w.rho = std::pow(T, 1.0 / (kGamma - 1.0));
  w.u = kUInf + du;
  w.v = kVInf + dv;
  w.p = std::pow(T, kGamma / (kGamma - 1.0));
  return w;
}

PrimField vortex_field(const StructuredMesh& mesh, double t) {
  PrimField w(mesh.nx(), mesh.ny());
  for (int j = 0; j < mesh.ny(); ++j)
    for (int i = 0; i < mesh.nx(); ++i) {
      const Vec2 c = mesh.center(i, j);
      w(i, j) = isentropic_vortex_state(c.x, c.y, t);
    }
  return w;
}

}  // namespace tcfv
