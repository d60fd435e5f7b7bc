#include "tcfv/flux.hpp"

#include <algorithm>
#include <cmath>

#include "tcfv/error.hpp"

namespace tcfv {

namespace {

constexpr double kMachBeta = 1.0 / 8.0;
constexpr double kPressureAlpha = 3.0 / 16.0;

inline double split_mach_plus(double m) {
  if (std::abs(m) >= 1.0) return 0.5 * (m + std::abs(m));
  const double q = m * m - 1.0;
  return 0.25 * (m + 1.0) * (m + 1.0) + kMachBeta * q * q;
}

inline double split_mach_minus(double m) {
  if (std::abs(m) >= 1.0) return 0.5 * (m - std::abs(m));
  const double q = m * m - 1.0;
  return -0.25 * (m - 1.0) * (m - 1.0) - kMachBeta * q * q;
}

inline double split_pressure_plus(double m) {
  if (std::abs(m) >= 1.0) return m > 0.0 ? 1.0 : 0.0;
  const double q = m * m - 1.0;
  return 0.25 * (m + 1.0) * (m + 1.0) * (2.0 - m) + kPressureAlpha * m * q * q;
}

inline double split_pressure_minus(double m) {
  if (std::abs(m) >= 1.0) return m < 0.0 ? 1.0 : 0.0;
  const double q = m * m - 1.0;
  return 0.25 * (m - 1.0) * (m - 1.0) * (2.0 + m) - kPressureAlpha * m * q * q;
}

// Numerical sound speed scaled by the critical speed so that the split
// functions see the right supersonic branches.
inline double face_sound_speed(const PrimState& w, double un) {
  const double h = total_enthalpy(w);
  const double a_crit2 = 2.0 * (kGamma - 1.0) / (kGamma + 1.0) * h;
  const double a_crit = std::sqrt(a_crit2);
  return a_crit2 / std::max(a_crit, std::abs(un));
}

inline void check(const PrimState& w, const char* who) {
  if (!valid(w)) throw InvalidStateError(w.rho, w.p, who);
}

}  // namespace

FaceFlux physical_flux(const PrimState& w, Vec2 n) {
  const double un = w.u * n.x + w.v * n.y;
  const double rho_un = w.rho * un;
  return {rho_un, rho_un * w.u + w.p * n.x, rho_un * w.v + w.p * n.y,
          rho_un * total_enthalpy(w)};
}

FaceFlux ausm_plus(const PrimState& wl, const PrimState& wr, Vec2 n) {
  check(wl, "ausm_plus left");
  check(wr, "ausm_plus right");

  const double unl = wl.u * n.x + wl.v * n.y;
  const double unr = wr.u * n.x + wr.v * n.y;
  const double a = std::min(face_sound_speed(wl, unl), face_sound_speed(wr, unr));

  const double ml = unl / a;
  const double mr = unr / a;
  const double m_face = split_mach_plus(ml) + split_mach_minus(mr);
  const double p_face = split_pressure_plus(ml) * wl.p + split_pressure_minus(mr) * wr.p;

  const PrimState& up = m_face >= 0.0 ? wl : wr;
  const double mass = a * m_face * up.rho;
  return {mass, mass * up.u + p_face * n.x, mass * up.v + p_face * n.y,
          mass * total_enthalpy(up)};
}

FaceFlux lax_friedrichs(const PrimState& wl, const PrimState& wr, Vec2 n) {
  check(wl, "lax_friedrichs left");
  check(wr, "lax_friedrichs right");

  const double unl = wl.u * n.x + wl.v * n.y;
  const double unr = wr.u * n.x + wr.v * n.y;
  const double lambda =
      std::max(std::abs(unl) + sound_speed(wl), std::abs(unr) + sound_speed(wr));

  const FaceFlux hl = physical_flux(wl, n);
  const FaceFlux hr = physical_flux(wr, n);
  const ConsState ql = prim_to_cons(wl);
  const ConsState qr = prim_to_cons(wr);
  return {0.5 * (hl[0] + hr[0]) - 0.5 * lambda * (qr.rho - ql.rho),
          0.5 * (hl[1] + hr[1]) - 0.5 * lambda * (qr.rho_u - ql.rho_u),
          0.5 * (hl[2] + hr[2]) - 0.5 * lambda * (qr.rho_v - ql.rho_v),
          0.5 * (hl[3] + hr[3]) - 0.5 * lambda * (qr.rho_E - ql.rho_E)};
}

FaceFlux numerical_flux(FluxScheme scheme, const PrimState& wl, const PrimState& wr, Vec2 n) {
  return scheme == FluxScheme::kAusmPlus ? ausm_plus(wl, wr, n) : lax_friedrichs(wl, wr, n);
}

}  // namespace tcfv
