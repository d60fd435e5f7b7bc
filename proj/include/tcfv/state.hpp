#pragma once

#include <cmath>

#include "tcfv/error.hpp"
#include "tcfv/field.hpp"

namespace tcfv {

/// Ratio of specific heats for a calorically perfect diatomic gas.
inline constexpr double kGamma = 1.4;

/// Cell-average conserved variables (rho, rho*u, rho*v, rho*E).
struct ConsState {
  double rho = 0.0;
  double rho_u = 0.0;
  double rho_v = 0.0;
  double rho_E = 0.0;
};

/// Primitive variables (rho, u, v, p).
struct PrimState {
  double rho = 0.0;
  double u = 0.0;
  double v = 0.0;
  double p = 0.0;
};

inline double pressure_of(const ConsState& q) {
  const double ke = 0.5 * (q.rho_u * q.rho_u + q.rho_v * q.rho_v) / q.rho;
  return (kGamma - 1.0) * (q.rho_E - ke);
}

inline bool valid(const PrimState& w) {
  return w.rho > 0.0 && w.p > 0.0 && std::isfinite(w.rho) && std::isfinite(w.u) &&
         std::isfinite(w.v) && std::isfinite(w.p);
}

inline double sound_speed(const PrimState& w) { return std::sqrt(kGamma * w.p / w.rho); }

/// Specific total enthalpy H = E + p/rho.
inline double total_enthalpy(const PrimState& w) {
  return kGamma * w.p / ((kGamma - 1.0) * w.rho) + 0.5 * (w.u * w.u + w.v * w.v);
}

inline ConsState prim_to_cons(const PrimState& w) {
  if (w.rho <= 0.0 || w.p <= 0.0) throw InvalidStateError(w.rho, w.p, "prim_to_cons");
  const double E = w.p / ((kGamma - 1.0) * w.rho) + 0.5 * (w.u * w.u + w.v * w.v);
  return {w.rho, w.rho * w.u, w.rho * w.v, w.rho * E};
}

inline PrimState cons_to_prim(const ConsState& q) {
  if (q.rho <= 0.0) throw InvalidStateError(q.rho, 0.0, "cons_to_prim");
  const double u = q.rho_u / q.rho;
  const double v = q.rho_v / q.rho;
  const double p = (kGamma - 1.0) * (q.rho_E - 0.5 * q.rho * (u * u + v * v));
  if (p <= 0.0) throw InvalidStateError(q.rho, p, "cons_to_prim");
  return {q.rho, u, v, p};
}

/// Non-throwing variant for inner solver loops; returns false on a bad state.
inline bool try_cons_to_prim(const ConsState& q, PrimState& w) {
  if (!(q.rho > 0.0) || !std::isfinite(q.rho)) return false;
  w.rho = q.rho;
  w.u = q.rho_u / q.rho;
  w.v = q.rho_v / q.rho;
  w.p = (kGamma - 1.0) * (q.rho_E - 0.5 * q.rho * (w.u * w.u + w.v * w.v));
  return w.p > 0.0 && std::isfinite(w.p);
}

using PrimField = Field2D<PrimState>;
using ConsField = Field2D<ConsState>;

}  // namespace tcfv
