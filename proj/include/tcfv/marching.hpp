#pragma once

#include <functional>
#include <vector>

#include "tcfv/residual.hpp"

namespace tcfv {

struct MarchSettings {
  double cfl = 1.0;
  int max_iterations = 15000;
  double convergence_tol = 1e-14;
  FluxScheme flux = FluxScheme::kAusmPlus;
  SpatialOrder order = SpatialOrder::kMuscl;
};

/// Scratch state shared by the implicit and explicit integrators.
class Marcher {
 public:
  Marcher(const StructuredMesh& mesh, MarchSettings settings);

  /// One implicit step: assembles the residual, runs the forward/backward
  /// matrix-free sweeps with a pointwise time step cfl*vol/wavesum, applies
  /// the update. Returns the residual norm of the state it started from.
  double lusgs_step(PrimField& w, const TroubleMask& mask, const BoundaryClosure& bc);

  /// One three-stage TVD Runge-Kutta step with the given global dt. t is the
  /// time at the start of the step; time-dependent closures are sampled at
  /// the stage times.
  void tvd_rk3_step(PrimField& w, const TroubleMask& mask, const BoundaryClosure& bc, double dt,
                    double t = 0.0);

  /// Largest stable global time step, cfl * min_i(vol_i / wavesum_i).
  double stable_dt(const PrimField& w) const;

  const MarchSettings& settings() const { return settings_; }
  const ResidualField& last_residual() const { return residual_; }

 private:
  void eval_residual(const PrimField& w, const TroubleMask& mask, const BoundaryClosure& bc);

  const StructuredMesh& mesh_;
  MarchSettings settings_;
  ResidualWorkspace ws_;
  ResidualField residual_;
  Field2D<Vec4> dq_;
  Field2D<double> diag_;
  ConsField cons_;
  PrimField stage_;
  int iteration_ = 0;
};

using IterationCallback = std::function<void(int iteration, double rn)>;

struct SteadyResult {
  PrimField field{0, 0};
  std::vector<double> rn_history;
  bool converged = false;
  int iterations = 0;
};

/// Iterates lusgs_step until RN < tol or the iteration budget runs out. The
/// norm is recorded before each update, so rn_history[0] is the residual of
/// the initial field.
SteadyResult march_to_steady(const StructuredMesh& mesh, PrimField initial,
                             const TroubleMask& mask, const BoundaryClosure& bc,
                             const MarchSettings& settings, const IterationCallback& sink = {});

/// Advances with TVD-RK3 at the settings' cfl up to t_end. When remask is
/// set it is called at the start of every step to refresh the trouble mask.
using RemaskCallback = std::function<void(const PrimField& w, double t, TroubleMask& mask)>;

PrimField advance_unsteady(const StructuredMesh& mesh, PrimField initial, TroubleMask mask,
                           BoundaryClosure bc, const MarchSettings& settings, double t_end,
                           const RemaskCallback& remask = {},
                           const IterationCallback& sink = {});

}  // namespace tcfv
