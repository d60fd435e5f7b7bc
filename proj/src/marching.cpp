#include "tcfv/marching.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tcfv/error.hpp"

namespace tcfv {

namespace {

// Physical flux difference H(q + dq).n - H(q).n, the matrix-free
// Jacobian-vector product. Density and pressure are floored inside the
// linearization so a rough transient cannot abort a sweep; the converged
// answer depends only on the assembled residual.
inline Vec4 flux_jump(const PrimState& w, const Vec4& dq, Vec2 n) {
  const ConsState q0 = prim_to_cons(w);
  const double rho = std::max(q0.rho + dq[0], 1e-12);
  const double mu = q0.rho_u + dq[1];
  const double mv = q0.rho_v + dq[2];
  const double e = q0.rho_E + dq[3];
  const double u = mu / rho;
  const double v = mv / rho;
  const double p = std::max((kGamma - 1.0) * (e - 0.5 * rho * (u * u + v * v)), 1e-12);
  const double un = u * n.x + v * n.y;
  const FaceFlux h0 = physical_flux(w, n);
  return {rho * un - h0[0], rho * un * u + p * n.x - h0[1], rho * un * v + p * n.y - h0[2],
          un * (e + p) - h0[3]};
}

inline double spectral_radius(const PrimState& w, Vec2 n) {
  return std::abs(w.u * n.x + w.v * n.y) + sound_speed(w);
}

}  // namespace

Marcher::Marcher(const StructuredMesh& mesh, MarchSettings settings)
    : mesh_(mesh),
      settings_(settings),
      residual_(mesh.nx(), mesh.ny()),
      dq_(mesh.nx(), mesh.ny()),
      diag_(mesh.nx(), mesh.ny()),
      cons_(mesh.nx(), mesh.ny()),
      stage_(mesh.nx(), mesh.ny()) {
  if (!(settings_.cfl > 0.0)) throw ConfigError("cfl must be positive");
  if (!(settings_.convergence_tol > 0.0)) throw ConfigError("tolerance must be positive");
}

void Marcher::eval_residual(const PrimField& w, const TroubleMask& mask,
                            const BoundaryClosure& bc) {
  assemble_residual(mesh_, w, mask, settings_.flux, settings_.order, bc, ws_, residual_);
}

double Marcher::lusgs_step(PrimField& w, const TroubleMask& mask, const BoundaryClosure& bc) {
  const int nx = mesh_.nx();
  const int ny = mesh_.ny();
  ++iteration_;

  eval_residual(w, mask, bc);
  const double rn = residual_norm(residual_, mesh_);
  if (rn < settings_.convergence_tol) return rn;  // already at the fixed point

#pragma omp parallel for schedule(static)
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      const double wave = cell_wave_speed_sum(mesh_, w, i, j);
      // vol/dt + half the wave-speed sum, from the A +/- splitting; the
      // convective part of the diagonal cancels over the closed cell.
      diag_(i, j) = wave / settings_.cfl + 0.5 * wave;
    }

  // Off-diagonal contribution of an already-swept neighbor nb, with n the
  // outward normal of the current cell on the shared face:
  //   0.5 * (dH(Q_nb) . n - rho_nb * dQ_nb) * s, moved to the RHS.
  auto neighbor_term = [&](int nbi, int nbj, Vec2 n, double s, Vec4& rhs) {
    const double rad = spectral_radius(w(nbi, nbj), n);
    const Vec4 dh = flux_jump(w(nbi, nbj), dq_(nbi, nbj), n);
    for (int c = 0; c < 4; ++c) rhs[c] -= 0.5 * (dh[c] - rad * dq_(nbi, nbj)[c]) * s;
  };

  // Forward sweep, lexicographic order; lower neighbors are (i-1,j), (i,j-1).
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      Vec4 rhs = {-residual_(i, j)[0], -residual_(i, j)[1], -residual_(i, j)[2],
                  -residual_(i, j)[3]};
      if (i > 0)
        neighbor_term(i - 1, j, -1.0 * mesh_.xface_normal(i, j), mesh_.xface_length(i, j), rhs);
      if (j > 0)
        neighbor_term(i, j - 1, -1.0 * mesh_.yface_normal(i, j), mesh_.yface_length(i, j), rhs);
      for (int c = 0; c < 4; ++c) dq_(i, j)[c] = rhs[c] / diag_(i, j);
    }

  // Backward sweep; upper neighbors are (i+1,j), (i,j+1), now final.
  for (int j = ny - 1; j >= 0; --j)
    for (int i = nx - 1; i >= 0; --i) {
      Vec4 rhs = {0.0, 0.0, 0.0, 0.0};
      if (i < nx - 1)
        neighbor_term(i + 1, j, mesh_.xface_normal(i + 1, j), mesh_.xface_length(i + 1, j), rhs);
      if (j < ny - 1)
        neighbor_term(i, j + 1, mesh_.yface_normal(i, j + 1), mesh_.yface_length(i, j + 1), rhs);
      for (int c = 0; c < 4; ++c) dq_(i, j)[c] += rhs[c] / diag_(i, j);
    }

  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      ConsState q = prim_to_cons(w(i, j));
      q.rho += dq_(i, j)[0];
      q.rho_u += dq_(i, j)[1];
      q.rho_v += dq_(i, j)[2];
      q.rho_E += dq_(i, j)[3];
      if (!try_cons_to_prim(q, w(i, j))) throw DivergedError(iteration_, i, j);
    }
  return rn;
}

void Marcher::tvd_rk3_step(PrimField& w, const TroubleMask& mask, const BoundaryClosure& bc,
                           double dt, double t) {
  const int nx = mesh_.nx();
  const int ny = mesh_.ny();
  ++iteration_;
  BoundaryClosure stage_bc = bc;

  auto explicit_stage = [&](const PrimField& in, double stage_time, double a_old, double a_in,
                            PrimField& out) {
    stage_bc.time = stage_time;
    eval_residual(in, mask, stage_bc);
    bool ok = true;
#pragma omp parallel for schedule(static) reduction(&& : ok)
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i < nx; ++i) {
        const ConsState qo = cons_(i, j);
        const ConsState qi = prim_to_cons(in(i, j));
        const double f = dt / mesh_.volume(i, j);
        ConsState q;
        q.rho = a_old * qo.rho + a_in * (qi.rho - f * residual_(i, j)[0]);
        q.rho_u = a_old * qo.rho_u + a_in * (qi.rho_u - f * residual_(i, j)[1]);
        q.rho_v = a_old * qo.rho_v + a_in * (qi.rho_v - f * residual_(i, j)[2]);
        q.rho_E = a_old * qo.rho_E + a_in * (qi.rho_E - f * residual_(i, j)[3]);
        ok = try_cons_to_prim(q, out(i, j)) && ok;
      }
    if (!ok) throw DivergedError(iteration_, -1, -1);
  };

  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) cons_(i, j) = prim_to_cons(w(i, j));

  explicit_stage(w, t, 0.0, 1.0, stage_);                    // q1 = q + dt L(q)
  explicit_stage(stage_, t + dt, 0.75, 0.25, stage_);        // q2 = 3/4 q + 1/4 (q1 + dt L(q1))
  explicit_stage(stage_, t + 0.5 * dt, 1.0 / 3.0, 2.0 / 3.0, w);
}

double Marcher::stable_dt(const PrimField& w) const {
  double dt = std::numeric_limits<double>::max();
  for (int j = 0; j < mesh_.ny(); ++j)
    for (int i = 0; i < mesh_.nx(); ++i)
      dt = std::min(dt, mesh_.volume(i, j) / cell_wave_speed_sum(mesh_, w, i, j));
  return settings_.cfl * dt;
}

SteadyResult march_to_steady(const StructuredMesh& mesh, PrimField initial,
                             const TroubleMask& mask, const BoundaryClosure& bc,
                             const MarchSettings& settings, const IterationCallback& sink) {
  Marcher marcher(mesh, settings);
  SteadyResult result;
  result.field = std::move(initial);
  result.rn_history.reserve(settings.max_iterations);
  for (int iter = 1; iter <= settings.max_iterations; ++iter) {
    const double rn = marcher.lusgs_step(result.field, mask, bc);
    result.rn_history.push_back(rn);
    result.iterations = iter;
    if (sink) sink(iter, rn);
    if (rn < settings.convergence_tol) {
      result.converged = true;
      break;
    }
  }
  return result;
}

PrimField advance_unsteady(const StructuredMesh& mesh, PrimField initial, TroubleMask mask,
                           BoundaryClosure bc, const MarchSettings& settings, double t_end,
                           const RemaskCallback& remask, const IterationCallback& sink) {
  Marcher marcher(mesh, settings);
  PrimField w = std::move(initial);
  double t = 0.0;
  int step = 0;
  while (t < t_end) {
    if (remask) remask(w, t, mask);
    const double dt = std::min(marcher.stable_dt(w), t_end - t);
    bc.time = t;
    marcher.tvd_rk3_step(w, mask, bc, dt, t);
    t += dt;
    ++step;
    if (sink) sink(step, t);
  }
  return w;
}

}  // namespace tcfv
