#include "tcfv/residual.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>

#include "tcfv/error.hpp"
#include "tcfv/recon.hpp"

namespace tcfv {

namespace {

inline Vec4 scaled_flux(FluxScheme scheme, const PrimState& wl, const PrimState& wr, Vec2 n,
                        double s) {
  const FaceFlux f = numerical_flux(scheme, wl, wr, n);
  return {f[0] * s, f[1] * s, f[2] * s, f[3] * s};
}

}  // namespace

void ResidualWorkspace::ensure(const StructuredMesh& mesh) {
  if (!xflux.same_shape(mesh.nx() + 1, mesh.ny())) {
    xflux = Field2D<Vec4>(mesh.nx() + 1, mesh.ny());
    yflux = Field2D<Vec4>(mesh.nx(), mesh.ny() + 1);
  }
  lines_.resize(omp_get_max_threads());
}

ResidualWorkspace::LineBuffers& ResidualWorkspace::line_buffers(int thread, int n) {
  LineBuffers& b = lines_[thread];
  if (int(b.ext.size()) < n + 4) {
    b.ext.resize(n + 4);
    b.left.resize(n + 1);
    b.right.resize(n + 1);
    b.flags.resize(n + 2);
  }
  return b;
}

void assemble_residual(const StructuredMesh& mesh, const PrimField& w, const TroubleMask& mask,
                       FluxScheme scheme, SpatialOrder order, const BoundaryClosure& bc,
                       ResidualWorkspace& ws, ResidualField& out) {
  const int nx = mesh.nx();
  const int ny = mesh.ny();
  if (!w.same_shape(nx, ny) || !mask.flag.same_shape(nx, ny))
    throw ContractError("field/mask shape does not match mesh");
  if (!out.same_shape(nx, ny)) out = ResidualField(nx, ny);
  ws.ensure(mesh);

  const bool muscl = order == SpatialOrder::kMuscl;
  const bool wrap_x = bc.periodic_x();
  const bool wrap_y = bc.periodic_y();

  // x-direction faces, one grid row at a time.
#pragma omp parallel for schedule(static)
  for (int j = 0; j < ny; ++j) {
    auto& buf = ws.line_buffers(omp_get_thread_num(), nx);
    const GhostPair gw = ghost_states(mesh, w, bc, kWest, j);
    const GhostPair ge = ghost_states(mesh, w, bc, kEast, j);
    buf.ext[0] = gw.outer;
    buf.ext[1] = gw.inner;
    for (int i = 0; i < nx; ++i) buf.ext[2 + i] = w(i, j);
    buf.ext[nx + 2] = ge.inner;
    buf.ext[nx + 3] = ge.outer;

    if (muscl) {
      // Ghost flags wrap with the states under periodic closure, otherwise
      // they replicate the edge cell.
      buf.flags[0] = wrap_x ? mask.flag(nx - 1, j) : mask.flag(0, j);
      for (int i = 0; i < nx; ++i) buf.flags[1 + i] = mask.flag(i, j);
      buf.flags[nx + 1] = wrap_x ? mask.flag(0, j) : mask.flag(nx - 1, j);
      reconstruct_line({buf.ext.data(), size_t(nx + 4)}, {buf.flags.data(), size_t(nx + 2)},
                       {buf.left.data(), size_t(nx + 1)}, {buf.right.data(), size_t(nx + 1)});
    } else {
      for (int f = 0; f <= nx; ++f) {
        buf.left[f] = buf.ext[f + 1];
        buf.right[f] = buf.ext[f + 2];
      }
    }
    for (int f = 0; f <= nx; ++f)
      ws.xflux(f, j) = scaled_flux(scheme, buf.left[f], buf.right[f], mesh.xface_normal(f, j),
                                   mesh.xface_length(f, j));
  }

  // y-direction faces, one grid column at a time.
#pragma omp parallel for schedule(static)
  for (int i = 0; i < nx; ++i) {
    auto& buf = ws.line_buffers(omp_get_thread_num(), ny);
    const GhostPair gs = ghost_states(mesh, w, bc, kSouth, i);
    const GhostPair gn = ghost_states(mesh, w, bc, kNorth, i);
    buf.ext[0] = gs.outer;
    buf.ext[1] = gs.inner;
    for (int j = 0; j < ny; ++j) buf.ext[2 + j] = w(i, j);
    buf.ext[ny + 2] = gn.inner;
    buf.ext[ny + 3] = gn.outer;

    if (muscl) {
      buf.flags[0] = wrap_y ? mask.flag(i, ny - 1) : mask.flag(i, 0);
      for (int j = 0; j < ny; ++j) buf.flags[1 + j] = mask.flag(i, j);
      buf.flags[ny + 1] = wrap_y ? mask.flag(i, 0) : mask.flag(i, ny - 1);
      reconstruct_line({buf.ext.data(), size_t(ny + 4)}, {buf.flags.data(), size_t(ny + 2)},
                       {buf.left.data(), size_t(ny + 1)}, {buf.right.data(), size_t(ny + 1)});
    } else {
      for (int f = 0; f <= ny; ++f) {
        buf.left[f] = buf.ext[f + 1];
        buf.right[f] = buf.ext[f + 2];
      }
    }
    for (int f = 0; f <= ny; ++f)
      ws.yflux(i, f) = scaled_flux(scheme, buf.left[f], buf.right[f], mesh.yface_normal(i, f),
                                   mesh.yface_length(i, f));
  }

#pragma omp parallel for schedule(static)
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i)
      for (int c = 0; c < 4; ++c)
        out(i, j)[c] = (ws.xflux(i + 1, j)[c] - ws.xflux(i, j)[c]) +
                       (ws.yflux(i, j + 1)[c] - ws.yflux(i, j)[c]);
}

double residual_norm(const ResidualField& r, const StructuredMesh& mesh) {
  double sum = 0.0;
  for (int j = 0; j < mesh.ny(); ++j)
    for (int i = 0; i < mesh.nx(); ++i) {
      const double vol = mesh.volume(i, j);
      for (int c = 0; c < 4; ++c) sum += r(i, j)[c] * r(i, j)[c] * vol;
    }
  return std::sqrt(sum);
}

double cell_wave_speed_sum(const StructuredMesh& mesh, const PrimField& w, int i, int j) {
  const PrimState& s = w(i, j);
  const double a = sound_speed(s);
  double sum = 0.0;
  for (int f = 0; f < 4; ++f) {
    const Vec2 n = mesh.face_normal(i, j, Face(f));
    sum += (std::abs(s.u * n.x + s.v * n.y) + a) * mesh.face_length(i, j, Face(f));
  }
  return sum;
}

namespace ref {

void assemble_residual(const StructuredMesh& mesh, const PrimField& w, const TroubleMask& mask,
                       FluxScheme scheme, SpatialOrder order, const BoundaryClosure& bc,
                       ResidualField& out) {
  const int nx = mesh.nx();
  const int ny = mesh.ny();
  if (!out.same_shape(nx, ny)) out = ResidualField(nx, ny);
  const bool muscl = order == SpatialOrder::kMuscl;

  // State of cell (i,j) allowing two cells beyond the domain.
  auto cell = [&](int i, int j) -> PrimState {
    if (i < 0) {
      const GhostPair g = ghost_states(mesh, w, bc, kWest, j);
      return i == -1 ? g.inner : g.outer;
    }
    if (i >= nx) {
      const GhostPair g = ghost_states(mesh, w, bc, kEast, j);
      return i == nx ? g.inner : g.outer;
    }
    if (j < 0) {
      const GhostPair g = ghost_states(mesh, w, bc, kSouth, i);
      return j == -1 ? g.inner : g.outer;
    }
    if (j >= ny) {
      const GhostPair g = ghost_states(mesh, w, bc, kNorth, i);
      return j == ny ? g.inner : g.outer;
    }
    return w(i, j);
  };
  const bool wrap_x = bc.periodic_x();
  const bool wrap_y = bc.periodic_y();
  auto flagged = [&](int i, int j) {
    if (wrap_x) i = (i % nx + nx) % nx;
    if (wrap_y) j = (j % ny + ny) % ny;
    return mask.flag(std::clamp(i, 0, nx - 1), std::clamp(j, 0, ny - 1)) != 0;
  };

  // One-sided states at an x-face f of row j (between cells f-1 and f).
  auto xface_states = [&](int f, int j, PrimState& l, PrimState& r) {
    if (!muscl) {
      l = cell(f - 1, j);
      r = cell(f, j);
      return;
    }
    l = muscl_faces(cell(f - 2, j), cell(f - 1, j), cell(f, j), flagged(f - 1, j)).left_at_plus;
    r = muscl_faces(cell(f - 1, j), cell(f, j), cell(f + 1, j), flagged(f, j)).right_at_minus;
  };
  auto yface_states = [&](int i, int f, PrimState& l, PrimState& r) {
    if (!muscl) {
      l = cell(i, f - 1);
      r = cell(i, f);
      return;
    }
    l = muscl_faces(cell(i, f - 2), cell(i, f - 1), cell(i, f), flagged(i, f - 1)).left_at_plus;
    r = muscl_faces(cell(i, f - 1), cell(i, f), cell(i, f + 1), flagged(i, f)).right_at_minus;
  };

  PrimState l, r;
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      xface_states(i, j, l, r);
      const Vec4 west = scaled_flux(scheme, l, r, mesh.xface_normal(i, j), mesh.xface_length(i, j));
      xface_states(i + 1, j, l, r);
      const Vec4 east =
          scaled_flux(scheme, l, r, mesh.xface_normal(i + 1, j), mesh.xface_length(i + 1, j));
      yface_states(i, j, l, r);
      const Vec4 south = scaled_flux(scheme, l, r, mesh.yface_normal(i, j), mesh.yface_length(i, j));
      yface_states(i, j + 1, l, r);
      const Vec4 north =
          scaled_flux(scheme, l, r, mesh.yface_normal(i, j + 1), mesh.yface_length(i, j + 1));
      for (int c = 0; c < 4; ++c)
        out(i, j)[c] = (east[c] - west[c]) + (north[c] - south[c]);
    }
}

}  // namespace ref

}  // namespace tcfv
