#include "tcfv/troubled.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tcfv/error.hpp"

namespace tcfv {

double indicator_value(double rho0, double rho_w, double rho_e, double rho_s, double rho_n) {
  const double num = std::abs(rho0 - rho_w) + std::abs(rho0 - rho_e) + std::abs(rho0 - rho_s) +
                     std::abs(rho0 - rho_n);
  const double den = std::max({rho0, rho_w, rho_e, rho_s, rho_n});
  return num / den;
}

TroubleMask detect_troubled(const PrimField& w, double threshold) {
  if (!(threshold > 0.0)) throw ConfigError("indicator threshold must be positive");
  const int nx = w.nx();
  const int ny = w.ny();
  TroubleMask mask = make_mask(nx, ny, false, "K=" + std::to_string(threshold));
#pragma omp parallel for schedule(static)
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      const double r0 = w(i, j).rho;
      const double rw = i > 0 ? w(i - 1, j).rho : r0;
      const double re = i < nx - 1 ? w(i + 1, j).rho : r0;
      const double rs = j > 0 ? w(i, j - 1).rho : r0;
      const double rn = j < ny - 1 ? w(i, j + 1).rho : r0;
      if (indicator_value(r0, rw, re, rs, rn) >= threshold) mask.flag(i, j) = 1;
    }
  return mask;
}

TroubleMask label_aligned(const StructuredMesh& mesh, int shock_interface, int pre_count,
                          int post_count) {
  if (pre_count < 1 || post_count < 1) throw ConfigError("configuration counts must be >= 1");
  if (shock_interface - pre_count < 0 || shock_interface + post_count > mesh.nx())
    throw ConfigError("configuration '" + std::to_string(pre_count) +
                      std::to_string(post_count) + "' does not fit at interface " +
                      std::to_string(shock_interface));
  TroubleMask mask = make_mask(mesh.nx(), mesh.ny(), false,
                               "'" + std::to_string(pre_count) + std::to_string(post_count) + "'");
  for (int j = 0; j < mesh.ny(); ++j)
    for (int i = shock_interface - pre_count; i < shock_interface + post_count; ++i)
      mask.flag(i, j) = 1;
  return mask;
}

TroubleMask trace_line(const StructuredMesh& mesh, Vec2 p1, Vec2 p2) {
  if (p1.x == p2.x && p1.y == p2.y) throw ConfigError("trace_line needs two distinct points");
  const bool vertical = p1.x == p2.x;
  const bool horizontal = p1.y == p2.y;
  const double m = vertical ? 0.0 : (p2.y - p1.y) / (p2.x - p1.x);

  TroubleMask mask = make_mask(mesh.nx(), mesh.ny(), false, "trace");
#pragma omp parallel for schedule(static)
  for (int j = 0; j < mesh.ny(); ++j)
    for (int i = 0; i < mesh.nx(); ++i) {
      double xmin, xmax, ymin, ymax;
      mesh.cell_bounds(i, j, xmin, xmax, ymin, ymax);
      const Vec2 c = mesh.center(i, j);
      bool hit = false;
      if (!vertical) {
        const double y_line = p1.y + m * (c.x - p1.x);
        hit = y_line >= ymin && y_line <= ymax;
      }
      if (!hit && !horizontal) {
        const double x_line = vertical ? p1.x : p1.x + (c.y - p1.y) / m;
        hit = x_line >= xmin && x_line <= xmax;
      }
      if (hit) mask.flag(i, j) = 1;
    }
  return mask;
}

TroubleMask trace_parallel_lines(const StructuredMesh& mesh, Vec2 p1, Vec2 p2,
                                 double pre_shift_sign, int pre_count, int post_count, double h) {
  if (pre_count < 1 || post_count < 1) throw ConfigError("configuration counts must be >= 1");
  if (!(h > 0.0)) throw ConfigError("parallel-line offset must be positive");

  TroubleMask mask = trace_line(mesh, p1, p2);
  for (int k = 1; k <= pre_count; ++k) {
    const Vec2 d{0.0, pre_shift_sign * k * h};
    mask = mask_union(mask, trace_line(mesh, p1 + d, p2 + d));
  }
  for (int k = 1; k <= post_count; ++k) {
    const Vec2 d{0.0, -pre_shift_sign * k * h};
    mask = mask_union(mask, trace_line(mesh, p1 + d, p2 + d));
  }
  mask.provenance = "'" + std::to_string(pre_count) + std::to_string(post_count) + "' traced";
  return mask;
}

TroubleMask label_nonaligned(const StructuredMesh& mesh, const ShockSpec& spec, int pre_count,
                             int post_count, double h) {
  // The offsets are purely vertical; pick the vertical direction that lands
  // on the upstream side of the shock line.
  const double up_shift = is_downstream(spec, spec.p1.x, spec.p1.y + 1.0) ? -1.0 : 1.0;
  return trace_parallel_lines(mesh, spec.p1, spec.p2, up_shift, pre_count, post_count, h);
}

}  // namespace tcfv
