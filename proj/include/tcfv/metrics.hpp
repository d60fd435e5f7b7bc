#pragma once

#include <span>
#include <string>
#include <vector>

#include "tcfv/mesh.hpp"
#include "tcfv/state.hpp"

namespace tcfv {

/// Density samples along a line crossing the shock, one per cell column,
/// ordered by strictly increasing x.
struct ProfileSample {
  std::vector<double> x;
  std::vector<double> x_lo;  // cell extent, used to locate the shock column
  std::vector<double> x_hi;
  std::vector<double> rho_num;
  std::vector<double> rho_exact;

  int size() const { return int(x.size()); }
  void dump_csv(const std::string& path) const;
};

/// One sample per column: the cell whose center sits just above y_line.
ProfileSample extract_profile(const PrimField& w, const StructuredMesh& mesh, double y_line,
                              const PrimField& exact);

/// One sample per column from a fixed grid row; used for sheared meshes
/// where a horizontal line would leave the domain.
ProfileSample extract_row_profile(const PrimField& w, const StructuredMesh& mesh, int row,
                                  const PrimField& exact);

struct Norms {
  double l2 = 0.0;
  double l_inf = 0.0;
};

/// L2 = sqrt(mean(e^2)), Linf = max |e|.
Norms error_norms(std::span<const double> e);

/// Full-field density error rho_exact - rho_num flattened to one sequence.
std::vector<double> density_error(const PrimField& w, const PrimField& exact);

double total_variation(std::span<const double> e);

/// TV, Linf and mu = TV - Linf of the density error over fixed windows
/// around the shock. overall sums the pre- and post-shock values.
struct MetricsReport {
  int window = 0;
  Norms norms_pre, norms_post, norms_overall;
  double tv_pre = 0.0, tv_post = 0.0, tv_overall = 0.0;
  double mu_pre = 0.0, mu_post = 0.0, mu_overall = 0.0;
};

/// The shock column is the sample whose cell extent contains shock_x (the
/// downstream one on a tie); the windows take `window` cells strictly on
/// each side of it. mu is clamped at zero within 1e-14.
MetricsReport monotonicity_mu(const ProfileSample& profile, double shock_x, int window = 20);

/// n = ln(norm1/norm2) / ln(h1/h2).
double order_of_accuracy(double norm_h1, double norm_h2, double h1, double h2);

}  // namespace tcfv
