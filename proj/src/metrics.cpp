#include "tcfv/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>

#include "tcfv/error.hpp"

namespace tcfv {

void ProfileSample::dump_csv(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot open " + path);
  out << "x,rho_num,rho_exact\n";
  out.precision(17);
  for (int i = 0; i < size(); ++i)
    out << x[i] << ',' << rho_num[i] << ',' << rho_exact[i] << '\n';
}

namespace {

ProfileSample profile_from_rows(const PrimField& w, const StructuredMesh& mesh,
                                const std::vector<int>& row_of_column, const PrimField& exact) {
  ProfileSample p;
  const int nx = mesh.nx();
  p.x.reserve(nx);
  for (int i = 0; i < nx; ++i) {
    const int j = row_of_column[i];
    double xmin, xmax, ymin, ymax;
    mesh.cell_bounds(i, j, xmin, xmax, ymin, ymax);
    p.x.push_back(mesh.center(i, j).x);
    p.x_lo.push_back(xmin);
    p.x_hi.push_back(xmax);
    p.rho_num.push_back(w(i, j).rho);
    p.rho_exact.push_back(exact(i, j).rho);
  }
  for (int i = 1; i < p.size(); ++i)
    if (!(p.x[i] > p.x[i - 1])) throw ContractError("profile x not strictly increasing");
  return p;
}

}  // namespace

ProfileSample extract_profile(const PrimField& w, const StructuredMesh& mesh, double y_line,
                              const PrimField& exact) {
  const int nx = mesh.nx();
  const int ny = mesh.ny();
  std::vector<int> rows(nx, -1);
  for (int i = 0; i < nx; ++i) {
    double best = std::numeric_limits<double>::max();
    for (int j = 0; j < ny; ++j) {
      const double cy = mesh.center(i, j).y;
      if (cy > y_line && cy < best) {
        best = cy;
        rows[i] = j;
      }
    }
    if (rows[i] < 0)
      throw ConfigError("sampling line y=" + std::to_string(y_line) + " misses column " +
                        std::to_string(i));
  }
  return profile_from_rows(w, mesh, rows, exact);
}

ProfileSample extract_row_profile(const PrimField& w, const StructuredMesh& mesh, int row,
                                  const PrimField& exact) {
  if (row < 0 || row >= mesh.ny()) throw ConfigError("profile row out of range");
  return profile_from_rows(w, mesh, std::vector<int>(mesh.nx(), row), exact);
}

Norms error_norms(std::span<const double> e) {
  if (e.empty()) throw ContractError("error_norms on empty sequence");
  Norms n;
  double sum = 0.0;
  for (double v : e) {
    sum += v * v;
    n.l_inf = std::max(n.l_inf, std::abs(v));
  }
  n.l2 = std::sqrt(sum / double(e.size()));
  return n;
}

std::vector<double> density_error(const PrimField& w, const PrimField& exact) {
  if (!w.same_shape(exact.nx(), exact.ny())) throw ContractError("field shape mismatch");
  std::vector<double> e;
  e.reserve(w.size());
  for (int j = 0; j < w.ny(); ++j)
    for (int i = 0; i < w.nx(); ++i) e.push_back(exact(i, j).rho - w(i, j).rho);
  return e;
}

double total_variation(std::span<const double> e) {
  double tv = 0.0;
  for (size_t i = 1; i < e.size(); ++i) tv += std::abs(e[i] - e[i - 1]);
  return tv;
}

namespace {
inline double clamp_mu(double mu) { return mu > -1e-14 && mu < 0.0 ? 0.0 : mu; }
}  // namespace

MetricsReport monotonicity_mu(const ProfileSample& profile, double shock_x, int window) {
  const int n = profile.size();
  int shock_col = -1;
  for (int i = 0; i < n; ++i)
    if (shock_x >= profile.x_lo[i] && shock_x <= profile.x_hi[i]) shock_col = i;  // tie: keep last
  if (shock_col < 0) throw ConfigError("shock position outside the profile");
  if (shock_col - window < 0 || shock_col + window >= n)
    throw ContractError("window of " + std::to_string(window) + " needs more cells than the " +
                        std::to_string(shock_col) + "/" + std::to_string(n - shock_col - 1) +
                        " available around the shock column");

  std::vector<double> pre, post;
  for (int i = shock_col - window; i < shock_col; ++i)
    pre.push_back(profile.rho_exact[i] - profile.rho_num[i]);
  for (int i = shock_col + 1; i <= shock_col + window; ++i)
    post.push_back(profile.rho_exact[i] - profile.rho_num[i]);

  MetricsReport r;
  r.window = window;
  r.norms_pre = error_norms(pre);
  r.norms_post = error_norms(post);
  r.tv_pre = total_variation(pre);
  r.tv_post = total_variation(post);
  r.mu_pre = clamp_mu(r.tv_pre - r.norms_pre.l_inf);
  r.mu_post = clamp_mu(r.tv_post - r.norms_post.l_inf);

  std::vector<double> both = pre;
  both.insert(both.end(), post.begin(), post.end());
  r.norms_overall.l2 = error_norms(both).l2;
  r.norms_overall.l_inf = r.norms_pre.l_inf + r.norms_post.l_inf;
  r.tv_overall = r.tv_pre + r.tv_post;
  r.mu_overall = clamp_mu(r.tv_overall - r.norms_overall.l_inf);
  return r;
}

double order_of_accuracy(double norm_h1, double norm_h2, double h1, double h2) {
  if (!(norm_h1 > 0.0) || !(norm_h2 > 0.0) || !(h1 > 0.0) || !(h2 > 0.0))
    throw ContractError("order_of_accuracy needs positive inputs");
  if (h1 == h2) throw ContractError("order_of_accuracy needs distinct spacings");
  return std::log(norm_h1 / norm_h2) / std::log(h1 / h2);
}

}  // namespace tcfv
