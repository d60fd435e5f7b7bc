#include "tcfv/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "tcfv/error.hpp"

namespace tcfv {

namespace {

constexpr double kDegToRad = 3.14159265358979323846 / 180.0;

Vec2 edge_normal(Vec2 a, Vec2 b, Vec2& scaled, double& len) {
  // Normal of edge a->b rotated so it points to the right of the edge.
  scaled = {b.y - a.y, a.x - b.x};
  len = std::sqrt(scaled.x * scaled.x + scaled.y * scaled.y);
  return {scaled.x / len, scaled.y / len};
}

}  // namespace

StructuredMesh::StructuredMesh(int nx, int ny, Field2D<Vec2> vertices)
    : nx_(nx),
      ny_(ny),
      vertices_(std::move(vertices)),
      center_(nx, ny),
      volume_(nx, ny),
      xnormal_(nx + 1, ny),
      xlen_(nx + 1, ny),
      ynormal_(nx, ny + 1),
      ylen_(nx, ny + 1) {
  if (nx < 3 || ny < 3) throw ConfigError("mesh needs at least 3 cells per direction");
  if (!vertices_.same_shape(nx + 1, ny + 1)) throw ContractError("vertex array shape mismatch");

  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      const Vec2 v00 = vertices_(i, j);
      const Vec2 v10 = vertices_(i + 1, j);
      const Vec2 v11 = vertices_(i + 1, j + 1);
      const Vec2 v01 = vertices_(i, j + 1);
      const double area =
          0.5 * (cross(v10 - v00, v11 - v00) + cross(v11 - v00, v01 - v00));
      if (!(area > 0.0))
        throw ConfigError("nonpositive cell volume at (" + std::to_string(i) + "," +
                          std::to_string(j) + ")");
      volume_(i, j) = area;
      center_(i, j) = 0.25 * (v00 + v10 + v11 + v01);
    }
  }

  Vec2 scaled;
  double len;
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i <= nx; ++i) {
      // Edge runs bottom-to-top, so the right-of-edge normal points +i.
      xnormal_(i, j) = edge_normal(vertices_(i, j), vertices_(i, j + 1), scaled, len);
      xlen_(i, j) = len;
    }
  }
  for (int j = 0; j <= ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      // Edge runs right-to-left, so the right-of-edge normal points +j.
      ynormal_(i, j) = edge_normal(vertices_(i + 1, j), vertices_(i, j), scaled, len);
      ylen_(i, j) = len;
    }
  }
}

Vec2 StructuredMesh::face_normal(int i, int j, Face f) const {
  switch (f) {
    case kWest:
      return -1.0 * xnormal_(i, j);
    case kEast:
      return xnormal_(i + 1, j);
    case kSouth:
      return -1.0 * ynormal_(i, j);
    case kNorth:
    default:
      return ynormal_(i, j + 1);
  }
}

double StructuredMesh::face_length(int i, int j, Face f) const {
  switch (f) {
    case kWest:
      return xlen_(i, j);
    case kEast:
      return xlen_(i + 1, j);
    case kSouth:
      return ylen_(i, j);
    case kNorth:
    default:
      return ylen_(i, j + 1);
  }
}

void StructuredMesh::cell_bounds(int i, int j, double& xmin, double& xmax, double& ymin,
                                 double& ymax) const {
  const Vec2 c[4] = {vertices_(i, j), vertices_(i + 1, j), vertices_(i + 1, j + 1),
                     vertices_(i, j + 1)};
  xmin = xmax = c[0].x;
  ymin = ymax = c[0].y;
  for (int k = 1; k < 4; ++k) {
    xmin = std::min(xmin, c[k].x);
    xmax = std::max(xmax, c[k].x);
    ymin = std::min(ymin, c[k].y);
    ymax = std::max(ymax, c[k].y);
  }
}

double StructuredMesh::total_area() const {
  double sum = 0.0;
  for (int j = 0; j < ny_; ++j)
    for (int i = 0; i < nx_; ++i) sum += volume_(i, j);
  return sum;
}

void StructuredMesh::dump_csv(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot open " + path);
  out << "i,j,center_x,center_y,volume\n";
  out.precision(17);
  for (int j = 0; j < ny_; ++j)
    for (int i = 0; i < nx_; ++i)
      out << i << ',' << j << ',' << center_(i, j).x << ',' << center_(i, j).y << ','
          << volume_(i, j) << '\n';
}

StructuredMesh build_uniform_mesh(double x0, double x1, double y0, double y1, int nx, int ny) {
  if (nx < 3 || ny < 3) throw ConfigError("cell counts must be >= 3");
  if (!(x1 > x0) || !(y1 > y0)) throw ConfigError("degenerate coordinate range");
  const double dx = (x1 - x0) / nx;
  const double dy = (y1 - y0) / ny;
  Field2D<Vec2> verts(nx + 1, ny + 1);
  for (int j = 0; j <= ny; ++j)
    for (int i = 0; i <= nx; ++i) verts(i, j) = {x0 + i * dx, y0 + j * dy};
  return StructuredMesh(nx, ny, std::move(verts));
}

StructuredMesh build_sheared_mesh(double x0, double x1, double y0, double y1, double shear_deg,
                                  int nx, int ny) {
  if (nx < 3 || ny < 3) throw ConfigError("cell counts must be >= 3");
  if (!(x1 > x0) || !(y1 > y0)) throw ConfigError("degenerate coordinate range");
  const double a = shear_deg * kDegToRad;
  const double s = std::sin(a);
  if (!(s > 0.0)) throw ConfigError("shear angle must lie in (0, 180)");
  const double slope = std::cos(a) / s;  // horizontal shift per unit height
  const double dx = (x1 - x0) / nx;
  const double dy = (y1 - y0) / ny;
  Field2D<Vec2> verts(nx + 1, ny + 1);
  for (int j = 0; j <= ny; ++j) {
    const double y = y0 + j * dy;
    for (int i = 0; i <= nx; ++i) verts(i, j) = {x0 + i * dx + (y - y0) * slope, y};
  }
  return StructuredMesh(nx, ny, std::move(verts));
}

StructuredMesh build_ramp_mesh(double beta_deg, double theta_deg, int nx1, int nx2, int ny,
                               double len1, double len2, double height) {
  if (!(theta_deg > 0.0 && beta_deg < 90.0 && theta_deg < beta_deg))
    throw ConfigError("ramp construction requires 0 < theta < beta < 90");
  if (nx1 < 1 || nx2 < 1 || nx1 + nx2 < 3 || ny < 3) throw ConfigError("cell counts too small");
  if (!(len1 > 0.0 && len2 > 0.0 && height > 0.0)) throw ConfigError("degenerate ramp extent");

  const double b = beta_deg * kDegToRad;
  const double t = theta_deg * kDegToRad;
  const Vec2 up = {std::cos(b), std::sin(b)};        // cross-grid direction (shock-aligned)
  const Vec2 ramp = {std::cos(t), std::sin(t)};      // ramp surface direction
  const Vec2 corner = {len1, 0.0};                   // ramp corner on the bottom wall

  const int nx = nx1 + nx2;
  const double d1 = len1 / nx1;
  const double d2 = len2 / nx2;
  const double dh = height / ny;
  Field2D<Vec2> verts(nx + 1, ny + 1);
  for (int j = 0; j <= ny; ++j) {
    const Vec2 lift = (j * dh) * up;
    for (int i = 0; i <= nx; ++i) {
      const Vec2 base =
          (i <= nx1) ? Vec2{i * d1, 0.0} : corner + (double(i - nx1) * d2) * ramp;
      verts(i, j) = base + lift;
    }
  }
  return StructuredMesh(nx, ny, std::move(verts));
}

}  // namespace tcfv
