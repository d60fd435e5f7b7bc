#pragma once

#include <array>
#include <string>

#include "tcfv/field.hpp"

namespace tcfv {

/// Cell face slots, fixed ordering used throughout flux assembly.
enum Face : int { kWest = 0, kEast = 1, kSouth = 2, kNorth = 3 };

/// Structured quadrilateral mesh of nx*ny cells.
///
/// Geometry is stored once per face: x-faces (between (i-1,j) and (i,j))
/// carry a unit normal oriented towards +i, y-faces towards +j. Per-cell
/// outward normals are these shared vectors with the sign flipped on the
/// west/south sides, so interior faces are shared exactly.
class StructuredMesh {
 public:
  StructuredMesh(int nx, int ny, Field2D<Vec2> vertices);

  int nx() const { return nx_; }
  int ny() const { return ny_; }
  int cell_count() const { return nx_ * ny_; }

  const Vec2& vertex(int i, int j) const { return vertices_(i, j); }
  const Vec2& center(int i, int j) const { return center_(i, j); }
  double volume(int i, int j) const { return volume_(i, j); }

  /// Shared-face geometry. x-face (i,j): i in [0,nx], j in [0,ny).
  const Vec2& xface_normal(int i, int j) const { return xnormal_(i, j); }
  double xface_length(int i, int j) const { return xlen_(i, j); }
  /// y-face (i,j): i in [0,nx), j in [0,ny].
  const Vec2& yface_normal(int i, int j) const { return ynormal_(i, j); }
  double yface_length(int i, int j) const { return ylen_(i, j); }

  /// Outward unit normal and face length of one face of cell (i,j).
  Vec2 face_normal(int i, int j, Face f) const;
  double face_length(int i, int j, Face f) const;

  /// Axis-aligned bounding box of the cell's corner points.
  void cell_bounds(int i, int j, double& xmin, double& xmax, double& ymin, double& ymax) const;

  double total_area() const;

  /// One row per cell: i, j, center_x, center_y, volume.
  void dump_csv(const std::string& path) const;

 private:
  int nx_;
  int ny_;
  Field2D<Vec2> vertices_;  // (nx+1) x (ny+1)
  Field2D<Vec2> center_;
  Field2D<double> volume_;
  Field2D<Vec2> xnormal_;
  Field2D<double> xlen_;
  Field2D<Vec2> ynormal_;
  Field2D<double> ylen_;
};

/// Axis-aligned uniform mesh on [x0,x1] x [y0,y1].
StructuredMesh build_uniform_mesh(double x0, double x1, double y0, double y1, int nx, int ny);

/// Uniform mesh whose "vertical" grid lines are inclined at shear_deg to the
/// x-axis: vertex rows are shifted along (cos, sin)(shear_deg). Bottom and top
/// boundaries stay horizontal.
StructuredMesh build_sheared_mesh(double x0, double x1, double y0, double y1, double shear_deg,
                                  int nx, int ny);

/// Two-block ramp mesh. Block 1 spans len1 along the x-axis with its
/// cross-grid lines inclined at beta_deg; block 2 spans len2 along the ramp
/// surface (inclined at theta_deg) with the same cross-grid inclination, so
/// the block interface is a grid line at beta_deg through the ramp corner.
/// height is the extent of the cross-grid lines (measured along them).
StructuredMesh build_ramp_mesh(double beta_deg, double theta_deg, int nx1, int nx2, int ny,
                               double len1 = 1.0, double len2 = 1.0, double height = 1.0);

}  // namespace tcfv
