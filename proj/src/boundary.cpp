#include "tcfv/boundary.hpp"

#include "tcfv/error.hpp"

namespace tcfv {

namespace {

PrimState mirror_across(const PrimState& w, Vec2 n) {
  const double un = w.u * n.x + w.v * n.y;
  return {w.rho, w.u - 2.0 * un * n.x, w.v - 2.0 * un * n.y, w.p};
}

}  // namespace

bool BoundaryClosure::periodic_x() const {
  if ((edge[kWest] == EdgeKind::kPeriodic) != (edge[kEast] == EdgeKind::kPeriodic))
    throw ConfigError("periodic boundaries must pair up in x");
  return edge[kWest] == EdgeKind::kPeriodic;
}

bool BoundaryClosure::periodic_y() const {
  if ((edge[kSouth] == EdgeKind::kPeriodic) != (edge[kNorth] == EdgeKind::kPeriodic))
    throw ConfigError("periodic boundaries must pair up in y");
  return edge[kSouth] == EdgeKind::kPeriodic;
}

GhostPair ghost_states(const StructuredMesh& mesh, const PrimField& w, const BoundaryClosure& bc,
                       Face edge, int line) {
  const int nx = mesh.nx();
  const int ny = mesh.ny();
  const bool x_edge = (edge == kWest || edge == kEast);
  const EdgeKind kind = bc.edge[edge];

  // First and second interior cells counted inward from this edge.
  int i0, j0, i1, j1;
  switch (edge) {
    case kWest:
      i0 = 0, j0 = line, i1 = 1, j1 = line;
      break;
    case kEast:
      i0 = nx - 1, j0 = line, i1 = nx - 2, j1 = line;
      break;
    case kSouth:
      i0 = line, j0 = 0, i1 = line, j1 = 1;
      break;
    case kNorth:
    default:
      i0 = line, j0 = ny - 1, i1 = line, j1 = ny - 2;
      break;
  }

  EdgeKind effective = kind;
  if (kind == EdgeKind::kInflowThenWall)
    effective = mesh.center(i0, j0).x >= bc.wall_start_x ? EdgeKind::kSlipWall
                                                         : EdgeKind::kInflowExact;

  switch (effective) {
    case EdgeKind::kOutflow:
      return {w(i0, j0), w(i0, j0)};
    case EdgeKind::kPeriodic: {
      if (x_edge) {
        const int a = edge == kWest ? nx - 1 : 0;
        const int b = edge == kWest ? nx - 2 : 1;
        return {w(a, line), w(b, line)};
      }
      const int a = edge == kSouth ? ny - 1 : 0;
      const int b = edge == kSouth ? ny - 2 : 1;
      return {w(line, a), w(line, b)};
    }
    case EdgeKind::kSlipWall: {
      const Vec2 n = mesh.face_normal(i0, j0, edge);
      return {mirror_across(w(i0, j0), n), mirror_across(w(i1, j1), n)};
    }
    case EdgeKind::kInflowExact:
    default: {
      if (!bc.exact_state) throw ConfigError("inflow edge without an exact-state function");
      const Vec2 c0 = mesh.center(i0, j0);
      const Vec2 d = mesh.center(i1, j1) - c0;  // inward step
      const Vec2 g1 = c0 - d;
      const Vec2 g2 = c0 - 2.0 * d;
      return {bc.exact_state(g1.x, g1.y, bc.time), bc.exact_state(g2.x, g2.y, bc.time)};
    }
  }
}

}  // namespace tcfv
