#pragma once

#include <functional>

#include "tcfv/mesh.hpp"
#include "tcfv/state.hpp"

namespace tcfv {

enum class EdgeKind {
  kInflowExact,    // ghost = prescribed analytic state at the ghost position
  kOutflow,        // zero-gradient extrapolation
  kPeriodic,       // wrap-around
  kSlipWall,       // mirror normal velocity, copy the rest
  kInflowThenWall  // inflow left of wall_start_x, slip wall to the right
};

/// Ghost-state synthesis for the four domain edges. Edges are indexed with
/// the Face enum (west, east, south, north). Inflow edges sample
/// exact_state(x, y, time) at extrapolated ghost-cell centers.
struct BoundaryClosure {
  EdgeKind edge[4] = {EdgeKind::kOutflow, EdgeKind::kOutflow, EdgeKind::kOutflow,
                      EdgeKind::kOutflow};
  std::function<PrimState(double, double, double)> exact_state;
  double time = 0.0;
  double wall_start_x = 0.0;

  bool periodic_x() const;
  bool periodic_y() const;
};

struct GhostPair {
  PrimState inner;  // layer adjacent to the boundary
  PrimState outer;  // second layer
};

/// Ghosts beyond the west/east end of grid row j, or beyond the south/north
/// end of grid column i (pass the in-line index as `line`).
GhostPair ghost_states(const StructuredMesh& mesh, const PrimField& w, const BoundaryClosure& bc,
                       Face edge, int line);

}  // namespace tcfv
