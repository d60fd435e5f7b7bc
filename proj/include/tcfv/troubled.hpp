#pragma once

#include "tcfv/mask.hpp"
#include "tcfv/mesh.hpp"
#include "tcfv/oblique.hpp"
#include "tcfv/state.hpp"

namespace tcfv {

/// Discontinuity indicator for a cell and its four edge neighbors:
/// sum_j |rho0 - rhoj| / max over the five averages.
double indicator_value(double rho0, double rho_w, double rho_e, double rho_s, double rho_n);

/// Flags every cell whose indicator meets the threshold. Missing neighbors
/// at the domain boundary are replaced by the cell's own value.
TroubleMask detect_troubled(const PrimField& w, double threshold);

/// Aligned-shock labeling: the shock lies on the x-face with index
/// shock_interface; flags pre_count whole columns upstream (left) of it and
/// post_count columns downstream.
TroubleMask label_aligned(const StructuredMesh& mesh, int shock_interface, int pre_count,
                          int post_count);

/// Flags every cell for which the line through p1-p2 passes the
/// center-row/center-column membership test: the line's x at the cell-center
/// y falls within the cell's x-bounds, or its y at the cell-center x falls
/// within the y-bounds (closed intervals). Vertical/horizontal lines use
/// only the test that is defined.
TroubleMask trace_line(const StructuredMesh& mesh, Vec2 p1, Vec2 p2);

/// Traces the line p1-p2 plus pre_count parallels offset vertically by
/// pre_shift_sign * k * h and post_count offset the other way.
TroubleMask trace_parallel_lines(const StructuredMesh& mesh, Vec2 p1, Vec2 p2,
                                 double pre_shift_sign, int pre_count, int post_count, double h);

/// Non-aligned labeling: traces the shock line plus pre_count parallel lines
/// offset vertically into the upstream side and post_count into the
/// downstream side, with spacing h per line.
TroubleMask label_nonaligned(const StructuredMesh& mesh, const ShockSpec& spec, int pre_count,
                             int post_count, double h);

}  // namespace tcfv
