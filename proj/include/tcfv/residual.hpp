#pragma once

#include <array>
#include <vector>

#include "tcfv/boundary.hpp"
#include "tcfv/flux.hpp"
#include "tcfv/mask.hpp"
#include "tcfv/mesh.hpp"
#include "tcfv/state.hpp"

namespace tcfv {

using Vec4 = std::array<double, 4>;
using ResidualField = Field2D<Vec4>;

enum class SpatialOrder { kFirst, kMuscl };

/// Reusable buffers for assemble_residual: one flux slot per face plus
/// per-thread line scratch.
class ResidualWorkspace {
 public:
  void ensure(const StructuredMesh& mesh);

  Field2D<Vec4> xflux;  // (nx+1) x ny, oriented +i, already scaled by face length
  Field2D<Vec4> yflux;  // nx x (ny+1), oriented +j, already scaled by face length

  struct LineBuffers {
    std::vector<PrimState> ext;
    std::vector<PrimState> left;
    std::vector<PrimState> right;
    std::vector<std::uint8_t> flags;
  };
  LineBuffers& line_buffers(int thread, int n);

 private:
  std::vector<LineBuffers> lines_;
};

/// Finite-volume residual R_i = sum_f H_f . n_f s_f. Every interior face
/// flux is computed once; cells flagged in the mask reconstruct with the
/// limiter, others without. Parallel over grid lines and cells.
void assemble_residual(const StructuredMesh& mesh, const PrimField& w, const TroubleMask& mask,
                       FluxScheme scheme, SpatialOrder order, const BoundaryClosure& bc,
                       ResidualWorkspace& ws, ResidualField& out);

/// Volume-weighted root-sum-square of all residual components.
double residual_norm(const ResidualField& r, const StructuredMesh& mesh);

/// sum_f (|u_n| + a) s_f evaluated from the cell's own state; the local time
/// step is cfl * volume / this.
double cell_wave_speed_sum(const StructuredMesh& mesh, const PrimField& w, int i, int j);

namespace ref {
/// Plain serial assembly, one cell at a time, kept as the reference the
/// parallel kernel is checked against.
void assemble_residual(const StructuredMesh& mesh, const PrimField& w, const TroubleMask& mask,
                       FluxScheme scheme, SpatialOrder order, const BoundaryClosure& bc,
                       ResidualField& out);
}  // namespace ref

}  // namespace tcfv
