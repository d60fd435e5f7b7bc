// Timing comparison of the parallel residual kernel against the serial
// reference assembly, plus the implicit/explicit step costs.

#include <omp.h>

#include <cstdio>
#include <vector>

#include "tcfv/marching.hpp"
#include "tcfv/oblique.hpp"
#include "tcfv/residual.hpp"
#include "tcfv/troubled.hpp"

using namespace tcfv;

namespace {

double time_of(int reps, const auto& fn) {
  fn();  // warm up
  const double t0 = omp_get_wtime();
  for (int r = 0; r < reps; ++r) fn();
  return (omp_get_wtime() - t0) / reps;
}

void bench_grid(int n) {
  StructuredMesh mesh = build_uniform_mesh(0.0, 1.0, 0.0, 1.0, n, n);
  ShockSpec spec{3.0, 30.0, 60.0, {0.5, 0.0}, {0.5, 1.0}};
  PrimField w = shock_field(spec, mesh);
  TroubleMask mask = label_aligned(mesh, n / 2, 3, 3);
  BoundaryClosure bc;
  bc.edge[kWest] = bc.edge[kSouth] = EdgeKind::kInflowExact;
  bc.exact_state = [spec](double x, double y, double) {
    return is_downstream(spec, x, y) ? downstream_state(spec) : upstream_state(spec);
  };

  ResidualWorkspace ws;
  ResidualField r_par(n, n), r_ser(n, n);
  const int reps = n <= 200 ? 20 : 5;

  const double t_par = time_of(reps, [&] {
    assemble_residual(mesh, w, mask, FluxScheme::kAusmPlus, SpatialOrder::kMuscl, bc, ws, r_par);
  });
  const double t_ser = time_of(reps, [&] {
    ref::assemble_residual(mesh, w, mask, FluxScheme::kAusmPlus, SpatialOrder::kMuscl, bc, r_ser);
  });

  Marcher marcher(mesh, MarchSettings{});
  PrimField w2 = w;
  const double t_step = time_of(reps, [&] { w2 = w; marcher.lusgs_step(w2, mask, bc); });

  std::printf("%6dx%-6d %12.4f %12.4f %8.2fx %12.4f\n", n, n, 1e3 * t_par, 1e3 * t_ser,
              t_ser / t_par, 1e3 * t_step);
}

}  // namespace

int main(int argc, char** argv) {
  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%13s %12s %12s %9s %12s\n", "grid", "omp [ms]", "serial [ms]", "speedup",
              "lusgs [ms]");
  std::vector<int> sizes = {100, 200, 400};
  if (argc > 1) {
    sizes.clear();
    for (int i = 1; i < argc; ++i) sizes.push_back(std::atoi(argv[i]));
  }
  for (int n : sizes) bench_grid(n);
  return 0;
}
