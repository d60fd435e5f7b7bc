#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tcfv/marching.hpp"
#include "tcfv/metrics.hpp"
#include "tcfv/oblique.hpp"
#include "tcfv/troubled.hpp"

namespace tcfv {

enum class CaseKind {
  kAlignedOblique,
  kNonalignedOblique,
  kAlignedRamp,
  kVortex,
  kDmrAligned,
  kDmrNonaligned
};

enum class LimitingMode { kNone, kEverywhere, kConfig, kIndicator };

struct RunConfig {
  CaseKind kind = CaseKind::kAlignedOblique;
  std::string grid = "coarse";  // coarse | medium | fine, unless nx/ny given
  int nx = 0;
  int ny = 0;
  double mach = 3.0;
  double beta = 30.0;
  std::optional<double> flow_angle;  // non-aligned oblique only
  LimitingMode limiting = LimitingMode::kConfig;
  int config_pre = 3;
  int config_post = 3;
  double threshold = 0.05;
  FluxScheme bootstrap_flux = FluxScheme::kLaxFriedrichs;
  std::optional<double> cfl;  // defaults: 1.0 steady, 0.3 unsteady
  int max_iters = 15000;
  double tol = 1e-14;
  double end_time = 0.0;  // defaults: 20 vortex, 0.2 dmr
  std::string out_dir = "out";
  double anchor_x = 0.5;    // non-aligned shock foot on the bottom boundary
  double ramp_len1 = 1.0;   // ramp block extents and cross-grid height
  double ramp_len2 = 1.0;
  double ramp_height = 1.0;

  std::string case_label() const;
  std::string config_label() const;
};

/// key = value file, '#' comments, unknown keys rejected.
RunConfig parse_config_file(const std::string& path);
RunConfig parse_config_text(const std::string& text, const std::string& origin = "<string>");

/// Everything marching needs, assembled per the case definition.
struct CaseSetup {
  StructuredMesh mesh;
  PrimField initial;
  PrimField exact;
  TroubleMask mask;
  BoundaryClosure bc;
  MarchSettings march;
  bool steady = true;
  bool indicator_per_step = false;  // unsteady indicator refresh
  double end_time = 0.0;
  double threshold = 0.0;
  std::optional<TroubleMask> first_step_extra;  // unioned into the first unsteady mask
  double profile_y = 0.5;
  int profile_row = -1;  // >= 0: sample this row instead of a y-line
  double shock_x = 0.0;
  bool has_profile = true;
};

/// Builds mesh, fields, mask and closures. Indicator-mode steady cases run
/// the first-order bootstrap here: the converged first-order solution
/// becomes the initial field and feeds the detector.
CaseSetup build_case(const RunConfig& cfg);

struct RunOutput {
  bool converged = false;
  int iterations = 0;
  std::optional<MetricsReport> metrics;  // profile cases
  std::optional<Norms> field_norms;      // vortex: full-field error norms
  std::string case_label;
  std::string config_label;
};

/// build_case + march + metrics + CSV artifacts in cfg.out_dir.
RunOutput run_case(const RunConfig& cfg);

struct SweepRow {
  RunConfig cfg;
  RunOutput output;
  std::string error;  // empty on success
};

/// Runs every *.cfg in the directory (sorted by name) and writes one
/// aggregate CSV; individual failures are recorded per row.
std::vector<SweepRow> sweep(const std::string& config_dir, const std::string& out_dir);

}  // namespace tcfv
