#include "tcfv/cases.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "tcfv/error.hpp"
#include "tcfv/vortex.hpp"

namespace tcfv {

namespace {

constexpr double kPi = 3.14159265358979323846;
inline double rad(double deg) { return deg * kPi / 180.0; }

std::string kind_name(CaseKind k) {
  switch (k) {
    case CaseKind::kAlignedOblique:
      return "aligned-oblique";
    case CaseKind::kNonalignedOblique:
      return "nonaligned-oblique";
    case CaseKind::kAlignedRamp:
      return "aligned-ramp";
    case CaseKind::kVortex:
      return "isentropic-vortex";
    case CaseKind::kDmrAligned:
      return "dmr-aligned";
    case CaseKind::kDmrNonaligned:
    default:
      return "dmr-nonaligned";
  }
}

CaseKind kind_from(const std::string& s) {
  if (s == "aligned-oblique") return CaseKind::kAlignedOblique;
  if (s == "nonaligned-oblique") return CaseKind::kNonalignedOblique;
  if (s == "aligned-ramp") return CaseKind::kAlignedRamp;
  if (s == "isentropic-vortex") return CaseKind::kVortex;
  if (s == "dmr-aligned") return CaseKind::kDmrAligned;
  if (s == "dmr-nonaligned") return CaseKind::kDmrNonaligned;
  throw ConfigError("unknown case '" + s + "'");
}

int tier_cells(const std::string& grid) {
  if (grid == "coarse") return 100;
  if (grid == "medium") return 200;
  if (grid == "fine") return 400;
  throw ConfigError("unknown grid tier '" + grid + "'");
}


}  // namespace

std::string RunConfig::case_label() const { return kind_name(kind); }

std::string RunConfig::config_label() const {
  switch (limiting) {
    case LimitingMode::kNone:
      return "none";
    case LimitingMode::kEverywhere:
      return "everywhere";
    case LimitingMode::kIndicator: {
      std::ostringstream s;
      s << "K=" << threshold;
      return s.str();
    }
    case LimitingMode::kConfig:
    default:
      return "'" + std::to_string(config_pre) + std::to_string(config_post) + "'";
  }
}

RunConfig parse_config_text(const std::string& text, const std::string& origin) {
  RunConfig cfg;
  std::set<std::string> seen;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw ConfigError(origin + ":" + std::to_string(lineno) + ": " + msg);
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail("expected key = value");

    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      const auto b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) fail("empty key or value");
    if (!seen.insert(key).second) fail("duplicate key '" + key + "'");

    auto as_double = [&](const std::string& v) {
      size_t pos = 0;
      double d = 0;
      try {
        d = std::stod(v, &pos);
      } catch (const std::exception&) {
        fail("bad number '" + v + "'");
      }
      if (pos != v.size()) fail("bad number '" + v + "'");
      return d;
    };
    auto as_int = [&](const std::string& v) {
      const double d = as_double(v);
      if (d != std::floor(d)) fail("expected integer, got '" + v + "'");
      return int(d);
    };

    if (key == "case")
      cfg.kind = kind_from(value);
    else if (key == "grid")
      cfg.grid = value;
    else if (key == "nx")
      cfg.nx = as_int(value);
    else if (key == "ny")
      cfg.ny = as_int(value);
    else if (key == "mach")
      cfg.mach = as_double(value);
    else if (key == "beta")
      cfg.beta = as_double(value);
    else if (key == "flow_angle")
      cfg.flow_angle = as_double(value);
    else if (key == "limiting") {
      if (value == "none")
        cfg.limiting = LimitingMode::kNone;
      else if (value == "everywhere")
        cfg.limiting = LimitingMode::kEverywhere;
      else if (value == "config")
        cfg.limiting = LimitingMode::kConfig;
      else if (value == "indicator")
        cfg.limiting = LimitingMode::kIndicator;
      else
        fail("unknown limiting mode '" + value + "'");
    } else if (key == "config") {
      if (value.size() != 2 || !isdigit(value[0]) || !isdigit(value[1]))
        fail("config must be two digits, e.g. 33");
      cfg.config_pre = value[0] - '0';
      cfg.config_post = value[1] - '0';
    } else if (key == "threshold")
      cfg.threshold = as_double(value);
    else if (key == "bootstrap_flux") {
      if (value == "lax-friedrichs")
        cfg.bootstrap_flux = FluxScheme::kLaxFriedrichs;
      else if (value == "ausm-plus")
        cfg.bootstrap_flux = FluxScheme::kAusmPlus;
      else
        fail("unknown bootstrap flux '" + value + "'");
    } else if (key == "cfl")
      cfg.cfl = as_double(value);
    else if (key == "max_iters")
      cfg.max_iters = as_int(value);
    else if (key == "tol")
      cfg.tol = as_double(value);
    else if (key == "end_time")
      cfg.end_time = as_double(value);
    else if (key == "out_dir")
      cfg.out_dir = value;
    else if (key == "anchor_x")
      cfg.anchor_x = as_double(value);
    else if (key == "ramp_len1")
      cfg.ramp_len1 = as_double(value);
    else if (key == "ramp_len2")
      cfg.ramp_len2 = as_double(value);
    else if (key == "ramp_height")
      cfg.ramp_height = as_double(value);
    else
      fail("unknown key '" + key + "'");
  }

  // Case-specific completeness checks.
  if (cfg.kind == CaseKind::kVortex) {
    for (const char* k : {"mach", "beta", "flow_angle", "config", "threshold", "anchor_x"})
      if (seen.count(k))
        throw ConfigError(origin + ": key '" + std::string(k) + "' does not apply to the vortex case");
    if (!seen.count("limiting")) cfg.limiting = LimitingMode::kNone;
  }
  if (cfg.kind != CaseKind::kNonalignedOblique && seen.count("flow_angle"))
    throw ConfigError(origin + ": flow_angle only applies to nonaligned-oblique");
  if (cfg.kind != CaseKind::kAlignedRamp)
    for (const char* k : {"ramp_len1", "ramp_len2", "ramp_height"})
      if (seen.count(k))
        throw ConfigError(origin + ": key '" + std::string(k) + "' only applies to aligned-ramp");
  if ((cfg.nx == 0) != (cfg.ny == 0))
    throw ConfigError(origin + ": nx and ny must be given together");
  return cfg;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str(), path);
}

namespace {

MarchSettings march_settings(const RunConfig& cfg, bool steady) {
  MarchSettings m;
  m.cfl = cfg.cfl.value_or(steady ? 1.0 : 0.3);
  m.max_iterations = cfg.max_iters;
  m.convergence_tol = cfg.tol;
  m.flux = FluxScheme::kAusmPlus;
  m.order = SpatialOrder::kMuscl;
  return m;
}

/// Converged first-order solve used to seed indicator-driven runs.
PrimField first_order_bootstrap(const StructuredMesh& mesh, const PrimField& initial,
                                const BoundaryClosure& bc, const RunConfig& cfg) {
  MarchSettings m = march_settings(cfg, true);
  m.order = SpatialOrder::kFirst;
  m.flux = cfg.bootstrap_flux;
  TroubleMask none = make_mask(mesh.nx(), mesh.ny(), false, "first-order");
  SteadyResult r = march_to_steady(mesh, initial, none, bc, m);
  return std::move(r.field);
}

TroubleMask steady_mask(const RunConfig& cfg, const StructuredMesh& mesh,
                        const TroubleMask& config_mask, const PrimField& bootstrap) {
  switch (cfg.limiting) {
    case LimitingMode::kNone:
      return make_mask(mesh.nx(), mesh.ny(), false, "none");
    case LimitingMode::kEverywhere:
      return make_mask(mesh.nx(), mesh.ny(), true, "everywhere");
    case LimitingMode::kIndicator:
      return detect_troubled(bootstrap, cfg.threshold);
    case LimitingMode::kConfig:
    default:
      return config_mask;
  }
}

CaseSetup build_aligned_oblique(const RunConfig& cfg) {
  const int n = cfg.nx > 0 ? cfg.nx : tier_cells(cfg.grid);
  const int ny = cfg.ny > 0 ? cfg.ny : n;
  StructuredMesh mesh = build_uniform_mesh(0.0, 1.0, 0.0, 1.0, n, ny);
  const int interface = n / 2;
  const double shock_x = double(interface) / n;

  ShockSpec spec;
  spec.mach1 = cfg.mach;
  spec.beta_deg = cfg.beta;
  spec.flow_angle_deg = 90.0 - cfg.beta;  // vertical shock line
  spec.p1 = {shock_x, 0.0};
  spec.p2 = {shock_x, 1.0};

  PrimField exact = shock_field(spec, mesh);
  BoundaryClosure bc;
  bc.edge[kWest] = EdgeKind::kInflowExact;
  bc.edge[kSouth] = EdgeKind::kInflowExact;
  bc.edge[kEast] = EdgeKind::kOutflow;
  bc.edge[kNorth] = EdgeKind::kOutflow;
  bc.exact_state = [spec](double x, double y, double) {
    return is_downstream(spec, x, y) ? downstream_state(spec) : upstream_state(spec);
  };

  TroubleMask config_mask =
      cfg.limiting == LimitingMode::kConfig
          ? label_aligned(mesh, interface, cfg.config_pre, cfg.config_post)
          : make_mask(n, ny, false, "unused");

  PrimField initial = exact;
  if (cfg.limiting == LimitingMode::kIndicator)
    initial = first_order_bootstrap(mesh, exact, bc, cfg);

  TroubleMask mask = steady_mask(cfg, mesh, config_mask, initial);
  CaseSetup setup{std::move(mesh), std::move(initial),          std::move(exact),
                  std::move(mask), std::move(bc),               march_settings(cfg, true),
                  true,            false,                       0.0,
                  cfg.threshold,   std::nullopt,                0.5,
                  -1,              shock_x,                     true};
  return setup;
}

CaseSetup build_nonaligned_oblique(const RunConfig& cfg) {
  int nx = cfg.nx, ny = cfg.ny;
  if (nx == 0) {
    ny = tier_cells(cfg.grid);
    nx = 4 * ny;
  }
  StructuredMesh mesh = build_uniform_mesh(0.0, 4.0, 0.0, 1.0, nx, ny);
  const double h = 1.0 / ny;  // square cells

  ShockSpec spec;
  spec.mach1 = cfg.mach;
  spec.beta_deg = cfg.beta;
  spec.flow_angle_deg = cfg.flow_angle.value_or(0.0);
  const double grid_angle = spec.grid_angle_deg();
  if (!(grid_angle > 0.0 && grid_angle < 90.0))
    throw ConfigError("shock line angle w.r.t. grid must lie in (0, 90)");
  spec.p1 = {cfg.anchor_x, 0.0};
  spec.p2 = {cfg.anchor_x + std::cos(rad(grid_angle)), std::sin(rad(grid_angle))};

  PrimField exact = shock_field(spec, mesh);
  BoundaryClosure bc;
  bc.edge[kWest] = EdgeKind::kInflowExact;
  bc.edge[kSouth] = EdgeKind::kInflowExact;
  bc.edge[kNorth] = EdgeKind::kInflowExact;
  bc.edge[kEast] = EdgeKind::kOutflow;
  bc.exact_state = [spec](double x, double y, double) {
    return is_downstream(spec, x, y) ? downstream_state(spec) : upstream_state(spec);
  };

  TroubleMask config_mask =
      cfg.limiting == LimitingMode::kConfig
          ? label_nonaligned(mesh, spec, cfg.config_pre, cfg.config_post, h)
          : make_mask(nx, ny, false, "unused");

  PrimField initial = exact;
  if (cfg.limiting == LimitingMode::kIndicator)
    initial = first_order_bootstrap(mesh, exact, bc, cfg);

  TroubleMask mask = steady_mask(cfg, mesh, config_mask, initial);
  const double shock_x = cfg.anchor_x + 0.5 / std::tan(rad(grid_angle));
  CaseSetup setup{std::move(mesh), std::move(initial),          std::move(exact),
                  std::move(mask), std::move(bc),               march_settings(cfg, true),
                  true,            false,                       0.0,
                  cfg.threshold,   std::nullopt,                0.5,
                  -1,              shock_x,                     true};
  return setup;
}

CaseSetup build_aligned_ramp(const RunConfig& cfg) {
  const int n = cfg.nx > 0 ? cfg.nx : tier_cells(cfg.grid);
  const int ny = cfg.ny > 0 ? cfg.ny : n;
  const double theta = oblique_shock_exact(cfg.mach, cfg.beta).deflection_deg;
  StructuredMesh mesh = build_ramp_mesh(cfg.beta, theta, n, n, ny, cfg.ramp_len1, cfg.ramp_len2,
                                        cfg.ramp_height);
  const Vec2 corner{cfg.ramp_len1, 0.0};
  PrimField exact = ramp_field(cfg.mach, cfg.beta, mesh, corner);

  ShockSpec spec;
  spec.mach1 = cfg.mach;
  spec.beta_deg = cfg.beta;
  spec.flow_angle_deg = 0.0;
  spec.p1 = corner;
  spec.p2 = corner + Vec2{std::cos(rad(cfg.beta)), std::sin(rad(cfg.beta))};

  BoundaryClosure bc;
  bc.edge[kWest] = EdgeKind::kInflowExact;
  bc.edge[kSouth] = EdgeKind::kSlipWall;
  bc.edge[kNorth] = EdgeKind::kInflowExact;
  bc.edge[kEast] = EdgeKind::kOutflow;
  bc.exact_state = [spec](double x, double y, double) {
    return is_downstream(spec, x, y) ? downstream_state(spec) : upstream_state(spec);
  };

  TroubleMask config_mask = cfg.limiting == LimitingMode::kConfig
                                ? label_aligned(mesh, n, cfg.config_pre, cfg.config_post)
                                : make_mask(2 * n, ny, false, "unused");

  PrimField initial = exact;
  if (cfg.limiting == LimitingMode::kIndicator)
    initial = first_order_bootstrap(mesh, exact, bc, cfg);

  // Shock crossing of the mid row, used to center the metric windows.
  const int row = ny / 2;
  const double dh = cfg.ramp_height / ny;
  const double shock_x = cfg.ramp_len1 + (row + 0.5) * dh * std::cos(rad(cfg.beta));

  TroubleMask mask = steady_mask(cfg, mesh, config_mask, initial);
  CaseSetup setup{std::move(mesh), std::move(initial),          std::move(exact),
                  std::move(mask), std::move(bc),               march_settings(cfg, true),
                  true,            false,                       0.0,
                  cfg.threshold,   std::nullopt,                0.0,
                  row,             shock_x,                     true};
  return setup;
}

CaseSetup build_vortex(const RunConfig& cfg) {
  const int n = cfg.nx > 0 ? cfg.nx : tier_cells(cfg.grid);
  const int ny = cfg.ny > 0 ? cfg.ny : n;
  StructuredMesh mesh =
      build_uniform_mesh(kVortexDomainLo, kVortexDomainHi, kVortexDomainLo, kVortexDomainHi, n, ny);
  const double t_end = cfg.end_time > 0.0 ? cfg.end_time : 20.0;
  PrimField initial = vortex_field(mesh, 0.0);
  PrimField exact = vortex_field(mesh, t_end);

  BoundaryClosure bc;
  for (int e = 0; e < 4; ++e) bc.edge[e] = EdgeKind::kPeriodic;

  TroubleMask mask = make_mask(n, ny, cfg.limiting == LimitingMode::kEverywhere, "vortex");
  CaseSetup setup{std::move(mesh), std::move(initial),           std::move(exact),
                  std::move(mask), std::move(bc),                march_settings(cfg, false),
                  false,           false,                        t_end,
                  cfg.threshold,   std::nullopt,                 0.0,
                  -1,              0.0,                          false};
  return setup;
}

CaseSetup build_dmr(const RunConfig& cfg, bool aligned) {
  int nx = cfg.nx, ny = cfg.ny;
  if (nx == 0) {
    ny = tier_cells(cfg.grid);
    nx = 4 * ny;
  }
  const double shock_deg = 60.0;
  const double dx = 4.0 / nx;
  // Snap the shock foot to a grid line so the aligned variant really is.
  const double x0 = aligned ? std::round((1.0 / 6.0) / dx) * dx : 1.0 / 6.0;
  StructuredMesh mesh = aligned ? build_sheared_mesh(0.0, 4.0, 0.0, 1.0, shock_deg, nx, ny)
                                : build_uniform_mesh(0.0, 4.0, 0.0, 1.0, nx, ny);

  const PrimState pre{1.4, 0.0, 0.0, 1.0};
  const double spd = 8.25;
  const PrimState post{8.0, spd * std::sin(rad(shock_deg)), -spd * std::cos(rad(shock_deg)),
                       116.5};
  const double inv_tan = 1.0 / std::tan(rad(shock_deg));
  const double shock_speed_x = 20.0 / std::sqrt(3.0);
  auto exact = [=](double x, double y, double t) {
    return x < x0 + y * inv_tan + shock_speed_x * t ? post : pre;
  };

  PrimField initial(nx, ny);
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      const Vec2 c = mesh.center(i, j);
      initial(i, j) = exact(c.x, c.y, 0.0);
    }

  BoundaryClosure bc;
  bc.edge[kWest] = EdgeKind::kInflowExact;
  bc.edge[kEast] = EdgeKind::kOutflow;
  bc.edge[kSouth] = EdgeKind::kInflowThenWall;
  bc.edge[kNorth] = EdgeKind::kInflowExact;
  bc.wall_start_x = x0;
  bc.exact_state = exact;

  // First-step labeling around the initial shock; afterwards the indicator
  // re-detects every step.
  TroubleMask extra = aligned ? label_aligned(mesh, int(std::round(x0 / dx)), 3, 3)
                              : trace_parallel_lines(mesh, {x0, 0.0},
                                                     {x0 + inv_tan, 1.0}, -1.0, 4, 4, 1.0 / ny);
  TroubleMask mask = cfg.limiting == LimitingMode::kEverywhere
                         ? make_mask(nx, ny, true, "everywhere")
                         : make_mask(nx, ny, false, "indicator");
  const bool per_step = cfg.limiting != LimitingMode::kEverywhere;

  const double t_end = cfg.end_time > 0.0 ? cfg.end_time : 0.2;
  CaseSetup setup{std::move(mesh),  std::move(initial),           PrimField(nx, ny),
                  std::move(mask),  std::move(bc),                march_settings(cfg, false),
                  false,            per_step,                     t_end,
                  cfg.threshold,    std::move(extra),             0.0,
                  -1,               0.0,                          false};
  return setup;
}

}  // namespace

CaseSetup build_case(const RunConfig& cfg) {
  switch (cfg.kind) {
    case CaseKind::kAlignedOblique:
      return build_aligned_oblique(cfg);
    case CaseKind::kNonalignedOblique:
      return build_nonaligned_oblique(cfg);
    case CaseKind::kAlignedRamp:
      return build_aligned_ramp(cfg);
    case CaseKind::kVortex:
      return build_vortex(cfg);
    case CaseKind::kDmrAligned:
      return build_dmr(cfg, true);
    case CaseKind::kDmrNonaligned:
    default:
      return build_dmr(cfg, false);
  }
}

namespace {

void write_metrics_csv(const std::string& path, const RunOutput& out) {
  std::ofstream f(path);
  if (!f) throw ConfigError("cannot open " + path);
  f << "case,config,L2,Linf,TV,mu_pre,mu_post,mu_overall,converged,iters\n";
  f.precision(12);
  f << out.case_label << ',' << out.config_label << ',';
  if (out.metrics) {
    const MetricsReport& m = *out.metrics;
    f << m.norms_overall.l2 << ',' << m.norms_overall.l_inf << ',' << m.tv_overall << ','
      << m.mu_pre << ',' << m.mu_post << ',' << m.mu_overall;
  } else if (out.field_norms) {
    f << out.field_norms->l2 << ',' << out.field_norms->l_inf << ",,,,";
  } else {
    f << ",,,,,";
  }
  f << ',' << (out.converged ? 1 : 0) << ',' << out.iterations << '\n';
}

void write_field_csv(const std::string& path, const StructuredMesh& mesh, const PrimField& w) {
  std::ofstream f(path);
  if (!f) throw ConfigError("cannot open " + path);
  f << "i,j,x,y,rho,u,v,p\n";
  f.precision(12);
  for (int j = 0; j < mesh.ny(); ++j)
    for (int i = 0; i < mesh.nx(); ++i)
      f << i << ',' << j << ',' << mesh.center(i, j).x << ',' << mesh.center(i, j).y << ','
        << w(i, j).rho << ',' << w(i, j).u << ',' << w(i, j).v << ',' << w(i, j).p << '\n';
}

}  // namespace

RunOutput run_case(const RunConfig& cfg) {
  namespace fs = std::filesystem;
  CaseSetup setup = build_case(cfg);
  fs::create_directories(cfg.out_dir);
  const std::string dir = cfg.out_dir + "/";

  RunOutput out;
  out.case_label = cfg.case_label();
  out.config_label = cfg.config_label();

  PrimField final(setup.mesh.nx(), setup.mesh.ny());
  if (setup.steady) {
    std::ofstream rn_file(dir + "residuals.csv");
    if (!rn_file) throw ConfigError("cannot open " + dir + "residuals.csv");
    rn_file << "iter,RN\n";
    rn_file.precision(17);
    SteadyResult result = march_to_steady(setup.mesh, std::move(setup.initial), setup.mask,
                                          setup.bc, setup.march, [&](int iter, double rn) {
                                            rn_file << iter << ',' << rn << '\n';
                                          });
    out.converged = result.converged;
    out.iterations = result.iterations;
    final = std::move(result.field);
  } else {
    RemaskCallback remask;
    if (setup.indicator_per_step) {
      bool first = true;
      const double threshold = setup.threshold;
      const std::optional<TroubleMask>& extra = setup.first_step_extra;
      remask = [&, first, threshold](const PrimField& w, double, TroubleMask& mask) mutable {
        mask = detect_troubled(w, threshold);
        if (first && extra) {
          mask = mask_union(mask, *extra);
          first = false;
        }
      };
    }
    final = advance_unsteady(setup.mesh, std::move(setup.initial), setup.mask, setup.bc,
                             setup.march, setup.end_time, remask);
    out.converged = true;
    out.iterations = 0;
  }

  if (setup.has_profile) {
    const ProfileSample profile =
        setup.profile_row >= 0
            ? extract_row_profile(final, setup.mesh, setup.profile_row, setup.exact)
            : extract_profile(final, setup.mesh, setup.profile_y, setup.exact);
    profile.dump_csv(dir + "profile.csv");
    out.metrics = monotonicity_mu(profile, setup.shock_x);
  } else if (cfg.kind == CaseKind::kVortex) {
    out.field_norms = error_norms(density_error(final, setup.exact));
  }

  setup.mask.dump_csv(dir + "mask.csv");
  write_metrics_csv(dir + "metrics.csv", out);
  if (cfg.kind == CaseKind::kDmrAligned || cfg.kind == CaseKind::kDmrNonaligned)
    write_field_csv(dir + "field.csv", setup.mesh, final);
  return out;
}

std::vector<SweepRow> sweep(const std::string& config_dir, const std::string& out_dir) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(config_dir))
    if (e.is_regular_file() && e.path().extension() == ".cfg") files.push_back(e.path());
  std::sort(files.begin(), files.end());

  fs::create_directories(out_dir);
  std::vector<SweepRow> rows;
  for (const auto& path : files) {
    SweepRow row;
    try {
      row.cfg = parse_config_file(path.string());
      row.cfg.out_dir = out_dir + "/" + path.stem().string();
      row.output = run_case(row.cfg);
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }

  std::ofstream f(out_dir + "/aggregate.csv");
  if (!f) throw ConfigError("cannot open " + out_dir + "/aggregate.csv");
  f << "case,mach,beta,config,L2,Linf,TV,mu_pre,mu_post,mu_overall,converged,iters,error\n";
  f.precision(12);
  for (const SweepRow& row : rows) {
    f << row.cfg.case_label() << ',' << row.cfg.mach << ',' << row.cfg.beta << ','
      << row.cfg.config_label() << ',';
    if (row.error.empty() && row.output.metrics) {
      const MetricsReport& m = *row.output.metrics;
      f << m.norms_overall.l2 << ',' << m.norms_overall.l_inf << ',' << m.tv_overall << ','
        << m.mu_pre << ',' << m.mu_post << ',' << m.mu_overall;
    } else if (row.error.empty() && row.output.field_norms) {
      f << row.output.field_norms->l2 << ',' << row.output.field_norms->l_inf << ",,,,";
    } else {
      f << ",,,,,";
    }
    std::string err = row.error;
    std::replace(err.begin(), err.end(), ',', ';');
    std::replace(err.begin(), err.end(), '\n', ' ');
    f << ',' << (row.output.converged ? 1 : 0) << ',' << row.output.iterations << ',' << err
      << '\n';
  }
  return rows;
}

}  // namespace tcfv
