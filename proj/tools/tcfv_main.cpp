#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tcfv/cases.hpp"
#include "tcfv/metrics.hpp"

namespace {

void apply_overrides(tcfv::RunConfig& cfg, const std::string& out, int max_iters, double tol) {
  if (!out.empty()) cfg.out_dir = out;
  if (max_iters > 0) cfg.max_iters = max_iters;
  if (tol > 0.0) cfg.tol = tol;
}

int cmd_run(const std::string& config_path, const std::string& out, int max_iters, double tol) {
  tcfv::RunConfig cfg = tcfv::parse_config_file(config_path);
  apply_overrides(cfg, out, max_iters, tol);
  const tcfv::RunOutput result = tcfv::run_case(cfg);
  std::printf("case=%s config=%s converged=%d iters=%d", result.case_label.c_str(),
              result.config_label.c_str(), result.converged ? 1 : 0, result.iterations);
  if (result.metrics)
    std::printf(" mu_overall=%.6e", result.metrics->mu_overall);
  if (result.field_norms)
    std::printf(" L2=%.6e Linf=%.6e", result.field_norms->l2, result.field_norms->l_inf);
  std::printf(" out=%s\n", cfg.out_dir.c_str());
  return 0;
}

int cmd_sweep(const std::string& dir, const std::string& out) {
  const std::string out_dir = out.empty() ? "sweep-out" : out;
  const auto rows = tcfv::sweep(dir, out_dir);
  int failures = 0;
  for (const auto& row : rows) {
    if (row.error.empty()) {
      std::printf("ok   %s %s\n", row.cfg.case_label().c_str(), row.cfg.config_label().c_str());
    } else {
      std::printf("fail %s\n", row.error.c_str());
      ++failures;
    }
  }
  std::printf("%zu runs, %d failed, aggregate at %s/aggregate.csv\n", rows.size(), failures,
              out_dir.c_str());
  return failures == 0 ? 0 : 1;
}

int cmd_validate_vortex(const std::vector<int>& grids, double t_end, const std::string& out,
                        int max_iters, double tol) {
  std::vector<double> l2s, linfs;
  std::printf("%8s %14s %8s %14s %8s\n", "cells", "L2", "order", "Linf", "order");
  for (size_t k = 0; k < grids.size(); ++k) {
    tcfv::RunConfig cfg;
    cfg.kind = tcfv::CaseKind::kVortex;
    cfg.nx = cfg.ny = grids[k];
    cfg.limiting = tcfv::LimitingMode::kNone;
    cfg.end_time = t_end;
    cfg.out_dir = (out.empty() ? std::string("out") : out) + "/vortex_" + std::to_string(grids[k]);
    apply_overrides(cfg, "", max_iters, tol);
    const tcfv::RunOutput result = tcfv::run_case(cfg);
    l2s.push_back(result.field_norms->l2);
    linfs.push_back(result.field_norms->l_inf);
    if (k == 0) {
      std::printf("%8d %14.6e %8s %14.6e %8s\n", grids[k], l2s[k], "-", linfs[k], "-");
    } else {
      const double h1 = 1.0 / grids[k - 1];
      const double h2 = 1.0 / grids[k];
      std::printf("%8d %14.6e %8.2f %14.6e %8.2f\n", grids[k], l2s[k],
                  tcfv::order_of_accuracy(l2s[k - 1], l2s[k], h1, h2), linfs[k],
                  tcfv::order_of_accuracy(linfs[k - 1], linfs[k], h1, h2));
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-volume Euler solver with restricted-region slope limiting"};
  app.require_subcommand(1);

  std::string config_path, dir, out;
  int max_iters = 0;
  double tol = 0.0;
  std::vector<int> grids = {100, 200};
  double t_end = 20.0;

  CLI::App* run = app.add_subcommand("run", "run a single case from a config file");
  run->add_option("config", config_path, "key=value config file")->required();
  run->add_option("--out", out, "output directory override");
  run->add_option("--max-iters", max_iters, "iteration budget override");
  run->add_option("--tol", tol, "convergence tolerance override");

  CLI::App* sw = app.add_subcommand("sweep", "run every *.cfg in a directory");
  sw->add_option("dir", dir, "directory of config files")->required();
  sw->add_option("--out", out, "output directory");

  CLI::App* vv = app.add_subcommand("validate-vortex", "isentropic vortex order-of-accuracy table");
  vv->add_option("--grids", grids, "grid resolutions");
  vv->add_option("--t-end", t_end, "final time");
  vv->add_option("--out", out, "output directory");
  vv->add_option("--max-iters", max_iters, "unused, accepted for symmetry");
  vv->add_option("--tol", tol, "unused, accepted for symmetry");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return cmd_run(config_path, out, max_iters, tol);
    if (sw->parsed()) return cmd_sweep(dir, out);
    if (vv->parsed()) return cmd_validate_vortex(grids, t_end, out, max_iters, tol);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
