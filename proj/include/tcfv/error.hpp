#pragma once

#include <stdexcept>
#include <string>

namespace tcfv {

/// Base class for all solver errors.
class SolverError : public std::runtime_error {
 public:
  explicit SolverError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Bad user-facing configuration (mesh sizes, angles, config files, ...).
class ConfigError : public SolverError {
 public:
  explicit ConfigError(const std::string& msg) : SolverError("config error: " + msg) {}
};

/// API contract violation (dimension mismatch, empty input, ...).
class ContractError : public SolverError {
 public:
  explicit ContractError(const std::string& msg) : SolverError("contract error: " + msg) {}
};

/// A gas state with nonpositive density or pressure.
class InvalidStateError : public SolverError {
 public:
  InvalidStateError(double rho, double p, const std::string& where)
      : SolverError("invalid state in " + where + ": rho=" + std::to_string(rho) +
                    " p=" + std::to_string(p)),
        rho(rho),
        p(p) {}
  double rho;
  double p;
};

/// Time marching produced an unusable state.
class DivergedError : public SolverError {
 public:
  DivergedError(int iteration, int i, int j)
      : SolverError("solution diverged at iteration " + std::to_string(iteration) + ", cell (" +
                    std::to_string(i) + "," + std::to_string(j) + ")"),
        iteration(iteration),
        cell_i(i),
        cell_j(j) {}
  int iteration;
  int cell_i;
  int cell_j;
};

}  // namespace tcfv
