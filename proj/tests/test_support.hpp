#pragma once

#include <cmath>
#include <random>

#include "tcfv/state.hpp"

namespace tcfv::test {

inline std::mt19937& rng() {
  static std::mt19937 gen(20240817);
  return gen;
}

inline double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline PrimState random_state() {
  return {uniform(0.1, 5.0), uniform(-4.0, 4.0), uniform(-4.0, 4.0), uniform(0.1, 10.0)};
}

inline bool close(double a, double b, double rel, double abs = 0.0) {
  return std::abs(a - b) <= std::max(abs, rel * std::max(std::abs(a), std::abs(b)));
}

}  // namespace tcfv::test
