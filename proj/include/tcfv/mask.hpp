#pragma once

#include <cstdint>
#include <string>

#include "tcfv/field.hpp"

namespace tcfv {

/// Per-cell "apply the limiter here" flags plus a tag recording how they
/// were produced (a configuration notation, an indicator threshold, ...).
struct TroubleMask {
  Field2D<std::uint8_t> flag;
  std::string provenance;

  bool at(int i, int j) const { return flag(i, j) != 0; }
  void set(int i, int j, bool v = true) { flag(i, j) = v ? 1 : 0; }
  int count() const;
  bool contains(const TroubleMask& other) const;

  void dump_csv(const std::string& path) const;
};

TroubleMask make_mask(int nx, int ny, bool value, std::string provenance);

/// Union of two masks of the same shape.
TroubleMask mask_union(const TroubleMask& a, const TroubleMask& b);

}  // namespace tcfv
