#include "tcfv/mask.hpp"

#include <fstream>

#include "tcfv/error.hpp"

namespace tcfv {

int TroubleMask::count() const {
  int n = 0;
  for (auto v : flag) n += v != 0;
  return n;
}

bool TroubleMask::contains(const TroubleMask& other) const {
  if (!flag.same_shape(other.flag.nx(), other.flag.ny()))
    throw ContractError("mask shape mismatch");
  for (int j = 0; j < flag.ny(); ++j)
    for (int i = 0; i < flag.nx(); ++i)
      if (other.flag(i, j) && !flag(i, j)) return false;
  return true;
}

void TroubleMask::dump_csv(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot open " + path);
  out << "i,j,flag\n";
  for (int j = 0; j < flag.ny(); ++j)
    for (int i = 0; i < flag.nx(); ++i) out << i << ',' << j << ',' << int(flag(i, j)) << '\n';
}

TroubleMask make_mask(int nx, int ny, bool value, std::string provenance) {
  TroubleMask m{Field2D<std::uint8_t>(nx, ny, value ? 1 : 0), std::move(provenance)};
  return m;
}

TroubleMask mask_union(const TroubleMask& a, const TroubleMask& b) {
  if (!a.flag.same_shape(b.flag.nx(), b.flag.ny())) throw ContractError("mask shape mismatch");
  TroubleMask out = a;
  out.provenance = a.provenance + "+" + b.provenance;
  for (int j = 0; j < a.flag.ny(); ++j)
    for (int i = 0; i < a.flag.nx(); ++i)
      out.flag(i, j) = (a.flag(i, j) || b.flag(i, j)) ? 1 : 0;
  return out;
}

}  // namespace tcfv
