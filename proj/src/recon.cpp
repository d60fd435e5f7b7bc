#include "tcfv/recon.hpp"

#include <cmath>

#include "tcfv/error.hpp"

namespace tcfv {

double slope_limiter_phi(double r) {
  return 3.0 * r / (2.0 * r * r - r + 2.0);
}

namespace {

struct SlopeTerms {
  double lo;  // phi(r) * backward difference
  double hi;  // phi(1/r) * forward difference
};

// The limited slope products written without forming r = dp/dm, so the
// backward difference can vanish. With d = 2*dp^2 - dp*dm + 2*dm^2 (positive
// definite), phi(r)*dm = 3*dp*dm^2/d and phi(1/r)*dp = 3*dp^2*dm/d.
inline SlopeTerms limited_terms(double dm, double dp) {
  if (dp == 0.0 && dm == 0.0) return {0.0, 0.0};
  const double d = 2.0 * dp * dp - dp * dm + 2.0 * dm * dm;
  return {3.0 * dp * dm * dm / d, 3.0 * dp * dp * dm / d};
}

inline void reconstruct_component(double wm, double w0, double wp, bool limited, double k,
                                  double& left_at_plus, double& right_at_minus) {
  const double dm = w0 - wm;
  const double dp = wp - w0;
  double lo = dm, hi = dp;
  if (limited) {
    const SlopeTerms t = limited_terms(dm, dp);
    lo = t.lo;
    hi = t.hi;
  }
  left_at_plus = w0 + 0.25 * ((1.0 - k) * lo + (1.0 + k) * hi);
  right_at_minus = w0 - 0.25 * ((1.0 + k) * lo + (1.0 - k) * hi);
}

}  // namespace

MusclPair muscl_faces(const PrimState& wm, const PrimState& w0, const PrimState& wp, bool limited,
                      double k) {
  MusclPair out;
  reconstruct_component(wm.rho, w0.rho, wp.rho, limited, k, out.left_at_plus.rho,
                        out.right_at_minus.rho);
  reconstruct_component(wm.u, w0.u, wp.u, limited, k, out.left_at_plus.u, out.right_at_minus.u);
  reconstruct_component(wm.v, w0.v, wp.v, limited, k, out.left_at_plus.v, out.right_at_minus.v);
  reconstruct_component(wm.p, w0.p, wp.p, limited, k, out.left_at_plus.p, out.right_at_minus.p);
  if (out.left_at_plus.rho <= 0.0 || out.left_at_plus.p <= 0.0) out.left_at_plus = w0;
  if (out.right_at_minus.rho <= 0.0 || out.right_at_minus.p <= 0.0) out.right_at_minus = w0;
  return out;
}

void reconstruct_line(std::span<const PrimState> ext, std::span<const std::uint8_t> flags,
                      std::span<PrimState> left, std::span<PrimState> right) {
  const int n = int(ext.size()) - 4;
  if (n < 1 || int(flags.size()) != n + 2 || int(left.size()) != n + 1 ||
      int(right.size()) != n + 1)
    throw ContractError("reconstruct_line span sizes inconsistent");

  // Cells -1 .. n relative to the line: cell c sits at ext[c+2], flag[c+1].
  for (int c = -1; c <= n; ++c) {
    const MusclPair pair =
        muscl_faces(ext[c + 1], ext[c + 2], ext[c + 3], flags[c + 1] != 0);
    if (c + 1 <= n) left[c + 1] = pair.left_at_plus;   // face c+1
    if (c >= 0) right[c] = pair.right_at_minus;        // face c
  }
}

}  // namespace tcfv
