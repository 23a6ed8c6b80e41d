#pragma once

// Rounding helpers for quantities that are integers on paper but arrive as
// doubles (log2 of a power of two, pi divided by pi/10).  A plain ceil would
// bump such values by one whenever the float lands an ulp high.

#include <cmath>

namespace onet::detail {

inline double guarded_ceil(double v) {
  double r = std::round(v);
  if (std::abs(v - r) < 1e-9) return r;
  return std::ceil(v);
}

inline double guarded_floor(double v) {
  double r = std::round(v);
  if (std::abs(v - r) < 1e-9) return r;
  return std::floor(v);
}

}  // namespace onet::detail
