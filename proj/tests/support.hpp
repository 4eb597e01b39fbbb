#pragma once

// Reference computations kept independent of the library code paths.

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "cubegeo/surface.hpp"

namespace cubegeo::testing {

using Vec = std::vector<double>;

inline double sup_norm_diff(const Vec& p, const Vec& q) {
  double m = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) m = std::max(m, std::abs(p[i] - q[i]));
  return m;
}

inline double polyline_length(const std::vector<Vec>& pts) {
  double s = 0.0;
  for (std::size_t k = 0; k + 1 < pts.size(); ++k) s += sup_norm_diff(pts[k], pts[k + 1]);
  return s;
}

inline bool on_surface(const Vec& p) {
  double m = 0.0;
  for (double v : p) m = std::max(m, std::abs(v));
  return m == 1.0;
}

inline bool share_facet(const Vec& p, const Vec& q) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (std::abs(p[i]) == 1.0 && p[i] == q[i]) return true;
  }
  return false;
}

inline Vec coords(const SurfacePoint& p) { return {p.coords().begin(), p.coords().end()}; }

inline std::vector<Vec> vertices(const GeodesicPath& path) {
  std::vector<Vec> out;
  for (const auto& v : path.vertices()) out.push_back(coords(v));
  return out;
}

/// Twelve opposite-face lengths for A = (1,a,b), B = (-1,c,d) with every
/// coordinate given as an integer multiple of 1/den; results in the same units.
inline std::array<long, 12> opposite_values_scaled(long a, long b, long c, long d, long den) {
  const long two = 2 * den, four = 4 * den;
  auto mx = [](long x, long y) { return std::max(x, y); };
  return {four - a - c,          four + a + c,          four - b - d,          four + b + d,
          mx(two - a - d, four - b - c), mx(two - a + d, four + b - c), mx(two + a - d, four - b + c),
          mx(two + a + d, four + b + c), mx(two - b - c, four - a - d), mx(two + b - c, four - a + d),
          mx(two - b + c, four + a - d), mx(two + b + c, four + a + d)};
}

/// Single-corner length A -> (1,1,z) -> B for the adjacent configuration.
inline double corner_length(double ay, double az, double bx, double bz, double z) {
  return std::max(1 - ay, std::abs(z - az)) + std::max(1 - bx, std::abs(z - bz));
}

}  // namespace cubegeo::testing
