#pragma once

// Closed-form geodesic distance on the 3-cube between A = (1, ay, az) on the
// facet x = 1 and B = (bx, 1, bz) on the facet y = 1, together with the
// minimality conditions and explicit minimal paths.

#include <algorithm>
#include <array>
#include <bitset>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cubegeo/surface.hpp"

namespace cubegeo {

inline constexpr double kTieTolerance = 1e-12;

struct AdjacentInput {
  double ay = 0.0;
  double az = 0.0;
  double bx = 0.0;
  double bz = 0.0;

  void validate() const {
    for (double v : {ay, az, bx, bz}) {
      if (!(v >= -1.0 && v <= 1.0)) throw std::invalid_argument("adjacent input out of [-1,1]");
    }
  }

  SurfacePoint point_a() const { return SurfacePoint::make({1.0, ay, az}, 0.0); }
  SurfacePoint point_b() const { return SurfacePoint::make({bx, 1.0, bz}, 0.0); }

  /// Reads a canonical pair (a[0] == 1, b[1] == 1) in three dimensions.
  static AdjacentInput from_points(const SurfacePoint& a, const SurfacePoint& b) {
    if (a.dim() != 3 || b.dim() != 3 || a[0] != 1.0 || b[1] != 1.0) {
      throw std::invalid_argument("adjacent input needs A on x=1 and B on y=1 in 3D");
    }
    return {a[1], a[2], b[0], b[2]};
  }

  friend bool operator==(const AdjacentInput&, const AdjacentInput&) = default;
};

enum class AdjacentQuantity { Alpha = 0, Beta = 1, Gamma = 2 };

inline const char* to_string(AdjacentQuantity q) {
  switch (q) {
    case AdjacentQuantity::Alpha: return "alpha";
    case AdjacentQuantity::Beta: return "beta";
    case AdjacentQuantity::Gamma: return "gamma";
  }
  return "?";
}

struct AdjacentResult {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double beta1 = 0.0;
  double gamma1 = 0.0;
  double distance = 0.0;
  std::array<bool, 3> minimal{};
  std::bitset<13> conditions;  // bit k <-> condition (k), k = 1..12

  bool is_minimal(AdjacentQuantity q) const { return minimal[static_cast<int>(q)]; }

  std::vector<int> satisfied_conditions() const {
    std::vector<int> out;
    for (int k = 1; k <= 12; ++k) {
      if (conditions[k]) out.push_back(k);
    }
    return out;
  }

  /// Whether any of the four conditions for quantity q holds.
  bool condition_group(AdjacentQuantity q) const {
    int base = 1 + 4 * static_cast<int>(q);
    return conditions[base] || conditions[base + 1] || conditions[base + 2] || conditions[base + 3];
  }
};

/// The twelve case conditions, evaluated exactly as comparisons of the inputs.
inline std::bitset<13> adjacent3_conditions(const AdjacentInput& in) {
  const double ay = in.ay, az = in.az, bx = in.bx, bz = in.bz;
  std::bitset<13> c;
  // alpha
  c[1] = std::abs(az) <= ay;
  c[2] = std::abs(bz) <= bx;
  c[3] = std::abs(ay) <= az && std::abs(bx) <= -bz;
  c[4] = std::abs(ay) <= -az && std::abs(bx) <= bz;
  // beta
  c[5] = ay <= az && bx <= bz && az >= 0 && bx <= ay + az + bz;
  c[6] = ay <= az && bx <= bz && bz >= 0 && ay <= bx + az + bz;
  c[7] = ay == 1.0 && az == 1.0;
  c[8] = bx == 1.0 && bz == 1.0;
  // gamma
  c[9] = ay <= -az && bx <= -bz && az <= 0 && bx <= ay - az - bz;
  c[10] = ay <= -az && bx <= -bz && bz <= 0 && ay <= bx - az - bz;
  c[11] = ay == 1.0 && az == -1.0;
  c[12] = bx == 1.0 && bz == -1.0;
  return c;
}

inline AdjacentResult adjacent3_distance(const AdjacentInput& in, double tie = kTieTolerance) {
  in.validate();
  const double ay = in.ay, az = in.az, bx = in.bx, bz = in.bz;
  AdjacentResult r;
  // Each term is const + (u + v) so values are bitwise invariant under
  // swapping the endpoints or negating coordinates.
  r.alpha = std::max(2 - (ay + bx), std::abs(az - bz));
  r.beta = std::max(2 - (az + bx), 2 - (ay + bz));
  r.gamma = std::max(2 + (az - bx), 2 + (bz - ay));
  r.beta1 = std::max(r.beta, 2 - (az + bz));
  r.gamma1 = std::max(r.gamma, 2 + (az + bz));
  r.distance = std::min({r.alpha, r.beta, r.gamma});
  r.minimal = {r.alpha <= r.distance + tie, r.beta <= r.distance + tie,
               r.gamma <= r.distance + tie};
  r.conditions = adjacent3_conditions(in);
  return r;
}

/// A shortest path with at most two legs exists iff one of conditions (1)-(4) holds.
inline bool two_leg_exists(const AdjacentInput& in) {
  in.validate();
  auto c = adjacent3_conditions(in);
  return c[1] || c[2] || c[3] || c[4];
}

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool empty() const { return lo > hi; }
  double mid() const { return lo + 0.5 * (hi - lo); }
  bool contains(double t, double tol = 0.0) const { return t >= lo - tol && t <= hi + tol; }
};

/// Heights z for which A -> (1,1,z) -> B has length alpha.
inline Interval corner_witness_interval(const AdjacentInput& in, double tie = kTieTolerance) {
  auto r = adjacent3_distance(in, tie);
  if (!r.is_minimal(AdjacentQuantity::Alpha)) {
    throw std::domain_error("corner witness requested but alpha is not minimal");
  }
  const double ay = in.ay, az = in.az, bx = in.bx, bz = in.bz;
  const double slack = 2 - ay - bx;
  Interval iv;
  if (az - bz >= slack) {
    iv = {1 - bx + bz, ay + az - 1};
  } else if (bz - az >= slack) {
    iv = {az - ay + 1, bx + bz - 1};
  } else {
    iv = {std::max({ay + az - 1, bx + bz - 1, -1.0}), std::min({-ay + az + 1, -bx + bz + 1, 1.0})};
  }
  iv.lo = std::max(iv.lo, -1.0);
  iv.hi = std::min(iv.hi, 1.0);
  if (iv.empty()) throw std::logic_error("corner witness interval is empty");
  return iv;
}

inline GeodesicPath corner_path(const AdjacentInput& in, double z) {
  return GeodesicPath({in.point_a(), SurfacePoint::make({1.0, 1.0, z}, 0.0), in.point_b()});
}

enum class CornerRoute { Top, Bottom };  // through z = +1 or z = -1

/// Set of (x, y) for which A -> (1,y,s) -> (x,1,s) -> B attains the two-corner
/// minimum (beta1 for s = +1, gamma1 for s = -1).
///
/// Case 'a': x in [x_lo, x_hi], y in [max(y_lo, x), y_hi].
/// Case 'b': y in [y_lo, y_hi], x in [max(x_lo, y), x_hi].
/// Case 'c': the single point (1, 1).
struct TwoCornerRegion {
  CornerRoute route = CornerRoute::Top;
  char which = 'a';
  double value = 0.0;
  double x_lo = 1.0, x_hi = 1.0;
  double y_lo = 1.0, y_hi = 1.0;

  bool contains(double x, double y, double tol = 0.0) const {
    switch (which) {
      case 'a':
        return x >= x_lo - tol && x <= x_hi + tol && y >= std::max(y_lo, x) - tol &&
               y <= y_hi + tol;
      case 'b':
        return y >= y_lo - tol && y <= y_hi + tol && x >= std::max(x_lo, y) - tol &&
               x <= x_hi + tol;
      default:
        return std::abs(x - 1.0) <= tol && std::abs(y - 1.0) <= tol;
    }
  }

  /// Midpoint of the region.
  std::pair<double, double> representative() const {
    switch (which) {
      case 'a': {
        double x = 0.5 * (x_lo + x_hi);
        return {x, 0.5 * (std::max(y_lo, x) + y_hi)};
      }
      case 'b': {
        double y = 0.5 * (y_lo + y_hi);
        return {0.5 * (std::max(x_lo, y) + x_hi), y};
      }
      default:
        return {1.0, 1.0};
    }
  }
};

inline TwoCornerRegion two_corner_witness_region(const AdjacentInput& in, CornerRoute route) {
  in.validate();
  const double s = route == CornerRoute::Top ? 1.0 : -1.0;
  // The bottom route is the top route with z negated.
  const double ay = in.ay, az = s * in.az, bx = in.bx, bz = s * in.bz;
  const double x1 = 2 - az - bx, y1 = 2 - ay - bz, z1 = 2 - az - bz;
  TwoCornerRegion r;
  r.route = route;
  r.value = std::max({x1, y1, z1});
  if (x1 >= y1 && x1 >= z1) {
    r.which = 'a';
    r.x_lo = 1 + bx - bz;
    r.x_hi = std::min(1.0, 1 + ay - az);
    r.y_lo = ay + az - 1;
    r.y_hi = std::min(1.0, 1 + ay - az);
    if (r.x_lo > r.x_hi || std::max(r.y_lo, r.x_lo) > r.y_hi) {
      throw std::logic_error("two-corner region (a) is empty");
    }
  } else if (y1 >= x1 && y1 >= z1) {
    r.which = 'b';
    r.y_lo = 1 + ay - az;
    r.y_hi = std::min(1.0, 1 + bx - bz);
    r.x_lo = bx + bz - 1;
    r.x_hi = std::min(1.0, 1 + bx - bz);
    if (r.y_lo > r.y_hi || std::max(r.x_lo, r.y_lo) > r.x_hi) {
      throw std::logic_error("two-corner region (b) is empty");
    }
  } else {
    r.which = 'c';
  }
  return r;
}

inline GeodesicPath two_corner_path(const AdjacentInput& in, CornerRoute route, double x,
                                    double y) {
  const double s = route == CornerRoute::Top ? 1.0 : -1.0;
  return GeodesicPath({in.point_a(), SurfacePoint::make({1.0, y, s}, 0.0),
                       SurfacePoint::make({x, 1.0, s}, 0.0), in.point_b()});
}

/// Largest |det| of three difference vectors taken from the first vertex; zero
/// iff the 3D path is contained in a plane.
inline double coplanarity_residual(const GeodesicPath& path) {
  if (path.dim() != 3) throw std::invalid_argument("coplanarity is defined for 3D paths");
  const auto& v = path.vertices();
  double worst = 0.0;
  auto diff = [&](std::size_t i) {
    return std::array<double, 3>{v[i][0] - v[0][0], v[i][1] - v[0][1], v[i][2] - v[0][2]};
  };
  for (std::size_t i = 1; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      for (std::size_t k = j + 1; k < v.size(); ++k) {
        auto p = diff(i), q = diff(j), r = diff(k);
        double det = p[0] * (q[1] * r[2] - q[2] * r[1]) - p[1] * (q[0] * r[2] - q[2] * r[0]) +
                     p[2] * (q[0] * r[1] - q[1] * r[0]);
        worst = std::max(worst, std::abs(det));
      }
    }
  }
  return worst;
}

inline constexpr double kPlanarityTolerance = 1e-9;
inline constexpr double kWitnessTolerance = 1e-12;

/// Planar minimal path A -> (1,y,1) -> (x,1,1) -> B when beta is minimal and
/// 2 - az - bx >= 2 - ay - bz.
inline GeodesicPath planar_beta_path(const AdjacentInput& in, double tie = kTieTolerance) {
  auto r = adjacent3_distance(in, tie);
  const double ay = in.ay, az = in.az, bx = in.bx, bz = in.bz;
  if (in.point_a() == in.point_b()) return GeodesicPath({in.point_a()});
  if (!r.is_minimal(AdjacentQuantity::Beta)) {
    throw std::domain_error("planar beta path requested but beta is not minimal");
  }
  if (2 - az - bx < 2 - ay - bz) {
    throw std::domain_error("planar beta path expects 2-az-bx >= 2-ay-bz");
  }
  auto accept = [&](double x, double y) -> std::optional<GeodesicPath> {
    if (!(x >= -1.0 && x <= 1.0 && y >= -1.0 && y <= 1.0)) return std::nullopt;
    auto path = two_corner_path(in, CornerRoute::Top, x, y);
    if (std::abs(path.total_length() - r.beta) > kWitnessTolerance) return std::nullopt;
    if (coplanarity_residual(path) > kPlanarityTolerance) return std::nullopt;
    return path;
  };
  if (ay == az && bz == 1.0) {
    if (auto p = accept(bx, 1.0)) return *p;
  }
  const double lo = std::max(1 + bx - bz, -1.0);
  const double hi = (bx * (az - ay) + 1 - bz) / (az - ay + 1 - bz);
  auto y_of = [&](double x) {
    return (ay * (1 - x) * (1 - bz) + (1 - az) * (x - bx)) /
           ((1 - x) * (1 - bz) + (1 - az) * (x - bx));
  };
  constexpr int kSweep = 64;
  std::vector<double> xs{lo + 0.5 * (hi - lo)};
  for (int k = 0; k <= kSweep; ++k) xs.push_back(lo + (hi - lo) * k / kSweep);
  for (double x : xs) {
    double y = y_of(x);
    if (!std::isfinite(y)) continue;
    if (auto p = accept(x, y)) return *p;
  }
  // Degenerate inputs (an endpoint on an edge) collapse the curve. The
  // coplanarity determinant is affine in y for fixed x and vice versa, so
  // sweep one coordinate and solve for the other.
  auto det = [&](double x, double y) {
    const double p1 = y - ay, p2 = 1 - az;
    const double q0 = x - 1, q1 = 1 - ay, q2 = 1 - az;
    const double r0 = bx - 1, r1 = 1 - ay, r2 = bz - az;
    return -p1 * (q0 * r2 - q2 * r0) + p2 * (q0 * r1 - q1 * r0);
  };
  const auto region = two_corner_witness_region(in, CornerRoute::Top);
  if (region.which == 'c') {
    if (auto p = accept(1.0, 1.0)) return *p;
  } else {
    // For fixed x the region is an interval of y.
    auto y_range = [&](double x) -> Interval {
      if (region.which == 'a') return {std::max(region.y_lo, x), region.y_hi};
      return {region.y_lo, std::min(region.y_hi, x)};
    };
    const double x_min = region.which == 'a' ? region.x_lo : std::max(region.x_lo, region.y_lo);
    constexpr int kFine = 256;
    std::vector<double> sweep{bx, ay, x_min, region.x_hi};
    for (int k = 0; k <= kFine; ++k) sweep.push_back(x_min + (region.x_hi - x_min) * k / kFine);
    for (double x : sweep) {
      auto ys = y_range(x);
      if (ys.empty()) continue;
      const double c0 = det(x, 0.0), cy = det(x, 1.0) - c0;
      double y = cy != 0.0 ? std::clamp(-c0 / cy, ys.lo, ys.hi) : ys.mid();
      if (auto p = accept(x, y)) return *p;
    }
  }
  throw std::runtime_error("planar beta path: no feasible point on the planarity curve");
}

namespace detail {

// (x,y,z) -> (y,x,z)
inline SignedPermutation swap_xy() { return SignedPermutation({1, 0, 2}, {1, 1, 1}); }
// (x,y,z) -> (x,y,-z)
inline SignedPermutation flip_z() { return SignedPermutation({0, 1, 2}, {1, 1, -1}); }

}  // namespace detail

/// A minimal planar path between A and B: a corner path when alpha is minimal,
/// otherwise the planar two-corner path reduced to the canonical beta case.
inline GeodesicPath adjacent3_witness(const AdjacentInput& in, double tie = kTieTolerance) {
  auto r = adjacent3_distance(in, tie);
  if (in.point_a() == in.point_b()) return GeodesicPath({in.point_a()});
  if (common_face(in.point_a(), in.point_b())) return GeodesicPath({in.point_a(), in.point_b()});
  if (r.is_minimal(AdjacentQuantity::Alpha)) {
    return corner_path(in, corner_witness_interval(in, tie).mid());
  }
  if (r.is_minimal(AdjacentQuantity::Beta)) {
    if (2 - in.az - in.bx >= 2 - in.ay - in.bz) return planar_beta_path(in, tie);
    // Swap the endpoints and reflect across x = y.
    AdjacentInput swapped{in.bx, in.bz, in.ay, in.az};
    return detail::swap_xy().apply(planar_beta_path(swapped, tie)).reversed();
  }
  AdjacentInput flipped{in.ay, -in.az, in.bx, -in.bz};
  return detail::flip_z().apply(adjacent3_witness(flipped, tie));
}

}  // namespace cubegeo
