#pragma once

// Closed-form geodesic distance on the 3-cube between A = (1, a, b) and
// B = (-1, c, d) on opposite facets: twelve candidate lengths s1..s12, their
// minimality conditions and explicit minimal paths.

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubegeo/adjacent3.hpp"
#include "cubegeo/surface.hpp"

namespace cubegeo {

struct OppositeInput {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;

  void validate() const {
    for (double v : {a, b, c, d}) {
      if (!(v >= -1.0 && v <= 1.0)) throw std::invalid_argument("opposite input out of [-1,1]");
    }
  }

  SurfacePoint point_a() const { return SurfacePoint::make({1.0, a, b}, 0.0); }
  SurfacePoint point_b() const { return SurfacePoint::make({-1.0, c, d}, 0.0); }

  static OppositeInput from_points(const SurfacePoint& pa, const SurfacePoint& pb) {
    if (pa.dim() != 3 || pb.dim() != 3 || pa[0] != 1.0 || pb[0] != -1.0) {
      throw std::invalid_argument("opposite input needs A on x=1 and B on x=-1 in 3D");
    }
    return {pa[1], pa[2], pb[1], pb[2]};
  }

  friend bool operator==(const OppositeInput&, const OppositeInput&) = default;
};

/// The twelve lengths, index 0 holding s1.
inline std::array<double, 12> opposite3_values(const OppositeInput& in) {
  const double a = in.a, b = in.b, c = in.c, d = in.d;
  return {4 - (a + c),
          4 + (a + c),
          4 - (b + d),
          4 + (b + d),
          std::max(2 - (a + d), 4 - (b + c)),
          std::max(2 + (d - a), 4 + (b - c)),
          std::max(2 + (a - d), 4 + (c - b)),
          std::max(2 + (a + d), 4 + (b + c)),
          std::max(2 - (b + c), 4 - (a + d)),
          std::max(2 + (b - c), 4 + (d - a)),
          std::max(2 + (c - b), 4 + (a - d)),
          std::max(2 + (b + c), 4 + (a + d))};
}

/// Which clauses of a condition set hold. Clauses carry fixed numeric labels:
/// 37-41 for the s1 family, 42-46 for the s6 family, 68-72 for s4, 73-77 for s5.
struct ConditionHits {
  bool holds = false;
  bool derived = false;
  std::vector<int> clauses;
};

inline ConditionHits s1_conditions(const OppositeInput& in) {
  const double a = in.a, b = in.b, c = in.c, d = in.d;
  ConditionHits h;
  if (std::abs(b) <= a && std::abs(d) <= c) h.clauses.push_back(37);
  if (c == 1 && d == -1 && b >= -a) h.clauses.push_back(38);
  if (c == 1 && d == 1 && b <= a) h.clauses.push_back(39);
  if (a == 1 && b == -1 && d >= -c) h.clauses.push_back(40);
  if (a == 1 && b == 1 && d <= c) h.clauses.push_back(41);
  h.holds = !h.clauses.empty();
  return h;
}

inline ConditionHits s6_conditions(const OppositeInput& in) {
  const double a = in.a, b = in.b, c = in.c, d = in.d;
  ConditionHits h;
  if (a + b <= 0 && c + d >= 0 && std::abs(a + d) <= c - b && b + d <= a + c && b <= 0 && c >= 0) {
    h.clauses.push_back(42);
  }
  if (b == -1 && c >= 0 && -c <= d && d <= 1 + a + c) h.clauses.push_back(43);
  if (b == -1 && d >= 1 - a - c) h.clauses.push_back(44);
  if (c == 1 && b <= 0 && b + d - 1 <= a && a <= -b) h.clauses.push_back(45);
  if (c == 1 && a <= -1 - b - d) h.clauses.push_back(46);
  h.holds = !h.clauses.empty();
  return h;
}

/// Conditions for s4. The fourth clause reads d <= -c: it is the image of the
/// s1 clause "a = -b = 1 and d >= -c" under a -> -b, b -> -a, c -> -d, d -> -c.
inline ConditionHits s4_conditions(const OppositeInput& in) {
  const double a = in.a, b = in.b, c = in.c, d = in.d;
  ConditionHits h;
  if (std::abs(a) <= -b && std::abs(c) <= -d) h.clauses.push_back(68);
  if (c == 1 && d == -1 && b <= -a) h.clauses.push_back(69);
  if (c == -1 && d == -1 && b <= a) h.clauses.push_back(70);
  if (a == 1 && b == -1 && d <= -c) h.clauses.push_back(71);
  if (a == -1 && b == -1 && d <= c) h.clauses.push_back(72);
  h.holds = !h.clauses.empty();
  return h;
}

inline ConditionHits s5_conditions(const OppositeInput& in) {
  const double a = in.a, b = in.b, c = in.c, d = in.d;
  ConditionHits h;
  if (a <= b && d <= c && std::abs(a - d) <= c + b && a + b + c + d >= 0 && b >= 0 && c >= 0) {
    h.clauses.push_back(73);
  }
  if (b == 1 && c >= 0 && -1 - a - c <= d && d <= c) h.clauses.push_back(74);
  if (b == 1 && d <= -1 + a + c) h.clauses.push_back(75);
  if (c == 1 && b >= 0 && -b - d - 1 <= a && a <= b) h.clauses.push_back(76);
  if (c == 1 && a <= -1 + b + d) h.clauses.push_back(77);
  h.holds = !h.clauses.empty();
  return h;
}

/// Symmetry of the facet pair x = +-1 acting on (a, b, c, d). Generators are
/// applied in the order y-flip, z-flip, y/z swap, endpoint swap.
struct OppositeSymmetry {
  bool flip_y = false;
  bool flip_z = false;
  bool swap_yz = false;
  bool swap_ends = false;

  OppositeInput apply(OppositeInput in) const {
    if (flip_y) in = {-in.a, in.b, -in.c, in.d};
    if (flip_z) in = {in.a, -in.b, in.c, -in.d};
    if (swap_yz) in = {in.b, in.a, in.d, in.c};
    if (swap_ends) in = {in.c, in.d, in.a, in.b};
    return in;
  }

  /// The same map acting on points of the cube (endpoint swap excluded).
  SignedPermutation point_map() const {
    if (swap_ends) throw std::logic_error("endpoint swap is not a point isometry");
    auto g = SignedPermutation::identity(3);
    if (flip_y) g = SignedPermutation({0, 1, 2}, {1, -1, 1}).compose(g);
    if (flip_z) g = SignedPermutation({0, 1, 2}, {1, 1, -1}).compose(g);
    if (swap_yz) g = SignedPermutation({0, 2, 1}, {1, 1, 1}).compose(g);
    return g;
  }
};

/// For each j, a template (1 or 6) and a symmetry T with s_j(x) = s_base(T x)
/// that permutes the twelve values. Found by search over the 16 group elements.
struct SubstitutionRule {
  int base;
  OppositeSymmetry map;
};

inline const std::array<SubstitutionRule, 12>& substitution_rules() {
  static const std::array<SubstitutionRule, 12> rules{{
      {1, {}},                          // s1
      {1, {true, false, false, false}},   // s2
      {1, {false, false, true, false}},   // s3
      {1, {false, true, true, false}},    // s4
      {6, {false, true, false, false}},   // s5
      {6, {}},                          // s6
      {6, {true, true, false, false}},    // s7
      {6, {true, false, false, false}},   // s8
      {6, {true, false, true, false}},    // s9
      {6, {true, true, true, false}},     // s10
      {6, {false, false, true, false}},   // s11
      {6, {false, true, true, false}},    // s12
  }};
  return rules;
}

/// Conditions under which s_j is minimal. j = 1, 4, 5, 6 have their own sets;
/// the others are images of the s1 or s6 sets under substitution_rules().
inline ConditionHits sj_conditions(int j, const OppositeInput& in) {
  if (j < 1 || j > 12) throw std::out_of_range("s index must be in 1..12");
  switch (j) {
    case 1: return s1_conditions(in);
    case 4: return s4_conditions(in);
    case 5: return s5_conditions(in);
    case 6: return s6_conditions(in);
    default: break;
  }
  const auto& rule = substitution_rules()[j - 1];
  auto mapped = rule.map.apply(in);
  ConditionHits h = rule.base == 1 ? s1_conditions(mapped) : s6_conditions(mapped);
  h.derived = true;
  return h;
}

struct OppositeResult {
  std::array<double, 12> s{};
  double distance = 0.0;
  std::array<bool, 12> minimal{};
  std::array<ConditionHits, 12> conditions{};

  std::vector<int> minimizers() const {
    std::vector<int> out;
    for (int j = 0; j < 12; ++j) {
      if (minimal[j]) out.push_back(j + 1);
    }
    return out;
  }
};

inline OppositeResult opposite3_distance(const OppositeInput& in, double tie = kTieTolerance) {
  in.validate();
  OppositeResult r;
  r.s = opposite3_values(in);
  r.distance = *std::min_element(r.s.begin(), r.s.end());
  for (int j = 0; j < 12; ++j) {
    r.minimal[j] = r.s[j] <= r.distance + tie;
    r.conditions[j] = sj_conditions(j + 1, in);
  }
  return r;
}

namespace detail {

inline Interval clamp_unit(Interval iv) {
  return {std::max(iv.lo, -1.0), std::min(iv.hi, 1.0)};
}

// A -> (1,1,z1) -> (-1,1,z2) -> B, length s1.
inline GeodesicPath s1_path(const OppositeInput& in) {
  auto z1 = clamp_unit({in.b - (1 - in.a), in.b + (1 - in.a)}).mid();
  auto z2 = clamp_unit({in.d - (1 - in.c), in.d + (1 - in.c)}).mid();
  return GeodesicPath({in.point_a(), SurfacePoint::make({1.0, 1.0, z1}, 0.0),
                       SurfacePoint::make({-1.0, 1.0, z2}, 0.0), in.point_b()});
}

// A -> (1,y,-1) -> (x,1,-1) -> (-1,1,z) -> B, length s6.
inline GeodesicPath s6_path(const OppositeInput& in) {
  const double a = in.a, b = in.b, c = in.c, d = in.d;
  double x, y, z;
  if (2 - a + d >= 4 + b - c) {
    // 1+a+b <= y <= x <= z <= c+d-1
    Interval yr{1 + a + b, c + d - 1};
    y = yr.mid();
    z = Interval{y, yr.hi}.mid();
    x = Interval{y, z}.mid();
  } else {
    // |y-a| <= 1+b, |z-d| <= 1-c, z <= x <= y
    const double z_lo = std::max(d - 1 + c, -1.0);
    Interval yr{std::max({a - 1 - b, -1.0, z_lo}), std::min(a + 1 + b, 1.0)};
    y = yr.mid();
    z = Interval{z_lo, std::min({d + 1 - c, 1.0, y})}.mid();
    x = Interval{z, y}.mid();
  }
  return GeodesicPath({in.point_a(), SurfacePoint::make({1.0, y, -1.0}, 0.0),
                       SurfacePoint::make({x, 1.0, -1.0}, 0.0),
                       SurfacePoint::make({-1.0, 1.0, z}, 0.0), in.point_b()});
}

}  // namespace detail

/// Path of length s_j, valid where s_j is minimal.
inline GeodesicPath opposite3_candidate_path(int j, const OppositeInput& in) {
  if (j < 1 || j > 12) throw std::out_of_range("s index must be in 1..12");
  const auto& rule = substitution_rules()[j - 1];
  auto mapped = rule.map.apply(in);
  auto path = rule.base == 1 ? detail::s1_path(mapped) : detail::s6_path(mapped);
  return rule.map.point_map().inverse().apply(path);
}

/// A path attaining min(s1..s12); the lowest minimizing index is used.
inline GeodesicPath opposite3_witness(const OppositeInput& in, double tie = kTieTolerance) {
  auto r = opposite3_distance(in, tie);
  for (int j : r.minimizers()) {
    auto path = opposite3_candidate_path(j, in);
    if (std::abs(path.total_length() - r.distance) <= kWitnessTolerance) return path;
  }
  throw std::logic_error("opposite witness: no minimizer produced a path of minimal length");
}

}  // namespace cubegeo
