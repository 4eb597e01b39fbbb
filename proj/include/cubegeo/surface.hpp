#pragma once

// Points, faces, isometries and polyline paths on the boundary of the cube
// [-1,1]^n, i.e. the unit sphere of the sup norm.

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cubegeo {

inline constexpr double kDefaultTolerance = 1e-9;
inline constexpr std::size_t kMinDimension = 3;

/// Facet x[axis] == sign of the cube.
struct FaceId {
  int axis = 0;
  int sign = 1;

  friend constexpr auto operator<=>(const FaceId&, const FaceId&) = default;
};

/// "x1=+1" style, 1-based.
inline std::string to_string(FaceId f) {
  return "x" + std::to_string(f.axis + 1) + (f.sign > 0 ? "=+1" : "=-1");
}

/// A point of the cube surface together with every facet containing it.
///
/// Coordinates are stored exactly: extremal coordinates are snapped to +-1
/// at construction so that face incidence tests are exact comparisons.
class SurfacePoint {
 public:
  SurfacePoint() = default;

  static SurfacePoint make(std::span<const double> coords, double tol = kDefaultTolerance) {
    if (coords.size() < kMinDimension) {
      throw std::invalid_argument("surface point needs dimension >= 3, got " +
                                  std::to_string(coords.size()));
    }
    if (!(tol >= 0.0)) throw std::invalid_argument("tolerance must be nonnegative");
    double sup = 0.0;
    for (double c : coords) {
      if (!std::isfinite(c)) throw std::invalid_argument("surface point has non-finite coordinate");
      sup = std::max(sup, std::abs(c));
    }
    if (std::abs(sup - 1.0) > tol) {
      throw std::invalid_argument("point is not on the cube surface: sup norm " +
                                  std::to_string(sup));
    }
    SurfacePoint p;
    p.coords_.reserve(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) {
      double c = std::clamp(coords[i], -1.0, 1.0);
      if (std::abs(std::abs(c) - 1.0) <= tol) c = c > 0 ? 1.0 : -1.0;
      p.coords_.push_back(c);
      if (std::abs(c) == 1.0) p.faces_.push_back({static_cast<int>(i), c > 0 ? 1 : -1});
    }
    return p;
  }

  static SurfacePoint make(std::initializer_list<double> coords, double tol = kDefaultTolerance) {
    return make(std::span<const double>(coords.begin(), coords.size()), tol);
  }

  std::size_t dim() const { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  std::span<const double> coords() const { return coords_; }
  const std::vector<FaceId>& faces() const { return faces_; }

  bool on_face(FaceId f) const {
    return f.axis >= 0 && static_cast<std::size_t>(f.axis) < coords_.size() &&
           coords_[f.axis] == static_cast<double>(f.sign);
  }

  friend bool operator==(const SurfacePoint& a, const SurfacePoint& b) {
    return a.coords_ == b.coords_;
  }

 private:
  std::vector<double> coords_;
  std::vector<FaceId> faces_;  // sorted by (axis, sign)
};

inline SurfacePoint make_surface_point(std::span<const double> coords,
                                       double tol = kDefaultTolerance) {
  return SurfacePoint::make(coords, tol);
}

inline void require_same_dim(const SurfacePoint& a, const SurfacePoint& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                                std::to_string(b.dim()));
  }
}

inline double sup_distance(std::span<const double> a, std::span<const double> b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

inline double sup_distance(const SurfacePoint& a, const SurfacePoint& b) {
  require_same_dim(a, b);
  return sup_distance(a.coords(), b.coords());
}

inline std::optional<FaceId> common_face(const SurfacePoint& a, const SurfacePoint& b) {
  for (FaceId f : a.faces()) {
    if (b.on_face(f)) return f;
  }
  return std::nullopt;
}

/// Piecewise-linear path whose legs each lie in a single facet.
class GeodesicPath {
 public:
  GeodesicPath() = default;

  /// Every leg must have both endpoints on a common facet. Zero-length legs
  /// are kept so a construction's vertex count is preserved.
  explicit GeodesicPath(std::vector<SurfacePoint> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty()) throw std::invalid_argument("path needs at least one vertex");
    for (const auto& v : vertices_) require_same_dim(vertices_.front(), v);
    for (std::size_t k = 0; k + 1 < vertices_.size(); ++k) {
      if (!common_face(vertices_[k], vertices_[k + 1])) {
        throw std::invalid_argument("path leg " + std::to_string(k) +
                                    " leaves the surface: endpoints share no facet");
      }
      legs_.push_back(sup_distance(vertices_[k], vertices_[k + 1]));
    }
    total_ = std::accumulate(legs_.begin(), legs_.end(), 0.0);
  }

  const std::vector<SurfacePoint>& vertices() const { return vertices_; }
  const std::vector<double>& leg_lengths() const { return legs_; }
  double total_length() const { return total_; }
  std::size_t size() const { return vertices_.size(); }
  std::size_t dim() const { return vertices_.empty() ? 0 : vertices_.front().dim(); }
  const SurfacePoint& front() const { return vertices_.front(); }
  const SurfacePoint& back() const { return vertices_.back(); }

  /// Interior vertices lie on (n-2)-faces, i.e. on at least two facets.
  bool interior_on_ridges() const {
    for (std::size_t k = 1; k + 1 < vertices_.size(); ++k) {
      if (vertices_[k].faces().size() < 2) return false;
    }
    return true;
  }

  GeodesicPath reversed() const {
    std::vector<SurfacePoint> v(vertices_.rbegin(), vertices_.rend());
    return GeodesicPath(std::move(v));
  }

 private:
  std::vector<SurfacePoint> vertices_;
  std::vector<double> legs_;
  double total_ = 0.0;
};

/// Sum of sup-norm leg lengths of a vertex sequence; throws if a leg leaves
/// the surface.
inline double path_length(std::span<const SurfacePoint> vertices) {
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < vertices.size(); ++k) {
    if (!common_face(vertices[k], vertices[k + 1])) {
      throw std::invalid_argument("path leg " + std::to_string(k) + " endpoints share no facet");
    }
    total += sup_distance(vertices[k], vertices[k + 1]);
  }
  return total;
}

inline double path_length(const GeodesicPath& path) { return path_length(path.vertices()); }

/// Cube isometry x -> y with y[perm[i]] = signs[i] * x[i].
class SignedPermutation {
 public:
  SignedPermutation() = default;

  SignedPermutation(std::vector<int> perm, std::vector<int> signs)
      : perm_(std::move(perm)), signs_(std::move(signs)) {
    if (perm_.size() != signs_.size()) throw std::invalid_argument("perm/signs size mismatch");
    std::vector<bool> seen(perm_.size(), false);
    for (std::size_t i = 0; i < perm_.size(); ++i) {
      int p = perm_[i];
      if (p < 0 || static_cast<std::size_t>(p) >= perm_.size() || seen[p]) {
        throw std::invalid_argument("not a permutation");
      }
      seen[p] = true;
      if (signs_[i] != 1 && signs_[i] != -1) throw std::invalid_argument("signs must be +-1");
    }
  }

  static SignedPermutation identity(std::size_t n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    return SignedPermutation(std::move(perm), std::vector<int>(n, 1));
  }

  std::size_t dim() const { return perm_.size(); }
  const std::vector<int>& perm() const { return perm_; }
  const std::vector<int>& signs() const { return signs_; }

  std::vector<double> apply(std::span<const double> x) const {
    check_dim(x.size());
    std::vector<double> y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[perm_[i]] = signs_[i] > 0 ? x[i] : -x[i];
    return y;
  }

  SurfacePoint apply(const SurfacePoint& p) const {
    auto y = apply(p.coords());
    return SurfacePoint::make(y, 0.0);
  }

  FaceId apply(FaceId f) const {
    check_dim(static_cast<std::size_t>(f.axis) + 1);
    return {perm_[f.axis], signs_[f.axis] * f.sign};
  }

  GeodesicPath apply(const GeodesicPath& path) const {
    std::vector<SurfacePoint> v;
    v.reserve(path.size());
    for (const auto& p : path.vertices()) v.push_back(apply(p));
    return GeodesicPath(std::move(v));
  }

  /// (*this) after inner: x -> this(inner(x)).
  SignedPermutation compose(const SignedPermutation& inner) const {
    check_dim(inner.dim());
    std::vector<int> perm(dim()), signs(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      int mid = inner.perm_[i];
      perm[i] = perm_[mid];
      signs[i] = signs_[mid] * inner.signs_[i];
    }
    return SignedPermutation(std::move(perm), std::move(signs));
  }

  SignedPermutation inverse() const {
    std::vector<int> perm(dim()), signs(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      perm[perm_[i]] = static_cast<int>(i);
      signs[perm_[i]] = signs_[i];
    }
    return SignedPermutation(std::move(perm), std::move(signs));
  }

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;

 private:
  void check_dim(std::size_t n) const {
    if (n > perm_.size()) throw std::invalid_argument("isometry dimension mismatch");
  }

  std::vector<int> perm_;
  std::vector<int> signs_;
};

enum class PairKind { SameFace, Adjacent, Opposite };

inline const char* to_string(PairKind k) {
  switch (k) {
    case PairKind::SameFace: return "same-face";
    case PairKind::Adjacent: return "adjacent";
    case PairKind::Opposite: return "opposite";
  }
  return "?";
}

/// One way of assigning a facet to each endpoint.
struct PairClass {
  PairKind kind = PairKind::SameFace;
  FaceId face_a;
  FaceId face_b;

  friend bool operator==(const PairClass&, const PairClass&) = default;
};

/// All facet assignments for a pair. A single SameFace entry when the points
/// share a facet; otherwise every (face of a, face of b) combination.
inline std::vector<PairClass> classify_pair(const SurfacePoint& a, const SurfacePoint& b) {
  require_same_dim(a, b);
  if (auto f = common_face(a, b)) return {PairClass{PairKind::SameFace, *f, *f}};
  std::vector<PairClass> out;
  for (FaceId fa : a.faces()) {
    for (FaceId fb : b.faces()) {
      PairKind kind = fa.axis == fb.axis ? PairKind::Opposite : PairKind::Adjacent;
      out.push_back({kind, fa, fb});
    }
  }
  return out;
}

struct Canonical {
  SignedPermutation g;
  SurfacePoint a;
  SurfacePoint b;
};

/// Isometry sending a's facet to x0 = +1 and b's facet to x1 = +1 (adjacent)
/// or x0 = -1 (opposite). Remaining axes keep their relative order.
inline Canonical canonicalize(const SurfacePoint& a, const SurfacePoint& b,
                              const PairClass& assignment) {
  require_same_dim(a, b);
  if (assignment.kind == PairKind::SameFace) {
    throw std::invalid_argument("canonicalize: same-face pairs have no normal form");
  }
  const bool same_axis = assignment.face_a.axis == assignment.face_b.axis;
  if (same_axis != (assignment.kind == PairKind::Opposite) ||
      (same_axis && assignment.face_a.sign == assignment.face_b.sign) ||
      !a.on_face(assignment.face_a) || !b.on_face(assignment.face_b)) {
    throw std::invalid_argument("canonicalize: assignment does not match the points");
  }
  const std::size_t n = a.dim();
  std::vector<int> perm(n, -1), signs(n, 1);
  perm[assignment.face_a.axis] = 0;
  signs[assignment.face_a.axis] = assignment.face_a.sign;
  int next = 1;
  if (assignment.kind == PairKind::Adjacent) {
    perm[assignment.face_b.axis] = 1;
    signs[assignment.face_b.axis] = assignment.face_b.sign;
    next = 2;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (perm[i] < 0) perm[i] = next++;
  }
  SignedPermutation g(std::move(perm), std::move(signs));
  return {g, g.apply(a), g.apply(b)};
}

}  // namespace cubegeo
