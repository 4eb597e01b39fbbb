#pragma once

// Seeded random surface points and isometries. Draws depend only on the raw
// 64-bit engine output, so a seed reproduces across standard libraries.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "cubegeo/surface.hpp"

namespace cubegeo {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

/// Seed of the k-th independent sub-stream of a run.
inline std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t k) {
  return splitmix64(splitmix64(seed) ^ (k + 1) * 0xD1B54A32D192ED03ull);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  /// Uniform integer in [0, n).
  std::size_t index(std::size_t n) {
    return static_cast<std::size_t>((static_cast<unsigned __int128>(gen_()) * n) >> 64);
  }

  int sign() { return (gen_() >> 63) ? 1 : -1; }
  bool chance(double p) { return unit() < p; }

 private:
  std::mt19937_64 gen_;
};

inline FaceId random_face(std::size_t n, Rng& rng) {
  return {static_cast<int>(rng.index(n)), rng.sign()};
}

/// Uniform point of the given facet.
inline SurfacePoint random_point_on(std::size_t n, FaceId f, Rng& rng) {
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rng.uniform(-1.0, 1.0);
  x[f.axis] = f.sign;
  return SurfacePoint::make(x, 0.0);
}

/// Facet chosen uniformly, then a uniform point on it.
inline SurfacePoint random_surface_point(std::size_t n, Rng& rng) {
  return random_point_on(n, random_face(n, rng), rng);
}

/// Point on an (n-k)-face: k >= 1 distinct axes pinned to random signs.
inline SurfacePoint random_boundary_point(std::size_t n, std::size_t pinned, Rng& rng) {
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rng.uniform(-1.0, 1.0);
  std::vector<int> axes(n);
  for (std::size_t i = 0; i < n; ++i) axes[i] = static_cast<int>(i);
  for (std::size_t k = 0; k < pinned && k < n; ++k) {
    std::swap(axes[k], axes[k + rng.index(n - k)]);
    x[axes[k]] = rng.sign();
  }
  return SurfacePoint::make(x, 0.0);
}

/// Uniform element of the hyperoctahedral group.
inline SignedPermutation random_isometry(std::size_t n, Rng& rng) {
  std::vector<int> perm(n), signs(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<int>(i);
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.index(i)]);
  for (auto& s : signs) s = rng.sign();
  return SignedPermutation(perm, signs);
}

enum class SampleClass { Adjacent, Opposite, SameFace, Mixed };

inline const char* to_string(SampleClass c) {
  switch (c) {
    case SampleClass::Adjacent: return "adjacent";
    case SampleClass::Opposite: return "opposite";
    case SampleClass::SameFace: return "same-face";
    case SampleClass::Mixed: return "mixed";
  }
  return "?";
}

/// A random pair of the requested class. Mixed pairs use arbitrary facets and
/// pin extra coordinates to +-1 with probability 1/4 per endpoint.
inline std::pair<SurfacePoint, SurfacePoint> random_pair(std::size_t n, SampleClass cls, Rng& rng) {
  FaceId fa = random_face(n, rng);
  switch (cls) {
    case SampleClass::SameFace:
      return {random_point_on(n, fa, rng), random_point_on(n, fa, rng)};
    case SampleClass::Opposite:
      return {random_point_on(n, fa, rng), random_point_on(n, {fa.axis, -fa.sign}, rng)};
    case SampleClass::Adjacent: {
      int axis = static_cast<int>(rng.index(n - 1));
      if (axis >= fa.axis) ++axis;
      return {random_point_on(n, fa, rng), random_point_on(n, {axis, rng.sign()}, rng)};
    }
    case SampleClass::Mixed: break;
  }
  auto draw = [&] {
    if (rng.chance(0.25)) return random_boundary_point(n, 2 + rng.index(n - 1), rng);
    return random_surface_point(n, rng);
  };
  auto a = draw();
  return {a, draw()};
}

}  // namespace cubegeo
