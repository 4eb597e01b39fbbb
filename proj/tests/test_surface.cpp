#include <gtest/gtest.h>

#include "cubegeo/sampling.hpp"
#include "cubegeo/surface.hpp"
#include "support.hpp"

using namespace cubegeo;
using cubegeo::testing::Vec;

TEST(SurfacePoint, SingleFace) {
  auto p = SurfacePoint::make({1, 0.5, 0});
  ASSERT_EQ(p.faces().size(), 1u);
  EXPECT_EQ(p.faces()[0], (FaceId{0, 1}));
}

TEST(SurfacePoint, CornerOnThreeFaces) {
  auto p = SurfacePoint::make({1, 1, 1});
  EXPECT_EQ(p.faces(), (std::vector<FaceId>{{0, 1}, {1, 1}, {2, 1}}));
}

TEST(SurfacePoint, RejectsInterior) {
  EXPECT_THROW(SurfacePoint::make({0.5, 0.5, 0.5}), std::invalid_argument);
}

TEST(SurfacePoint, RejectsLowDimensionAndNonFinite) {
  EXPECT_THROW(SurfacePoint::make(Vec{1, 0}), std::invalid_argument);
  EXPECT_THROW(SurfacePoint::make({1, NAN, 0}), std::invalid_argument);
  EXPECT_THROW(SurfacePoint::make({1, INFINITY, 0}), std::invalid_argument);
  EXPECT_THROW(SurfacePoint::make({1.1, 0, 0}), std::invalid_argument);
}

TEST(SurfacePoint, SnapsWithinTolerance) {
  auto p = SurfacePoint::make({1 + 1e-10, -1 + 5e-10, 0.25});
  EXPECT_EQ(p[0], 1.0);
  EXPECT_EQ(p[1], -1.0);
  EXPECT_EQ(p.faces(), (std::vector<FaceId>{{0, 1}, {1, -1}}));
  EXPECT_THROW(SurfacePoint::make({1 + 1e-6, 0, 0}), std::invalid_argument);
  // Zero tolerance keeps near-extremal coordinates as they are.
  auto q = SurfacePoint::make({1, 1 - 1e-12, 0}, 0.0);
  EXPECT_EQ(q.faces().size(), 1u);
}

TEST(SurfacePoint, IncidenceIsExactOnRandomPoints) {
  Rng rng(3);
  for (int i = 0; i < 2000; ++i) {
    std::size_t n = 3 + rng.index(4);
    auto p = rng.chance(0.5) ? random_surface_point(n, rng) : random_boundary_point(n, 1 + rng.index(n), rng);
    EXPECT_TRUE(cubegeo::testing::on_surface(cubegeo::testing::coords(p)));
    std::size_t incident = 0;
    for (std::size_t k = 0; k < n; ++k) incident += std::abs(p[k]) == 1.0;
    EXPECT_EQ(incident, p.faces().size());
    for (auto f : p.faces()) EXPECT_EQ(p[f.axis], f.sign);
  }
}

TEST(PathLength, SpecExamples) {
  EXPECT_EQ(GeodesicPath({SurfacePoint::make({1, 0.5, 0})}).total_length(), 0.0);
  EXPECT_EQ(GeodesicPath({SurfacePoint::make({1, 0, 0}), SurfacePoint::make({1, 1, 0})}).total_length(), 1.0);
  std::vector<SurfacePoint> corner{SurfacePoint::make({1, 0.5, 0}), SurfacePoint::make({1, 1, 0.25}),
                                   SurfacePoint::make({0.5, 1, 0})};
  EXPECT_DOUBLE_EQ(path_length(corner), 1.0);
  EXPECT_DOUBLE_EQ(cubegeo::testing::polyline_length({{1, 0.5, 0}, {1, 1, 0.25}, {0.5, 1, 0}}), 1.0);
}

TEST(PathLength, RejectsLegOffTheSurface) {
  std::vector<SurfacePoint> bad{SurfacePoint::make({1, 0, 0}), SurfacePoint::make({-1, 0, 0})};
  EXPECT_THROW(path_length(bad), std::invalid_argument);
  EXPECT_THROW(GeodesicPath{bad}, std::invalid_argument);
  EXPECT_THROW(GeodesicPath(std::vector<SurfacePoint>{}), std::invalid_argument);
}

TEST(GeodesicPath, KeepsZeroLengthLegsAndReverses) {
  auto a = SurfacePoint::make({1, 1, 0}), b = SurfacePoint::make({0, 1, 1});
  GeodesicPath p({a, a, b});
  EXPECT_EQ(p.size(), 3u);
  EXPECT_EQ(p.leg_lengths(), (std::vector<double>{0.0, 1.0}));
  auto r = p.reversed();
  EXPECT_EQ(r.front(), b);
  EXPECT_EQ(r.back(), a);
  EXPECT_EQ(r.total_length(), p.total_length());
  EXPECT_TRUE(p.interior_on_ridges());
  EXPECT_FALSE(GeodesicPath({SurfacePoint::make({1, 0, 0}), SurfacePoint::make({1, 0.5, 0}),
                             SurfacePoint::make({1, 0, 0.5})})
                   .interior_on_ridges());
}

TEST(SignedPermutation, ApplyComposeInverse) {
  SignedPermutation g({2, 0, 1}, {1, -1, 1});
  auto y = g.apply(Vec{0.1, 0.2, 0.3});
  EXPECT_EQ(y, (Vec{-0.2, 0.3, 0.1}));
  EXPECT_EQ(g.inverse().apply(y), (Vec{0.1, 0.2, 0.3}));
  EXPECT_EQ(g.compose(g.inverse()), SignedPermutation::identity(3));
  SignedPermutation h({1, 0, 2}, {1, 1, -1});
  Vec x{0.3, -0.7, 1};
  EXPECT_EQ(g.compose(h).apply(x), g.apply(h.apply(x)));
  EXPECT_EQ(g.apply(FaceId{1, 1}), (FaceId{0, -1}));
  EXPECT_THROW(SignedPermutation({0, 0, 1}, {1, 1, 1}), std::invalid_argument);
  EXPECT_THROW(SignedPermutation({0, 1, 2}, {1, 0, 1}), std::invalid_argument);
}

TEST(SignedPermutation, PreservesLengthsExactly) {
  Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    std::size_t n = 3 + rng.index(3);
    auto g = random_isometry(n, rng);
    auto a = random_surface_point(n, rng);
    auto f = a.faces().front();
    auto b = random_point_on(n, f, rng);
    auto c = random_point_on(n, {static_cast<int>((f.axis + 1) % n), 1}, rng);
    // a -> corner on both facets -> c
    std::vector<double> mid(b.coords().begin(), b.coords().end());
    mid[(f.axis + 1) % n] = 1;
    GeodesicPath p({a, b, SurfacePoint::make(mid, 0.0), c});
    auto q = g.apply(p);
    EXPECT_EQ(q.total_length(), p.total_length());
    EXPECT_EQ(g.inverse().apply(q).vertices(), p.vertices());
    EXPECT_GE(p.total_length(), sup_distance(a, c));
  }
}

TEST(ClassifyPair, SpecExamples) {
  auto a = SurfacePoint::make({1, 0, 0});
  auto pcs = classify_pair(a, SurfacePoint::make({0, 1, 0}));
  ASSERT_EQ(pcs.size(), 1u);
  EXPECT_EQ(pcs[0], (PairClass{PairKind::Adjacent, {0, 1}, {1, 1}}));

  pcs = classify_pair(a, SurfacePoint::make({-1, 0.2, 0}));
  ASSERT_EQ(pcs.size(), 1u);
  EXPECT_EQ(pcs[0], (PairClass{PairKind::Opposite, {0, 1}, {0, -1}}));

  pcs = classify_pair(SurfacePoint::make({1, 1, 1}), SurfacePoint::make({-1, 0, 0}));
  ASSERT_EQ(pcs.size(), 3u);
  EXPECT_EQ(pcs[0], (PairClass{PairKind::Opposite, {0, 1}, {0, -1}}));
  EXPECT_EQ(pcs[1], (PairClass{PairKind::Adjacent, {1, 1}, {0, -1}}));
  EXPECT_EQ(pcs[2], (PairClass{PairKind::Adjacent, {2, 1}, {0, -1}}));

  pcs = classify_pair(SurfacePoint::make({1, 0.2, 0.3}), SurfacePoint::make({1, -0.4, 0.5}));
  ASSERT_EQ(pcs.size(), 1u);
  EXPECT_EQ(pcs[0].kind, PairKind::SameFace);
}

TEST(Canonicalize, IdentityForStandardPair) {
  auto a = SurfacePoint::make({1, 0.2, 0.3}), b = SurfacePoint::make({0.4, 1, -0.5});
  auto c = canonicalize(a, b, classify_pair(a, b)[0]);
  EXPECT_EQ(c.g, SignedPermutation::identity(3));
  EXPECT_EQ(c.a, a);
  EXPECT_EQ(c.b, b);
}

TEST(Canonicalize, MovesFacesToNormalForm) {
  auto a = SurfacePoint::make({0, -1, 0.3}), b = SurfacePoint::make({0.2, 0.5, 1});
  auto pcs = classify_pair(a, b);
  ASSERT_EQ(pcs.size(), 1u);
  auto c = canonicalize(a, b, pcs[0]);
  EXPECT_EQ(c.a[0], 1.0);
  EXPECT_EQ(c.b[1], 1.0);
  EXPECT_EQ(c.g.perm()[1], 0);
  EXPECT_EQ(c.g.signs()[1], -1);
  EXPECT_EQ(c.g.perm()[2], 1);
  EXPECT_EQ(c.g.inverse().apply(c.a), a);
  EXPECT_EQ(c.g.inverse().apply(c.b), b);
}

TEST(Canonicalize, RejectsSameFaceAndMismatchedAssignments) {
  auto a = SurfacePoint::make({1, 0, 0}), b = SurfacePoint::make({1, 0.5, 0});
  EXPECT_THROW(canonicalize(a, b, classify_pair(a, b)[0]), std::invalid_argument);
  auto c = SurfacePoint::make({0, 1, 0});
  EXPECT_THROW(canonicalize(a, c, {PairKind::Opposite, {0, 1}, {1, 1}}), std::invalid_argument);
  EXPECT_THROW(canonicalize(a, c, {PairKind::Adjacent, {0, 1}, {2, 1}}), std::invalid_argument);
}

TEST(Canonicalize, RoundTripOnRandomPairs) {
  Rng rng(5);
  for (int i = 0; i < 2000; ++i) {
    std::size_t n = 3 + rng.index(4);
    auto [a, b] = random_pair(n, rng.chance(0.5) ? SampleClass::Adjacent : SampleClass::Mixed, rng);
    for (const auto& pc : classify_pair(a, b)) {
      if (pc.kind == PairKind::SameFace) continue;
      auto c = canonicalize(a, b, pc);
      EXPECT_EQ(c.a[0], 1.0);
      EXPECT_EQ(pc.kind == PairKind::Adjacent ? c.b[1] : c.b[0], pc.kind == PairKind::Adjacent ? 1.0 : -1.0);
      EXPECT_EQ(c.g.inverse().apply(c.a), a);
      EXPECT_EQ(c.g.inverse().apply(c.b), b);
      EXPECT_EQ(sup_distance(c.a, c.b), sup_distance(a, b));
    }
  }
}
