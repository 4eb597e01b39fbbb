// Distance, provenance and a witness path for a few point pairs.

#include <cstdio>

#include "cubegeo/cubegeo.hpp"

int main() {
  using cubegeo::SurfacePoint;

  auto a = SurfacePoint::make({1, 0.05, 0});
  auto b = SurfacePoint::make({-1, 0.05, 0});
  auto r = cubegeo::geodesic_distance(a, b);
  std::printf("distance %.17g via %s\n", r.distance, r.provenance.label.c_str());
  std::printf("%s", cubegeo::export_path(r.witness, cubegeo::PathFormat::Csv).c_str());

  // n = 4: minimum over every facet assignment of the pair.
  auto p = SurfacePoint::make({1, 0.3, -0.2, 0.5});
  auto q = SurfacePoint::make({0.1, -0.4, 1, -1});
  auto r4 = cubegeo::geodesic_distance(p, q);
  std::printf("n=4 distance %.17g via %s, %zu vertices\n", r4.distance, r4.provenance.label.c_str(),
              r4.witness.size());
  return 0;
}
