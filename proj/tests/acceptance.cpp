// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "cubegeo/cubegeo.hpp"
#include "support.hpp"

using namespace cubegeo;
namespace T = cubegeo::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

bool run_criterion(int id, const char* title, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("criterion %2d %s: %s (%.1fs) %s\n", id, o.pass ? "PASS" : "FAIL", title, secs, o.detail.c_str());
  std::fflush(stdout);
  return o.pass;
}

std::string num(double v) { return format_number(v); }

AdjacentInput random_adjacent(Rng& rng) {
  return {rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
}

OppositeInput random_opposite(Rng& rng) {
  return {rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
}

// 1. The twelve strict-minimum instances, in units of 1/20.
Outcome criterion1() {
  const long ex[12][5] = {{1, 1, 0, 1, 0},      {2, -20, -19, -20, -19}, {3, -19, 20, -19, 20},
                          {4, -19, -20, -19, -20}, {5, -19, 1, 19, 0},     {6, -19, -20, 1, 0},
                          {7, -19, 20, -20, -19}, {8, -19, -20, -20, -19}, {9, 1, -19, -1, 20},
                          {10, 1, 0, -19, -20},   {11, -20, -19, -19, 20}, {12, -20, -19, -19, -20}};
  Outcome o;
  auto strict_min = [](const std::array<long, 12>& s, int i) {
    for (int j = 0; j < 12; ++j) {
      if (j != i - 1 && !(s[i - 1] < s[j])) return false;
    }
    return true;
  };
  for (const auto& e : ex) {
    auto s = T::opposite_values_scaled(e[1], e[2], e[3], e[4], 20);
    auto r = opposite3_distance({e[1] / 20.0, e[2] / 20.0, e[3] / 20.0, e[4] / 20.0}, 0.0);
    if (!strict_min(s, static_cast<int>(e[0])) || r.minimizers() != std::vector<int>{static_cast<int>(e[0])}) {
      o = {false, "instance " + std::to_string(e[0]) + " does not select its index"};
      return o;
    }
  }
  auto s1 = T::opposite_values_scaled(1, 0, 1, 0, 20);
  if (s1[0] != 78) return {false, "s1 != 3.9"};
  auto s6 = T::opposite_values_scaled(-19, -20, 1, 0, 20);
  if (s6[5] != 59 || 40 + 19 + 0 != 80 - 20 - 1) return {false, "s6 != 2.95 or branches differ"};
  auto x1 = T::opposite_values_scaled(-19, -19, 1, 0, 20);
  auto x2 = T::opposite_values_scaled(-19, -20, 1, 1, 20);
  if (!strict_min(x1, 6) || !(40 + 19 + 0 < 80 - 19 - 1)) return {false, "extra s6 instance 1"};
  if (!strict_min(x2, 6) || !(40 + 19 + 1 > 80 - 20 - 1)) return {false, "extra s6 instance 2"};
  o.detail = "12 instances + 2 extra s6 instances";
  return o;
}

// 2. Condition sets <=> minimality, boundary-resampled.
Outcome criterion2() {
  Rng rng(20260101);
  std::size_t resampled = 0, violations = 0;
  std::string first;
  for (int i = 0; i < 10000; ++i) {
    auto in = random_adjacent(rng);
    while (detail::adjacent_near_boundary(in)) in = random_adjacent(rng), ++resampled;
    auto r = adjacent3_distance(in, 1e-12);
    for (auto q : {AdjacentQuantity::Alpha, AdjacentQuantity::Beta, AdjacentQuantity::Gamma}) {
      if (r.condition_group(q) != r.is_minimal(q)) {
        ++violations;
        if (first.empty()) first = std::string("adjacent ") + to_string(q);
      }
    }
  }
  for (int i = 0; i < 10000; ++i) {
    auto in = random_opposite(rng);
    while (detail::opposite_near_boundary(in)) in = random_opposite(rng), ++resampled;
    auto r = opposite3_distance(in, 1e-12);
    for (int j = 0; j < 12; ++j) {
      if (r.conditions[j].holds != r.minimal[j]) {
        ++violations;
        if (first.empty()) first = "opposite s" + std::to_string(j + 1);
      }
    }
  }
  return {violations == 0, "2x10^4 inputs, resampled " + std::to_string(resampled) + ", violations " +
                               std::to_string(violations) + (first.empty() ? "" : " first " + first)};
}

// 3. Clauses 42-44 at the two counterexample points, in units of 1/30.
Outcome criterion3() {
  auto clauses = [](long a, long b, long c, long d) {
    const long one = 30;
    std::array<bool, 3> h{};
    h[0] = a + b <= 0 && c + d >= 0 && std::abs(a + d) <= c - b && b + d <= a + c && b <= 0 && c >= 0;
    h[1] = b == -one && c >= 0 && -c <= d && d <= one + a + c;
    h[2] = b == -one && d >= one - a - c;
    return h;
  };
  auto p = clauses(1, -30, -1, 30), q = clauses(1, -30, 0, 30);
  auto has = [](const ConditionHits& h, int k) {
    return std::find(h.clauses.begin(), h.clauses.end(), k) != h.clauses.end();
  };
  auto lp = s6_conditions({1 / 30.0, -1, -1 / 30.0, 1}), lq = s6_conditions({1 / 30.0, -1, 0, 1});
  const bool exact_ok = p[2] && !p[0] && q[1] && !q[0];
  const bool lib_ok = has(lp, 44) && !has(lp, 42) && has(lq, 43) && !has(lq, 42);
  return {exact_ok && lib_ok, std::string("rational ") + (exact_ok ? "ok" : "mismatch") + ", library " +
                                  (lib_ok ? "ok" : "mismatch")};
}

// 4. Oracle agreement at n = 3.
Outcome criterion4() {
  GridOracle grid(3, 200);
  double worst_exact = 0, worst_grid = 0;
  std::size_t bad = 0;
  for (auto cls : {SampleClass::Adjacent, SampleClass::Opposite, SampleClass::SameFace, SampleClass::Mixed}) {
    Rng rng(sub_seed(4, static_cast<std::uint64_t>(cls)));
    for (int i = 0; i < 10000; ++i) {
      auto [a, b] = random_pair(3, cls, rng);
      const double d = geodesic_length(a, b);
      const double de = std::abs(exact_oracle(a, b).distance - d);
      const double dg = std::abs(grid.distance(a, b) - d);
      worst_exact = std::max(worst_exact, de);
      worst_grid = std::max(worst_grid, dg);
      bad += !(de <= 1e-9) || !(dg <= 0.06);
    }
  }
  return {bad == 0, "4x10^4 pairs, max exact delta " + num(worst_exact) + ", max grid delta " + num(worst_grid)};
}

// 5. Oracle agreement at n = 4.
Outcome criterion5() {
  GridOracle grid(4, 40);
  double worst = 0;
  std::size_t bad = 0;
  for (auto cls : {SampleClass::Adjacent, SampleClass::Opposite, SampleClass::SameFace, SampleClass::Mixed}) {
    Rng rng(sub_seed(5, static_cast<std::uint64_t>(cls)));
    for (int i = 0; i < 100; ++i) {
      auto [a, b] = random_pair(4, cls, rng);
      const double dg = std::abs(grid.distance(a, b) - geodesic_length(a, b));
      worst = std::max(worst, dg);
      bad += !(dg <= 0.4);
    }
  }
  return {bad == 0, "400 pairs, max grid delta " + num(worst)};
}

// 6. Enumeration minimum equals the three-dimensional closed forms bitwise.
Outcome criterion6() {
  Rng rng(6);
  std::size_t bad = 0;
  for (int i = 0; i < 10000; ++i) {
    auto in = random_adjacent(rng);
    std::vector<double> a{1, in.ay, in.az}, b{in.bx, 1, in.bz};
    auto r = adjacent3_distance(in);
    bad += minimize_candidates(Family::Adjacent, a, b).value != std::min({r.alpha, r.beta, r.gamma});
    auto on = random_opposite(rng);
    std::vector<double> oa{1, on.a, on.b}, ob{-1, on.c, on.d};
    auto s = opposite3_values(on);
    bad += minimize_candidates(Family::Opposite, oa, ob).value != *std::min_element(s.begin(), s.end());
  }
  return {bad == 0, "10^4 inputs per family, mismatches " + std::to_string(bad)};
}

// 7. Candidate counts.
Outcome criterion7() {
  const std::uint64_t expected[] = {3, 13, 79, 633, 6331, 75973};
  auto falling_sum = [](unsigned m) {
    std::uint64_t total = 0;
    for (unsigned k = 0; k <= m; ++k) {
      std::uint64_t t = 1;
      for (unsigned i = 0; i < k; ++i) t *= 2 * (m - i);
      total += t;
    }
    return total;
  };
  std::ostringstream detail;
  bool ok = true;
  for (std::size_t n = 3; n <= 8; ++n) {
    std::uint64_t na = 0, no = 0;
    Candidate c;
    for (CandidateStream s(Family::Adjacent, n); s.next(c);) ++na;
    for (CandidateStream s(Family::Opposite, n); s.next(c);) ++no;
    const unsigned m = static_cast<unsigned>(n);
    ok = ok && na == expected[n - 3] && na == falling_sum(m - 2) && na == floor_sqrt_e_product(m - 2) &&
         no == falling_sum(m - 1) - 1 && no == floor_sqrt_e_product(m - 1) - 1 &&
         (n == 8 || no == expected[n - 2] - 1);
    detail << "n=" << n << ":" << na << "/" << no << " ";
  }
  return {ok, detail.str()};
}

// 8. Two-leg shortest paths <=> conditions (1)-(4).
Outcome criterion8() {
  Rng rng(8);
  std::size_t bad = 0, two_leg = 0, resampled = 0;
  for (int i = 0; i < 10000; ++i) {
    auto in = random_adjacent(rng);
    while (detail::adjacent_near_boundary(in)) in = random_adjacent(rng), ++resampled;
    auto r = adjacent3_distance(in);
    const bool lhs = std::abs(restricted_exact_oracle(in.point_a(), in.point_b(), 2) - r.distance) <= 1e-9;
    two_leg += lhs;
    bad += lhs != r.condition_group(AdjacentQuantity::Alpha);
  }
  return {bad == 0, "10^4 inputs, two-leg " + std::to_string(two_leg) + ", resampled " +
                        std::to_string(resampled) + ", violations " + std::to_string(bad)};
}

// 9. Planar four-point witnesses for beta- and gamma-minimal inputs.
Outcome criterion9() {
  Rng rng(9);
  double worst_det = 0, worst_len = 0;
  std::size_t bad = 0;
  for (auto q : {AdjacentQuantity::Beta, AdjacentQuantity::Gamma}) {
    int found = 0;
    while (found < 1000) {
      auto in = random_adjacent(rng);
      auto r = adjacent3_distance(in);
      if (!r.is_minimal(q) || r.is_minimal(AdjacentQuantity::Alpha)) continue;
      ++found;
      auto v = T::vertices(adjacent3_witness(in));
      if (v.size() != 4) {
        ++bad;
        continue;
      }
      std::array<T::Vec, 3> d;
      for (int k = 0; k < 3; ++k) d[k] = {v[k + 1][0] - v[0][0], v[k + 1][1] - v[0][1], v[k + 1][2] - v[0][2]};
      const double det = d[0][0] * (d[1][1] * d[2][2] - d[1][2] * d[2][1]) -
                         d[0][1] * (d[1][0] * d[2][2] - d[1][2] * d[2][0]) +
                         d[0][2] * (d[1][0] * d[2][1] - d[1][1] * d[2][0]);
      const double len = std::abs(T::polyline_length(v) - r.distance);
      worst_det = std::max(worst_det, std::abs(det));
      worst_len = std::max(worst_len, len);
      bool ridges = true;
      for (int k = 1; k <= 2; ++k) {
        int unit = 0;
        for (double x : v[k]) unit += std::abs(x) == 1.0;
        ridges = ridges && unit >= 2;
      }
      bool legs = T::share_facet(v[0], v[1]) && T::share_facet(v[1], v[2]) && T::share_facet(v[2], v[3]);
      bad += !(std::abs(det) <= 1e-9) || !(len <= 1e-12) || !ridges || !legs;
    }
  }
  return {bad == 0, "2x10^3 inputs, max |det| " + num(worst_det) + ", max length delta " + num(worst_len)};
}

// 10. Metric properties on random triples.
Outcome criterion10() {
  std::size_t bad = 0;
  std::string first;
  auto fail = [&](const std::string& what) {
    ++bad;
    if (first.empty()) first = what;
  };
  for (std::size_t n : {3u, 4u}) {
    Rng rng(sub_seed(10, n));
    for (int i = 0; i < 1000; ++i) {
      auto [a, b] = random_pair(n, SampleClass::Mixed, rng);
      auto c = rng.chance(0.5) ? random_surface_point(n, rng) : random_boundary_point(n, 2, rng);
      const double ab = geodesic_length(a, b), ac = geodesic_length(a, c), cb = geodesic_length(c, b);
      if (geodesic_length(b, a) != ab) fail("symmetry");
      if (!(ab <= ac + cb + 1e-9)) fail("triangle");
      if (ab < sup_distance(a, b)) fail("sup-norm bound");
      if ((ab == 0.0) != (a == b) || geodesic_length(a, a) != 0.0) fail("identity");
      for (int k = 0; k < 50; ++k) {
        auto g = random_isometry(n, rng);
        if (geodesic_length(g.apply(a), g.apply(b)) != ab) fail("isometry");
      }
    }
  }
  return {bad == 0, "10^3 triples at n=3 and n=4, 50 isometries per pair, violations " + std::to_string(bad) +
                        (first.empty() ? "" : " first " + first)};
}

// 11. m! 2^m R_m < 1.
Outcome criterion11() {
  bool ok = true;
  std::ostringstream detail;
  for (unsigned m = 1; m <= 12; ++m) {
    const long double r = counting_remainder(m);
    // Geometric bound: terms shrink by at least 1/(2(m+2)) after the first.
    const long double bound = (1.0L / (2 * (m + 1))) / (1.0L - 1.0L / (2 * (m + 2)));
    ok = ok && r > 0 && r < 1 && r <= bound;
    if (m == 1 || m == 12) detail << "m=" << m << ":" << static_cast<double>(r) << " ";
  }
  return {ok, detail.str()};
}

}  // namespace

int main() {
  bool all = true;
  all &= run_criterion(1, "opposite example instances", criterion1);
  all &= run_criterion(2, "condition sets iff minimality", criterion2);
  all &= run_criterion(3, "s6 counterexample pair", criterion3);
  all &= run_criterion(4, "oracle agreement n=3", criterion4);
  all &= run_criterion(5, "oracle agreement n=4", criterion5);
  all &= run_criterion(6, "enumeration equals closed forms", criterion6);
  all &= run_criterion(7, "candidate counts", criterion7);
  all &= run_criterion(8, "two-leg paths iff conditions (1)-(4)", criterion8);
  all &= run_criterion(9, "planar witnesses", criterion9);
  all &= run_criterion(10, "metric properties", criterion10);
  all &= run_criterion(11, "counting remainder below 1", criterion11);
  std::printf("%s\n", all ? "ALL PASS" : "SOME CRITERIA FAILED");
  return all ? 0 : 1;
}
