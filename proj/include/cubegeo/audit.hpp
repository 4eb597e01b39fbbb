#pragma once

// Seeded batch audit of the closed forms against the exact and grid oracles,
// the minimality conditions, the two-leg criterion and metric properties.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "cubegeo/adjacent3.hpp"
#include "cubegeo/export.hpp"
#include "cubegeo/geodesic.hpp"
#include "cubegeo/opposite3.hpp"
#include "cubegeo/oracle.hpp"
#include "cubegeo/sampling.hpp"

namespace cubegeo {

enum class AuditOracle { Exact, Grid, Both };

inline SampleClass parse_sample_class(const std::string& s) {
  for (auto c : {SampleClass::Adjacent, SampleClass::Opposite, SampleClass::SameFace, SampleClass::Mixed}) {
    if (s == to_string(c)) return c;
  }
  throw std::invalid_argument("unknown class '" + s + "' (adjacent|opposite|same-face|mixed)");
}

inline const char* to_string(AuditOracle o) {
  switch (o) {
    case AuditOracle::Exact: return "exact";
    case AuditOracle::Grid: return "grid";
    case AuditOracle::Both: return "both";
  }
  return "?";
}

inline AuditOracle parse_audit_oracle(const std::string& s) {
  for (auto o : {AuditOracle::Exact, AuditOracle::Grid, AuditOracle::Both}) {
    if (s == to_string(o)) return o;
  }
  throw std::invalid_argument("unknown oracle '" + s + "' (exact|grid|both)");
}

inline constexpr double kExactOracleTolerance = 1e-9;
inline constexpr double kBoundaryMargin = 1e-9;

/// Grid tolerance in units of h: 6 for n = 3, 8 above.
inline double default_grid_tolerance(std::size_t n, double h) { return (n == 3 ? 6.0 : 8.0) * h; }

inline double default_grid_spacing(std::size_t n) { return n == 3 ? 0.01 : 0.05; }

struct AuditOptions {
  std::size_t n = 3;
  SampleClass cls = SampleClass::Mixed;
  std::size_t samples = 100;
  std::uint64_t seed = 1;
  AuditOracle oracle = AuditOracle::Exact;
  std::optional<double> h;    // grid spacing; default per n
  std::optional<double> tol;  // overrides both oracle tolerances
  std::size_t max_n = kDefaultMaxDimension;

  double grid_spacing() const { return h.value_or(default_grid_spacing(n)); }
  double exact_tolerance() const { return tol.value_or(kExactOracleTolerance); }
  double grid_tolerance() const { return tol.value_or(default_grid_tolerance(n, grid_spacing())); }

  int grid_resolution() const {
    const double k = 2.0 / grid_spacing();
    const long r = std::lround(k);
    if (!(grid_spacing() > 0) || std::abs(k - r) > 1e-9 * k || r % 2 != 0 || r < 10) {
      throw std::invalid_argument("--h must be 2/K for an even K >= 10");
    }
    return static_cast<int>(r);
  }
};

struct AuditRecord {
  std::size_t index = 0;
  SurfacePoint a, b;
  std::string kind;
  double distance = 0.0;
  std::string provenance;
  std::vector<std::string> minimizers;
  std::vector<std::string> conditions;
  std::optional<double> exact, grid;
};

struct AuditReport {
  AuditOptions options;
  std::vector<AuditRecord> records;
  double max_delta_exact = 0.0;
  double max_delta_grid = 0.0;
  std::size_t iff_checks = 0;
  std::size_t iff_resampled = 0;
  std::size_t two_leg_checks = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }

  nlohmann::json to_json() const {
    using nlohmann::json;
    const bool use_exact = options.oracle != AuditOracle::Grid;
    const bool use_grid = options.oracle != AuditOracle::Exact;
    json tolerances = json::object();
    if (use_exact) tolerances["exact"] = options.exact_tolerance();
    if (use_grid) tolerances["grid"] = options.grid_tolerance();
    json recs = json::array();
    for (const auto& r : records) {
      json j{{"index", r.index},
             {"a", r.a.coords()},
             {"b", r.b.coords()},
             {"kind", r.kind},
             {"distance", r.distance},
             {"provenance", r.provenance},
             {"minimizers", r.minimizers},
             {"conditions", r.conditions}};
      if (r.exact) {
        j["exact"] = *r.exact;
        j["delta_exact"] = std::abs(*r.exact - r.distance);
      }
      if (r.grid) {
        j["grid"] = *r.grid;
        j["delta_grid"] = std::abs(*r.grid - r.distance);
      }
      recs.push_back(std::move(j));
    }
    json out{{"n", options.n},
             {"class", to_string(options.cls)},
             {"samples", options.samples},
             {"seed", options.seed},
             {"oracle", to_string(options.oracle)},
             {"tolerances", tolerances},
             {"records", recs},
             {"max_delta_exact", max_delta_exact},
             {"max_delta_grid", max_delta_grid},
             {"iff_checks", iff_checks},
             {"iff_resampled", iff_resampled},
             {"two_leg_checks", two_leg_checks},
             {"violations", violations}};
    if (use_grid) out["h"] = options.grid_spacing();
    return out;
  }
};

namespace detail {

inline bool near_unit(double v) { return v != 1.0 && v != -1.0 && 1.0 - std::abs(v) <= kBoundaryMargin; }

// True when some candidate value exceeds the minimum by a positive gap of at
// most the margin, i.e. the input sits on a tie boundary.
template <class Values>
bool near_tie(const Values& values) {
  const double lo = *std::min_element(values.begin(), values.end());
  for (double v : values) {
    if (v > lo && v - lo <= kBoundaryMargin) return true;
  }
  return false;
}

inline bool adjacent_near_boundary(const AdjacentInput& in) {
  auto r = adjacent3_distance(in);
  for (double v : {in.ay, in.az, in.bx, in.bz}) {
    if (std::abs(v) == 1.0 || near_unit(v)) return true;
  }
  return near_tie(std::array<double, 3>{r.alpha, r.beta, r.gamma});
}

inline bool opposite_near_boundary(const OppositeInput& in) {
  for (double v : {in.a, in.b, in.c, in.d}) {
    if (std::abs(v) == 1.0 || near_unit(v)) return true;
  }
  return near_tie(opposite3_values(in));
}

inline std::string describe(const SurfacePoint& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.dim(); ++i) s += (i ? "," : "") + format_number(p[i]);
  return s + ")";
}

}  // namespace detail

/// Condition/minimizer equivalence violations for a canonical adjacent input.
inline std::vector<std::string> adjacent_iff_violations(const AdjacentInput& in) {
  std::vector<std::string> out;
  auto r = adjacent3_distance(in);
  for (auto q : {AdjacentQuantity::Alpha, AdjacentQuantity::Beta, AdjacentQuantity::Gamma}) {
    if (r.condition_group(q) != r.is_minimal(q)) {
      out.push_back(std::string(to_string(q)) + (r.is_minimal(q) ? " minimal without" : " not minimal with") +
                    " its conditions");
    }
  }
  return out;
}

inline std::vector<std::string> opposite_iff_violations(const OppositeInput& in) {
  std::vector<std::string> out;
  auto r = opposite3_distance(in);
  for (int j = 1; j <= 12; ++j) {
    if (r.conditions[j - 1].holds != r.minimal[j - 1]) {
      out.push_back("s" + std::to_string(j) +
                    (r.minimal[j - 1] ? " minimal without" : " not minimal with") + " its conditions");
    }
  }
  return out;
}

/// Two-leg criterion: a shortest path with at most two facets exists iff one
/// of conditions (1)-(4) holds.
inline std::optional<std::string> two_leg_violation(const AdjacentInput& in, double tie = 1e-9) {
  const double d = adjacent3_distance(in).distance;
  const double two = restricted_exact_oracle(in.point_a(), in.point_b(), 2);
  const bool attained = std::abs(two - d) <= tie;
  if (attained == two_leg_exists(in)) return std::nullopt;
  return std::string("two-facet minimum ") + format_number(two) + " vs distance " +
         format_number(d) + (attained ? " attained without" : " missed despite") +
         " conditions (1)-(4)";
}

inline AuditReport run_audit(const AuditOptions& opt) {
  if (opt.n < kMinDimension || opt.n > opt.max_n) {
    throw std::invalid_argument("--n must be in 3.." + std::to_string(opt.max_n));
  }
  AuditReport rep;
  rep.options = opt;
  const bool use_exact = opt.oracle != AuditOracle::Grid;
  const bool use_grid = opt.oracle != AuditOracle::Exact;
  std::unique_ptr<GridOracle> grid;
  if (use_grid) grid = std::make_unique<GridOracle>(opt.n, opt.grid_resolution());
  const double tol_exact = opt.exact_tolerance(), tol_grid = opt.grid_tolerance();
  GeodesicOptions gopt;
  gopt.max_n = opt.max_n;

  for (std::size_t i = 0; i < opt.samples; ++i) {
    Rng rng(sub_seed(opt.seed, i));
    auto [a, b] = random_pair(opt.n, opt.cls, rng);
    auto fail = [&](const std::string& what) {
      rep.violations.push_back("sample " + std::to_string(i) + " " + detail::describe(a) + " -> " +
                               detail::describe(b) + ": " + what);
    };
    auto res = geodesic_distance(a, b, gopt);
    AuditRecord rec;
    rec.index = i;
    rec.a = a;
    rec.b = b;
    rec.kind = to_string(res.provenance.assignment.kind);
    rec.distance = res.distance;
    rec.provenance = res.provenance.label;
    rec.minimizers = res.provenance.minimizers;
    rec.conditions = res.provenance.conditions;

    if (use_exact) {
      rec.exact = exact_oracle(a, b).distance;
      const double delta = std::abs(*rec.exact - res.distance);
      rep.max_delta_exact = std::max(rep.max_delta_exact, delta);
      if (!(delta <= tol_exact)) fail("|closed - exact| = " + format_number(delta));
    }
    if (use_grid) {
      rec.grid = grid->distance(a, b);
      const double delta = std::abs(*rec.grid - res.distance);
      rep.max_delta_grid = std::max(rep.max_delta_grid, delta);
      if (!(delta <= tol_grid)) fail("|closed - grid| = " + format_number(delta));
    }

    // Witness and metric properties.
    const auto& w = res.witness;
    if (!(w.front() == a) || !(w.back() == b)) fail("witness endpoints differ from the query");
    if (!(std::abs(w.total_length() - res.distance) <= kExactOracleTolerance)) {
      fail("witness length " + format_number(w.total_length()));
    }
    if (res.distance < sup_distance(a, b)) fail("distance below the sup-norm distance");
    if (geodesic_length(b, a, gopt) != res.distance) fail("distance not symmetric");
    auto g = random_isometry(opt.n, rng);
    if (geodesic_length(g.apply(a), g.apply(b), gopt) != res.distance) fail("distance not isometry invariant");
    auto c = random_surface_point(opt.n, rng);
    if (geodesic_length(a, c, gopt) + geodesic_length(c, b, gopt) < res.distance - kExactOracleTolerance) {
      fail("triangle inequality fails through " + detail::describe(c));
    }

    // Condition equivalences and the two-leg criterion, on resampled
    // inputs when the drawn pair sits on a condition boundary.
    const auto& pc = res.provenance.assignment;
    if (opt.n == 3 && pc.kind != PairKind::SameFace) {
      auto canon = canonicalize(a, b, pc);
      if (pc.kind == PairKind::Adjacent) {
        auto in = AdjacentInput::from_points(canon.a, canon.b);
        while (detail::adjacent_near_boundary(in)) {
          in = {rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
          ++rep.iff_resampled;
        }
        for (const auto& v : adjacent_iff_violations(in)) fail(v);
        if (auto v = two_leg_violation(in)) fail(*v);
        ++rep.two_leg_checks;
      } else {
        auto in = OppositeInput::from_points(canon.a, canon.b);
        while (detail::opposite_near_boundary(in)) {
          in = {rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
          ++rep.iff_resampled;
        }
        for (const auto& v : opposite_iff_violations(in)) fail(v);
      }
      ++rep.iff_checks;
    }
    rep.records.push_back(std::move(rec));
  }
  return rep;
}

}  // namespace cubegeo
