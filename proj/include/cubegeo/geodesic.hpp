#pragma once

// Geodesic distance between arbitrary points of the cube surface.

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubegeo/adjacent3.hpp"
#include "cubegeo/candidates.hpp"
#include "cubegeo/opposite3.hpp"
#include "cubegeo/oracle.hpp"
#include "cubegeo/surface.hpp"

namespace cubegeo {

struct GeodesicOptions {
  double tie = kTieTolerance;
  std::size_t max_n = kDefaultMaxDimension;
};

struct Provenance {
  PairClass assignment;
  std::string label;  // "segment", "alpha".."gamma", "s1".."s12", or a candidate label
  Candidate candidate;
  std::vector<std::string> minimizers;
  std::vector<std::string> conditions;
};

struct GeodesicResult {
  double distance = 0.0;
  GeodesicPath witness;
  Provenance provenance;
};

namespace detail {

struct AssignmentValue {
  PairClass assignment;
  Canonical canonical;
  CandidateMinimum minimum;
};

inline Family family_of(PairKind k) {
  return k == PairKind::Adjacent ? Family::Adjacent : Family::Opposite;
}

/// Best (assignment, candidate) over all facet assignments of a non-same-face pair.
inline AssignmentValue best_assignment(const SurfacePoint& a, const SurfacePoint& b,
                                       const GeodesicOptions& opt) {
  AssignmentValue best{};
  best.minimum.value = std::numeric_limits<double>::infinity();
  for (const auto& pc : classify_pair(a, b)) {
    auto canon = canonicalize(a, b, pc);
    auto m = minimize_candidates(family_of(pc.kind), canon.a.coords(), canon.b.coords(), opt.max_n);
    if (m.value < best.minimum.value) best = {pc, std::move(canon), std::move(m)};
  }
  return best;
}

}  // namespace detail

/// Shortest path realizing a candidate minimum, found by solving the facet
/// sequence of each tied minimizer (shortest tuples first) until one attains it.
inline GeodesicPath candidate_witness(const SurfacePoint& a, const SurfacePoint& b, Family family,
                                      std::size_t max_n = kDefaultMaxDimension) {
  constexpr double kTie = 1e-12, kMatch = 1e-9;
  auto tied = minimizing_candidates(family, a.coords(), b.coords(), kTie, max_n);
  for (const auto& cv : tied) {
    auto sol = minimize_over_sequence(a, b, cv.candidate.face_sequence());
    if (std::abs(sol.length - cv.value) <= kMatch) return std::move(sol.path);
  }
  throw std::logic_error("no minimizing candidate is realized by its facet sequence");
}

/// Distance only.
inline double geodesic_length(const SurfacePoint& a, const SurfacePoint& b,
                              const GeodesicOptions& opt = {}) {
  require_same_dim(a, b);
  if (common_face(a, b)) return sup_distance(a, b);
  return detail::best_assignment(a, b, opt).minimum.value;
}

inline GeodesicResult geodesic_distance(const SurfacePoint& a, const SurfacePoint& b,
                                        const GeodesicOptions& opt = {}) {
  require_same_dim(a, b);
  if (a.dim() > opt.max_n) {
    throw std::length_error("dimension " + std::to_string(a.dim()) + " exceeds the cap " +
                            std::to_string(opt.max_n));
  }
  GeodesicResult res;
  if (auto f = common_face(a, b)) {
    res.distance = sup_distance(a, b);
    res.witness = a == b ? GeodesicPath({a}) : GeodesicPath({a, b});
    res.provenance.assignment = {PairKind::SameFace, *f, *f};
    res.provenance.label = "segment";
    res.provenance.minimizers = {"segment"};
    return res;
  }
  auto best = detail::best_assignment(a, b, opt);
  const auto& ca = best.canonical.a;
  const auto& cb = best.canonical.b;
  const auto inv = best.canonical.g.inverse();
  res.distance = best.minimum.value;
  res.provenance.assignment = best.assignment;
  res.provenance.candidate = best.minimum.best;
  res.provenance.label = best.minimum.best.label();

  if (a.dim() == 3 && best.assignment.kind == PairKind::Adjacent) {
    auto in = AdjacentInput::from_points(ca, cb);
    auto r = adjacent3_distance(in, opt.tie);
    if (r.distance != res.distance) {
      throw std::logic_error("adjacent closed form disagrees with the candidate family");
    }
    for (auto q : {AdjacentQuantity::Alpha, AdjacentQuantity::Beta, AdjacentQuantity::Gamma}) {
      if (r.is_minimal(q)) res.provenance.minimizers.push_back(to_string(q));
    }
    res.provenance.label = res.provenance.minimizers.front();
    for (int k : r.satisfied_conditions()) res.provenance.conditions.push_back("(" + std::to_string(k) + ")");
    res.witness = inv.apply(adjacent3_witness(in, opt.tie));
  } else if (a.dim() == 3) {
    auto in = OppositeInput::from_points(ca, cb);
    auto r = opposite3_distance(in, opt.tie);
    if (r.distance != res.distance) {
      throw std::logic_error("opposite closed form disagrees with the candidate family");
    }
    for (int j : r.minimizers()) res.provenance.minimizers.push_back("s" + std::to_string(j));
    res.provenance.label = res.provenance.minimizers.front();
    for (int j = 1; j <= 12; ++j) {
      const auto& h = r.conditions[j - 1];
      for (int clause : h.clauses) {
        res.provenance.conditions.push_back("s" + std::to_string(j) + ":(" + std::to_string(clause) +
                                            ")" + (h.derived ? " [derived]" : ""));
      }
    }
    res.witness = inv.apply(opposite3_witness(in, opt.tie));
  } else {
    auto family = detail::family_of(best.assignment.kind);
    for (const auto& cv : minimizing_candidates(family, ca.coords(), cb.coords(), opt.tie, opt.max_n)) {
      res.provenance.minimizers.push_back(cv.candidate.label());
    }
    res.witness = inv.apply(candidate_witness(ca, cb, family, opt.max_n));
  }
  return res;
}

}  // namespace cubegeo
