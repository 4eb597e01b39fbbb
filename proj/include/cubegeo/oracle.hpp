#pragma once

// Two independent ground truths for the geodesic distance:
//  * exact: minimum over facet sequences of the convex piecewise-linear path
//    length, each sequence solved as a linear program;
//  * grid: breadth-first search on a king-move lattice laid over the surface.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubegeo/simplex.hpp"
#include "cubegeo/surface.hpp"

namespace cubegeo {

using FaceSequence = std::vector<FaceId>;

/// Default facet-sequence depth. Five facets are needed already for n = 4.
inline std::size_t default_oracle_depth(std::size_t n) { return std::max<std::size_t>(5, n + 1); }

/// Facet sequences from `from` to `to` with at most `depth` facets, never
/// revisiting a facet; consecutive facets have different axes.
inline std::vector<FaceSequence> enumerate_face_sequences(std::size_t n, FaceId from, FaceId to,
                                                          std::size_t depth) {
  std::vector<FaceSequence> out;
  if (depth == 0) return out;
  if (from == to) return {{from}};
  FaceSequence seq{from};
  auto visited = [&](FaceId f) { return std::find(seq.begin(), seq.end(), f) != seq.end(); };
  auto rec = [&](auto&& self) -> void {
    if (seq.back() == to) {
      out.push_back(seq);
      return;
    }
    if (seq.size() >= depth) return;
    for (int axis = 0; axis < static_cast<int>(n); ++axis) {
      if (axis == seq.back().axis) continue;
      for (int sign : {1, -1}) {
        FaceId f{axis, sign};
        if (visited(f)) continue;
        seq.push_back(f);
        self(self);
        seq.pop_back();
      }
    }
  };
  rec(rec);
  return out;
}

struct SequenceSolution {
  double length = std::numeric_limits<double>::infinity();
  GeodesicPath path;
};

/// Shortest path from a to b crossing exactly the given facets in order.
/// Crossing points lie on the ridge between consecutive facets; the length
/// sum_k max_i |P_{k+1,i} - P_{k,i}| is minimized through one epigraph
/// variable per leg.
inline SequenceSolution minimize_over_sequence(const SurfacePoint& a, const SurfacePoint& b,
                                               const FaceSequence& seq) {
  require_same_dim(a, b);
  if (seq.empty()) throw std::invalid_argument("empty facet sequence");
  if (!a.on_face(seq.front()) || !b.on_face(seq.back())) {
    throw std::invalid_argument("facet sequence does not start at a / end at b");
  }
  const std::size_t n = a.dim();
  const std::size_t k = seq.size() - 1;  // crossings
  for (std::size_t c = 0; c < k; ++c) {
    if (seq[c].axis == seq[c + 1].axis) throw std::invalid_argument("consecutive facets not adjacent");
  }
  if (k == 0) {
    GeodesicPath p({a, b});
    return {p.total_length(), p};
  }

  // Point p: 0 = a, 1..k = crossings, k+1 = b. Coordinate = constant + variable (if any).
  // Free crossing coordinates are stored shifted by +1 so the variable lives in [0, 2].
  std::vector<std::vector<int>> var(k + 2, std::vector<int>(n, -1));
  std::vector<std::vector<double>> constant(k + 2, std::vector<double>(n, 0.0));
  std::size_t num_free = 0;
  for (std::size_t i = 0; i < n; ++i) {
    constant[0][i] = a[i];
    constant[k + 1][i] = b[i];
  }
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t i = 0; i < n; ++i) {
      if (static_cast<int>(i) == seq[c].axis) {
        constant[c + 1][i] = seq[c].sign;
      } else if (static_cast<int>(i) == seq[c + 1].axis) {
        constant[c + 1][i] = seq[c + 1].sign;
      } else {
        constant[c + 1][i] = -1.0;
        var[c + 1][i] = static_cast<int>(num_free++);
      }
    }
  }
  const std::size_t legs = k + 1;
  // Leg length t_l = floor_l + s_l, floor_l from coordinates without variables.
  std::vector<double> floor_len(legs, 0.0);
  for (std::size_t l = 0; l < legs; ++l) {
    for (std::size_t i = 0; i < n; ++i) {
      if (var[l][i] < 0 && var[l + 1][i] < 0) {
        floor_len[l] = std::max(floor_len[l], std::abs(constant[l + 1][i] - constant[l][i]));
      }
    }
  }
  lp::Problem prob(num_free + legs);
  for (std::size_t j = 0; j < num_free; ++j) prob.upper[j] = 2.0;
  for (std::size_t l = 0; l < legs; ++l) prob.cost[num_free + l] = 1.0;
  for (std::size_t l = 0; l < legs; ++l) {
    for (std::size_t i = 0; i < n; ++i) {
      const int v0 = var[l][i], v1 = var[l + 1][i];
      if (v0 < 0 && v1 < 0) continue;
      const double dc = constant[l + 1][i] - constant[l][i];
      for (double s : {1.0, -1.0}) {
        // s * (dc + x1 - x0) <= floor_l + s_l
        std::vector<double> row(prob.num_vars, 0.0);
        if (v1 >= 0) row[v1] += s;
        if (v0 >= 0) row[v0] -= s;
        row[num_free + l] = -1.0;
        prob.add_row(std::move(row), floor_len[l] - s * dc);
      }
    }
  }
  auto sol = lp::solve(prob);
  if (sol.status != lp::Status::Optimal) {
    throw std::runtime_error("facet-sequence linear program failed to reach optimality");
  }
  std::vector<SurfacePoint> verts{a};
  for (std::size_t c = 0; c < k; ++c) {
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = constant[c + 1][i] + (var[c + 1][i] >= 0 ? sol.x[var[c + 1][i]] : 0.0);
    }
    verts.push_back(SurfacePoint::make(x, 1e-12));
  }
  verts.push_back(b);
  GeodesicPath path(std::move(verts));
  return {path.total_length(), std::move(path)};
}

struct OracleResult {
  double distance = std::numeric_limits<double>::infinity();
  GeodesicPath witness;
  FaceSequence sequence;
  std::size_t sequences_tried = 0;
};

/// Global minimum over every facet sequence of at most `depth` facets joining a
/// facet of a to a facet of b. depth == 0 selects default_oracle_depth(n).
inline OracleResult exact_oracle(const SurfacePoint& a, const SurfacePoint& b,
                                 std::size_t depth = 0) {
  require_same_dim(a, b);
  if (depth == 0) depth = default_oracle_depth(a.dim());
  OracleResult best;
  for (FaceId fa : a.faces()) {
    for (FaceId fb : b.faces()) {
      for (const auto& seq : enumerate_face_sequences(a.dim(), fa, fb, depth)) {
        ++best.sequences_tried;
        auto sol = minimize_over_sequence(a, b, seq);
        if (sol.length < best.distance) {
          best.distance = sol.length;
          best.witness = std::move(sol.path);
          best.sequence = seq;
        }
      }
    }
  }
  if (best.sequences_tried == 0) throw std::logic_error("no facet sequence joins the points");
  return best;
}

/// Exact oracle limited to paths through at most max_faces facets.
inline double restricted_exact_oracle(const SurfacePoint& a, const SurfacePoint& b,
                                      std::size_t max_faces) {
  require_same_dim(a, b);
  double best = std::numeric_limits<double>::infinity();
  for (FaceId fa : a.faces()) {
    for (FaceId fb : b.faces()) {
      for (const auto& seq : enumerate_face_sequences(a.dim(), fa, fb, max_faces)) {
        best = std::min(best, minimize_over_sequence(a, b, seq).length);
      }
    }
  }
  return best;
}

inline constexpr std::size_t kDefaultGridBudget = 4'000'000;

/// Lattice of spacing h = 2/K on every facet, joined by king moves. Within a
/// facet the hop count between two nodes equals their Chebyshev distance / h,
/// so graph distances are exact there and only facet crossings and endpoint
/// snapping introduce error.
class GridOracle {
 public:
  GridOracle(std::size_t n, int resolution, std::size_t node_budget = kDefaultGridBudget)
      : n_(n), k_(resolution) {
    if (n < kMinDimension) throw std::invalid_argument("grid oracle needs n >= 3");
    if (resolution < 10 || resolution % 2 != 0) {
      throw std::invalid_argument("grid resolution K must be even and >= 10");
    }
    const double facet_nodes = static_cast<double>(n) * std::pow(resolution, n - 1);
    if (facet_nodes > static_cast<double>(node_budget)) {
      throw std::length_error("grid oracle exceeds node budget: n*K^(n-1) = " +
                              std::to_string(static_cast<long long>(facet_nodes)));
    }
    h_ = 2.0 / resolution;
    build();
  }

  std::size_t dim() const { return n_; }
  int resolution() const { return k_; }
  double spacing() const { return h_; }
  std::size_t node_count() const { return nodes_.size(); }

  /// Nearest lattice node; exact halves round toward the lower coordinate.
  std::vector<int> snap(const SurfacePoint& p) const {
    if (p.dim() != n_) throw std::invalid_argument("grid snap: dimension mismatch");
    std::vector<int> j(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      const double u = (p[i] + 1.0) / h_;
      j[i] = std::clamp(static_cast<int>(std::ceil(u - 0.5)), 0, k_);
    }
    return j;
  }

  /// Lattice point back to cube coordinates.
  std::vector<double> position(std::span<const int> lattice) const {
    std::vector<double> x(n_);
    for (std::size_t i = 0; i < n_; ++i) x[i] = lattice[i] == k_ ? 1.0 : -1.0 + lattice[i] * h_;
    return x;
  }

  /// Number of king moves between two surface lattice nodes.
  std::size_t hops(std::span<const int> from, std::span<const int> to) const {
    const std::int32_t s = node_id(from), t = node_id(to);
    if (s < 0 || t < 0) throw std::invalid_argument("grid hops: lattice point not on the surface");
    if (s == t) return 0;
    std::vector<std::int32_t> dist(nodes_.size(), -1);
    std::vector<std::int32_t> queue;
    queue.reserve(nodes_.size());
    queue.push_back(s);
    dist[s] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::int32_t u = queue[head];
      for (std::uint32_t e = offsets_[u]; e < offsets_[u + 1]; ++e) {
        const std::int32_t v = static_cast<std::int32_t>(adj_[e]);
        if (dist[v] >= 0) continue;
        dist[v] = dist[u] + 1;
        if (v == t) return static_cast<std::size_t>(dist[v]);
        queue.push_back(v);
      }
    }
    throw std::logic_error("grid graph is disconnected");
  }

  double distance(const SurfacePoint& a, const SurfacePoint& b) const {
    auto sa = snap(a), sb = snap(b);
    return static_cast<double>(hops(sa, sb)) * h_;
  }

 private:
  std::int32_t node_id(std::span<const int> lattice) const {
    if (lattice.size() != n_) return -1;
    std::size_t lin = 0;
    for (std::size_t i = n_; i-- > 0;) {
      if (lattice[i] < 0 || lattice[i] > k_) return -1;
      lin = lin * (k_ + 1) + lattice[i];
    }
    return index_[lin];
  }

  void build() {
    const std::size_t side = static_cast<std::size_t>(k_) + 1;
    std::size_t total = 1;
    for (std::size_t i = 0; i < n_; ++i) total *= side;
    index_.assign(total, -1);
    std::vector<int> c(n_, 0);
    auto decode = [&](std::size_t lin) {
      for (std::size_t i = 0; i < n_; ++i) {
        c[i] = static_cast<int>(lin % side);
        lin /= side;
      }
    };
    for (std::size_t lin = 0; lin < total; ++lin) {
      decode(lin);
      bool surface = false;
      for (int v : c) surface = surface || v == 0 || v == k_;
      if (surface) {
        index_[lin] = static_cast<std::int32_t>(nodes_.size());
        nodes_.push_back(lin);
      }
    }
    std::vector<std::size_t> stride(n_, 1);
    for (std::size_t i = 1; i < n_; ++i) stride[i] = stride[i - 1] * side;

    // Offsets in {-1,0,1}^n, nonzero.
    std::vector<std::vector<int>> moves;
    std::vector<int> m(n_, -1);
    while (true) {
      if (std::any_of(m.begin(), m.end(), [](int v) { return v != 0; })) moves.push_back(m);
      std::size_t i = 0;
      while (i < n_ && m[i] == 1) m[i++] = -1;
      if (i == n_) break;
      ++m[i];
    }

    offsets_.reserve(nodes_.size() + 1);
    offsets_.push_back(0);
    std::vector<std::uint32_t> nbrs;
    for (std::size_t lin : nodes_) {
      decode(lin);
      nbrs.clear();
      for (std::size_t f = 0; f < n_; ++f) {
        if (c[f] != 0 && c[f] != k_) continue;
        for (const auto& mv : moves) {
          if (mv[f] != 0) continue;
          std::size_t nl = lin;
          bool ok = true;
          for (std::size_t i = 0; i < n_ && ok; ++i) {
            const int v = c[i] + mv[i];
            if (v < 0 || v > k_) ok = false;
            else nl = nl + static_cast<std::size_t>(v) * stride[i] - static_cast<std::size_t>(c[i]) * stride[i];
          }
          if (ok) nbrs.push_back(static_cast<std::uint32_t>(index_[nl]));
        }
      }
      std::sort(nbrs.begin(), nbrs.end());
      nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
      adj_.insert(adj_.end(), nbrs.begin(), nbrs.end());
      offsets_.push_back(static_cast<std::uint32_t>(adj_.size()));
    }
  }

  std::size_t n_;
  int k_;
  double h_ = 0.0;
  std::vector<std::int32_t> index_;  // full lattice -> node id, -1 for interior points
  std::vector<std::size_t> nodes_;   // node id -> full lattice index
  std::vector<std::uint32_t> offsets_;
  std::vector<std::uint32_t> adj_;
};

/// One-shot grid estimate; builds the lattice on every call.
inline double grid_oracle(const SurfacePoint& a, const SurfacePoint& b, int resolution,
                          std::size_t node_budget = kDefaultGridBudget) {
  require_same_dim(a, b);
  return GridOracle(a.dim(), resolution, node_budget).distance(a, b);
}

}  // namespace cubegeo
