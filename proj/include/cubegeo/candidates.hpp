#pragma once

// Closed-form candidate lengths for points on adjacent or opposite facets of
// the n-cube, and the counting identity for the size of each family.
//
// Coordinates here are canonical: A[0] == 1, and B[1] == 1 (adjacent family)
// or B[0] == -1 (opposite family). Axes are 0-based; labels print 1-based.

#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubegeo/surface.hpp"

namespace cubegeo {

inline constexpr std::size_t kDefaultMaxDimension = 10;

enum class Family { Adjacent, Opposite };

inline const char* to_string(Family f) { return f == Family::Adjacent ? "adjacent" : "opposite"; }

/// An ordered tuple of distinct axes with one sign per axis. The sign is
/// shared by the a- and b-coordinate of that axis.
struct Candidate {
  Family family = Family::Adjacent;
  std::vector<int> tuple;
  std::vector<int> signs;

  std::size_t size() const { return tuple.size(); }

  /// e.g. "(3,5|+,-)" with 1-based axes; "()" for the empty tuple.
  std::string label() const {
    std::string s = "(";
    for (std::size_t k = 0; k < tuple.size(); ++k) s += (k ? "," : "") + std::to_string(tuple[k] + 1);
    if (!tuple.empty()) {
      s += "|";
      for (std::size_t k = 0; k < signs.size(); ++k) s += std::string(k ? "," : "") + (signs[k] > 0 ? "+" : "-");
    }
    return s + ")";
  }

  /// Facets crossed by the path realizing this candidate, A's facet first.
  /// Each tuple axis t contributes the facet x_t = -sign_t.
  std::vector<FaceId> face_sequence() const {
    std::vector<FaceId> seq{{0, 1}};
    auto facet = [&](std::size_t k) { return FaceId{tuple[k], -signs[k]}; };
    if (family == Family::Adjacent) {
      for (std::size_t k = 1; k < tuple.size(); ++k) seq.push_back(facet(k));
      if (!tuple.empty()) seq.push_back(facet(0));
      seq.push_back({1, 1});
    } else {
      for (std::size_t k = 0; k < tuple.size(); ++k) seq.push_back(facet(k));
      seq.push_back({0, -1});
    }
    return seq;
  }

  friend bool operator==(const Candidate&, const Candidate&) = default;
};

/// Lazy enumeration of a candidate family in (length, tuple, signs) order,
/// signs running from all-minus to all-plus.
class CandidateStream {
 public:
  CandidateStream(Family family, std::size_t n, std::size_t max_n = kDefaultMaxDimension)
      : family_(family), n_(n) {
    if (n < kMinDimension) throw std::invalid_argument("candidate families need n >= 3");
    if (n > max_n) {
      throw std::length_error("n = " + std::to_string(n) + " exceeds the candidate cap " +
                              std::to_string(max_n));
    }
    first_axis_ = family == Family::Adjacent ? 2 : 1;
    length_ = family == Family::Adjacent ? 0 : 1;
    start_length();
  }

  /// Writes the next candidate into out; false when exhausted.
  bool next(Candidate& out) {
    if (done_) return false;
    out.family = family_;
    out.tuple = tuple_;
    out.signs = signs_;
    advance();
    return true;
  }

 private:
  std::size_t pool() const { return n_ - static_cast<std::size_t>(first_axis_); }

  void start_length() {
    if (length_ > pool()) {
      done_ = true;
      return;
    }
    tuple_.resize(length_);
    for (std::size_t k = 0; k < length_; ++k) tuple_[k] = first_axis_ + static_cast<int>(k);
    signs_.assign(length_, -1);
  }

  bool next_signs() {
    for (std::size_t k = signs_.size(); k-- > 0;) {
      if (signs_[k] < 0) {
        signs_[k] = 1;
        for (std::size_t r = k + 1; r < signs_.size(); ++r) signs_[r] = -1;
        return true;
      }
    }
    return false;
  }

  // Next injective sequence in lexicographic order.
  bool next_tuple() {
    const int lo = first_axis_, hi = static_cast<int>(n_) - 1;
    for (std::size_t k = tuple_.size(); k-- > 0;) {
      for (int v = tuple_[k] + 1; v <= hi; ++v) {
        if (used_before(k, v)) continue;
        tuple_[k] = v;
        // Fill the suffix with the smallest unused values.
        for (std::size_t r = k + 1; r < tuple_.size(); ++r) {
          int w = lo;
          while (used_before(r, w)) ++w;
          tuple_[r] = w;
        }
        return true;
      }
    }
    return false;
  }

  bool used_before(std::size_t k, int v) const {
    for (std::size_t r = 0; r < k; ++r) {
      if (tuple_[r] == v) return true;
    }
    return false;
  }

  void advance() {
    if (next_signs()) return;
    if (next_tuple()) {
      signs_.assign(length_, -1);
      return;
    }
    ++length_;
    start_length();
  }

  Family family_;
  std::size_t n_;
  int first_axis_ = 2;
  std::size_t length_ = 0;
  std::vector<int> tuple_;
  std::vector<int> signs_;
  bool done_ = false;
};

struct CandidateValue {
  Candidate candidate;
  std::vector<double> terms;
  double value = 0.0;
};

namespace detail {

inline void check_canonical(Family family, std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size() || a.size() < kMinDimension) {
    throw std::invalid_argument("candidate evaluation needs equal dimensions >= 3");
  }
  if (a[0] != 1.0) throw std::invalid_argument("candidate evaluation needs A[0] == 1");
  if (family == Family::Adjacent ? b[1] != 1.0 : b[0] != -1.0) {
    throw std::invalid_argument("candidate evaluation needs B on its canonical facet");
  }
}

inline void check_candidate(const Candidate& cand, std::size_t n) {
  const int lo = cand.family == Family::Adjacent ? 2 : 1;
  if (cand.tuple.size() != cand.signs.size()) throw std::invalid_argument("tuple/sign size mismatch");
  if (cand.family == Family::Opposite && cand.tuple.empty()) {
    throw std::invalid_argument("opposite candidates need a nonempty tuple");
  }
  std::vector<bool> seen(n, false);
  for (std::size_t k = 0; k < cand.tuple.size(); ++k) {
    int t = cand.tuple[k];
    if (t < lo || static_cast<std::size_t>(t) >= n || seen[t]) {
      throw std::out_of_range("candidate index out of range or repeated");
    }
    seen[t] = true;
    if (cand.signs[k] != 1 && cand.signs[k] != -1) throw std::invalid_argument("sign must be +-1");
  }
}

}  // namespace detail

/// One term of a candidate: constant + (sa * a[ia] + sb * b[ib]), or
/// |a[ia] - b[ia]| for a residual coordinate. The grouping makes values
/// bitwise invariant under endpoint swaps and coordinate sign flips.
struct Term {
  bool residual = false;
  int constant = 0;
  int sa = 1;
  std::size_t ia = 0;
  int sb = 1;
  std::size_t ib = 0;

  double operator()(std::span<const double> a, std::span<const double> b) const {
    if (residual) return std::abs(a[ia] - b[ia]);
    const double u = sa > 0 ? a[ia] : -a[ia];
    const double v = sb > 0 ? b[ib] : -b[ib];
    return constant + (u + v);
  }

  /// e.g. "2 - a2 + b3" or "|a4 - b4|", 1-based.
  std::string schema() const {
    const std::string i = std::to_string(ia + 1), j = std::to_string(ib + 1);
    if (residual) return "|a" + i + " - b" + i + "|";
    return std::to_string(constant) + (sa > 0 ? " + a" : " - a") + i + (sb > 0 ? " + b" : " - b") + j;
  }
};

namespace detail {

template <class Emit>
void for_each_term(const Candidate& cand, std::size_t n, Emit&& emit) {
  const auto& t = cand.tuple;
  const auto& e = cand.signs;
  const std::size_t m = t.size();
  auto at = [&](std::size_t k) { return static_cast<std::size_t>(t[k]); };
  auto pair = [&](int c, int sa, std::size_t ia, int sb, std::size_t ib) {
    emit(Term{false, c, sa, ia, sb, ib});
  };
  if (cand.family == Family::Adjacent) {
    if (m == 0) {
      pair(2, -1, 1, -1, 0);
    } else {
      pair(2, -1, 1, e[0], at(0));
      const std::size_t second = m >= 2 ? 1 : 0;
      pair(2, e[second], at(second), -1, 0);
      for (std::size_t r = 1; r + 1 < m; ++r) pair(2, e[r + 1], at(r + 1), e[r], at(r));
      if (m >= 2) pair(2, e[0], at(0), e[m - 1], at(m - 1));
    }
    for (std::size_t i = 2; i < n; ++i) {
      bool in_tuple = false;
      for (int v : t) in_tuple = in_tuple || static_cast<std::size_t>(v) == i;
      if (!in_tuple) emit(Term{true, 0, 1, i, -1, i});
    }
  } else {
    for (std::size_t r = 0; r + 1 < m; ++r) pair(2, e[r + 1], at(r + 1), e[r], at(r));
    pair(4, e[0], at(0), e[m - 1], at(m - 1));
  }
}

inline double max_term(const Candidate& cand, std::span<const double> a, std::span<const double> b) {
  double v = -std::numeric_limits<double>::infinity();
  for_each_term(cand, a.size(), [&](const Term& term) { v = std::max(v, term(a, b)); });
  return v;
}

}  // namespace detail

/// For n = 3: which of alpha, beta, gamma or s1..s12 the candidate evaluates to.
inline std::string closed_form_name(const Candidate& cand) {
  detail::check_candidate(cand, 3);
  const auto& t = cand.tuple;
  const auto& e = cand.signs;
  if (cand.family == Family::Adjacent) {
    if (t.empty()) return "alpha";
    return e[0] < 0 ? "beta" : "gamma";
  }
  int j;
  if (t.size() == 1) {
    j = (t[0] == 1 ? 1 : 3) + (e[0] > 0);
  } else if (t[0] == 2) {
    j = 5 + (e[0] > 0) + 2 * (e[1] > 0);
  } else {
    j = 9 + 2 * (e[0] > 0) + (e[1] > 0);
  }
  return "s" + std::to_string(j);
}

/// Symbolic terms of a candidate in dimension n.
inline std::vector<Term> candidate_terms(const Candidate& cand, std::size_t n) {
  detail::check_candidate(cand, n);
  std::vector<Term> out;
  detail::for_each_term(cand, n, [&](const Term& term) { out.push_back(term); });
  return out;
}

inline double candidate_value(const Candidate& cand, std::span<const double> a,
                              std::span<const double> b) {
  detail::check_canonical(cand.family, a, b);
  detail::check_candidate(cand, a.size());
  return detail::max_term(cand, a, b);
}

inline CandidateValue evaluate_candidate(const Candidate& cand, std::span<const double> a,
                                         std::span<const double> b) {
  detail::check_canonical(cand.family, a, b);
  detail::check_candidate(cand, a.size());
  CandidateValue out{cand, {}, -std::numeric_limits<double>::infinity()};
  detail::for_each_term(cand, a.size(), [&](const Term& term) {
    out.terms.push_back(term(a, b));
    out.value = std::max(out.value, out.terms.back());
  });
  return out;
}

struct CandidateMinimum {
  double value = std::numeric_limits<double>::infinity();
  Candidate best;               // first candidate in stream order attaining the value
  std::size_t evaluated = 0;
};

/// Minimum over the whole family.
inline CandidateMinimum minimize_candidates(Family family, std::span<const double> a,
                                            std::span<const double> b,
                                            std::size_t max_n = kDefaultMaxDimension) {
  detail::check_canonical(family, a, b);
  CandidateStream stream(family, a.size(), max_n);
  CandidateMinimum out;
  Candidate cand;
  while (stream.next(cand)) {
    ++out.evaluated;
    const double v = detail::max_term(cand, a, b);
    if (v < out.value) {
      out.value = v;
      out.best = cand;
    }
  }
  return out;
}

/// Every candidate whose value is within tol of the family minimum, in stream order.
inline std::vector<CandidateValue> minimizing_candidates(Family family, std::span<const double> a,
                                                         std::span<const double> b, double tol,
                                                         std::size_t max_n = kDefaultMaxDimension) {
  const double best = minimize_candidates(family, a, b, max_n).value;
  CandidateStream stream(family, a.size(), max_n);
  std::vector<CandidateValue> out;
  Candidate cand;
  while (stream.next(cand)) {
    if (detail::max_term(cand, a, b) <= best + tol) out.push_back(evaluate_candidate(cand, a, b));
  }
  return out;
}

/// Exact sum 1 + 2m + 4m(m-1) + ... + 2^m m!, i.e. sum_k m!/(m-k)! 2^k.
inline std::uint64_t candidate_count(unsigned m) {
  std::uint64_t term = 1, total = 1;
  for (unsigned k = 1; k <= m; ++k) {
    const std::uint64_t factor = 2ull * (m - k + 1);
    if (term > std::numeric_limits<std::uint64_t>::max() / factor) {
      throw std::overflow_error("candidate_count overflows 64 bits at m = " + std::to_string(m));
    }
    term *= factor;
    if (total > std::numeric_limits<std::uint64_t>::max() - term) {
      throw std::overflow_error("candidate_count overflows 64 bits at m = " + std::to_string(m));
    }
    total += term;
  }
  return total;
}

inline std::uint64_t adjacent_candidate_count(std::size_t n) {
  return candidate_count(static_cast<unsigned>(n - 2));
}
inline std::uint64_t opposite_candidate_count(std::size_t n) {
  return candidate_count(static_cast<unsigned>(n - 1)) - 1;
}

/// m! 2^m R_m with R_m = sum_{i>m} 2^-i / i!, summed as
/// sum_{k>=1} prod_{l=1..k} 1 / (2 (m + l)) to stay in range.
inline long double counting_remainder(unsigned m) {
  long double sum = 0.0L, term = 1.0L;
  for (unsigned l = 1; l < 200; ++l) {
    term /= 2.0L * static_cast<long double>(m + l);
    sum += term;
    if (term < 1e-30L * sum) break;
  }
  return sum;
}

/// floor(m! 2^m sqrt(e)) in extended precision. Throws if the fractional part
/// is too close to an integer for the precision to decide the floor.
inline std::uint64_t floor_sqrt_e_product(unsigned m) {
  long double p = 1.0L;
  for (unsigned k = 1; k <= m; ++k) p *= 2.0L * k;
  if (p > 1e15L) throw std::overflow_error("floor_sqrt_e_product: m too large for long double");
  const long double x = p * std::sqrt(std::exp(1.0L));
  const long double fl = std::floor(x);
  const long double margin = 1e-6L;
  if (x - fl < margin || fl + 1 - x < margin) {
    throw std::runtime_error("floor_sqrt_e_product: precision insufficient");
  }
  return static_cast<std::uint64_t>(fl);
}

}  // namespace cubegeo
