//
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lgm/core.hpp"

namespace lgm {

/**
 * 2x2 presence table over two graph classes P and N:
 *
 *              has g    lacks g
 *   class P    n_tp     n_fp      | n_p
 *   class N    n_tn     n_fn      | n_n
 *              n_g      n_not_g   | n
 */
struct ContingencyTable {
  std::int64_t n_tp = 0;
  std::int64_t n_fp = 0;
  std::int64_t n_tn = 0;
  std::int64_t n_fn = 0;

  std::int64_t n_p() const noexcept { return n_tp + n_fp; }
  std::int64_t n_n() const noexcept { return n_tn + n_fn; }
  std::int64_t n_g() const noexcept { return n_tp + n_tn; }
  std::int64_t n_not_g() const noexcept { return n_fp + n_fn; }
  std::int64_t n() const noexcept { return n_p() + n_n(); }

  void validate() const {
    if (n_tp < 0 || n_fp < 0 || n_tn < 0 || n_fn < 0)
      throw std::invalid_argument("contingency table has a negative count");
  }

  /// Swaps the roles of the two classes.
  ContingencyTable swapped_classes() const {
    return ContingencyTable{n_tn, n_fn, n_tp, n_fp};
  }

  friend bool operator==(const ContingencyTable &,
                         const ContingencyTable &) = default;
};

/// Relative tolerance under which two table probabilities count as equal.
inline constexpr double kFisherTieTolerance = 1e-7;

namespace detail {

// log(i!) for i = 0..n, grown on demand and kept per thread.
inline const std::vector<double> &log_factorials(std::int64_t n) {
  thread_local std::vector<double> lf{0.0};
  while (static_cast<std::int64_t>(lf.size()) <= n)
    lf.push_back(lf.back() + std::log(static_cast<double>(lf.size())));
  return lf;
}

// log of the point probability of the table with n_tp = a under the margins
// of t.
inline double log_table_probability(const std::vector<double> &lf,
                                    const ContingencyTable &t,
                                    std::int64_t a) {
  const auto b = t.n_p() - a;     // n_fp
  const auto c = t.n_g() - a;     // n_tn
  const auto d = t.n_n() - c;     // n_fn
  return lf[t.n_g()] + lf[t.n_not_g()] + lf[t.n_p()] + lf[t.n_n()] -
         lf[t.n()] - lf[a] - lf[b] - lf[c] - lf[d];
}

} // namespace detail

/// Hypergeometric probability of the table given its margins.
inline double table_probability(const ContingencyTable &t) {
  t.validate();
  const auto &lf = detail::log_factorials(t.n());
  return std::exp(detail::log_table_probability(lf, t, t.n_tp));
}

/**
 * Two-sided Fisher exact test: total probability of the tables sharing the
 * margins of t whose probability does not exceed that of t (up to a relative
 * tolerance of kFisherTieTolerance).
 */
inline double fisher_two_sided(const ContingencyTable &t) {
  t.validate();
  const auto &lf = detail::log_factorials(t.n());
  const auto lo = std::max<std::int64_t>(0, t.n_g() - t.n_n());
  const auto hi = std::min(t.n_g(), t.n_p());

  std::vector<double> logs;
  logs.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (auto a = lo; a <= hi; ++a)
    logs.push_back(detail::log_table_probability(lf, t, a));
  const double mode = *std::max_element(logs.begin(), logs.end());
  const double cutoff = detail::log_table_probability(lf, t, t.n_tp) +
                        std::log1p(kFisherTieTolerance);

  // Weights relative to the mode; dividing by their total absorbs rounding in
  // the normalizing constant.
  double total = 0.0, extreme = 0.0;
  for (double l : logs) {
    const double w = std::exp(l - mode);
    total += w;
    if (l <= cutoff)
      extreme += w;
  }
  return std::clamp(extreme / total, 0.0, 1.0);
}

enum class GraphClass { kPositive, kNegative };

struct RankedPattern {
  Pattern pattern;
  ContingencyTable table;
  double p_value = 1.0;
};

/// A mined pattern together with the ids of the graphs containing it.
struct PatternRecord {
  Pattern pattern;
  std::size_t support = 0;
  std::size_t occurrence_count = 0;
  std::vector<GraphId> graph_ids;
};

class UnknownGraph : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

/**
 * Tests every record for association with the class labeling and returns
 * those with p <= alpha, ascending by p and then canonical code. Class sizes
 * come from the whole labeling, not only from graphs that contain a pattern.
 */
template <class ClassMap>
std::vector<RankedPattern> rank_patterns(const std::vector<PatternRecord> &records,
                                         const ClassMap &class_of,
                                         double alpha) {
  std::int64_t n_p = 0, n_n = 0;
  for (const auto &[id, cls] : class_of)
    (cls == GraphClass::kPositive ? n_p : n_n)++;

  std::vector<std::pair<CanonicalCode, RankedPattern>> ranked;
  for (const auto &rec : records) {
    std::vector<GraphId> ids = rec.graph_ids;
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    std::int64_t with_p = 0, with_n = 0;
    for (auto id : ids) {
      auto it = class_of.find(id);
      if (it == class_of.end())
        throw UnknownGraph("graph " + std::to_string(id) + " has no class");
      (it->second == GraphClass::kPositive ? with_p : with_n)++;
    }
    ContingencyTable t{with_p, n_p - with_p, with_n, n_n - with_n};
    const double p = fisher_two_sided(t);
    if (p <= alpha)
      ranked.emplace_back(canonical_code(rec.pattern),
                          RankedPattern{rec.pattern, t, p});
  }
  std::sort(ranked.begin(), ranked.end(), [](const auto &a, const auto &b) {
    if (a.second.p_value != b.second.p_value)
      return a.second.p_value < b.second.p_value;
    return a.first < b.first;
  });
  std::vector<RankedPattern> out;
  out.reserve(ranked.size());
  for (auto &[code, r] : ranked)
    out.push_back(std::move(r));
  return out;
}

} // namespace lgm
