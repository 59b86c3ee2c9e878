//
// SPDX-License-Identifier: Apache-2.0
//

#include "lgm/stats.hpp"

#include <cstdint>
#include <map>
#include <vector>

#include <gtest/gtest.h>

namespace lgm {
namespace {

using u128 = unsigned __int128;

std::uint64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n)
    return 0;
  std::uint64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i)
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

// Exhaustive enumeration with exact integer weights C(n_p, a) C(n_n, n_g - a).
long double exact_two_sided(const ContingencyTable &t) {
  auto weight = [&](std::int64_t a) -> u128 {
    return u128(binomial(t.n_p(), a)) * binomial(t.n_n(), t.n_g() - a);
  };
  const u128 observed = weight(t.n_tp);
  u128 extreme = 0, total = 0;
  for (std::int64_t a = 0; a <= t.n_g(); ++a) {
    const u128 w = weight(a);
    total += w;
    // w <= observed * (1 + 1e-7), in integers.
    if (w * 10000000u <= observed * 10000001u)
      extreme += w;
  }
  return static_cast<long double>(extreme) / static_cast<long double>(total);
}

TEST(TableProbability, Examples) {
  EXPECT_NEAR(table_probability({3, 1, 1, 3}), 16.0 / 70.0, 1e-12);
  for (std::int64_t k : {0, 1, 7, 40})
    EXPECT_NEAR(table_probability({k, 0, 0, 0}), 1.0, 1e-12);
}

TEST(TableProbability, NormalizesOverMargins) {
  double sum = 0.0;
  for (std::int64_t a = 0; a <= 4; ++a)
    sum += table_probability({a, 4 - a, 4 - a, a});
  EXPECT_NEAR(sum, 1.0, 1e-12);
}

TEST(TableProbability, RejectsNegativeCounts) {
  EXPECT_THROW(table_probability({-1, 0, 0, 0}), std::invalid_argument);
  EXPECT_THROW(fisher_two_sided({0, 0, 0, -2}), std::invalid_argument);
}

TEST(FisherTwoSided, Examples) {
  EXPECT_NEAR(fisher_two_sided({3, 1, 1, 3}), 34.0 / 70.0, 1e-12);
  EXPECT_EQ(fisher_two_sided({5, 5, 5, 5}), 1.0);
  EXPECT_NEAR(fisher_two_sided({4, 0, 0, 4}), 2.0 / 70.0, 1e-12);
  // Pattern absent everywhere.
  EXPECT_EQ(fisher_two_sided({0, 6, 0, 3}), 1.0);
}

TEST(FisherTwoSided, MatchesExactEnumerationUpToForty) {
  double worst = 0.0;
  for (std::int64_t n = 0; n <= 40; ++n)
    for (std::int64_t n_p = 0; n_p <= n; ++n_p)
      for (std::int64_t n_g = 0; n_g <= n; ++n_g)
        for (std::int64_t a = std::max<std::int64_t>(0, n_g - (n - n_p));
             a <= std::min(n_g, n_p); ++a) {
          ContingencyTable t{a, n_p - a, n_g - a, n - n_p - n_g + a};
          const double p = fisher_two_sided(t);
          ASSERT_GE(p, 0.0);
          ASSERT_LE(p, 1.0);
          const double err =
              std::abs(static_cast<double>(exact_two_sided(t)) - p);
          worst = std::max(worst, err);
          ASSERT_LE(err, 1e-12) << t.n_tp << ' ' << t.n_fp << ' ' << t.n_tn
                                << ' ' << t.n_fn;
        }
  RecordProperty("max_abs_error", std::to_string(worst));
}

TEST(FisherTwoSided, SymmetricInClassesAndModeIsOne) {
  for (std::int64_t n_p = 1; n_p <= 15; ++n_p)
    for (std::int64_t n_n = 1; n_n <= 15; ++n_n)
      for (std::int64_t n_g = 0; n_g <= n_p + n_n; ++n_g) {
        const auto lo = std::max<std::int64_t>(0, n_g - n_n);
        const auto hi = std::min(n_g, n_p);
        std::int64_t mode = lo;
        double best = -1.0;
        for (auto a = lo; a <= hi; ++a) {
          ContingencyTable t{a, n_p - a, n_g - a, n_n - n_g + a};
          ASSERT_NEAR(fisher_two_sided(t), fisher_two_sided(t.swapped_classes()),
                      1e-12);
          if (table_probability(t) > best) {
            best = table_probability(t);
            mode = a;
          }
        }
        ContingencyTable m{mode, n_p - mode, n_g - mode, n_n - n_g + mode};
        ASSERT_EQ(fisher_two_sided(m), 1.0);
      }
}

TEST(RankPatterns, SeparatingPatternRanksFirst) {
  std::map<GraphId, GraphClass> classes;
  for (GraphId id = 0; id < 8; ++id)
    classes[id] = id < 4 ? GraphClass::kPositive : GraphClass::kNegative;
  Pattern sep({0, 1}, {Edge{0, 1}});
  Pattern everywhere({0, 0}, {Edge{0, 1}});
  Pattern mixed({1, 1}, {Edge{0, 1}});
  std::vector<PatternRecord> records{
      {everywhere, 8, 8, {0, 1, 2, 3, 4, 5, 6, 7}},
      {mixed, 4, 4, {0, 1, 4, 5}},
      {sep, 4, 4, {0, 1, 2, 3}},
  };
  auto all = rank_patterns(records, classes, 1.0);
  ASSERT_EQ(all.size(), 3u);
  EXPECT_EQ(all[0].pattern, sep);
  EXPECT_EQ(all[0].table, (ContingencyTable{4, 0, 0, 4}));
  EXPECT_NEAR(all[0].p_value, 2.0 / 70.0, 1e-12);
  EXPECT_EQ(all[1].p_value, 1.0);
  EXPECT_EQ(all[2].p_value, 1.0);
  // Equal p-values fall back to canonical order.
  EXPECT_LT(canonical_code(all[1].pattern), canonical_code(all[2].pattern));

  auto strict = rank_patterns(records, classes, 0.001);
  EXPECT_TRUE(strict.empty());
  auto loose = rank_patterns(records, classes, 0.05);
  ASSERT_EQ(loose.size(), 1u);
  EXPECT_EQ(loose[0].pattern, sep);
}

TEST(RankPatterns, EmptyAndUnknown) {
  std::map<GraphId, GraphClass> classes{{0, GraphClass::kPositive}};
  EXPECT_TRUE(rank_patterns({}, classes, 1.0).empty());
  std::vector<PatternRecord> records{{Pattern({0, 0}, {Edge{0, 1}}), 1, 1, {3}}};
  EXPECT_THROW(rank_patterns(records, classes, 1.0), UnknownGraph);
}

TEST(RankPatterns, PresenceCountsDistinctGraphs) {
  std::map<GraphId, GraphClass> classes{{0, GraphClass::kPositive},
                                        {1, GraphClass::kNegative}};
  std::vector<PatternRecord> records{{Pattern({0, 0}, {Edge{0, 1}}), 1, 3, {0, 0, 0}}};
  auto r = rank_patterns(records, classes, 1.0);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].table, (ContingencyTable{1, 0, 0, 1}));
}

} // namespace
} // namespace lgm
