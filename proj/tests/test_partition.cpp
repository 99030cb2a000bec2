#include "sachs/extremal_search.hpp"
#include "sachs/partition.hpp"

#include <gtest/gtest.h>

using namespace sachs;

namespace {

auto rows(std::vector<int> r) { return YoungMatrix(std::move(r)); }

}  // namespace

TEST(Objective, Examples) {
  EXPECT_EQ(objective(rows({2, 2, 1, 1})), 4);
  EXPECT_EQ(objective(rows({3, 2, 1})), 5);
  EXPECT_EQ(objective(rows({5, 5, 5, 5})), 0);
  EXPECT_EQ(objective(rows({1})), 0);
}

TEST(Objective, MatchesRowSumFormula) {
  for (int n = 2; n <= 12; ++n)
    for (std::int64_t m = n - 1; feasible_pair(n, m); ++m)
      for (const auto &r : enumerate_feasible(n, m))
        ASSERT_EQ(objective(r), a4_by_row_sums(r)) << to_string(r);
}

TEST(EnumerateFeasible, Examples) {
  EXPECT_EQ(enumerate_feasible(6, 6),
            (std::vector<RowSumVector>{rows({3, 2, 1}), rows({2, 2, 1, 1})}));
  EXPECT_EQ(enumerate_feasible(6, 9), (std::vector<RowSumVector>{rows({3, 3, 3})}));
  EXPECT_EQ(enumerate_feasible(7, 8),
            (std::vector<RowSumVector>{rows({3, 3, 1, 1}), rows({3, 2, 2, 1}),
                                       rows({2, 2, 2, 1, 1})}));
  EXPECT_TRUE(enumerate_feasible(5, 7).empty());
  EXPECT_TRUE(enumerate_feasible(5, 3).empty());
}

TEST(EnumerateFeasible, ShapeConstraints) {
  for (int n = 2; n <= 14; ++n)
    for (std::int64_t m = n - 1; feasible_pair(n, m); ++m) {
      auto all = enumerate_feasible(n, m);
      EXPECT_FALSE(all.empty()) << n << "," << m;
      for (std::size_t i = 0; i < all.size(); ++i) {
        const auto &r = all[i];
        EXPECT_EQ(r.height() + r.width(), n);
        EXPECT_GE(2 * r.height(), n);
        EXPECT_EQ(r.total(), m);
        if (i > 0) {
          EXPECT_TRUE(all[i - 1] > r);
        }
      }
    }
}

TEST(EnumerateFeasible, BijectionWithEigenvectors) {
  for (int n = 2; n <= 12; ++n)
    for (std::int64_t m = n - 1; feasible_pair(n, m); ++m) {
      auto vectors = enumerate_feasible(n, m);
      auto evs = enumerate_eigenvectors(n, m);
      ASSERT_EQ(vectors.size(), evs.size()) << n << "," << m;
      std::vector<RowSumVector> mapped;
      for (const auto &e : evs)
        mapped.push_back(young_matrix(e));
      std::sort(mapped.begin(), mapped.end(), std::greater<>());
      ASSERT_EQ(mapped, vectors) << n << "," << m;
    }
}

TEST(EnumerateFeasible, RectangleExactlyWhenProduct) {
  for (int n = 2; n <= 14; ++n)
    for (std::int64_t m = n - 1; feasible_pair(n, m); ++m) {
      bool rectangle = false;
      for (const auto &r : enumerate_feasible(n, m))
        if (r.rows().front() == r.rows().back()) {
          rectangle = true;
          EXPECT_EQ(objective(r), 0);
        }
      bool product = false;
      for (int t = 1; 2 * t <= n; ++t)
        product |= std::int64_t{t} * (n - t) == m;
      EXPECT_EQ(rectangle, product) << n << "," << m;
    }
}

TEST(Solve, Examples) {
  auto s = solve(6, 6);
  EXPECT_EQ(s.min, 4);
  EXPECT_EQ(s.argmin, (std::vector<RowSumVector>{rows({2, 2, 1, 1})}));
  s = solve(7, 8);
  EXPECT_EQ(s.min, 6);
  EXPECT_EQ(s.argmin, (std::vector<RowSumVector>{rows({2, 2, 2, 1, 1})}));
  for (int n = 2; n <= 12; ++n)
    for (int t = 1; 2 * t <= n; ++t)
      EXPECT_EQ(solve(n, std::int64_t{t} * (n - t)).min, 0);
  EXPECT_FALSE(solve(5, 7).min);
  EXPECT_TRUE(solve(5, 7).argmin.empty());
}

TEST(Solve, EqualsDifferenceMinimum) {
  for (int n = 2; n <= 12; ++n)
    for (std::int64_t m = n - 1; feasible_pair(n, m); ++m)
      ASSERT_EQ(solve(n, m).min, min_a4_difference(n, m).difference_min)
          << n << "," << m;
}
