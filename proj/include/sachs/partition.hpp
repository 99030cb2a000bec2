#pragma once

/**
 * Minimal a_4 over difference graphs as an optimisation over row-sum
 * vectors r_1 >= ... >= r_h >= 1 of Young matrices.
 *
 * Feasibility convention: a connected difference graph on n vertices with
 * the larger side as rows has h + r_1 = n (its first row is full) and
 * h >= ceil(n/2). This differs from the constraint r_1 + h = n - 1,
 * h >= floor((n-1)/2) sometimes quoted for the same program; the convention
 * here is the one that matches graph enumeration exactly.
 */

#include "sachs/difference_graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sachs {

using RowSumVector = YoungMatrix;

/// sum_i (r_i - r_{i+1}) * i * (r_{i+1} + ... + r_h), one pass with a
/// running suffix sum.
inline auto objective(const RowSumVector &r) -> std::int64_t {
  const auto &rows = r.rows();
  std::int64_t suffix = 0;
  std::int64_t total = 0;
  for (std::size_t i = rows.size(); i-- > 1;) {
    suffix += rows[i];
    total += std::int64_t{rows[i - 1] - rows[i]} * static_cast<std::int64_t>(i) *
             suffix;
  }
  return total;
}

inline auto feasible_pair(int n, std::int64_t m) -> bool {
  return n >= 2 && m >= n - 1 &&
         m <= std::int64_t{n / 2} * std::int64_t{(n + 1) / 2};
}

/// All row-sum vectors with sum m, h + r_1 = n and h >= ceil(n/2), in
/// lexicographically descending order.
inline auto enumerate_feasible(int n, std::int64_t m) -> std::vector<RowSumVector> {
  std::vector<RowSumVector> out;
  if (!feasible_pair(n, m))
    return out;
  std::vector<int> rows;
  // fill positions after the first, values in [1, cap], summing to `left`
  auto extend = [&](auto &&self, int slots, std::int64_t left, int cap) -> void {
    if (slots == 0) {
      if (left == 0)
        out.emplace_back(rows);
      return;
    }
    for (int v = cap; v >= 1; --v) {
      std::int64_t rest = left - v;
      if (rest < slots - 1 || rest > std::int64_t{slots - 1} * v)
        continue;
      rows.push_back(v);
      self(self, slots - 1, rest, v);
      rows.pop_back();
    }
  };
  for (int first = n / 2; first >= 1; --first) {
    int h = n - first;
    rows.assign(1, first);
    if (m - first >= h - 1 && m - first <= std::int64_t{h - 1} * first)
      extend(extend, h - 1, m - first, first);
  }
  return out;
}

struct PartitionSolution {
  std::optional<std::int64_t> min;  ///< empty when (n, m) is infeasible
  std::vector<RowSumVector> argmin;
};

inline auto solve(int n, std::int64_t m) -> PartitionSolution {
  PartitionSolution out;
  for (auto &r : enumerate_feasible(n, m)) {
    std::int64_t value = objective(r);
    if (!out.min || value < *out.min) {
      out.min = value;
      out.argmin.clear();
    }
    if (value == *out.min)
      out.argmin.push_back(std::move(r));
  }
  return out;
}

}  // namespace sachs
