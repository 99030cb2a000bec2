#pragma once

/**
 * Ground truth for the minimal a_4 over connected bipartite (n, m)-graphs:
 * isomorph-free exhaustive enumeration, the same minimum over difference
 * graphs only, and an audit of closed-form predictions against both.
 */

#include "sachs/coefficients.hpp"
#include "sachs/difference_graph.hpp"
#include "sachs/graph.hpp"
#include "sachs/partition.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

namespace sachs {

inline constexpr int default_exhaustive_max_order = 10;

// ---------------------------------------------------------------------------
// Isomorph-free enumeration of connected bipartite graphs
//
// A bipartite graph with sides of sizes a >= b is a multiset of a row masks
// over b columns. Sorting the rows quotients out permutations of the a side;
// a graph is emitted only when no column permutation (and, for a == b, no
// side swap) yields a lexicographically smaller sorted row list.

using RowList = std::vector<std::uint32_t>;

/// One unit of enumeration work: split sizes and the first (smallest) row.
struct BipartiteShard {
  int a = 0;
  int b = 0;
  std::uint32_t first_row = 0;
};

namespace detail {

class ColumnPermutations {
public:
  explicit ColumnPermutations(int b) : _b(b) {
    std::vector<int> perm(b);
    for (int i = 0; i < b; ++i)
      perm[i] = i;
    do {
      std::vector<std::uint32_t> table(std::size_t{1} << b, 0);
      for (std::uint32_t mask = 0; mask < table.size(); ++mask)
        for (int c = 0; c < b; ++c)
          if (mask >> c & 1U)
            table[mask] |= 1U << perm[c];
      _tables.push_back(std::move(table));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  auto tables() const -> const std::vector<std::vector<std::uint32_t>> & {
    return _tables;
  }
  auto columns() const -> int { return _b; }

private:
  int _b;
  std::vector<std::vector<std::uint32_t>> _tables;
};

inline auto transpose(const RowList &rows, int b) -> RowList {
  RowList out(b, 0);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int c = 0; c < b; ++c)
      if (rows[i] >> c & 1U)
        out[c] |= 1U << i;
  return out;
}

inline auto has_smaller_image(const RowList &source, const RowList &reference,
                              const ColumnPermutations &perms,
                              RowList &scratch) -> bool {
  for (const auto &table : perms.tables()) {
    for (std::size_t i = 0; i < source.size(); ++i)
      scratch[i] = table[source[i]];
    std::sort(scratch.begin(), scratch.end());
    if (scratch < reference)
      return true;
  }
  return false;
}

inline auto is_canonical(const RowList &rows, const ColumnPermutations &perms,
                         RowList &scratch) -> bool {
  if (has_smaller_image(rows, rows, perms, scratch))
    return false;
  if (static_cast<int>(rows.size()) == perms.columns())
    return !has_smaller_image(transpose(rows, perms.columns()), rows, perms,
                              scratch);
  return true;
}

inline auto bipartite_graph(const RowList &rows, int b) -> Graph {
  const int a = static_cast<int>(rows.size());
  Graph g(a + b);
  for (int i = 0; i < a; ++i)
    for (int c = 0; c < b; ++c)
      if (rows[i] >> c & 1U)
        g.add_edge(i, a + c);
  return g;
}

inline auto check_scale(int n, int max_order) -> void {
  if (n > max_order)
    throw scale_error("exhaustive enumeration is limited to order " +
                      std::to_string(max_order) + " (requested " +
                      std::to_string(n) + ")");
}

}  // namespace detail

/// Shards covering every connected bipartite (n, m)-graph, in enumeration
/// order. Empty when (n, m) is infeasible.
inline auto bipartite_shards(int n, std::int64_t m) -> std::vector<BipartiteShard> {
  std::vector<BipartiteShard> out;
  if (!feasible_pair(n, m))
    return out;
  for (int a = n - 1; 2 * a >= n; --a) {
    int b = n - a;
    if (std::int64_t{a} * b < m)
      continue;
    for (std::uint32_t first = 1; first < (1U << b); ++first)
      out.push_back({a, b, first});
  }
  return out;
}

/// Calls visit(graph) for every canonical connected graph in the shard, in
/// lexicographic row order.
template <class Visitor>
auto for_each_in_shard(const BipartiteShard &shard, std::int64_t m,
                       const detail::ColumnPermutations &perms, Visitor &&visit)
    -> void {
  const int a = shard.a;
  const int b = shard.b;
  const std::uint32_t top = (1U << b) - 1;
  RowList rows(a, 0);
  RowList scratch(a, 0);
  rows[0] = shard.first_row;

  auto extend = [&](auto &&self, int i, std::int64_t left) -> void {
    if (i == a) {
      if (left == 0 && detail::is_canonical(rows, perms, scratch)) {
        Graph g = detail::bipartite_graph(rows, b);
        if (is_connected(g))
          visit(g);
      }
      return;
    }
    int slots = a - i;
    for (std::uint32_t r = rows[i - 1]; r <= top; ++r) {
      std::int64_t rest = left - std::popcount(r);
      if (rest < slots - 1 || rest > std::int64_t{slots - 1} * b)
        continue;
      rows[i] = r;
      self(self, i + 1, rest);
    }
  };

  std::int64_t left = m - std::popcount(shard.first_row);
  if (left < a - 1 || left > std::int64_t{a - 1} * b)
    return;
  extend(extend, 1, left);
}

/// One representative per isomorphism class of connected bipartite
/// (n, m)-graphs, in a fixed order.
inline auto enumerate_bipartite(int n, std::int64_t m,
                                int max_order = default_exhaustive_max_order)
    -> std::vector<Graph> {
  detail::check_scale(n, max_order);
  std::vector<Graph> out;
  std::optional<detail::ColumnPermutations> perms;
  for (const auto &shard : bipartite_shards(n, m)) {
    if (!perms || perms->columns() != shard.b)
      perms.emplace(shard.b);
    for_each_in_shard(shard, m, *perms,
                      [&](const Graph &g) { out.push_back(g); });
  }
  return out;
}

// ---------------------------------------------------------------------------
// Difference-graph enumeration
//
// Walks the staircase boundary of the Young matrix from its bottom-left
// corner: right y_1, up x_k, right y_2, up x_{k-1}, ..., right y_k, up x_1.
// An up-run of length x at width w adds x*w cells.

/// Every eigenvector of order n and size m with x-side at least as large as
/// the y-side (equal sides give both orientations), sorted.
inline auto enumerate_eigenvectors(int n, std::int64_t m)
    -> std::vector<VertexEigenvector> {
  std::vector<VertexEigenvector> out;
  if (!feasible_pair(n, m))
    return out;
  std::vector<int> ys;
  std::vector<int> xs_reversed;

  // bounds on the area still to come from `left` vertices at width `width`,
  // using at least one right step and one up step
  auto area_bounds = [](int left, std::int64_t width) {
    std::int64_t lo = std::min<std::int64_t>(std::int64_t{left - 1} * (width + 1),
                                             width + left - 1);
    std::int64_t hi = 0;
    for (int t = 1; t < left; ++t)
      hi = std::max(hi, std::int64_t{left - t} * (width + t));
    return std::pair{lo, hi};
  };

  auto walk = [&](auto &&self, int left, std::int64_t width,
                  std::int64_t area_left) -> void {
    for (int y = 1; y <= left - 1; ++y) {
      std::int64_t w = width + y;
      for (int x = 1; x <= left - y; ++x) {
        std::int64_t rest_area = area_left - x * w;
        if (rest_area < 0)
          break;
        int rest = left - y - x;
        ys.push_back(y);
        xs_reversed.push_back(x);
        if (rest == 0) {
          if (rest_area == 0) {
            std::vector<int> xs(xs_reversed.rbegin(), xs_reversed.rend());
            VertexEigenvector ev(xs, ys);
            if (ev.x_total() >= ev.y_total())
              out.push_back(std::move(ev));
          }
        } else if (rest >= 2) {
          auto [lo, hi] = area_bounds(rest, w);
          if (rest_area >= lo && rest_area <= hi)
            self(self, rest, w, rest_area);
        }
        ys.pop_back();
        xs_reversed.pop_back();
      }
    }
  };
  walk(walk, n, 0, m);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Closed-form predictions

enum class PredictionCase {
  complete_bipartite,
  low_density,
  below_threshold,
  at_threshold,
  above_threshold_even,
  above_threshold_odd,
};

inline auto to_string(PredictionCase c) -> std::string {
  switch (c) {
  case PredictionCase::complete_bipartite: return "complete_bipartite";
  case PredictionCase::low_density: return "low_density";
  case PredictionCase::below_threshold: return "below_threshold";
  case PredictionCase::at_threshold: return "at_threshold";
  case PredictionCase::above_threshold_even: return "above_threshold_even";
  case PredictionCase::above_threshold_odd: return "above_threshold_odd";
  }
  return "unknown";
}

/// Block sizes exactly as a closed form states them; entries may be zero or
/// negative.
struct RawBlocks {
  std::vector<std::int64_t> x;
  std::vector<std::int64_t> y;
};

inline auto to_string(const RawBlocks &b) -> std::string {
  auto join = [](const std::vector<std::int64_t> &v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i)
      out += (i ? "," : "") + std::to_string(v[i]);
    return out;
  };
  return join(b.x) + ";" + join(b.y);
}

/// The difference graph described by possibly-degenerate block sizes, as a
/// canonical eigenvector, when the blocks describe a connected graph of the
/// given order and size. Zero-size blocks merge into their neighbours.
inline auto normalize_blocks(const RawBlocks &blocks, int n, std::int64_t m)
    -> std::optional<VertexEigenvector> {
  if (blocks.x.size() != blocks.y.size() || blocks.x.empty())
    return std::nullopt;
  std::int64_t order = 0;
  for (auto v : blocks.x)
    order += v;
  for (auto v : blocks.y)
    order += v;
  for (auto v : blocks.x)
    if (v < 0)
      return std::nullopt;
  for (auto v : blocks.y)
    if (v < 0)
      return std::nullopt;
  if (order != n || n < 2)
    return std::nullopt;

  const int k = static_cast<int>(blocks.x.size());
  std::vector<int> x_start(k + 1, 0);
  std::vector<int> y_start(k + 1, 0);
  for (int i = 0; i < k; ++i)
    x_start[i + 1] = x_start[i] + static_cast<int>(blocks.x[i]);
  y_start[0] = x_start[k];
  for (int i = 0; i < k; ++i)
    y_start[i + 1] = y_start[i] + static_cast<int>(blocks.y[i]);
  Graph g(n);
  for (int i = 1; i <= k; ++i)
    for (int u = x_start[i - 1]; u < x_start[i]; ++u)
      for (int v = y_start[0]; v < y_start[k - i + 1]; ++v)
        g.add_edge(u, v);
  if (g.size() != m || !is_connected(g))
    return std::nullopt;
  return eigenvector_of(g);
}

struct Prediction {
  PredictionCase kind = PredictionCase::complete_bipartite;
  std::int64_t value = 0;
  std::vector<RawBlocks> eigenvectors;  ///< as stated
  bool claims_unique = false;
  /// low_density only: the value and eigenvector the oracle supports.
  std::optional<std::int64_t> derived_value;
  std::optional<VertexEigenvector> derived_eigenvector;
};

/// Closed-form minimum of a_4 over connected bipartite (n, m)-graphs for
/// n >= 5 and n - 1 <= m <= 3(n - 3), plus m = t(n - t). Values are the
/// stated ones verbatim, including where they disagree with enumeration.
inline auto closed_form_prediction(int n, std::int64_t m)
    -> std::optional<Prediction> {
  if (n < 5 || !feasible_pair(n, m))
    return std::nullopt;
  const std::int64_t N = n;
  Prediction p;

  for (std::int64_t t = 1; 2 * t <= N; ++t)
    if (t * (N - t) == m) {
      p.kind = PredictionCase::complete_bipartite;
      p.value = 0;
      p.eigenvectors.push_back({{N - t}, {t}});
      p.claims_unique = true;
      return p;
    }

  if (m <= 2 * (N - 2)) {
    p.kind = PredictionCase::low_density;
    p.value = (2 * N - 4 - m) * (m - N + 1);
    p.eigenvectors.push_back({{1, 1}, {m - N - 2, 2 * N - 4 - m}});
    p.claims_unique = n >= 6;
    p.derived_value = (2 * N - 4 - m) * (m - N + 2);
    p.derived_eigenvector = VertexEigenvector(
        {static_cast<int>(m - N + 2), static_cast<int>(2 * N - 4 - m)}, {1, 1});
    return p;
  }

  if (m >= 3 * (N - 3))
    return std::nullopt;

  // compare m with 7n/3 - 7 without fractions
  std::int64_t lhs = 3 * m;
  std::int64_t threshold = 7 * N - 21;
  if (lhs < threshold) {
    p.kind = PredictionCase::below_threshold;
    p.value = 2 * (3 * N - 9 - m) * (m - 2 * N + 6);
    p.eigenvectors.push_back({{m - 2 * N + 6, 3 * N - m - 9}, {2, 1}});
  } else if (lhs == threshold) {
    p.kind = PredictionCase::at_threshold;
    p.value = 2 * (3 * N - 9 - m) * (m - 2 * N + 6);
    p.eigenvectors.push_back({{(N - 3) / 3, (2 * N - 6) / 3}, {2, 1}});
    p.eigenvectors.push_back({{(2 * N - 6) / 3, (N - 3) / 3}, {1, 2}});
  } else if ((3 * N - m - 9) % 2 == 0) {
    p.kind = PredictionCase::above_threshold_even;
    p.value = (3 * N - 9 - m) * (m - N + 3) / 2;
    p.eigenvectors.push_back({{(m - N + 3) / 2, (3 * N - m - 9) / 2}, {1, 2}});
  } else {
    p.kind = PredictionCase::above_threshold_odd;
    p.value = (3 * N - m - 10) * (m - N + 3) / 2 + m - N + 2;
    p.eigenvectors.push_back(
        {{(m - N + 2) / 2, 1, (3 * N - m - 10) / 2}, {1, 1, 1}});
  }
  return p;
}

// ---------------------------------------------------------------------------
// Structural predicates on optimal eigenvectors

struct StructuralFlags {
  bool first_block_dominates = true;  ///< k >= 2 implies x_1 > y_1
  bool first_block_covers_two = true;  ///< k >= 3 implies x_1 >= y_1 + y_2

  auto all() const -> bool { return first_block_dominates && first_block_covers_two; }
};

inline auto structural_predicates(const VertexEigenvector &ev) -> StructuralFlags {
  StructuralFlags f;
  const auto &x = ev.x();
  const auto &y = ev.y();
  if (ev.character() >= 2)
    f.first_block_dominates = x[0] > y[0];
  if (ev.character() >= 3)
    f.first_block_covers_two = x[0] >= y[0] + y[1];
  return f;
}

// ---------------------------------------------------------------------------
// Searches

struct SearchOptions {
  int jobs = 1;
  int max_order = default_exhaustive_max_order;
};

enum class SearchMode { brute, difference, partition, all };

struct SearchReport {
  int n = 0;
  std::int64_t m = 0;
  std::optional<std::int64_t> min_a4;  ///< empty when no graph exists

  std::optional<std::int64_t> brute_min;
  std::vector<Graph> witnesses;  ///< brute-force optimizers, canonical form
  int non_difference_witnesses = 0;

  std::optional<std::int64_t> difference_min;
  std::vector<VertexEigenvector> difference_witnesses;  ///< canonical
  std::vector<StructuralFlags> structural;  ///< per difference witness

  std::optional<PartitionSolution> partition;

  std::optional<Prediction> prediction;
  std::optional<bool> prediction_eigenvectors_optimal;
  std::optional<bool> derived_eigenvector_optimal;
  std::optional<bool> unique_claim_holds;

  bool discrepancy = false;
  double timing_ms = 0;

  /// Some brute-force optimizer is a difference graph.
  auto difference_optimum_attained() const -> std::optional<bool> {
    if (!brute_min)
      return std::nullopt;
    return non_difference_witnesses < static_cast<int>(witnesses.size());
  }

  auto structural_summary() const -> StructuralFlags {
    StructuralFlags out;
    for (const auto &f : structural) {
      out.first_block_dominates &= f.first_block_dominates;
      out.first_block_covers_two &= f.first_block_covers_two;
    }
    return out;
  }
};

namespace detail {

struct ShardMinimum {
  std::optional<std::int64_t> min;
  std::vector<Graph> witnesses;
};

template <class Work>
auto run_sharded(std::size_t count, int jobs, Work &&work) -> void {
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < count; ++i)
      work(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  for (int j = 0; j < jobs; ++j)
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++)
        work(i);
    });
  for (auto &w : workers)
    w.join();
}

inline auto fill_difference_witnesses(SearchReport &r,
                                      std::vector<VertexEigenvector> evs)
    -> void {
  for (auto &ev : evs)
    ev = ev.oriented();
  std::sort(evs.begin(), evs.end());
  evs.erase(std::unique(evs.begin(), evs.end()), evs.end());
  r.difference_witnesses = std::move(evs);
  r.structural.clear();
  for (const auto &ev : r.difference_witnesses)
    r.structural.push_back(structural_predicates(ev));
}

}  // namespace detail

/// Minimal a_4 over every connected bipartite (n, m)-graph, with all
/// optimizing isomorphism classes. Shards run on `jobs` threads; the result
/// does not depend on the thread count.
inline auto min_a4_bruteforce(int n, std::int64_t m, SearchOptions options = {})
    -> SearchReport {
  detail::check_scale(n, options.max_order);
  SearchReport report;
  report.n = n;
  report.m = m;
  auto shards = bipartite_shards(n, m);
  std::vector<detail::ShardMinimum> partial(shards.size());

  // column permutation tables are shared read-only across workers
  std::vector<std::optional<detail::ColumnPermutations>> tables(n + 1);
  for (const auto &s : shards)
    if (!tables[s.b])
      tables[s.b].emplace(s.b);

  detail::run_sharded(shards.size(), options.jobs, [&](std::size_t i) {
    auto &local = partial[i];
    for_each_in_shard(shards[i], m, *tables[shards[i].b], [&](const Graph &g) {
      std::int64_t value = a4_fast(g);
      if (!local.min || value < *local.min) {
        local.min = value;
        local.witnesses.clear();
      }
      if (value == *local.min)
        local.witnesses.push_back(g);
    });
  });

  for (auto &p : partial)
    if (p.min && (!report.brute_min || *p.min < *report.brute_min))
      report.brute_min = p.min;
  std::vector<VertexEigenvector> evs;
  for (auto &p : partial)
    if (p.min && p.min == report.brute_min)
      for (auto &g : p.witnesses) {
        if (is_difference(g))
          evs.push_back(eigenvector_of(g));
        else
          ++report.non_difference_witnesses;
        report.witnesses.push_back(std::move(g));
      }
  report.min_a4 = report.brute_min;
  detail::fill_difference_witnesses(report, std::move(evs));
  return report;
}

/// Minimal a_4 over difference graphs of order n and size m.
inline auto min_a4_difference(int n, std::int64_t m) -> SearchReport {
  SearchReport report;
  report.n = n;
  report.m = m;
  std::vector<VertexEigenvector> argmin;
  for (auto &ev : enumerate_eigenvectors(n, m)) {
    std::int64_t value = a4_by_row_sums(young_matrix(ev));
    if (!report.difference_min || value < *report.difference_min) {
      report.difference_min = value;
      argmin.clear();
    }
    if (value == *report.difference_min)
      argmin.push_back(std::move(ev));
  }
  report.min_a4 = report.difference_min;
  detail::fill_difference_witnesses(report, std::move(argmin));
  return report;
}

namespace detail {

inline auto attains(const std::optional<VertexEigenvector> &ev,
                    std::int64_t target) -> bool {
  return ev && a4_by_row_sums(young_matrix(*ev)) == target;
}

}  // namespace detail

/// Runs the requested searches for one (n, m) cell and cross-checks them
/// against each other and against the closed-form prediction.
inline auto search(int n, std::int64_t m, SearchMode mode,
                   SearchOptions options = {}) -> SearchReport {
  auto start = std::chrono::steady_clock::now();
  bool brute = mode == SearchMode::brute || mode == SearchMode::all;
  bool difference = mode == SearchMode::difference || mode == SearchMode::all;
  bool partition = mode == SearchMode::partition || mode == SearchMode::all;

  SearchReport report;
  report.n = n;
  report.m = m;
  if (brute)
    report = min_a4_bruteforce(n, m, options);
  if (difference) {
    auto d = min_a4_difference(n, m);
    report.difference_min = d.difference_min;
    if (!brute) {
      report.difference_witnesses = std::move(d.difference_witnesses);
      report.structural = std::move(d.structural);
    }
  }
  if (partition)
    report.partition = solve(n, m);

  if (report.brute_min)
    report.min_a4 = report.brute_min;
  else if (report.difference_min)
    report.min_a4 = report.difference_min;
  else if (report.partition && report.partition->min)
    report.min_a4 = report.partition->min;

  if (report.brute_min && difference && report.brute_min != report.difference_min)
    report.discrepancy = true;
  if (report.partition && difference &&
      report.partition->min != report.difference_min)
    report.discrepancy = true;

  report.prediction = closed_form_prediction(n, m);
  if (report.prediction && report.min_a4) {
    const auto &p = *report.prediction;
    if (p.value != *report.min_a4)
      report.discrepancy = true;
    bool all_attain = true;
    for (const auto &blocks : p.eigenvectors)
      all_attain &= detail::attains(normalize_blocks(blocks, n, m), *report.min_a4);
    report.prediction_eigenvectors_optimal = all_attain;
    if (p.derived_eigenvector)
      report.derived_eigenvector_optimal =
          detail::attains(p.derived_eigenvector, *report.min_a4);
    if (p.claims_unique && report.brute_min)
      report.unique_claim_holds = report.witnesses.size() == 1;
  }

  report.timing_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
  return report;
}

// ---------------------------------------------------------------------------
// Range verification

/// Exhaustive check of the quadratic inequality
///   ((1 + y)(n - 1 - y) - m) / y > (3n - 9 - m) / 2
/// for 6 < n <= n_max, 2(n - 2) < m < 3(n - 3), 2 < y < (m + 1 - n) / 2.
struct QuadraticBoundCheck {
  int n_max = 30;
  std::int64_t checked = 0;
  std::vector<std::array<std::int64_t, 3>> counterexamples;  ///< (n, m, y)
};

inline auto quadratic_bound_check(int n_max = 30) -> QuadraticBoundCheck {
  QuadraticBoundCheck out;
  out.n_max = n_max;
  for (std::int64_t n = 7; n <= n_max; ++n)
    for (std::int64_t m = 2 * (n - 2) + 1; m < 3 * (n - 3); ++m)
      for (std::int64_t y = 3; 2 * y < m + 1 - n; ++y) {
        ++out.checked;
        // both sides scaled by 2y > 0
        if (!(2 * ((1 + y) * (n - 1 - y) - m) > y * (3 * n - 9 - m)))
          out.counterexamples.push_back({n, m, y});
      }
  return out;
}

struct VerifyOptions {
  SearchMode mode = SearchMode::all;
  SearchOptions search;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct VerifyResult {
  std::vector<SearchReport> cells;
  QuadraticBoundCheck bound;
  bool truncated = false;

  auto discrepancies() const -> std::int64_t {
    return std::count_if(cells.begin(), cells.end(),
                         [](const auto &c) { return c.discrepancy; });
  }
};

/// Every feasible (n, m) with n_min <= n <= n_max, in order. Stops early,
/// marking the result truncated, once the deadline passes.
inline auto verify_range(int n_min, int n_max, VerifyOptions options = {})
    -> VerifyResult {
  if (n_min < 2 || n_min > n_max)
    throw range_error("verify needs 2 <= n_min <= n_max");
  if (options.mode == SearchMode::brute || options.mode == SearchMode::all)
    detail::check_scale(n_max, options.search.max_order);
  VerifyResult out;
  out.bound = quadratic_bound_check();
  for (int n = n_min; n <= n_max && !out.truncated; ++n)
    for (std::int64_t m = n - 1; feasible_pair(n, m); ++m) {
      if (options.deadline && std::chrono::steady_clock::now() > *options.deadline) {
        out.truncated = true;
        break;
      }
      out.cells.push_back(search(n, m, options.mode, options.search));
    }
  return out;
}

}  // namespace sachs
