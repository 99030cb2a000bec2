#pragma once

/**
 * Difference (chain) graphs: recognition, the block-size vector
 * (x_1..x_k; y_1..y_k), its Young matrix and characteristic matrix, and three
 * independent closed forms for a_4.
 *
 * Block conventions: x-block i is completely joined to y-blocks 1..k-i+1 and
 * to nothing else. Realized graphs number the x-blocks first, in order, then
 * the y-blocks.
 */

#include "sachs/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

namespace sachs {

class VertexEigenvector {
public:
  VertexEigenvector() = default;

  VertexEigenvector(std::vector<int> x, std::vector<int> y)
      : _x(std::move(x)), _y(std::move(y)) {
    if (_x.empty() || _x.size() != _y.size())
      throw precondition_error(
          "block vectors must be non-empty and of equal length");
    for (int v : _x)
      if (v < 1)
        throw precondition_error("block sizes must be positive");
    for (int v : _y)
      if (v < 1)
        throw precondition_error("block sizes must be positive");
  }

  auto x() const -> const std::vector<int> & { return _x; }
  auto y() const -> const std::vector<int> & { return _y; }
  auto character() const -> int { return static_cast<int>(_x.size()); }

  auto x_total() const -> int { return std::accumulate(_x.begin(), _x.end(), 0); }
  auto y_total() const -> int { return std::accumulate(_y.begin(), _y.end(), 0); }
  auto order() const -> int { return x_total() + y_total(); }

  auto size() const -> std::int64_t {
    std::int64_t m = 0;
    std::int64_t reach = 0;
    // x-block i sees y-blocks 1..k-i+1; walk i downward so reach grows
    for (int i = character(); i >= 1; --i) {
      reach += _y[character() - i];
      m += _x[i - 1] * reach;
    }
    return m;
  }

  auto swapped() const -> VertexEigenvector { return {_y, _x}; }

  /// Larger side first; equal sides put the lexicographically larger vector
  /// first.
  auto canonical() const -> bool {
    int sx = x_total();
    int sy = y_total();
    return sx > sy || (sx == sy && _x >= _y);
  }

  auto oriented() const -> VertexEigenvector {
    return canonical() ? *this : swapped();
  }

  friend auto operator==(const VertexEigenvector &, const VertexEigenvector &)
      -> bool = default;
  friend auto operator<=>(const VertexEigenvector &,
                          const VertexEigenvector &) = default;

private:
  std::vector<int> _x{1};
  std::vector<int> _y{1};
};

namespace detail {

inline auto join_ints(const std::vector<int> &values) -> std::string {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i)
      out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

inline auto split_ints(std::string_view text) -> std::vector<int> {
  std::vector<int> out;
  std::size_t pos = 0;
  while (true) {
    auto comma = text.find(',', pos);
    auto field = text.substr(pos, comma == std::string_view::npos
                                      ? std::string_view::npos
                                      : comma - pos);
    out.push_back(parse_decimal(field, text));
    if (comma == std::string_view::npos)
      break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace detail

/// "x1,...,xk;y1,...,yk"
inline auto to_string(const VertexEigenvector &ev) -> std::string {
  return detail::join_ints(ev.x()) + ";" + detail::join_ints(ev.y());
}

inline auto parse_eigenvector(std::string_view text) -> VertexEigenvector {
  auto semi = text.find(';');
  if (semi == std::string_view::npos ||
      text.find(';', semi + 1) != std::string_view::npos)
    throw parse_error("eigenvector needs exactly one ';': '" +
                      std::string(text) + "'");
  auto x = detail::split_ints(text.substr(0, semi));
  auto y = detail::split_ints(text.substr(semi + 1));
  if (x.size() != y.size())
    throw parse_error("eigenvector sides differ in length: '" +
                      std::string(text) + "'");
  for (int v : x)
    if (v < 1)
      throw parse_error("eigenvector entries must be positive");
  for (int v : y)
    if (v < 1)
      throw parse_error("eigenvector entries must be positive");
  return {std::move(x), std::move(y)};
}

/// Left-justified 0/1 staircase, stored by its non-increasing row sums.
class YoungMatrix {
public:
  YoungMatrix() = default;

  explicit YoungMatrix(std::vector<int> rows) : _rows(std::move(rows)) {
    if (_rows.empty())
      throw precondition_error("Young matrix needs at least one row");
    for (std::size_t i = 0; i < _rows.size(); ++i) {
      if (_rows[i] < 1)
        throw precondition_error("Young matrix row sums must be positive");
      if (i > 0 && _rows[i] > _rows[i - 1])
        throw precondition_error("Young matrix row sums must be non-increasing");
    }
  }

  auto rows() const -> const std::vector<int> & { return _rows; }
  auto height() const -> int { return static_cast<int>(_rows.size()); }
  auto width() const -> int { return _rows.front(); }

  auto total() const -> std::int64_t {
    return std::accumulate(_rows.begin(), _rows.end(), std::int64_t{0});
  }

  /// 1-based; positions outside the matrix read as 0.
  auto cell(int i, int j) const -> bool {
    return i >= 1 && i <= height() && j >= 1 && j <= _rows[i - 1];
  }

  auto column_sums() const -> std::vector<int> {
    std::vector<int> out(width(), 0);
    for (int r : _rows)
      for (int j = 0; j < r; ++j)
        ++out[j];
    return out;
  }

  auto transposed() const -> YoungMatrix { return YoungMatrix(column_sums()); }

  friend auto operator==(const YoungMatrix &, const YoungMatrix &)
      -> bool = default;
  friend auto operator<=>(const YoungMatrix &, const YoungMatrix &) = default;

private:
  std::vector<int> _rows{1};
};

inline auto to_string(const YoungMatrix &y) -> std::string {
  return detail::join_ints(y.rows());
}

inline auto parse_rows(std::string_view text) -> YoungMatrix {
  auto rows = detail::split_ints(text);
  try {
    return YoungMatrix(std::move(rows));
  } catch (const precondition_error &e) {
    throw parse_error(e.what());
  }
}

/// k x k, t_ij = x_i y_j on and above the anti-diagonal (i + j <= k + 1).
class CharacteristicMatrix {
public:
  explicit CharacteristicMatrix(const VertexEigenvector &ev)
      : _k(ev.character()), _entries(static_cast<std::size_t>(_k) * _k, 0) {
    for (int i = 1; i <= _k; ++i)
      for (int j = 1; i + j <= _k + 1; ++j)
        _entries[index(i, j)] =
            std::int64_t{ev.x()[i - 1]} * std::int64_t{ev.y()[j - 1]};
  }

  auto order() const -> int { return _k; }

  /// 1-based.
  auto at(int i, int j) const -> std::int64_t { return _entries.at(index(i, j)); }

  /// s(T(rows; cols)) over the 1-based inclusive ranges; empty ranges sum to 0.
  auto block_sum(int row_lo, int row_hi, int col_lo, int col_hi) const
      -> std::int64_t {
    std::int64_t s = 0;
    for (int i = row_lo; i <= row_hi; ++i)
      for (int j = col_lo; j <= col_hi; ++j)
        s += at(i, j);
    return s;
  }

  auto to_rows() const -> std::vector<std::vector<std::int64_t>> {
    std::vector<std::vector<std::int64_t>> out(_k);
    for (int i = 1; i <= _k; ++i)
      for (int j = 1; j <= _k; ++j)
        out[i - 1].push_back(at(i, j));
    return out;
  }

private:
  // the only place 1-based positions meet storage
  auto index(int i, int j) const -> std::size_t {
    if (i < 1 || i > _k || j < 1 || j > _k)
      throw range_error("characteristic matrix index out of range");
    return static_cast<std::size_t>(i - 1) * _k + (j - 1);
  }

  int _k;
  std::vector<std::int64_t> _entries;
};

inline auto characteristic_matrix(const VertexEigenvector &ev)
    -> CharacteristicMatrix {
  return CharacteristicMatrix(ev);
}

// ---------------------------------------------------------------------------
// Recognition

namespace detail {

inline auto require_connected_bipartite(const Graph &g) -> Bipartition {
  auto membership = validate_membership(g);
  if (!membership.connected_bipartite() || g.order() < 2)
    throw domain_error("graph is not a connected bipartite graph with an edge");
  return *membership.bipartition;
}

inline auto neighborhoods_form_chain(const Graph &g, VertexMask part) -> bool {
  std::vector<VertexMask> hoods;
  for (int v : vertices_of(part))
    hoods.push_back(g.neighbors(v));
  std::sort(hoods.begin(), hoods.end(), [](VertexMask a, VertexMask b) {
    return popcount(a) > popcount(b);
  });
  for (std::size_t i = 1; i < hoods.size(); ++i)
    if ((hoods[i] & ~hoods[i - 1]) != 0)
      return false;
  return true;
}

inline auto extend_induced_path(const Graph &g, std::vector<int> &path,
                                VertexMask used) -> bool {
  if (path.size() == 5)
    return true;
  int last = path.back();
  // the new vertex may only touch the current end of the path
  VertexMask earlier = used & ~bit(last);
  for (int w : vertices_of(g.neighbors(last) & ~used)) {
    if (g.neighbors(w) & earlier)
      continue;
    path.push_back(w);
    if (extend_induced_path(g, path, used | bit(w)))
      return true;
    path.pop_back();
  }
  return false;
}

}  // namespace detail

/// True iff g contains P5 as an induced subgraph.
inline auto has_induced_p5(const Graph &g) -> bool {
  for (int v = 0; v < g.order(); ++v) {
    std::vector<int> path{v};
    if (detail::extend_induced_path(g, path, bit(v)))
      return true;
  }
  return false;
}

/// Nested-neighbourhood test on one side of the bipartition.
inline auto is_difference(const Graph &g) -> bool {
  auto parts = detail::require_connected_bipartite(g);
  return detail::neighborhoods_form_chain(g, parts.part_a);
}

/// Same predicate by forbidden induced P5.
inline auto is_difference_p5(const Graph &g) -> bool {
  detail::require_connected_bipartite(g);
  return !has_induced_p5(g);
}

namespace detail {

// Sizes of the duplicate classes of `part`, largest neighbourhood first.
inline auto block_sizes(const Graph &g, VertexMask part) -> std::vector<int> {
  std::map<VertexMask, int> classes;
  for (int v : vertices_of(part))
    ++classes[g.neighbors(v)];
  std::vector<std::pair<VertexMask, int>> ordered(classes.begin(),
                                                  classes.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto &a, const auto &b) {
    return popcount(a.first) > popcount(b.first);
  });
  std::vector<int> out;
  for (auto &[hood, count] : ordered)
    out.push_back(count);
  return out;
}

}  // namespace detail

/// Block sizes of a difference graph, canonically oriented.
inline auto eigenvector_of(const Graph &g) -> VertexEigenvector {
  auto parts = detail::require_connected_bipartite(g);
  if (!detail::neighborhoods_form_chain(g, parts.part_a))
    throw domain_error("graph is not a difference graph");
  auto x = detail::block_sizes(g, parts.part_a);
  auto y = detail::block_sizes(g, parts.part_b);
  if (x.size() != y.size())
    throw internal_error("difference graph with unequal block counts");
  return VertexEigenvector(std::move(x), std::move(y)).oriented();
}

inline auto realize(const VertexEigenvector &ev) -> Graph {
  const int k = ev.character();
  std::vector<int> x_start(k + 1, 0);
  std::vector<int> y_start(k + 1, ev.x_total());
  for (int i = 0; i < k; ++i) {
    x_start[i + 1] = x_start[i] + ev.x()[i];
    y_start[i + 1] = y_start[i] + ev.y()[i];
  }
  Graph g(ev.order());
  for (int i = 1; i <= k; ++i)
    for (int u = x_start[i - 1]; u < x_start[i]; ++u)
      for (int v = y_start[0]; v < y_start[k - i + 1]; ++v)
        g.add_edge(u, v);
  return g;
}

/// One row per x-vertex, in block order; rows of block i have
/// y_1 + ... + y_{k-i+1} ones.
inline auto young_matrix(const VertexEigenvector &ev) -> YoungMatrix {
  const int k = ev.character();
  std::vector<int> rows;
  for (int i = 1; i <= k; ++i) {
    int width = 0;
    for (int j = 1; j <= k - i + 1; ++j)
      width += ev.y()[j - 1];
    rows.insert(rows.end(), ev.x()[i - 1], width);
  }
  return YoungMatrix(std::move(rows));
}

/// Inverse of young_matrix: runs of equal rows are the x-blocks, gaps between
/// distinct row values are the y-blocks.
inline auto eigenvector_of(const YoungMatrix &y) -> VertexEigenvector {
  std::vector<int> x;
  std::vector<int> values;
  for (int r : y.rows()) {
    if (values.empty() || values.back() != r) {
      values.push_back(r);
      x.push_back(0);
    }
    ++x.back();
  }
  std::vector<int> widths;
  int previous = 0;
  for (auto it = values.rbegin(); it != values.rend(); ++it) {
    widths.push_back(*it - previous);
    previous = *it;
  }
  return {std::move(x), std::move(widths)};
}

/// The graph left after removing x-blocks 1..i and y-block k-i+1.
inline auto difference_complement(const VertexEigenvector &ev, int i)
    -> VertexEigenvector {
  const int k = ev.character();
  if (i < 1 || i > k - 1)
    throw range_error("difference complement index " + std::to_string(i) +
                      " outside [1, " + std::to_string(k - 1) + "]");
  return {std::vector<int>(ev.x().begin() + i, ev.x().end()),
          std::vector<int>(ev.y().begin(), ev.y().begin() + (k - i))};
}

/// Sum over i < k of |E(X_1..X_i ; Y_{k-i+1})| times the edge count of the
/// matching difference complement. The two a_2 factors are each minus an
/// edge count, so their signs cancel.
inline auto a4_by_blocks(const VertexEigenvector &ev) -> std::int64_t {
  const int k = ev.character();
  std::int64_t total = 0;
  std::int64_t head = 0;
  for (int i = 1; i <= k - 1; ++i) {
    head += ev.x()[i - 1];
    std::int64_t block_edges = head * ev.y()[k - i];
    total += block_edges * difference_complement(ev, i).size();
  }
  return total;
}

/// sum_{i<k} s(T(.; k-i+1)) * s(T(i+1..k; 1..k-i)).
inline auto a4_by_char_matrix(const VertexEigenvector &ev) -> std::int64_t {
  auto t = characteristic_matrix(ev);
  const int k = t.order();
  std::int64_t total = 0;
  for (int i = 1; i <= k - 1; ++i)
    total += t.block_sum(1, k, k - i + 1, k - i + 1) *
             t.block_sum(i + 1, k, 1, k - i);
  return total;
}

/// sum_{i<h} sum_{j>i} (r_i - r_{i+1}) i r_j.
inline auto a4_by_row_sums(const YoungMatrix &y) -> std::int64_t {
  const auto &r = y.rows();
  const int h = y.height();
  std::int64_t total = 0;
  for (int i = 1; i <= h - 1; ++i)
    for (int j = i + 1; j <= h; ++j)
      total += std::int64_t{r[i - 1] - r[i]} * i * r[j - 1];
  return total;
}

}  // namespace sachs
