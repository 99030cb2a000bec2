#pragma once

/**
 * Exact adjacency coefficients: matching and short-cycle counts, the Sachs
 * subgraph expansion, and a characteristic polynomial computed by an
 * unrelated integer recurrence so the two can check each other.
 */

#include "sachs/graph.hpp"

#include <bit>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace sachs {

/// a_0 .. a_n, where det(lambda I - A) = sum_i a_i lambda^(n-i).
struct CoefficientVector {
  std::vector<std::int64_t> coeffs;

  auto operator[](std::size_t i) const -> std::int64_t { return coeffs.at(i); }
  auto size() const -> std::size_t { return coeffs.size(); }

  friend auto operator==(const CoefficientVector &,
                         const CoefficientVector &) -> bool = default;
};

struct ShortCycles {
  std::int64_t c3 = 0;
  std::int64_t c4 = 0;

  friend auto operator==(const ShortCycles &, const ShortCycles &)
      -> bool = default;
};

/// Largest order accepted by sachs_coefficient.
inline constexpr int sachs_oracle_max_order = 16;

namespace detail {

inline auto matchings_from(const Graph &g, VertexMask available, int r)
    -> std::int64_t {
  if (r == 0)
    return 1;
  // a vertex with no available neighbour can never be matched
  while (available != 0) {
    if (popcount(available) < 2 * r)
      return 0;
    int v = std::countr_zero(available);
    available &= ~bit(v);
    VertexMask partners = g.neighbors(v) & available;
    if (partners == 0)
      continue;
    std::int64_t total = matchings_from(g, available, r);
    for (int w : vertices_of(partners))
      total += matchings_from(g, available & ~bit(w), r - 1);
    return total;
  }
  return 0;
}

// Signed weight of all Sachs subgraphs covering exactly `need` vertices of
// `available`: -1 per component, times 2 per cycle.
inline auto sachs_from(const Graph &g, VertexMask available, int need)
    -> std::int64_t;

inline auto cycles_through(const Graph &g, int start, int last, VertexMask path,
                           int length, VertexMask available, int need,
                           int second) -> std::int64_t {
  std::int64_t total = 0;
  if (length >= 3 && g.adjacent(last, start) && second < last)
    total -= 2 * sachs_from(g, available & ~path, need - length);
  if (length == need)
    return total;
  for (int w : vertices_of(g.neighbors(last) & available & ~path))
    total += cycles_through(g, start, w, path | bit(w), length + 1, available,
                            need, second);
  return total;
}

inline auto sachs_from(const Graph &g, VertexMask available, int need)
    -> std::int64_t {
  if (need == 0)
    return 1;
  if (popcount(available) < need)
    return 0;
  int v = std::countr_zero(available);
  VertexMask rest = available & ~bit(v);
  std::int64_t total = sachs_from(g, rest, need);
  if (need >= 2) {
    for (int w : vertices_of(g.neighbors(v) & rest))
      total -= sachs_from(g, rest & ~bit(w), need - 2);
    for (int w : vertices_of(g.neighbors(v) & rest))
      total += cycles_through(g, v, w, bit(v) | bit(w), 2, rest, need, w);
  }
  return total;
}

inline auto checked_add(__int128 a, __int128 b) -> __int128 {
  __int128 out;
  if (__builtin_add_overflow(a, b, &out))
    throw overflow_error("characteristic polynomial overflows 128 bits");
  return out;
}

}  // namespace detail

/// Number of r-edge matchings, by branching on the lowest free vertex.
inline auto count_matchings(const Graph &g, int r) -> std::int64_t {
  if (r < 0)
    throw range_error("matching size must be non-negative");
  return detail::matchings_from(g, g.vertices(), r);
}

/// Closed form for r = 2: all edge pairs minus those sharing a vertex.
inline auto count_two_matchings(const Graph &g) -> std::int64_t {
  std::int64_t m = g.size();
  std::int64_t total = m * (m - 1) / 2;
  for (int v = 0; v < g.order(); ++v) {
    std::int64_t d = g.degree(v);
    total -= d * (d - 1) / 2;
  }
  return total;
}

/// Triangles and quadrangles. Every quadrangle has exactly two diagonal
/// pairs {u, v}, each seeing it once among the C(|N(u) & N(v)|, 2) choices.
inline auto count_short_cycles(const Graph &g) -> ShortCycles {
  ShortCycles out;
  std::int64_t diagonal_hits = 0;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v) {
      std::int64_t common = popcount(g.neighbors(u) & g.neighbors(v));
      diagonal_hits += common * (common - 1) / 2;
      if (g.adjacent(u, v))
        out.c3 += popcount(g.neighbors(u) & g.neighbors(v) & ~low_mask(v + 1));
    }
  out.c4 = diagonal_hits / 2;
  return out;
}

/// a_i by explicit enumeration of i-vertex Sachs subgraphs. Exponential;
/// refuses graphs above sachs_oracle_max_order vertices.
inline auto sachs_coefficient(const Graph &g, int i) -> std::int64_t {
  if (g.order() > sachs_oracle_max_order)
    throw scale_error("Sachs enumeration is limited to " +
                      std::to_string(sachs_oracle_max_order) + " vertices");
  if (i < 0 || i > g.order())
    throw range_error("coefficient index " + std::to_string(i) +
                      " out of range");
  return detail::sachs_from(g, g.vertices(), i);
}

/// det(lambda I - A) by the Faddeev-LeVerrier recurrence
///   M_1 = I,  c_k = -tr(A M_k) / k,  M_{k+1} = A M_k + c_k I
/// in overflow-checked 128-bit integers. Every division is exact.
inline auto charpoly_coefficients(const Graph &g) -> CoefficientVector {
  const int n = g.order();
  using Wide = __int128;
  std::vector<Wide> current(static_cast<std::size_t>(n) * n, 0);
  std::vector<Wide> product(current.size(), 0);
  auto at = [n](std::vector<Wide> &m, int r, int c) -> Wide & {
    return m[static_cast<std::size_t>(r) * n + c];
  };

  CoefficientVector out;
  out.coeffs.assign(n + 1, 0);
  out.coeffs[0] = 1;
  for (int r = 0; r < n; ++r)
    at(current, r, r) = 1;

  for (int k = 1; k <= n; ++k) {
    // product = A * current; row r of A selects rows of current
    Wide trace = 0;
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        Wide sum = 0;
        for (int s : vertices_of(g.neighbors(r)))
          sum = detail::checked_add(sum, at(current, s, c));
        at(product, r, c) = sum;
      }
      trace = detail::checked_add(trace, at(product, r, r));
    }
    if (trace % k != 0)
      throw internal_error("inexact Faddeev-LeVerrier division");
    Wide ck = -(trace / k);
    if (ck > std::numeric_limits<std::int64_t>::max() ||
        ck < std::numeric_limits<std::int64_t>::min())
      throw overflow_error("adjacency coefficient exceeds 64 bits");
    out.coeffs[k] = static_cast<std::int64_t>(ck);
    for (int r = 0; r < n; ++r)
      at(product, r, r) = detail::checked_add(at(product, r, r), ck);
    std::swap(current, product);
  }
  return out;
}

/// a_4 as (2-matchings) - 2 (quadrangles).
inline auto a4_fast(const Graph &g) -> std::int64_t {
  return count_two_matchings(g) - 2 * count_short_cycles(g).c4;
}

}  // namespace sachs
