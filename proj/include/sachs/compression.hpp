#pragma once

/**
 * Vertex compression G_{u->v}, Young-matrix corner moves, and audits that
 * record whether the expected monotonicity of matching counts and a_4 holds.
 */

#include "sachs/coefficients.hpp"
#include "sachs/difference_graph.hpp"
#include "sachs/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

namespace sachs {

struct NeighborSplit {
  VertexMask common = 0;  ///< adjacent to both u and v
  VertexMask u_only = 0;  ///< adjacent to u, not v
  VertexMask v_only = 0;  ///< adjacent to v, not u
};

inline auto neighbor_split(const Graph &g, int u, int v) -> NeighborSplit {
  if (u < 0 || u >= g.order() || v < 0 || v >= g.order())
    throw range_error("compression vertex out of range");
  if (u == v)
    throw precondition_error("compression needs two distinct vertices");
  VertexMask others = g.vertices() & ~bit(u) & ~bit(v);
  VertexMask nu = g.neighbors(u) & others;
  VertexMask nv = g.neighbors(v) & others;
  return {nu & nv, nu & ~nv, nv & ~nu};
}

/// Moves every edge u-w with w adjacent to u but not v over to v-w.
inline auto compress(const Graph &g, int u, int v) -> Graph {
  auto split = neighbor_split(g, u, v);
  Graph out = g;
  for (int w : vertices_of(split.u_only)) {
    out.remove_edge(u, w);
    out.add_edge(v, w);
  }
  return out;
}

struct MatchingComparison {
  int k = 0;
  std::int64_t before = 0;
  std::int64_t after = 0;
};

struct VertexCompressionAudit {
  int u = 0;
  int v = 0;
  std::optional<int> distance;
  bool connected_after = false;
  NeighborSplit split;
  std::vector<MatchingComparison> matchings;  ///< k = 1..k_max
  std::int64_t a4_before = 0;
  std::int64_t a4_after = 0;

  bool matching_increase = false;  ///< some m_k grew
  bool strict_without_exchange = false;  ///< some m_k dropped although one
                                         ///< of u_only, v_only was empty
  bool a4_increase = false;  ///< a_4 grew although dis(u, v) >= 2

  auto violated() const -> bool {
    return matching_increase || strict_without_exchange || a4_increase;
  }
};

inline auto audit_vertex_compression(const Graph &g, int u, int v, int k_max)
    -> VertexCompressionAudit {
  VertexCompressionAudit out;
  out.u = u;
  out.v = v;
  out.split = neighbor_split(g, u, v);
  Graph h = compress(g, u, v);
  out.distance = distance(g, u, v);
  out.connected_after = is_connected(h);

  bool any_strict = false;
  for (int k = 1; k <= k_max; ++k) {
    MatchingComparison row{k, count_matchings(g, k), count_matchings(h, k)};
    out.matching_increase |= row.after > row.before;
    any_strict |= row.after < row.before;
    out.matchings.push_back(row);
  }
  bool exchange = out.split.u_only != 0 && out.split.v_only != 0;
  out.strict_without_exchange = any_strict && !exchange;

  out.a4_before = a4_fast(g);
  out.a4_after = a4_fast(h);
  out.a4_increase =
      out.distance && *out.distance >= 2 && out.a4_after > out.a4_before;
  return out;
}

// ---------------------------------------------------------------------------
// Corner moves on Young matrices. Positions are 1-based (row, column).

struct Position {
  int row = 0;
  int col = 0;

  auto product() const -> std::int64_t { return std::int64_t{row} * col; }

  friend auto operator==(const Position &, const Position &) -> bool = default;
  friend auto operator<=>(const Position &, const Position &) = default;
};

inline auto grid_adjacent(Position a, Position b) -> bool {
  int dr = std::abs(a.row - b.row);
  int dc = std::abs(a.col - b.col);
  return dr + dc == 1;
}

struct CornerSet {
  std::vector<Position> out_corners;
  std::vector<Position> in_corners;
};

inline auto is_out_corner(const YoungMatrix &y, Position p) -> bool {
  return y.cell(p.row, p.col) && !y.cell(p.row + 1, p.col) &&
         !y.cell(p.row, p.col + 1);
}

inline auto is_in_corner(const YoungMatrix &y, Position p) -> bool {
  return y.cell(p.row - 1, p.col) && y.cell(p.row, p.col - 1) &&
         !y.cell(p.row, p.col);
}

/// Both lists in row-major order.
inline auto corner_sets(const YoungMatrix &y) -> CornerSet {
  CornerSet out;
  const auto &r = y.rows();
  for (int i = 1; i <= y.height(); ++i) {
    Position out_candidate{i, r[i - 1]};
    Position in_candidate{i, r[i - 1] + 1};
    // an in-corner sits right after row i's last cell, an out-corner on it
    if (is_out_corner(y, out_candidate))
      out.out_corners.push_back(out_candidate);
    if (is_in_corner(y, in_candidate))
      out.in_corners.push_back(in_candidate);
  }
  std::sort(out.out_corners.begin(), out.out_corners.end());
  std::sort(out.in_corners.begin(), out.in_corners.end());
  return out;
}

struct corner_error : precondition_error {
  enum class reason { not_out_corner, not_in_corner, adjacent };

  corner_error(reason why, const std::string &what)
      : precondition_error(what), why(why) {}

  reason why;
};

/// Moves the cell at `out` to `in`. Rows are re-sorted and a row emptied by
/// the move is dropped, so the result is again a Young matrix with the same
/// total.
inline auto young_compress(const YoungMatrix &y, Position out, Position in)
    -> YoungMatrix {
  if (!is_out_corner(y, out))
    throw corner_error(corner_error::reason::not_out_corner,
                       "source position is not an out-corner");
  if (!is_in_corner(y, in))
    throw corner_error(corner_error::reason::not_in_corner,
                       "target position is not an in-corner");
  if (grid_adjacent(out, in))
    throw corner_error(corner_error::reason::adjacent,
                       "out-corner and in-corner are adjacent");
  auto rows = y.rows();
  --rows[out.row - 1];
  ++rows[in.row - 1];
  std::sort(rows.begin(), rows.end(), std::greater<>());
  while (!rows.empty() && rows.back() == 0)
    rows.pop_back();
  return YoungMatrix(std::move(rows));
}

/// 2-matchings through the out-corner edge that do not lie on a quadrangle.
inline auto corner_matching_count(const YoungMatrix &y, Position out)
    -> std::int64_t {
  if (!is_out_corner(y, out))
    throw corner_error(corner_error::reason::not_out_corner,
                       "position is not an out-corner");
  return y.total() - out.product();
}

// ---------------------------------------------------------------------------
// Exhaustive corner-move audit

struct CornerMoveRecord {
  YoungMatrix instance;
  Position from;
  Position to;
  YoungMatrix result;
  std::int64_t before = 0;
  std::int64_t after = 0;

  auto out_product() const -> std::int64_t { return from.product(); }
  auto in_product() const -> std::int64_t { return to.product(); }

  /// ij <= pq implies a_4 does not increase.
  auto forward_holds() const -> bool {
    return out_product() > in_product() || before >= after;
  }
  /// a_4 not increasing implies ij <= pq.
  auto converse_holds() const -> bool {
    return before < after || out_product() <= in_product();
  }
  /// ij < pq implies a_4 strictly decreases.
  auto strict_holds() const -> bool {
    return out_product() >= in_product() || before > after;
  }
  /// The exact identity a_4(G) - a_4(G') = ij - pq.
  auto identity_holds() const -> bool {
    return before - after == out_product() - in_product();
  }
};

/// Two consecutive moves; the claim is that a larger total out-corner
/// product than in-corner product forces a strict decrease of a_4.
struct CornerSequenceRecord {
  YoungMatrix instance;
  Position from[2];
  Position to[2];
  YoungMatrix result;
  std::int64_t before = 0;
  std::int64_t after = 0;

  auto out_total() const -> std::int64_t {
    return from[0].product() + from[1].product();
  }
  auto in_total() const -> std::int64_t {
    return to[0].product() + to[1].product();
  }
  auto holds() const -> bool {
    return out_total() <= in_total() || before > after;
  }
  /// The same claim with the comparison turned around, matching the
  /// direction of the single-move statement.
  auto reversed_holds() const -> bool {
    return out_total() >= in_total() || before > after;
  }
};

struct CornerAudit {
  int max_order = 0;
  std::int64_t instances = 0;
  std::vector<CornerMoveRecord> moves;
  std::int64_t sequences = 0;
  std::int64_t single_move_claim_failures = 0;
  std::int64_t reversed_sequence_failures = 0;
  std::vector<CornerSequenceRecord> sequence_counterexamples;

  auto forward_failures() const -> std::int64_t {
    return std::count_if(moves.begin(), moves.end(),
                         [](const auto &r) { return !r.forward_holds(); });
  }
  auto converse_failures() const -> std::int64_t {
    return std::count_if(moves.begin(), moves.end(),
                         [](const auto &r) { return !r.converse_holds(); });
  }
  auto strict_failures() const -> std::int64_t {
    return std::count_if(moves.begin(), moves.end(),
                         [](const auto &r) { return !r.strict_holds(); });
  }
  auto identity_failures() const -> std::int64_t {
    return std::count_if(moves.begin(), moves.end(),
                         [](const auto &r) { return !r.identity_holds(); });
  }
};

/// Every legal (out-corner, in-corner) pair of a Young matrix, row-major in
/// the out-corner then the in-corner.
inline auto legal_moves(const YoungMatrix &y)
    -> std::vector<std::pair<Position, Position>> {
  auto corners = corner_sets(y);
  std::vector<std::pair<Position, Position>> out;
  for (auto from : corners.out_corners)
    for (auto to : corners.in_corners)
      if (!grid_adjacent(from, to))
        out.emplace_back(from, to);
  return out;
}

/// Young matrices of all difference graphs of order 2..max_order, one per
/// isomorphism class (larger side as rows, ties broken as in
/// VertexEigenvector::canonical), sorted.
inline auto difference_young_matrices(int max_order) -> std::vector<YoungMatrix> {
  std::vector<YoungMatrix> out;
  // rows h, columns c with h + c = n: choose rows non-increasing in [1, c]
  // with r_1 = c
  for (int n = 2; n <= max_order; ++n)
    for (int c = 1; c <= n / 2; ++c) {
      int h = n - c;
      std::vector<int> rows(h, 0);
      rows[0] = c;
      auto recurse = [&](auto &&self, int i) -> void {
        if (i == h) {
          YoungMatrix y(rows);
          if (eigenvector_of(y).canonical())
            out.push_back(std::move(y));
          return;
        }
        for (int r = rows[i - 1]; r >= 1; --r) {
          rows[i] = r;
          self(self, i + 1);
        }
      };
      recurse(recurse, 1);
    }
  std::sort(out.begin(), out.end());
  return out;
}

/// Scans every legal corner move (and every two-move sequence) on the
/// difference graphs of order at most max_order, recording a_4 before and
/// after. Nothing here assumes which way the comparison goes.
inline auto audit_corner_theorem(int max_order) -> CornerAudit {
  if (max_order > 12)
    throw scale_error("corner audit is limited to order 12");
  CornerAudit audit;
  audit.max_order = max_order;
  for (const auto &y : difference_young_matrices(max_order)) {
    ++audit.instances;
    std::int64_t before = a4_by_row_sums(y);
    for (auto [from, to] : legal_moves(y)) {
      auto next = young_compress(y, from, to);
      std::int64_t after = a4_by_row_sums(next);
      audit.moves.push_back({y, from, to, next, before, after});
      for (auto [from2, to2] : legal_moves(next)) {
        auto last = young_compress(next, from2, to2);
        CornerSequenceRecord seq{y,    {from, from2},         {to, to2},
                                 last, before, a4_by_row_sums(last)};
        ++audit.sequences;
        audit.reversed_sequence_failures += !seq.reversed_holds();
        if (!seq.holds())
          audit.sequence_counterexamples.push_back(std::move(seq));
      }
      CornerSequenceRecord single{y, {from, {}}, {to, {}}, next, before, after};
      if (!single.holds())
        ++audit.single_move_claim_failures;
    }
  }
  return audit;
}

}  // namespace sachs
