#pragma once

/**
 * Simple undirected graphs on at most 64 vertices, one adjacency word per
 * vertex, plus the edge-list and graph6 text formats.
 */

#include "sachs/errors.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sachs {

using VertexMask = std::uint64_t;
using Edge = std::pair<int, int>;

inline constexpr int max_vertices = 64;

constexpr auto bit(int v) -> VertexMask { return VertexMask{1} << v; }

constexpr auto low_mask(int n) -> VertexMask {
  return n >= 64 ? ~VertexMask{0} : bit(n) - 1;
}

inline auto popcount(VertexMask m) -> int { return std::popcount(m); }

inline auto vertices_of(VertexMask m) -> std::vector<int> {
  std::vector<int> out;
  out.reserve(popcount(m));
  for (; m != 0; m &= m - 1)
    out.push_back(std::countr_zero(m));
  return out;
}

class Graph {
public:
  Graph() : Graph(1) {}

  explicit Graph(int n) : _rows(check_order(n), 0) {}

  auto order() const -> int { return static_cast<int>(_rows.size()); }
  auto size() const -> int { return _size; }

  auto vertices() const -> VertexMask { return low_mask(order()); }
  auto neighbors(int v) const -> VertexMask { return _rows[check_vertex(v)]; }
  auto degree(int v) const -> int { return popcount(neighbors(v)); }

  auto adjacent(int u, int v) const -> bool {
    return (_rows[check_vertex(u)] >> check_vertex(v)) & 1U;
  }

  /// Adds edge uv; rejects loops and edges already present.
  auto add_edge(int u, int v) -> void {
    check_vertex(u);
    check_vertex(v);
    if (u == v)
      throw self_loop_error("self-loop at vertex " + std::to_string(u));
    if (adjacent(u, v))
      throw duplicate_edge_error("duplicate edge " + std::to_string(u) + " " +
                                 std::to_string(v));
    _rows[u] |= bit(v);
    _rows[v] |= bit(u);
    ++_size;
  }

  auto remove_edge(int u, int v) -> void {
    if (!adjacent(u, v))
      throw precondition_error("no edge " + std::to_string(u) + " " +
                               std::to_string(v));
    _rows[u] &= ~bit(v);
    _rows[v] &= ~bit(u);
    --_size;
  }

  /// Edges as (u, v) with u < v, sorted.
  auto edges() const -> std::vector<Edge> {
    std::vector<Edge> out;
    out.reserve(_size);
    for (int u = 0; u < order(); ++u)
      for (int v : vertices_of(_rows[u] & ~low_mask(u + 1)))
        out.emplace_back(u, v);
    return out;
  }

  auto rows() const -> const std::vector<VertexMask> & { return _rows; }

  friend auto operator==(const Graph &, const Graph &) -> bool = default;

private:
  static auto check_order(int n) -> std::size_t {
    if (n < 1)
      throw range_error("graph order must be at least 1");
    if (n > max_vertices)
      throw scale_error("graph order " + std::to_string(n) + " exceeds " +
                        std::to_string(max_vertices));
    return static_cast<std::size_t>(n);
  }

  auto check_vertex(int v) const -> int {
    if (v < 0 || v >= order())
      throw range_error("vertex " + std::to_string(v) + " out of range [0," +
                        std::to_string(order()) + ")");
    return v;
  }

  std::vector<VertexMask> _rows;
  int _size = 0;
};

inline auto from_edges(int n, const std::vector<Edge> &edges) -> Graph {
  Graph g(n);
  for (auto [u, v] : edges)
    g.add_edge(u, v);
  return g;
}

namespace detail {

inline auto parse_decimal(std::string_view field, std::string_view line)
    -> int {
  auto fail = [&] {
    return parse_error("malformed line '" + std::string(line) + "'");
  };
  if (field.empty() || (field.size() > 1 && field.front() == '0'))
    throw fail();
  int value = 0;
  auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size())
    throw fail();
  return value;
}

inline auto parse_pair(std::string_view line) -> std::pair<int, int> {
  auto space = line.find(' ');
  if (space == std::string_view::npos)
    throw parse_error("malformed line '" + std::string(line) + "'");
  return {parse_decimal(line.substr(0, space), line),
          parse_decimal(line.substr(space + 1), line)};
}

}  // namespace detail

/// Parses the edge-list format: a header "n m", then exactly m lines "u v"
/// with 0 <= u < v < n. Lines starting with '#' are skipped; the final newline
/// is optional.
inline auto load_graph(std::string_view text) -> Graph {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos)
      end = text.size();
    lines.push_back(text.substr(pos, end - pos));
    pos = end + 1;
  }

  std::optional<Graph> g;
  int expected = 0;
  int seen = 0;
  for (auto line : lines) {
    if (!line.empty() && line.front() == '#')
      continue;
    if (!g) {
      auto [n, m] = detail::parse_pair(line);
      g.emplace(n);
      expected = m;
      continue;
    }
    auto [u, v] = detail::parse_pair(line);
    if (u >= g->order() || v >= g->order())
      throw range_error("vertex id out of range in line '" + std::string(line) +
                        "'");
    if (u == v)
      throw self_loop_error("self-loop in line '" + std::string(line) + "'");
    if (u > v)
      throw parse_error("edge endpoints must satisfy u < v in line '" +
                        std::string(line) + "'");
    g->add_edge(u, v);
    ++seen;
  }
  if (!g)
    throw parse_error("missing header line");
  if (seen != expected)
    throw parse_error("header announces " + std::to_string(expected) +
                      " edges but " + std::to_string(seen) + " were listed");
  return *g;
}

/// Inverse of load_graph, with a trailing newline.
inline auto to_edge_list(const Graph &g) -> std::string {
  std::string out =
      std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (auto [u, v] : g.edges())
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

inline auto read_graph6(std::string_view text) -> Graph {
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header))
    text.remove_prefix(header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
    text.remove_suffix(1);

  std::size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= text.size())
      throw parse_error("truncated graph6 string");
    int c = static_cast<unsigned char>(text[pos++]);
    if (c < 63 || c > 126)
      throw parse_error("invalid graph6 character");
    return c - 63;
  };

  int n = next();
  if (n == 63) {
    n = 0;
    for (int i = 0; i < 3; ++i)
      n = (n << 6) | next();
    if (n < 63)
      throw parse_error("non-canonical graph6 order");
  }
  if (n == 0)
    throw parse_error("graph6 order 0 is not supported");
  if (n > max_vertices)
    throw scale_error("graph6 order " + std::to_string(n) + " exceeds " +
                      std::to_string(max_vertices));

  Graph g(n);
  int word = 0;
  int left = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      if (left == 0) {
        word = next();
        left = 6;
      }
      --left;
      if ((word >> left) & 1)
        g.add_edge(u, v);
    }
  if (pos != text.size())
    throw parse_error("trailing characters after graph6 data");
  return g;
}

inline auto to_graph6(const Graph &g) -> std::string {
  std::string out;
  int n = g.order();
  if (n < 63) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int word = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      word = (word << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(word + 63));
        word = filled = 0;
      }
    }
  if (filled > 0)
    out.push_back(static_cast<char>((word << (6 - filled)) + 63));
  return out;
}

// ---------------------------------------------------------------------------
// Connectivity and bipartiteness

struct Bipartition {
  VertexMask part_a = 0;
  VertexMask part_b = 0;
};

struct Membership {
  bool connected = false;
  std::optional<Bipartition> bipartition;

  auto connected_bipartite() const -> bool {
    return connected && bipartition.has_value();
  }
};

inline auto component_of(const Graph &g, int v) -> VertexMask {
  VertexMask seen = bit(v);
  VertexMask frontier = seen;
  while (frontier != 0) {
    VertexMask next = 0;
    for (int u : vertices_of(frontier))
      next |= g.neighbors(u);
    frontier = next & ~seen;
    seen |= frontier;
  }
  return seen;
}

inline auto is_connected(const Graph &g) -> bool {
  return component_of(g, 0) == g.vertices();
}

/// Connectivity plus a 2-colouring when one exists; the colour class of
/// vertex 0 is part_a, and each further component puts its lowest vertex in
/// part_a.
inline auto validate_membership(const Graph &g) -> Membership {
  Membership out;
  out.connected = is_connected(g);

  Bipartition parts;
  VertexMask unseen = g.vertices();
  while (unseen != 0) {
    int root = std::countr_zero(unseen);
    VertexMask side[2] = {bit(root), 0};
    VertexMask frontier = bit(root);
    int colour = 0;
    while (frontier != 0) {
      VertexMask next = 0;
      for (int u : vertices_of(frontier))
        next |= g.neighbors(u);
      colour ^= 1;
      if (next & side[colour ^ 1])
        return out;
      frontier = next & ~side[colour];
      side[colour] |= next;
    }
    parts.part_a |= side[0];
    parts.part_b |= side[1];
    unseen &= ~(side[0] | side[1]);
  }
  out.bipartition = parts;
  return out;
}

/// Breadth-first distance, or nullopt when u and v lie in different
/// components.
inline auto distance(const Graph &g, int u, int v) -> std::optional<int> {
  if (u == v)
    return 0;
  VertexMask seen = bit(u);
  VertexMask frontier = seen;
  for (int d = 1; frontier != 0; ++d) {
    VertexMask next = 0;
    for (int w : vertices_of(frontier))
      next |= g.neighbors(w);
    frontier = next & ~seen;
    if (frontier & bit(v))
      return d;
    seen |= frontier;
  }
  return std::nullopt;
}

}  // namespace sachs
