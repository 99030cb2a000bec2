#pragma once

/**
 * Seeded random corpora and the property checks run over them: vertex
 * compression monotonicity and agreement of the two coefficient routes.
 */

#include "sachs/coefficients.hpp"
#include "sachs/compression.hpp"
#include "sachs/graph.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace sachs {

using Rng = std::mt19937_64;

namespace detail {

inline auto uniform(Rng &rng, int lo, int hi) -> int {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

}  // namespace detail

/// G(n, p) with p drawn per graph.
inline auto random_graph(Rng &rng, int n) -> Graph {
  Graph g(n);
  double p = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng))
        g.add_edge(u, v);
  return g;
}

/// A random spanning tree across the two sides, topped up with random
/// cross edges. Side sizes are random; vertices 0..a-1 form one side.
inline auto random_connected_bipartite(Rng &rng, int n) -> Graph {
  if (n < 2)
    throw range_error("a connected bipartite graph needs two vertices");
  int a = detail::uniform(rng, 1, n - 1);
  Graph g(n);
  // attach vertices in random order, each to an earlier vertex on the other side
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i)
    order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  auto side = [a](int v) { return v < a; };
  // make sure the first two placed vertices sit on different sides
  for (int i = 1; i < n; ++i)
    if (side(order[i]) != side(order[0])) {
      std::swap(order[1], order[i]);
      break;
    }
  for (int i = 1; i < n; ++i) {
    std::vector<int> candidates;
    for (int j = 0; j < i; ++j)
      if (side(order[j]) != side(order[i]))
        candidates.push_back(order[j]);
    if (candidates.empty())
      continue;
    int pick = candidates[detail::uniform(rng, 0, static_cast<int>(candidates.size()) - 1)];
    g.add_edge(order[i], pick);
  }
  // a vertex placed before any opposite-side vertex existed is still alone
  for (int i = 1; i < n; ++i)
    if (g.degree(order[i]) == 0)
      for (int j = i + 1; j < n; ++j)
        if (side(order[j]) != side(order[i])) {
          g.add_edge(order[i], order[j]);
          break;
        }
  double p = std::uniform_real_distribution<double>(0.0, 0.7)(rng);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < a; ++u)
    for (int v = a; v < n; ++v)
      if (!g.adjacent(u, v) && coin(rng))
        g.add_edge(u, v);
  return g;
}

struct CompressionFuzzResult {
  std::uint64_t seed = 0;
  int trials = 0;
  int same_part_pairs = 0;
  int bipartite_after_same_part = 0;
  std::vector<Graph> graphs;  ///< only the violating ones
  std::vector<VertexCompressionAudit> violations;
};

/// `trials` random connected bipartite graphs of order 2..max_order, each
/// compressed along a random ordered pair u != v; m_k checked for
/// k = 1..k_max.
inline auto fuzz_compression(std::uint64_t seed, int trials, int max_order = 12,
                             int k_max = 4) -> CompressionFuzzResult {
  Rng rng(seed);
  CompressionFuzzResult out;
  out.seed = seed;
  out.trials = trials;
  for (int t = 0; t < trials; ++t) {
    int n = detail::uniform(rng, 2, max_order);
    Graph g = random_connected_bipartite(rng, n);
    int u = detail::uniform(rng, 0, n - 1);
    int v = detail::uniform(rng, 0, n - 2);
    if (v >= u)
      ++v;
    auto audit = audit_vertex_compression(g, u, v, k_max);
    auto parts = validate_membership(g).bipartition;
    bool same = ((parts->part_a >> u) & 1U) == ((parts->part_a >> v) & 1U);
    if (same) {
      ++out.same_part_pairs;
      if (validate_membership(compress(g, u, v)).bipartition)
        ++out.bipartite_after_same_part;
    }
    if (audit.violated()) {
      out.graphs.push_back(g);
      out.violations.push_back(std::move(audit));
    }
  }
  return out;
}

struct CoefficientFuzzResult {
  std::uint64_t seed = 0;
  int trials = 0;
  std::vector<Graph> mismatches;
};

/// Random general graphs of order 1..max_order: characteristic polynomial
/// against Sachs enumeration for every index, and a4_fast against index 4.
inline auto fuzz_coefficients(std::uint64_t seed, int trials, int max_order = 9)
    -> CoefficientFuzzResult {
  Rng rng(seed);
  CoefficientFuzzResult out;
  out.seed = seed;
  out.trials = trials;
  for (int t = 0; t < trials; ++t) {
    int n = detail::uniform(rng, 1, max_order);
    Graph g = random_graph(rng, n);
    auto poly = charpoly_coefficients(g);
    bool ok = true;
    for (int i = 0; i <= n && ok; ++i)
      ok = poly[i] == sachs_coefficient(g, i);
    if (ok && n >= 4)
      ok = a4_fast(g) == poly[4];
    if (!ok)
      out.mismatches.push_back(g);
  }
  return out;
}

}  // namespace sachs
