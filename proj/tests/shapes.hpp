#pragma once

// Small named graphs used as test inputs.

#include "sachs/graph.hpp"

namespace shapes {

using sachs::Graph;

inline auto path(int n) -> Graph {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v)
    g.add_edge(v, v + 1);
  return g;
}

inline auto cycle(int n) -> Graph {
  Graph g = path(n);
  g.add_edge(0, n - 1);
  return g;
}

// vertices 0..a-1 on one side
inline auto complete_bipartite(int a, int b) -> Graph {
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = a; v < a + b; ++v)
      g.add_edge(u, v);
  return g;
}

inline auto complete(int n) -> Graph {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      g.add_edge(u, v);
  return g;
}

}  // namespace shapes
