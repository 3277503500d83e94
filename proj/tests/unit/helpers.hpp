#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "locount/graph.hpp"
#include "locount/pattern.hpp"

namespace testutil {

inline locount::Graph clique(int n) {
  locount::Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

inline locount::Graph path(int n) {
  locount::Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline locount::Graph cycle(int n) {
  locount::Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

// K_{s,t} with the s-side on vertices [0, s).
inline locount::Graph complete_bipartite(int s, int t) {
  locount::Graph g(s + t);
  for (int i = 0; i < s; ++i)
    for (int j = s; j < s + t; ++j) g.add_edge(i, j);
  return g;
}

inline locount::Pattern biclique_pattern(int s, int t) {
  locount::Graph g = complete_bipartite(s, t);
  std::vector<int> S(s), T(t);
  std::iota(S.begin(), S.end(), 0);
  std::iota(T.begin(), T.end(), s);
  return locount::validate_pattern(g, S, T);
}

// Max over all induced subgraphs of the minimum degree; n <= 20.
inline int brute_degeneracy(const locount::Graph& g) {
  int n = g.vertex_count();
  int best = 0;
  for (uint32_t mask = 1; mask < (1u << n); ++mask) {
    int mindeg = n;
    for (int v = 0; v < n; ++v) {
      if (!(mask >> v & 1)) continue;
      int deg = 0;
      for (int u : g.neighbours(v)) deg += (mask >> u & 1);
      mindeg = std::min(mindeg, deg);
    }
    best = std::max(best, mindeg);
  }
  return best;
}

}  // namespace testutil
