#pragma once

#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "locount/graph.hpp"
#include "locount/pattern.hpp"

namespace locount {

// Random d-degenerate host: vertices arrive one at a time, vertex i attaches
// to min(d, i) distinct earlier vertices chosen uniformly; edge_keep < 1
// thins the attachments (the graph may then be disconnected or have
// degeneracy below d, which is fine for a host).
struct GenSpec {
  int n = 100;
  int d = 3;
  double edge_keep = 1.0;
  uint64_t seed = 1;
};

inline Graph gen_random_degenerate(const GenSpec& spec) {
  if (spec.n < 1 || spec.d < 0) throw std::invalid_argument("bad generator spec");
  std::mt19937_64 rng(spec.seed);
  Graph g(spec.n);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<int> pool;
  for (int i = 1; i < spec.n; ++i) {
    pool.resize(i);
    for (int j = 0; j < i; ++j) pool[j] = j;
    int take = std::min(spec.d, i);
    for (int k = 0; k < take; ++k) {
      std::uniform_int_distribution<int> pick(k, i - 1);
      std::swap(pool[k], pool[pick(rng)]);
      if (coin(rng) <= spec.edge_keep) g.add_edge(i, pool[k]);
    }
  }
  return g;
}

// Random two-sided pattern: |S| = s, |T| = t, every S-S and S-T edge kept
// with probability p_edge, rejection-sampled until the pattern is valid
// (connected, T covered). Throws after max_tries failures.
struct PatternGenSpec {
  int s = 2;
  int t = 3;
  double p_edge = 0.6;
  uint64_t seed = 1;
  int max_tries = 1000;
};

inline Pattern gen_random_pattern(const PatternGenSpec& spec) {
  if (spec.s < 1 || spec.t <= spec.s)
    throw std::invalid_argument("require 1 <= |S| < |T|");
  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int attempt = 0; attempt < spec.max_tries; ++attempt) {
    Graph h(spec.s + spec.t);
    for (int i = 0; i < spec.s; ++i)
      for (int j = i + 1; j < spec.s; ++j)
        if (coin(rng) <= spec.p_edge) h.add_edge(i, j);
    for (int i = 0; i < spec.s; ++i)
      for (int j = spec.s; j < spec.s + spec.t; ++j)
        if (coin(rng) <= spec.p_edge) h.add_edge(i, j);
    std::vector<int> S(spec.s), T(spec.t);
    for (int i = 0; i < spec.s; ++i) S[i] = i;
    for (int j = 0; j < spec.t; ++j) T[j] = spec.s + j;
    try {
      return validate_pattern(h, S, T);
    } catch (const PatternValidationError&) {
      continue;
    }
  }
  throw std::runtime_error("pattern generator: no valid sample within budget");
}

// An instance pair tying k-clique counting in an arbitrary graph to pattern
// counting in a d-degenerate host (d >= 5, k >= 3). The host is built from
// the input graph by subdividing every edge and adding two small dominating
// sets; the pattern applies the same construction to K_k. The number of
// pattern copies in the host equals the number of k-cliques in the input.
struct ReductionInstance {
  Graph host;
  Pattern pattern;
  int k = 0, d = 0;
  // Vertex roles, for inspection: originals, subdivision points, the d-2
  // vertices adjacent to all subdivision points, the d vertices adjacent to
  // everything added so far. Same roles on the pattern side (built from K_k).
  std::vector<int> host_original, host_subdiv, host_da, host_db;
  std::vector<int> pat_original, pat_subdiv, pat_da, pat_db;
};

inline ReductionInstance gen_reduction_instance(const Graph& input, int k, int d) {
  if (d < 5) throw std::invalid_argument("construction needs d >= 5");
  if (k < 3) throw std::invalid_argument("construction needs k >= 3");

  auto build = [&](const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
      for (int v : g.neighbours(u))
        if (u < v) edges.emplace_back(u, v);
    int m = static_cast<int>(edges.size());
    int total = n + m + (d - 2) + d;
    Graph out(total);
    std::vector<int> orig(n), sub(m), da(d - 2), db(d);
    for (int i = 0; i < n; ++i) orig[i] = i;
    for (int j = 0; j < m; ++j) sub[j] = n + j;
    for (int a = 0; a < d - 2; ++a) da[a] = n + m + a;
    for (int b = 0; b < d; ++b) db[b] = n + m + (d - 2) + b;
    for (int j = 0; j < m; ++j) {
      out.add_edge(sub[j], edges[j].first);
      out.add_edge(sub[j], edges[j].second);
    }
    for (int a : da)
      for (int j : sub) out.add_edge(a, j);
    for (int b : db) {
      for (int v : orig) out.add_edge(b, v);
      for (int a : da) out.add_edge(b, a);
    }
    struct Built {
      Graph g;
      std::vector<int> orig, sub, da, db;
    };
    return Built{std::move(out), std::move(orig), std::move(sub), std::move(da),
                 std::move(db)};
  };

  ReductionInstance inst;
  inst.k = k;
  inst.d = d;
  auto h = build(input);
  inst.host = std::move(h.g);
  inst.host_original = std::move(h.orig);
  inst.host_subdiv = std::move(h.sub);
  inst.host_da = std::move(h.da);
  inst.host_db = std::move(h.db);

  Graph kk(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) kk.add_edge(i, j);
  auto ph = build(kk);
  std::vector<int> S, T;
  for (int v : ph.orig) S.push_back(v);
  for (int a : ph.da) S.push_back(a);
  for (int j : ph.sub) T.push_back(j);
  for (int b : ph.db) T.push_back(b);
  inst.pattern = validate_pattern(ph.g, S, T);
  inst.pat_original = std::move(ph.orig);
  inst.pat_subdiv = std::move(ph.sub);
  inst.pat_da = std::move(ph.da);
  inst.pat_db = std::move(ph.db);
  return inst;
}

}  // namespace locount
