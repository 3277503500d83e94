#pragma once

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "locount/bigcount.hpp"
#include "locount/graph.hpp"
#include "locount/pattern.hpp"

namespace locount {

// Brute-force reference implementations. These trade speed for obvious
// correctness and are kept deliberately independent of the dictionary and
// flow machinery: plain backtracking over vertex maps.

struct OracleBudget {
  long long max_nodes = 50'000'000;  // backtracking nodes before giving up
  double max_seconds = 120.0;
};

class OracleTimeout : public std::runtime_error {
 public:
  OracleTimeout() : std::runtime_error("oracle budget exhausted") {}
};

namespace detail {

struct OracleState {
  const Graph& host;
  const Graph& pat;
  std::vector<int> assign;      // pattern vertex -> host vertex or -1
  std::vector<char> used;       // host vertex used
  std::vector<int> order;       // pattern vertices in assignment order
  std::vector<char> fixed;      // pattern vertex has a forced image
  std::vector<int> exact_against;  // adjacency to these must match exactly
  OracleBudget budget;
  long long nodes = 0;
  std::chrono::steady_clock::time_point start;
  BigCount count = 0;

  OracleState(const Graph& h, const Graph& p, OracleBudget b)
      : host(h),
        pat(p),
        assign(p.vertex_count(), -1),
        used(h.vertex_count(), 0),
        fixed(p.vertex_count(), 0),
        budget(b),
        start(std::chrono::steady_clock::now()) {}

  void charge() {
    if (++nodes % 65536 == 0) {
      double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                  start)
                        .count();
      if (secs > budget.max_seconds) throw OracleTimeout();
    }
    if (nodes > budget.max_nodes) throw OracleTimeout();
  }

  bool consistent(int pv, int hv) const {
    for (int pu : pat.neighbours(pv)) {
      int hu = assign[pu];
      if (hu < 0) continue;
      if (!host.has_edge(hv, hu)) return false;
    }
    for (int pu : exact_against) {
      int hu = assign[pu];
      if (hu < 0 || pu == pv || pat.has_edge(pv, pu)) continue;
      if (host.has_edge(hv, hu)) return false;
    }
    return true;
  }

  void search(size_t depth) {
    charge();
    if (depth == order.size()) {
      ++count;
      return;
    }
    int pv = order[depth];
    for (int hv = 0; hv < host.vertex_count(); ++hv) {
      if (used[hv] || !consistent(pv, hv)) continue;
      used[hv] = 1;
      assign[pv] = hv;
      search(depth + 1);
      assign[pv] = -1;
      used[hv] = 0;
    }
  }
};

// Assignment order for the free pattern vertices: start at the vertex with
// the most already-constrained neighbours (ties: highest degree), then grow
// greedily to keep the search connected to decided vertices.
inline std::vector<int> oracle_order(const Graph& pat, const std::vector<char>& fixed) {
  int n = pat.vertex_count();
  std::vector<char> decided(fixed.begin(), fixed.end());
  std::vector<int> order;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    int best_dec = -1;
    int best_deg = -1;
    for (int v = 0; v < n; ++v) {
      if (decided[v]) continue;
      int dec = 0;
      for (int u : pat.neighbours(v)) dec += decided[u] ? 1 : 0;
      int deg = static_cast<int>(pat.neighbours(v).size());
      if (dec > best_dec || (dec == best_dec && deg > best_deg)) {
        best = v;
        best_dec = dec;
        best_deg = deg;
      }
    }
    if (best < 0) break;
    decided[best] = 1;
    order.push_back(best);
  }
  return order;
}

inline BigCount oracle_embeddings(const Graph& host, const Pattern& p, bool induced_s,
                                  const std::optional<std::vector<int>>& s_image,
                                  OracleBudget budget) {
  // Strong embeddings are exact on every S-S and S-T pair (T-T pairs are
  // unconstrained; T is independent in H). Weak embeddings only preserve
  // pattern edges. Both run as: enumerate S-images, then count T-extensions.
  OracleState st(host, p.graph, budget);
  if (s_image) {
    if (s_image->size() != p.S.size())
      throw std::invalid_argument("fixed image size must equal |S|");
  }
  BigCount total = 0;

  std::vector<int> s = p.S;
  int sn = static_cast<int>(s.size());
  std::vector<int> img(sn, -1);
  std::vector<char> used(host.vertex_count(), 0);

  auto t_extensions = [&]() {
    OracleState inner(host, p.graph, budget);
    inner.nodes = st.nodes;
    inner.start = st.start;
    for (int i = 0; i < sn; ++i) {
      inner.assign[s[i]] = img[i];
      inner.used[img[i]] = 1;
      inner.fixed[s[i]] = 1;
    }
    if (induced_s) inner.exact_against = s;
    inner.order = oracle_order(p.graph, inner.fixed);
    inner.search(0);
    st.nodes = inner.nodes;
    return inner.count;
  };

  auto s_ok = [&](int upto) {
    for (int j = 0; j < upto; ++j) {
      bool pe = p.graph.has_edge(s[upto], s[j]);
      bool he = host.has_edge(img[upto], img[j]);
      if (induced_s ? (pe != he) : (pe && !he)) return false;
    }
    return true;
  };

  std::function<void(int)> rec = [&](int i) {
    st.charge();
    if (i == sn) {
      total += t_extensions();
      return;
    }
    if (s_image) {
      // fixed image as a set: try each unused member
      for (int hv : *s_image) {
        if (used[hv]) continue;
        img[i] = hv;
        if (s_ok(i)) {
          used[hv] = 1;
          rec(i + 1);
          used[hv] = 0;
        }
        img[i] = -1;
      }
      return;
    }
    for (int hv = 0; hv < host.vertex_count(); ++hv) {
      if (used[hv]) continue;
      img[i] = hv;
      if (s_ok(i)) {
        used[hv] = 1;
        rec(i + 1);
        used[hv] = 0;
      }
      img[i] = -1;
    }
  };
  rec(0);
  return total;
}

}  // namespace detail

// Strong embeddings: injective, pattern edges map to host edges, S-side
// non-edges map to host non-edges. Optionally restricted to φ(S) = s_image
// (as a set). Counts labelled embeddings.
inline BigCount oracle_count_strong(const Graph& host, const Pattern& p,
                                    std::optional<std::vector<int>> s_image = {},
                                    OracleBudget budget = {}) {
  return detail::oracle_embeddings(host, p, true, s_image, budget);
}

// Weak embeddings: injective homomorphisms (host may have extra edges
// anywhere, including within the S-image).
inline BigCount oracle_count_weak(const Graph& host, const Pattern& p,
                                  std::optional<std::vector<int>> s_image = {},
                                  OracleBudget budget = {}) {
  return detail::oracle_embeddings(host, p, false, s_image, budget);
}

// Labelled automorphisms of the pattern graph, optionally only those mapping
// S onto S.
inline BigCount oracle_automorphisms(const Pattern& p,
                                     bool s_setwise_fixed = false,
                                     OracleBudget budget = {}) {
  const Graph& h = p.graph;
  int n = h.vertex_count();
  std::vector<int> perm(n, -1);
  std::vector<char> used(n, 0);
  BigCount count = 0;
  long long nodes = 0;
  std::function<void(int)> rec = [&](int v) {
    if (++nodes > budget.max_nodes) throw OracleTimeout();
    if (v == n) {
      ++count;
      return;
    }
    for (int w = 0; w < n; ++w) {
      if (used[w]) continue;
      if (s_setwise_fixed && p.in_S(v) != p.in_S(w)) continue;
      bool ok = true;
      for (int u = 0; u < v; ++u) {
        if (h.has_edge(v, u) != h.has_edge(w, perm[u])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      used[w] = 1;
      perm[v] = w;
      rec(v + 1);
      perm[v] = -1;
      used[w] = 0;
    }
  };
  rec(0);
  return count;
}

// Number of k-cliques, by extending ordered cliques over sorted ids.
inline BigCount oracle_count_cliques(const Graph& g, int k) {
  if (k <= 0) return k == 0 ? 1 : 0;
  BigCount count = 0;
  std::vector<int> clique;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(clique.size()) == k) {
      ++count;
      return;
    }
    for (int v = start; v < g.vertex_count(); ++v) {
      bool ok = true;
      for (int u : clique)
        if (!g.has_edge(u, v)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      clique.push_back(v);
      rec(v + 1);
      clique.pop_back();
    }
  };
  rec(0);
  return count;
}

// Reference locatability: tries every ordering of V(H), reports the smallest
// worst-case cover size among orderings with max left degree <= d, where the
// per-ordering cost is the minimum number of vertices whose closed left
// neighbourhoods cover S. Matches min_locatable_c on small patterns.
inline std::optional<int> oracle_locatability(const Pattern& p, int d) {
  const Graph& h = p.graph;
  int n = h.vertex_count();
  if (n > 10) throw std::invalid_argument("oracle_locatability: pattern too large");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::optional<int> best;

  do {
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[perm[i]] = i;
    bool degen_ok = true;
    for (int v = 0; v < n && degen_ok; ++v) {
      int ld = 0;
      for (int u : h.neighbours(v)) ld += pos[u] < pos[v] ? 1 : 0;
      if (ld > d) degen_ok = false;
    }
    if (!degen_ok) continue;

    // Minimum cover of S by closed left neighbourhoods in this ordering.
    std::vector<uint64_t> masks;
    uint64_t target = 0;
    std::vector<int> sidx(n, -1);
    for (size_t i = 0; i < p.S.size(); ++i) sidx[p.S[i]] = static_cast<int>(i);
    for (int v : p.S) target |= 1ull << sidx[v];
    for (int v = 0; v < n; ++v) {
      uint64_t m = 0;
      if (sidx[v] >= 0) m |= 1ull << sidx[v];
      for (int u : h.neighbours(v))
        if (pos[u] < pos[v] && sidx[u] >= 0) m |= 1ull << sidx[u];
      if (m) masks.push_back(m);
    }
    auto cover = detail::min_mask_cover(masks, target,
                                        static_cast<int>(p.S.size()));
    if (!cover) continue;  // cannot happen: singletons cover
    int cost = static_cast<int>(cover->size());
    if (!best || cost > *best) {
      // worst case over adversarial orderings
      best = best ? std::max(*best, cost) : cost;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  return best;
}

}  // namespace locount
