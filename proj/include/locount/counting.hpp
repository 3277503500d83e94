#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>
#include <unordered_set>
#include <vector>

#include "locount/bigcount.hpp"
#include "locount/flow.hpp"
#include "locount/graph.hpp"
#include "locount/pattern.hpp"
#include "locount/subset_dict.hpp"

namespace locount {

enum class Mode { Strong, Weak };
enum class DedupMode { Hash, Canonical };

namespace detail {

// S̃ sorted by host position.
inline std::vector<int> order_by_position(const OrderedGraph& og, std::vector<int> s) {
  std::sort(s.begin(), s.end(),
            [&](int a, int b) { return og.position[a] < og.position[b]; });
  return s;
}

// Ordered graph on [s] induced by G[S̃]: index pairs i < j with an edge.
inline std::vector<std::pair<int, int>> induced_ordered_edges(
    const Graph& g, const std::vector<int>& ordered_s) {
  std::vector<std::pair<int, int>> edges;
  int s = static_cast<int>(ordered_s.size());
  for (int i = 0; i < s; ++i)
    for (int j = i + 1; j < s; ++j)
      if (g.has_edge(ordered_s[i], ordered_s[j])) edges.emplace_back(i, j);
  return edges;
}

// Exact-trace pool counts over the position-ordered anchor, with the anchor's
// own vertices removed: a vertex of S̃ can have trace X without being a valid
// T-image. Index i of the result refers to the i-th vertex of ordered_s.
inline std::vector<long long> adjusted_pool_counts(const OrderedGraph& og,
                                                   const SubsetDictQ& q,
                                                   const std::vector<int>& ordered_s) {
  int s = static_cast<int>(ordered_s.size());
  // Map position-order index -> sorted-anchor index.
  const auto& anchor = q.anchor();
  std::vector<int> to_anchor(s);
  for (int i = 0; i < s; ++i) {
    auto it = std::lower_bound(anchor.begin(), anchor.end(), ordered_s[i]);
    if (it == anchor.end() || *it != ordered_s[i])
      throw std::invalid_argument("anchor mismatch between Q and S̃");
    to_anchor[i] = static_cast<int>(it - anchor.begin());
  }
  std::vector<long long> counts(1u << s, 0);
  for (uint32_t mask = 0; mask < (1u << s); ++mask) {
    uint32_t amask = 0;
    for (int i = 0; i < s; ++i)
      if (mask >> i & 1) amask |= 1u << to_anchor[i];
    counts[mask] = q.at(amask);
  }
  for (int v : ordered_s) {
    uint32_t trace = 0;
    for (int i = 0; i < s; ++i)
      if (og.graph.has_edge(v, ordered_s[i])) trace |= 1u << i;
    --counts[trace];
  }
  return counts;
}

}  // namespace detail

// #(H embeds strongly into G | φ(S) = S̃, rep(φ, 𝔾) = rep). The S-side must
// match the representation exactly; T-choices are binomials over exact-trace
// pools.
inline BigCount count_strong_fixed(const OrderedGraph& og, const IndexRep& rep,
                                   const std::vector<int>& s_tilde,
                                   const SubsetDictQ& q, const BigCount& aut_s) {
  auto ordered_s = detail::order_by_position(og, s_tilde);
  if (static_cast<int>(ordered_s.size()) != rep.s)
    throw std::invalid_argument("S̃ size does not match the representation");
  auto pools = detail::adjusted_pool_counts(og, q, ordered_s);
  if (detail::induced_ordered_edges(og.graph, ordered_s) != rep.s_edges) return 0;

  BigCount k = 1;
  for (const auto& [mask, count] : rep.multiplicity) {
    if (count == 0) continue;
    k *= binomial(pools[mask], count);
    if (k == 0) return 0;
  }
  return aut_s * k;
}

// #(H embeds weakly into G | ψ(S) = S̃, rep(ψ, 𝔾) = rep). The S-side of the
// representation must be a subgraph of G[S̃]; T-choices are enumerated as
// integer flows from exact-trace pools to class demands.
inline BigCount count_weak_fixed(const OrderedGraph& og, const IndexRep& rep,
                                 const std::vector<int>& s_tilde,
                                 const SubsetDictQ& q, const BigCount& aut_s,
                                 bool ordered_selection_weight = false, int d = -1) {
  auto ordered_s = detail::order_by_position(og, s_tilde);
  if (static_cast<int>(ordered_s.size()) != rep.s)
    throw std::invalid_argument("S̃ size does not match the representation");
  auto pools = detail::adjusted_pool_counts(og, q, ordered_s);
  auto host_edges = detail::induced_ordered_edges(og.graph, ordered_s);
  if (!std::includes(host_edges.begin(), host_edges.end(), rep.s_edges.begin(),
                     rep.s_edges.end()))
    return 0;

  if (d < 0) d = og.max_left_degree();
  FlowNetwork net = build_flow_network(rep, pools, d);
  BigCount total = 0;
  enumerate_valid_flows(net, [&](const std::vector<long long>& flow) {
    total += flow_weight(net, flow, ordered_selection_weight);
  });
  return aut_s * total;
}

struct CountOptions {
  Mode mode = Mode::Weak;
  int threads = 1;
  bool ordered_selection_weight = false;
  DedupMode dedup = DedupMode::Hash;
};

struct PhaseTimesMs {
  double ordering = 0;
  double dict_r = 0;
  double reps = 0;
  double locate_count = 0;
};

struct DedupStats {
  long long candidates_seen = 0;
  long long unique_processed = 0;
};

struct CountResult {
  BigCount embeddings = 0;
  BigCount copies = 0;
  // Order of the automorphism action on occurrences: aut(H) in weak mode,
  // aut_S(H) in strong mode (strong occurrences carry the role split, so
  // automorphisms moving S-vertices into T do not act on them).
  BigCount aut_total = 0;
  BigCount aut_s = 0;
  bool not_d_degenerate = false;
  int host_d = 0;
  LocatabilityResult locatability;
  PhaseTimesMs times;
  DedupStats stats;
};

namespace detail {

inline double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

// All |S|-subsets of the sorted candidate pool, via index combinations.
template <typename F>
inline void for_each_subset(const std::vector<int>& pool, int k, F&& f) {
  int n = static_cast<int>(pool.size());
  if (k > n || k <= 0) return;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  do {
    std::vector<int> subset(k);
    for (int i = 0; i < k; ++i) subset[i] = pool[idx[i]];
    f(std::move(subset));
  } while (next_combination(idx, n));
}

// Visits every locator set L with 1 <= |L| <= c in the canonical enumeration
// order (increasing size, lexicographic members).
template <typename F>
inline void for_each_locator(int n, int c, F&& f) {
  for (int size = 1; size <= c; ++size) {
    if (size > n) break;
    std::vector<int> idx(size);
    std::iota(idx.begin(), idx.end(), 0);
    do {
      f(idx);
    } while (next_combination(idx, n));
  }
}

// True if `l` is the first locator (in enumeration order) whose closed left
// neighbourhood contains s_tilde. Used by the memory-bounded dedup mode.
inline bool is_canonical_locator(const OrderedGraph& og, const std::vector<int>& l,
                                 const std::vector<int>& s_tilde, int c) {
  bool first = true;
  bool decided = false;
  for_each_locator(og.graph.vertex_count(), c, [&](const std::vector<int>& cand) {
    if (decided) return;
    auto hood = closed_left_neighbourhood(og, cand);
    if (std::includes(hood.begin(), hood.end(), s_tilde.begin(), s_tilde.end())) {
      first = (cand == l);
      decided = true;
    }
  });
  return first;
}

}  // namespace detail

// The master locate-and-count loop: enumerate locator sets L of size at most
// c, candidate sets S̃ ⊆ N⁻[L] of size |S| (each processed once), and sum the
// per-representation fixed counts.
inline CountResult count_pattern(const Graph& g, const Pattern& p,
                                 const CountOptions& opts = {}) {
  CountResult result;
  auto t0 = std::chrono::steady_clock::now();
  OrderedGraph og = degeneracy_order(g);
  int d = og.max_left_degree();
  result.host_d = d;
  result.times.ordering = detail::ms_since(t0);

  result.aut_s = aut_S(p);
  result.aut_total = opts.mode == Mode::Strong ? result.aut_s : aut(p);
  if (degeneracy(p.graph) > d) {
    result.not_d_degenerate = true;
    result.locatability.status = LocStatus::NotDDegenerate;
    return result;
  }

  t0 = std::chrono::steady_clock::now();
  SubsetDictR r = SubsetDictR::build(og);
  result.times.dict_r = detail::ms_since(t0);

  t0 = std::chrono::steady_clock::now();
  result.locatability = min_locatable_c(p, d);
  int c = result.locatability.c;
  std::set<IndexRep> rep_set = degenerate_reps(p, d);
  std::vector<IndexRep> reps(rep_set.begin(), rep_set.end());
  result.times.reps = detail::ms_since(t0);

  t0 = std::chrono::steady_clock::now();
  int s = static_cast<int>(p.S.size());

  // Discovery: collect each candidate S̃ exactly once.
  std::vector<std::vector<int>> unique_sets;
  std::unordered_set<std::vector<int>, VertexSetHash> seen;
  detail::for_each_locator(g.vertex_count(), c, [&](const std::vector<int>& l) {
    auto hood = closed_left_neighbourhood(og, l);
    detail::for_each_subset(hood, s, [&](std::vector<int> s_tilde) {
      ++result.stats.candidates_seen;
      if (opts.dedup == DedupMode::Hash) {
        if (seen.insert(s_tilde).second) unique_sets.push_back(std::move(s_tilde));
      } else {
        if (detail::is_canonical_locator(og, l, s_tilde, c))
          unique_sets.push_back(std::move(s_tilde));
      }
    });
  });
  result.stats.unique_processed = static_cast<long long>(unique_sets.size());

  // Counting: partition the unique S̃ list across workers by striding; each
  // worker owns a private accumulator, results are summed in worker order.
  int workers = std::max(1, opts.threads);
  std::vector<BigCount> partial(workers, 0);
  auto work = [&](int w) {
    for (size_t i = w; i < unique_sets.size(); i += workers) {
      const auto& s_tilde = unique_sets[i];
      SubsetDictQ q = SubsetDictQ::build(og, r, s_tilde);
      for (const auto& rep : reps) {
        if (opts.mode == Mode::Strong)
          partial[w] += count_strong_fixed(og, rep, s_tilde, q, result.aut_s);
        else
          partial[w] += count_weak_fixed(og, rep, s_tilde, q, result.aut_s,
                                         opts.ordered_selection_weight, d);
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  for (const auto& part : partial) result.embeddings += part;
  result.times.locate_count = detail::ms_since(t0);

  if (result.aut_total != 0) {
    BigCount rem = result.embeddings % result.aut_total;
    if (rem != 0)
      throw std::logic_error("embedding count not divisible by aut(H)");
    result.copies = result.embeddings / result.aut_total;
  }
  return result;
}

struct BicliqueResult {
  BigCount embeddings = 0;
  BigCount copies = 0;
};

// Counts (non-induced) K_{s,t} copies in a degenerate host, three regimes:
// impossible (s > d), one located side (t > d), or either side located
// (t <= d) with the located role recorded to avoid double counting.
inline BicliqueResult count_biclique(const Graph& g, int s, int t) {
  if (s < 1 || s > t) throw std::invalid_argument("require 1 <= s <= t");
  BicliqueResult result;
  OrderedGraph og = degeneracy_order(g);
  int d = og.max_left_degree();
  if (s >= d + 1) return result;  // K_{s,t} cannot occur in G

  SubsetDictR r = SubsetDictR::build(og);

  // Joint-neighbour counts of a candidate side split at max_position(side):
  // c_l by scanning N⁻ of the last member, c_r as R[side].
  auto joint_split = [&](const std::vector<int>& side) {
    int last = side.front();
    for (int v : side)
      if (og.position[v] > og.position[last]) last = v;
    long long c_l = 0;
    for (int v : left_neighbourhood(og, last)) {
      if (std::binary_search(side.begin(), side.end(), v)) continue;
      bool joint = true;
      for (int u : side)
        if (u != last && !g.has_edge(v, u)) {
          joint = false;
          break;
        }
      if (joint) ++c_l;
    }
    long long c_r = r.query(side);
    return std::pair<long long, long long>(c_l, c_r);
  };

  std::unordered_set<std::vector<int>, VertexSetHash> seen_s, seen_t;
  BigCount copies = 0;

  for (int x = 0; x < g.vertex_count(); ++x) {
    auto left = left_neighbourhood(og, x);
    if (t > d) {
      // Only the s-side can be located; every copy's maximum is on the t-side.
      detail::for_each_subset(left, s, [&](std::vector<int> side) {
        if (!seen_s.insert(side).second) return;
        auto [c_l, c_r] = joint_split(side);
        copies += binomial(c_l + c_r, t);
      });
    } else {
      // Both sides fit a left neighbourhood; fix the located side and require
      // the occurrence's maximum on the other side.
      detail::for_each_subset(left, s, [&](std::vector<int> side) {
        if (!seen_s.insert(side).second) return;
        auto [c_l, c_r] = joint_split(side);
        copies += binomial(c_l + c_r, t) - binomial(c_l, t);
      });
      if (t != s) {
        detail::for_each_subset(left, t, [&](std::vector<int> side) {
          if (!seen_t.insert(side).second) return;
          auto [c_l, c_r] = joint_split(side);
          copies += binomial(c_l + c_r, s) - binomial(c_l, s);
        });
      }
    }
  }

  result.copies = copies;
  BigCount aut_count =
      (s == t) ? BigCount(2) * factorial(s) * factorial(s) : factorial(s) * factorial(t);
  result.embeddings = copies * aut_count;
  return result;
}

}  // namespace locount
