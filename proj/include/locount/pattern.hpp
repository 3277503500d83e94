#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "locount/bigcount.hpp"
#include "locount/graph.hpp"

namespace locount {

enum class PatternErrorCode {
  Overlap,
  NotPartition,
  SizeOrder,      // |S| >= |T|
  NotConnected,
  TNotIndependent,
  TNotCovered,    // some T-vertex has no neighbour in S
};

struct PatternValidationError : std::runtime_error {
  PatternErrorCode code;
  PatternValidationError(PatternErrorCode c, const std::string& what)
      : std::runtime_error(what), code(c) {}
};

// A two-sided pattern: connected H with a small side S (a vertex cover) and a
// large independent side T, T ⊆ N(S), |S| < |T|.
struct Pattern {
  Graph graph;
  std::vector<int> S;  // sorted
  std::vector<int> T;  // sorted
  NeighbourhoodClasses classes;

  bool in_S(int v) const { return std::binary_search(S.begin(), S.end(), v); }
};

inline Pattern validate_pattern(const Graph& g, std::vector<int> S, std::vector<int> T) {
  std::sort(S.begin(), S.end());
  std::sort(T.begin(), T.end());
  for (int v : S)
    if (std::binary_search(T.begin(), T.end(), v))
      throw PatternValidationError(PatternErrorCode::Overlap, "S and T overlap");
  std::vector<int> all;
  std::merge(S.begin(), S.end(), T.begin(), T.end(), std::back_inserter(all));
  std::vector<int> expect(g.vertex_count());
  std::iota(expect.begin(), expect.end(), 0);
  if (all != expect)
    throw PatternValidationError(PatternErrorCode::NotPartition,
                                 "S and T do not partition the vertex set");
  if (S.size() >= T.size())
    throw PatternValidationError(PatternErrorCode::SizeOrder, "|S| >= |T|");
  if (!g.connected())
    throw PatternValidationError(PatternErrorCode::NotConnected, "pattern not connected");
  for (int t : T)
    for (int u : g.neighbours(t))
      if (std::binary_search(T.begin(), T.end(), u))
        throw PatternValidationError(PatternErrorCode::TNotIndependent,
                                     "T is not independent");
  for (int t : T)
    if (g.neighbours(t).empty())
      throw PatternValidationError(PatternErrorCode::TNotCovered,
                                   "T-vertex with no neighbour in S");

  Pattern p;
  p.graph = g;
  p.S = std::move(S);
  p.T = std::move(T);
  p.classes = neighbourhood_classes(g, p.S, p.T);
  return p;
}

// Index representation (H_S, J): the S-induced graph relabelled to [s] by an
// S-ordering, plus the multiplicity of T-vertices per seen index set.
struct IndexRep {
  int s = 0;
  std::vector<std::pair<int, int>> s_edges;     // index pairs i < j, sorted
  std::map<uint32_t, long long> multiplicity;   // J: index-set mask -> count

  friend bool operator==(const IndexRep&, const IndexRep&) = default;
  friend bool operator<(const IndexRep& a, const IndexRep& b) {
    if (a.s != b.s) return a.s < b.s;
    if (a.s_edges != b.s_edges) return a.s_edges < b.s_edges;
    return std::lexicographical_compare(a.multiplicity.begin(), a.multiplicity.end(),
                                        b.multiplicity.begin(), b.multiplicity.end());
  }
};

inline IndexRep index_rep(const Pattern& p, const std::vector<int>& s_order) {
  int s = static_cast<int>(s_order.size());
  std::vector<int> rank(p.graph.vertex_count(), -1);
  for (int i = 0; i < s; ++i) rank[s_order[i]] = i;
  IndexRep rep;
  rep.s = s;
  for (int i = 0; i < s; ++i)
    for (int j = i + 1; j < s; ++j)
      if (p.graph.has_edge(s_order[i], s_order[j])) rep.s_edges.emplace_back(i, j);
  std::sort(rep.s_edges.begin(), rep.s_edges.end());
  for (const auto& [trace, members] : p.classes.classes) {
    uint32_t mask = 0;
    for (int u : trace) mask |= 1u << rank[u];
    rep.multiplicity[mask] = static_cast<long long>(members.size());
  }
  return rep;
}

namespace detail {

inline bool next_combination(std::vector<int>& idx, int n) {
  int k = static_cast<int>(idx.size());
  for (int i = k - 1; i >= 0; --i) {
    if (idx[i] < n - (k - i)) {
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Checks that traces of V\C w.r.t. C, pushed through sigma, match the T-class
// sizes of the pattern. sigma maps S-vertices to C-vertices.
inline bool class_sizes_match(const Pattern& p,
                              const std::map<std::vector<int>, std::vector<int>>& u_classes,
                              const std::vector<int>& sigma_of /* by S position */,
                              const std::vector<int>& s_list) {
  for (const auto& [trace, members] : p.classes.classes) {
    std::vector<int> image;
    for (int u : trace) {
      auto it = std::lower_bound(s_list.begin(), s_list.end(), u);
      image.push_back(sigma_of[it - s_list.begin()]);
    }
    std::sort(image.begin(), image.end());
    auto it = u_classes.find(image);
    if (it == u_classes.end() || it->second.size() != members.size()) return false;
  }
  return true;
}

}  // namespace detail

// aut_S(H): automorphisms fixing S setwise. Per the class-multiset argument,
// each valid sigma: S -> S contributes Π_X |T_X|! automorphisms; sigma is
// valid iff it is an automorphism of H[S] preserving class sizes.
inline BigCount aut_S(const Pattern& p) {
  int s = static_cast<int>(p.S.size());
  std::vector<int> perm(s);
  std::iota(perm.begin(), perm.end(), 0);
  long long valid = 0;
  do {
    bool ok = true;
    for (int i = 0; i < s && ok; ++i)
      for (int j = i + 1; j < s && ok; ++j)
        if (p.graph.has_edge(p.S[i], p.S[j]) !=
            p.graph.has_edge(p.S[perm[i]], p.S[perm[j]]))
          ok = false;
    if (ok) {
      std::vector<int> sigma_of(s);
      for (int i = 0; i < s; ++i) sigma_of[i] = p.S[perm[i]];
      ok = detail::class_sizes_match(p, p.classes.classes, sigma_of, p.S);
    }
    if (ok) ++valid;
  } while (std::next_permutation(perm.begin(), perm.end()));

  BigCount result = valid;
  for (const auto& [trace, members] : p.classes.classes)
    result *= factorial(static_cast<long long>(members.size()));
  return result;
}

// orb_S(H): all images of S under automorphisms of H. Candidate images are
// the size-|S| vertex covers; a bijection sigma: S -> C extends to an
// automorphism iff it is an isomorphism H[S] -> H[C] and the neighbourhood
// classes of V\C match those of T in size.
inline std::set<std::vector<int>> orbit_S(const Pattern& p) {
  int n = p.graph.vertex_count();
  int s = static_cast<int>(p.S.size());
  std::set<std::vector<int>> orbit;

  std::vector<int> idx(s);
  std::iota(idx.begin(), idx.end(), 0);
  do {
    std::vector<int> cand(idx.begin(), idx.end());
    bool cover = true;
    std::vector<char> in_c(n, 0);
    for (int v : cand) in_c[v] = 1;
    for (int v = 0; v < n && cover; ++v) {
      if (in_c[v]) continue;
      for (int u : p.graph.neighbours(v))
        if (!in_c[u]) {
          cover = false;
          break;
        }
    }
    if (!cover) continue;

    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
      if (!in_c[v]) rest.push_back(v);
    auto u_classes = neighbourhood_classes(p.graph, cand, rest).classes;

    std::vector<int> perm(s);
    std::iota(perm.begin(), perm.end(), 0);
    bool extends = false;
    do {
      bool ok = true;
      for (int i = 0; i < s && ok; ++i)
        for (int j = i + 1; j < s && ok; ++j)
          if (p.graph.has_edge(p.S[i], p.S[j]) !=
              p.graph.has_edge(cand[perm[i]], cand[perm[j]]))
            ok = false;
      if (ok) {
        std::vector<int> sigma_of(s);
        for (int i = 0; i < s; ++i) sigma_of[i] = cand[perm[i]];
        ok = detail::class_sizes_match(p, u_classes, sigma_of, p.S);
      }
      extends = ok;
    } while (!extends && std::next_permutation(perm.begin(), perm.end()));
    if (extends) orbit.insert(cand);
  } while (detail::next_combination(idx, n));

  return orbit;
}

// aut(H) via Orbit–Stabilizer.
inline BigCount aut(const Pattern& p) {
  return BigCount(static_cast<long long>(orbit_S(p).size())) * aut_S(p);
}

// Minimum |C| with Sp ⊆ N⁻[C]; increasing size, lexicographic subsets.
inline int left_cover_number(const OrderedGraph& og, const std::vector<int>& sp) {
  int n = og.graph.vertex_count();
  if (n > 62) throw std::invalid_argument("left_cover_number: graph too large");
  for (int v : sp)
    if (v < 0 || v >= n) throw std::out_of_range("vertex index");
  uint64_t target = 0;
  for (int v : sp) target |= 1ull << v;
  if (target == 0) return 0;

  std::vector<int> cands;
  std::vector<uint64_t> cover_mask;
  for (int v = 0; v < n; ++v) {
    uint64_t m = 1ull << v;
    for (int u : left_neighbourhood(og, v)) m |= 1ull << u;
    if (m & target) {
      cands.push_back(v);
      cover_mask.push_back(m & target);
    }
  }
  int k = static_cast<int>(cands.size());
  for (int size = 1; size <= static_cast<int>(sp.size()); ++size) {
    if (size > k) break;
    std::vector<int> idx(size);
    std::iota(idx.begin(), idx.end(), 0);
    do {
      uint64_t got = 0;
      for (int i : idx) got |= cover_mask[i];
      if (got == target) return size;
    } while (detail::next_combination(idx, k));
  }
  return static_cast<int>(sp.size());  // Sp always covers itself
}

enum class LocStatus { NotDDegenerate, Locatable };

struct LocatabilityResult {
  LocStatus status = LocStatus::NotDDegenerate;
  int c = 0;
  // For Locatable: a d-degenerate ordering of H attaining the maximum
  // left-cover number, and a minimum cover within it.
  std::vector<int> witness_order;
  std::vector<int> witness_cover;
};

namespace detail {

// Per-S-ordering device shared by degenerate_reps and min_locatable_c.
//
// With the S-positions fixed, every T-vertex of a class occupies one of the
// |S|+1 slots between S-vertices; only the number of class members to the
// left of the slot matters. Placing a whole class at one slot is load-minimal
// for a given coverage level, and pushing classes right never hurts
// d-degeneracy, so an S-ordering extends to a d-degenerate ordering iff the
// greedy rightmost placement does.
struct SlotAnalysis {
  struct ClassInfo {
    std::vector<int> member_positions;  // positions (0-based, ascending) of the
                                        // class trace within the S-ordering
    long long size = 0;
    std::vector<int> members;           // T-vertices
  };

  int k = 0;                 // |S|
  int d = 0;
  std::vector<int> base;     // left degree of s_i inside H[S]
  std::vector<ClassInfo> classes;
  std::vector<int> s_order;

  SlotAnalysis(const Pattern& p, const std::vector<int>& s_order_in, int d_in)
      : k(static_cast<int>(s_order_in.size())), d(d_in), s_order(s_order_in) {
    std::vector<int> pos(p.graph.vertex_count(), -1);
    for (int i = 0; i < k; ++i) pos[s_order[i]] = i;
    base.assign(k, 0);
    for (int i = 0; i < k; ++i)
      for (int u : p.graph.neighbours(s_order[i]))
        if (pos[u] >= 0 && pos[u] < i) ++base[i];
    for (const auto& [trace, members] : p.classes.classes) {
      ClassInfo ci;
      for (int u : trace) ci.member_positions.push_back(pos[u]);
      std::sort(ci.member_positions.begin(), ci.member_positions.end());
      ci.size = static_cast<long long>(members.size());
      ci.members = members;
      classes.push_back(std::move(ci));
    }
  }

  // Slot for coverage level r (r trace members to the left): immediately
  // after the r-th member, or slot 0 for r = 0. Load-minimal within level.
  int slot_for_level(const ClassInfo& ci, int r) const {
    return r == 0 ? 0 : ci.member_positions[r - 1] + 1;
  }

  // True if placing each class wholly at its rightmost feasible level keeps
  // all left degrees at most d.
  bool extends_to_d_degenerate() const {
    std::vector<long long> load(base.begin(), base.end());
    for (const auto& ci : classes) {
      int deg = static_cast<int>(ci.member_positions.size());
      int r = std::min(deg, d);
      int slot = slot_for_level(ci, r);
      for (int p2 : ci.member_positions)
        if (p2 >= slot) load[p2] += ci.size;
    }
    for (long long l : load)
      if (l > d) return false;
    return true;
  }
};

// Exact minimum set cover over masks; returns chosen candidate indices, or
// nullopt if no cover of size <= limit exists.
inline std::optional<std::vector<int>> min_mask_cover(const std::vector<uint64_t>& masks,
                                                      uint64_t target, int limit) {
  if (target == 0) return std::vector<int>{};
  int m = static_cast<int>(masks.size());
  for (int size = 1; size <= limit; ++size) {
    if (size > m) break;
    std::vector<int> idx(size);
    std::iota(idx.begin(), idx.end(), 0);
    do {
      uint64_t got = 0;
      for (int i : idx) got |= masks[i];
      if ((got & target) == target) return idx;
    } while (next_combination(idx, m));
  }
  return std::nullopt;
}

}  // namespace detail

// { rep(H, ℍ[S]) : ℍ a d-degenerate ordering of H }, deduplicated by value.
// rep(H, 𝕊) depends only on 𝕊, so it suffices to keep the S-orderings that
// extend to a d-degenerate ordering of H.
inline std::set<IndexRep> degenerate_reps(const Pattern& p, int d) {
  std::set<IndexRep> reps;
  std::vector<int> s_order = p.S;
  std::sort(s_order.begin(), s_order.end());
  do {
    detail::SlotAnalysis sa(p, s_order, d);
    if (sa.extends_to_d_degenerate()) reps.insert(index_rep(p, s_order));
  } while (std::next_permutation(s_order.begin(), s_order.end()));
  return reps;
}

// Minimum c such that H is (c,d)-locatable, i.e. the maximum over all
// d-degenerate orderings ℍ of the left-cover number of S in ℍ. Per
// S-ordering, the adversarial T-placement is searched over per-class coverage
// levels (all members of a class placed at one slot); covers draw from
// S-vertices and one representative per class.
inline LocatabilityResult min_locatable_c(const Pattern& p, int d) {
  LocatabilityResult result;
  if (degeneracy(p.graph) > d) {
    result.status = LocStatus::NotDDegenerate;
    return result;
  }
  result.status = LocStatus::Locatable;
  result.c = 0;

  int k = static_cast<int>(p.S.size());
  if (k >= 62) throw std::invalid_argument("S too large");
  uint64_t target = (1ull << k) - 1;  // over S positions

  std::vector<int> s_order = p.S;
  std::sort(s_order.begin(), s_order.end());
  do {
    detail::SlotAnalysis sa(p, s_order, d);
    int nc = static_cast<int>(sa.classes.size());

    // Fixed cover candidates: s_i covers itself and its left S-neighbours.
    std::vector<uint64_t> s_masks(k);
    for (int i = 0; i < k; ++i) {
      uint64_t m = 1ull << i;
      for (int u : p.graph.neighbours(s_order[i]))
        for (int j = 0; j < i; ++j)
          if (s_order[j] == u) m |= 1ull << j;
      s_masks[i] = m;
    }

    std::vector<int> level(nc, 0);
    std::vector<long long> load(sa.base.begin(), sa.base.end());

    // DFS over per-class coverage levels with load feasibility and an upper
    // bound prune: committing the remaining classes cannot make the cover
    // worse than with them absent.
    auto mask_of = [&](int ci, int r) {
      uint64_t m = 0;
      for (int t = 0; t < r; ++t) m |= 1ull << sa.classes[ci].member_positions[t];
      return m;
    };

    std::function<void(int)> dfs = [&](int ci) {
      // Upper-bound prune.
      std::vector<uint64_t> masks = s_masks;
      for (int j = 0; j < ci; ++j) masks.push_back(mask_of(j, level[j]));
      auto ub_cover = detail::min_mask_cover(masks, target, result.c);
      if (ub_cover) return;  // this branch cannot exceed the current maximum

      if (ci == nc) {
        auto cover = detail::min_mask_cover(masks, target, k);
        int value = cover ? static_cast<int>(cover->size()) : k;
        if (value > result.c) {
          result.c = value;
          // Materialize a witness ordering: S interleaved with class blocks.
          std::vector<std::vector<int>> slot_blocks(k + 1);
          for (int j = 0; j < nc; ++j) {
            int slot = sa.slot_for_level(sa.classes[j], level[j]);
            auto& blk = slot_blocks[slot];
            blk.insert(blk.end(), sa.classes[j].members.begin(),
                       sa.classes[j].members.end());
          }
          result.witness_order.clear();
          for (int i = 0; i <= k; ++i) {
            for (int v : slot_blocks[i]) result.witness_order.push_back(v);
            if (i < k) result.witness_order.push_back(s_order[i]);
          }
          result.witness_cover.clear();
          if (cover) {
            for (int idx : *cover) {
              if (idx < k)
                result.witness_cover.push_back(s_order[idx]);
              else
                result.witness_cover.push_back(sa.classes[idx - k].members.front());
            }
          }
        }
        return;
      }

      const auto& cls = sa.classes[ci];
      int deg = static_cast<int>(cls.member_positions.size());
      for (int r = 0; r <= std::min(deg, d); ++r) {
        int slot = sa.slot_for_level(cls, r);
        bool feasible = true;
        for (int t = r; t < deg; ++t) {
          int pos2 = cls.member_positions[t];
          load[pos2] += cls.size;
          if (load[pos2] > d) feasible = false;
        }
        if (feasible) {
          level[ci] = r;
          dfs(ci + 1);
        }
        for (int t = r; t < deg; ++t) load[cls.member_positions[t]] -= cls.size;
      }
    };
    dfs(0);
  } while (std::next_permutation(s_order.begin(), s_order.end()));

  if (result.c == 0) result.c = k;  // defensive; d-degenerate patterns always hit a leaf
  return result;
}

// Structural test equivalent to c == 1: H[S] is a clique, or T has at least
// d+1-δ(H[S]) vertices whose neighbourhood is exactly S.
inline bool check_1d_structure(const Pattern& p, int d) {
  int s = static_cast<int>(p.S.size());
  bool clique = true;
  int min_deg_s = s - 1;
  for (int i = 0; i < s; ++i) {
    int deg = 0;
    for (int j = 0; j < s; ++j)
      if (j != i && p.graph.has_edge(p.S[i], p.S[j])) ++deg;
    min_deg_s = std::min(min_deg_s, deg);
    if (deg != s - 1) clique = false;
  }
  if (s == 1) return true;
  if (clique) return true;
  auto it = p.classes.classes.find(p.S);
  long long full = (it == p.classes.classes.end())
                       ? 0
                       : static_cast<long long>(it->second.size());
  return full >= d + 1 - min_deg_s;
}

}  // namespace locount
