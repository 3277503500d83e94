#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "locount/graph.hpp"

namespace locount {

struct VertexSetHash {
  size_t operator()(const std::vector<int>& xs) const {
    size_t h = 1469598103934665603ull;
    for (int x : xs) {
      h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

// Left-superset counts: R[X] = |{ v : X ⊆ N⁻(v) }|. Built by crediting every
// subset of every left neighbourhood, so queries of absent keys are 0.
class SubsetDictR {
 public:
  static SubsetDictR build(const OrderedGraph& og) {
    SubsetDictR r;
    int n = og.graph.vertex_count();
    for (int v = 0; v < n; ++v) {
      auto left = left_neighbourhood(og, v);
      int k = static_cast<int>(left.size());
      if (k > 25)
        throw std::invalid_argument("left degree too large for subset dictionary");
      for (uint32_t sub = 0; sub < (1u << k); ++sub) {
        std::vector<int> key;
        for (int i = 0; i < k; ++i)
          if (sub >> i & 1) key.push_back(left[i]);
        ++r.table_[key];
      }
    }
    return r;
  }

  long long query(std::vector<int> x) const {
    std::sort(x.begin(), x.end());
    auto it = table_.find(x);
    return it == table_.end() ? 0 : it->second;
  }

  size_t size() const { return table_.size(); }

 private:
  std::unordered_map<std::vector<int>, long long, VertexSetHash> table_;
};

// Exact-trace counts over an anchor set: Q[X] = |{ v ∈ V \ X : N(v) ∩ anchor = X }|.
// The table is indexed by bitmask over the sorted anchor.
class SubsetDictQ {
 public:
  // Fast build: containment counts #{v : Y ⊆ N(v)} are
  // R[Y] plus a correction over N⁻[anchor] (any v whose containment of Y uses
  // a right neighbour is a left neighbour of some anchor vertex), then a
  // superset Möbius inversion converts containment to exact-trace counts.
  static SubsetDictQ build(const OrderedGraph& og, const SubsetDictR& r,
                           std::vector<int> anchor) {
    SubsetDictQ q = prepare(og.graph, std::move(anchor));
    int s = static_cast<int>(q.anchor_.size());

    for (uint32_t mask = 0; mask < (1u << s); ++mask) {
      std::vector<int> key;
      for (int i = 0; i < s; ++i)
        if (mask >> i & 1) key.push_back(q.anchor_[i]);
      q.table_[mask] = r.query(std::move(key));
    }

    for (int v : closed_left_neighbourhood(og, q.anchor_)) {
      uint32_t full = q.trace_mask(og.graph, v);
      uint32_t left = 0;
      for (int u : left_neighbourhood(og, v)) {
        auto it = std::lower_bound(q.anchor_.begin(), q.anchor_.end(), u);
        if (it != q.anchor_.end() && *it == u)
          left |= 1u << (it - q.anchor_.begin());
      }
      // left ⊆ full; credit full-containment, retract the left-containment
      // already counted through R.
      for (uint32_t sub = full;; sub = (sub - 1) & full) {
        ++q.table_[sub];
        if (sub == 0) break;
      }
      for (uint32_t sub = left;; sub = (sub - 1) & left) {
        --q.table_[sub];
        if (sub == 0) break;
      }
    }

    q.mobius_supersets();
    return q;
  }

  // Reference build: a direct scan of every vertex.
  static SubsetDictQ build_reference(const Graph& g, std::vector<int> anchor) {
    SubsetDictQ q = prepare(g, std::move(anchor));
    for (int v = 0; v < g.vertex_count(); ++v) ++q.table_[q.trace_mask(g, v)];
    return q;
  }

  const std::vector<int>& anchor() const { return anchor_; }
  const std::vector<long long>& table() const { return table_; }

  long long at(uint32_t mask) const { return table_.at(mask); }

  long long query(const std::vector<int>& x) const {
    uint32_t mask = 0;
    for (int u : x) {
      auto it = std::lower_bound(anchor_.begin(), anchor_.end(), u);
      if (it == anchor_.end() || *it != u)
        throw std::invalid_argument("query key is not a subset of the anchor");
      mask |= 1u << (it - anchor_.begin());
    }
    return table_[mask];
  }

  uint32_t trace_mask(const Graph& g, int v) const {
    uint32_t mask = 0;
    for (int i = 0; i < static_cast<int>(anchor_.size()); ++i)
      if (g.has_edge(v, anchor_[i])) mask |= 1u << i;
    return mask;
  }

 private:
  static SubsetDictQ prepare(const Graph& g, std::vector<int> anchor) {
    SubsetDictQ q;
    std::sort(anchor.begin(), anchor.end());
    anchor.erase(std::unique(anchor.begin(), anchor.end()), anchor.end());
    for (int v : anchor)
      if (v < 0 || v >= g.vertex_count())
        throw std::invalid_argument("anchor vertex out of range");
    if (anchor.size() > 25) throw std::invalid_argument("anchor too large");
    q.anchor_ = std::move(anchor);
    q.table_.assign(1ull << q.anchor_.size(), 0);
    return q;
  }

  // In-place conversion from containment counts to exact-trace counts:
  // Q[X] = Σ_{Y ⊇ X} (−1)^{|Y\X|} cnt[Y].
  void mobius_supersets() {
    int s = static_cast<int>(anchor_.size());
    for (int b = 0; b < s; ++b)
      for (uint32_t mask = 0; mask < table_.size(); ++mask)
        if (!(mask >> b & 1)) table_[mask] -= table_[mask | (1u << b)];
  }

  std::vector<int> anchor_;
  std::vector<long long> table_;
};

}  // namespace locount
