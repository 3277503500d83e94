#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

#include "locount/bigcount.hpp"
#include "locount/pattern.hpp"
#include "locount/subset_dict.hpp"

namespace locount {

// Bipartite supply/demand network for weak counting: pools are host trace
// classes (index-set masks over the ordered anchor), demands are pattern
// neighbourhood classes, arcs are the inclusion pairs demand ⊆ pool.
struct FlowNetwork {
  struct Pool {
    uint32_t mask;
    long long supply;
  };
  struct Demand {
    uint32_t mask;
    long long demand;
  };

  std::vector<Pool> pools;
  std::vector<Demand> demands;
  std::vector<std::pair<int, int>> arcs;  // (pool index, demand index)
  long long total_demand = 0;             // M
  long long max_demand = 0;               // p

  std::vector<std::vector<int>> arcs_by_demand() const {
    std::vector<std::vector<int>> by(demands.size());
    for (int a = 0; a < static_cast<int>(arcs.size()); ++a)
      by[arcs[a].second].push_back(a);
    return by;
  }
};

// pool_counts[mask] is the number of available host vertices with that exact
// trace over the ordered anchor.
inline FlowNetwork build_flow_network(const IndexRep& rep,
                                      const std::vector<long long>& pool_counts,
                                      int d) {
  FlowNetwork net;
  std::vector<int> pool_of_mask(pool_counts.size(), -1);
  for (uint32_t mask = 0; mask < pool_counts.size(); ++mask) {
    if (pool_counts[mask] > 0) {
      pool_of_mask[mask] = static_cast<int>(net.pools.size());
      net.pools.push_back({mask, pool_counts[mask]});
    }
  }
  std::vector<int> demand_of_mask(pool_counts.size(), -1);
  for (const auto& [mask, count] : rep.multiplicity) {
    if (count > 0) {
      demand_of_mask[mask] = static_cast<int>(net.demands.size());
      net.demands.push_back({mask, count});
      net.total_demand += count;
      net.max_demand = std::max(net.max_demand, count);
    }
  }
  // Arc enumeration split at the |I| > d threshold: small pools enumerate
  // their submasks, large pools are tested against every demand.
  for (int li = 0; li < static_cast<int>(net.pools.size()); ++li) {
    uint32_t pmask = net.pools[li].mask;
    if (std::popcount(pmask) <= d) {
      for (uint32_t sub = pmask;; sub = (sub - 1) & pmask) {
        if (demand_of_mask[sub] >= 0) net.arcs.emplace_back(li, demand_of_mask[sub]);
        if (sub == 0) break;
      }
    } else {
      for (int ri = 0; ri < static_cast<int>(net.demands.size()); ++ri)
        if ((net.demands[ri].mask & pmask) == net.demands[ri].mask)
          net.arcs.emplace_back(li, ri);
    }
  }
  // Pools no demand can draw from never carry flow (their weight factor is
  // 1); drop them so enumeration and weights touch only live pools. The trace
  // classes of vertices unrelated to the pattern (for one, the empty trace,
  // whose supply is nearly |V|) land here.
  std::vector<int> remap(net.pools.size(), -1);
  std::vector<FlowNetwork::Pool> live;
  for (const auto& [li, ri] : net.arcs) {
    if (remap[li] < 0) {
      remap[li] = static_cast<int>(live.size());
      live.push_back(net.pools[li]);
    }
  }
  for (auto& arc : net.arcs) arc.first = remap[arc.first];
  net.pools = std::move(live);
  std::sort(net.arcs.begin(), net.arcs.end());
  return net;
}

inline FlowNetwork build_flow_network(const IndexRep& rep, const SubsetDictQ& q,
                                      int d) {
  std::vector<long long> counts(q.table().begin(), q.table().end());
  return build_flow_network(rep, counts, d);
}

// Enumerates every integer arc assignment f >= 0 that meets all demands
// exactly and respects pool supplies, by depth-first distribution with
// residual pruning. Semantically the brute force over [p]^F with validity
// filtering.
inline void enumerate_valid_flows(const FlowNetwork& net,
                                  const std::function<void(const std::vector<long long>&)>& emit) {
  auto by_demand = net.arcs_by_demand();
  std::vector<long long> flow(net.arcs.size(), 0);
  std::vector<long long> residual(net.pools.size());
  for (int i = 0; i < static_cast<int>(net.pools.size()); ++i)
    residual[i] = net.pools[i].supply;

  std::function<void(int)> go = [&](int di) {
    if (di == static_cast<int>(net.demands.size())) {
      emit(flow);
      return;
    }
    const auto& arcs = by_demand[di];
    long long need = net.demands[di].demand;
    // Distribute `need` over this demand's arcs.
    std::function<void(int, long long)> distribute = [&](int ai, long long left) {
      if (ai == static_cast<int>(arcs.size())) {
        if (left == 0) go(di + 1);
        return;
      }
      int arc = arcs[ai];
      int pool = net.arcs[arc].first;
      long long cap = std::min(left, residual[pool]);
      // Quick residual check: remaining arcs must be able to absorb `left`.
      for (long long f = 0; f <= cap; ++f) {
        flow[arc] = f;
        residual[pool] -= f;
        distribute(ai + 1, left - f);
        residual[pool] += f;
        flow[arc] = 0;
      }
    };
    distribute(0, need);
  };
  go(0);
}

inline std::vector<std::vector<long long>> enumerate_valid_flows(const FlowNetwork& net) {
  std::vector<std::vector<long long>> all;
  enumerate_valid_flows(net, [&](const std::vector<long long>& f) { all.push_back(f); });
  return all;
}

// Number of distinct image vertex-set selections realizing a flow: per pool,
// choose an unordered f(l,r)-subset for each arc out of the supply.
inline BigCount flow_weight(const FlowNetwork& net, const std::vector<long long>& flow,
                            bool ordered_selections = false) {
  BigCount w = 1;
  for (int li = 0; li < static_cast<int>(net.pools.size()); ++li) {
    long long out = 0;
    BigCount arc_perms = 1;
    for (int a = 0; a < static_cast<int>(net.arcs.size()); ++a) {
      if (net.arcs[a].first == li) {
        out += flow[a];
        arc_perms *= factorial(flow[a]);
      }
    }
    BigCount falling = 1;
    for (long long i = 0; i < out; ++i) falling *= net.pools[li].supply - i;
    w *= ordered_selections ? falling : falling / arc_perms;
  }
  return w;
}

}  // namespace locount
