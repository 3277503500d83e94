#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "locount/gen.hpp"
#include "locount/subset_dict.hpp"

using namespace locount;

namespace {

// Independent per-query scan: |{ v : X subset of N^-(v) }|.
long long scan_R(const OrderedGraph& og, const std::vector<int>& x) {
  long long count = 0;
  for (int v = 0; v < og.graph.vertex_count(); ++v) {
    auto left = left_neighbourhood(og, v);
    bool all = true;
    for (int u : x)
      if (!std::binary_search(left.begin(), left.end(), u)) {
        all = false;
        break;
      }
    if (all) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("R on the ordered triangle") {
  OrderedGraph og(testutil::clique(3), {0, 1, 2});
  SubsetDictR r = SubsetDictR::build(og);
  REQUIRE(r.query({}) == 3);
  REQUIRE(r.query({0}) == 2);
  REQUIRE(r.query({0, 1}) == 1);
  REQUIRE(r.query({2}) == 0);
}

TEST_CASE("R random queries equal a direct scan") {
  std::mt19937_64 rng(31);
  GenSpec spec;
  spec.n = 60;
  spec.d = 3;
  spec.seed = 9;
  OrderedGraph og = degeneracy_order(gen_random_degenerate(spec));
  SubsetDictR r = SubsetDictR::build(og);
  REQUIRE(r.query({}) == 60);
  for (int q = 0; q < 200; ++q) {
    int k = static_cast<int>(rng() % 4);
    std::vector<int> x;
    while (static_cast<int>(x.size()) < k) {
      int v = static_cast<int>(rng() % 60);
      if (std::find(x.begin(), x.end(), v) == x.end()) x.push_back(v);
    }
    REQUIRE(r.query(x) == scan_R(og, x));
  }
}

TEST_CASE("R singleton sums count every edge once, supersets only shrink") {
  GenSpec spec;
  spec.n = 40;
  spec.d = 4;
  spec.seed = 17;
  Graph g = gen_random_degenerate(spec);
  OrderedGraph og = degeneracy_order(g);
  SubsetDictR r = SubsetDictR::build(og);
  long long singletons = 0;
  for (int u = 0; u < g.vertex_count(); ++u) singletons += r.query({u});
  REQUIRE(singletons == g.edge_count());

  std::mt19937_64 rng(3);
  for (int q = 0; q < 100; ++q) {
    int a = static_cast<int>(rng() % 40), b = static_cast<int>(rng() % 40);
    if (a == b) continue;
    REQUIRE(r.query({a, b}) <= r.query({a}));
  }
}

TEST_CASE("Q on K_{2,3} anchored at the 2-side") {
  Graph g = testutil::complete_bipartite(2, 3);
  OrderedGraph og = degeneracy_order(g);
  SubsetDictR r = SubsetDictR::build(og);
  SubsetDictQ q = SubsetDictQ::build(og, r, {0, 1});
  REQUIRE(q.query({0, 1}) == 3);
  REQUIRE(q.query({}) == 2);
  REQUIRE(q.query({0}) == 0);
  REQUIRE(q.query({1}) == 0);
  REQUIRE_THROWS_AS(q.query({2}), std::invalid_argument);
}

TEST_CASE("Q on K_{2,4}") {
  Graph g = testutil::complete_bipartite(2, 4);
  OrderedGraph og = degeneracy_order(g);
  SubsetDictR r = SubsetDictR::build(og);
  SubsetDictQ q = SubsetDictQ::build(og, r, {0, 1});
  REQUIRE(q.query({0, 1}) == 4);
}

TEST_CASE("Q fast build equals the reference build") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 500; ++trial) {
    GenSpec spec;
    spec.n = 6 + static_cast<int>(rng() % 25);
    spec.d = 1 + static_cast<int>(rng() % 4);
    spec.edge_keep = 0.4 + 0.6 * (rng() % 100) / 100.0;
    spec.seed = rng();
    Graph g = gen_random_degenerate(spec);
    OrderedGraph og = degeneracy_order(g);
    SubsetDictR r = SubsetDictR::build(og);

    int k = 1 + static_cast<int>(rng() % 8);
    k = std::min(k, g.vertex_count());
    std::vector<int> anchor;
    while (static_cast<int>(anchor.size()) < k) {
      int v = static_cast<int>(rng() % g.vertex_count());
      if (std::find(anchor.begin(), anchor.end(), v) == anchor.end())
        anchor.push_back(v);
    }
    SubsetDictQ fast = SubsetDictQ::build(og, r, anchor);
    SubsetDictQ ref = SubsetDictQ::build_reference(g, anchor);
    REQUIRE(fast.table() == ref.table());

    long long total = 0;
    for (long long c : fast.table()) {
      REQUIRE(c >= 0);
      total += c;
    }
    REQUIRE(total == g.vertex_count());
  }
}
