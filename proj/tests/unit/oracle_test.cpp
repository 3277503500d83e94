#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "locount/oracle.hpp"

using namespace locount;

TEST_CASE("strong oracle on tiny fixed hosts") {
  Pattern k12 = testutil::biclique_pattern(1, 2);

  Graph edge(2);
  edge.add_edge(0, 1);
  REQUIRE(oracle_count_strong(edge, k12) == 0);

  REQUIRE(oracle_count_strong(testutil::path(3), k12) == 2);

  // centre can be any triangle vertex, leaves ordered: 3 * 2. The leaves see
  // each other, but T-T edges are unconstrained.
  REQUIRE(oracle_count_strong(testutil::clique(3), k12) == 6);
}

TEST_CASE("weak oracle on tiny fixed hosts") {
  Pattern k12 = testutil::biclique_pattern(1, 2);
  REQUIRE(oracle_count_weak(testutil::clique(3), k12) == 6);
  REQUIRE(oracle_count_weak(testutil::path(3), k12) == 2);
}

TEST_CASE("oracle totals on the biclique fixture") {
  Pattern k23 = testutil::biclique_pattern(2, 3);
  Graph k24 = testutil::complete_bipartite(2, 4);
  REQUIRE(oracle_count_strong(k24, k23) == 48);
  REQUIRE(oracle_count_weak(k24, k23) == 48);

  // restricting the S-image to the left pair keeps everything
  std::vector<int> left{0, 1};
  REQUIRE(oracle_count_strong(k24, k23, left) == 48);
  // an S-image inside the independent right side admits nothing
  std::vector<int> right{2, 3};
  REQUIRE(oracle_count_strong(k24, k23, right) == 0);
}

TEST_CASE("clique oracle") {
  REQUIRE(oracle_count_cliques(testutil::clique(3), 3) == 1);
  REQUIRE(oracle_count_cliques(testutil::clique(4), 3) == 4);
  REQUIRE(oracle_count_cliques(testutil::cycle(5), 3) == 0);
  REQUIRE(oracle_count_cliques(testutil::clique(6), 4) == 15);
}

TEST_CASE("automorphism oracle") {
  Pattern tri = testutil::biclique_pattern(1, 2);
  Graph triangle = testutil::clique(3);
  // labelled automorphisms ignore the S/T split unless asked
  Pattern k23 = testutil::biclique_pattern(2, 3);
  REQUIRE(oracle_automorphisms(k23) == 12);
  REQUIRE(oracle_automorphisms(k23, true) == 12);

  Pattern p3 = validate_pattern(testutil::path(3), {1}, {0, 2});
  REQUIRE(oracle_automorphisms(p3) == 2);
  (void)tri;
  (void)triangle;
}

TEST_CASE("locatability oracle on the standard biclique") {
  Pattern k23 = testutil::biclique_pattern(2, 3);
  auto c2 = oracle_locatability(k23, 2);
  REQUIRE(c2.has_value());
  REQUIRE(*c2 == 1);
  REQUIRE_FALSE(oracle_locatability(k23, 1).has_value());
}
