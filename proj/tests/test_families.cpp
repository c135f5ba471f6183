#include <algorithm>
#include <functional>
#include <numeric>

#include "doctest.h"
#include "lcq/families.hpp"

using namespace lcq;

namespace {

// Calls fn on every list of k part sizes drawn from [lo, hi].
void for_each_list(int k, int lo, int hi, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> sizes(static_cast<std::size_t>(k), lo);
  while (true) {
    fn(sizes);
    int i = 0;
    while (i < k && sizes[static_cast<std::size_t>(i)] == hi) sizes[static_cast<std::size_t>(i++)] = lo;
    if (i == k) return;
    ++sizes[static_cast<std::size_t>(i)];
  }
}

int choose2(int x) { return x * (x - 1) / 2; }

}  // namespace

TEST_CASE("small family constructions") {
  CHECK(edge_count(complete_graph(5)) == 10);
  CHECK(star_graph(4).n() == 5);
  CHECK(edge_count(star_graph(4)) == 4);
  CHECK(edge_count(path_graph(6)) == 5);
  CHECK(edge_count(cycle_graph(6)) == 6);
  CHECK(cycle_graph(5).has_edge(5, 1));
  CHECK_THROWS_AS(cycle_graph(2), InvalidSpecError);

  const Graph r3 = repeater(3);
  CHECK(r3.n() == 6);
  CHECK(edge_count(r3) == 3 * 2 / 2 + 3);

  // CS^1_{2,2,2}: three internal edges plus 2*2 + 2*2 crossing edges.
  CHECK(edge_count(clique_star({2, 2, 2}, 1)) == 11);
  const Graph k222 = complete_multipartite({2, 2, 2});
  for (Vertex v = 1; v <= 6; ++v) CHECK(degree(k222, v) == 4);
}

TEST_CASE("build dispatches on the family") {
  CHECK(build({Family::CompleteBipartite, {2, 3}}) == complete_bipartite(2, 3));
  CHECK(build({Family::CliqueStar, {2, 3, 4}, 2}) == clique_star({2, 3, 4}, 2));
  CHECK(build({Family::MultiLeafRepeater, {2, 3, 2}}) == multi_leaf_repeater({2, 3, 2}));
  CHECK_THROWS_AS(build({Family::CompleteBipartite, {2}}), InvalidSpecError);
  CHECK_THROWS_AS(build({Family::CliqueStar, {2, 2}, 3}), InvalidSpecError);
  CHECK(parse_family(family_name(Family::Repeater)) == Family::Repeater);
  CHECK_THROWS_AS(parse_family("octahedron"), InvalidSpecError);
}

TEST_CASE("block helpers") {
  const std::vector<int> sizes{2, 3, 1};
  CHECK(block_vertices(sizes, 2) == std::vector<Vertex>{3, 4, 5});
  CHECK(block_of(sizes, 6) == 3);
  CHECK(block_of(sizes, 1) == 1);
}

TEST_CASE("multi-block edge counts and degrees match closed forms") {
  for (int k = 2; k <= 6; ++k) {
    for_each_list(k, 1, 5, [&](const std::vector<int>& n) {
      const int total = std::accumulate(n.begin(), n.end(), 0);
      int internal = 0;
      for (int x : n) internal += choose2(x);

      const Graph kp = complete_multipartite(n);
      REQUIRE(edge_count(kp) == choose2(total) - internal);
      for (int i = 1; i <= k; ++i)
        for (Vertex v : block_vertices(n, i)) REQUIRE(degree(kp, v) == total - n[static_cast<std::size_t>(i - 1)]);

      if (k < 3 || *std::min_element(n.begin(), n.end()) < 2) return;
      const int r = 1 + (total % k);
      const int nr = n[static_cast<std::size_t>(r - 1)];
      const Graph cs = clique_star(n, r);
      REQUIRE(edge_count(cs) == internal + nr * (total - nr));
      for (int i = 1; i <= k; ++i) {
        const int ni = n[static_cast<std::size_t>(i - 1)];
        const int expected = i == r ? total - 1 : ni - 1 + nr;
        for (Vertex v : block_vertices(n, i)) REQUIRE(degree(cs, v) == expected);
      }

      // MR: core K_k plus n_i - 1 leaves on core vertex i.
      const Graph mr = multi_leaf_repeater(n);
      REQUIRE(edge_count(mr) == choose2(k) + total - k);
      for (int i = 1; i <= k; ++i) {
        const auto block = block_vertices(n, i);
        REQUIRE(degree(mr, block.front()) == k - 1 + n[static_cast<std::size_t>(i - 1)] - 1);
        for (std::size_t t = 1; t < block.size(); ++t) REQUIRE(degree(mr, block[t]) == 1);
      }
    });
  }
}

TEST_CASE("repeater is the all-twos multi-leaf repeater") {
  for (int k = 3; k <= 8; ++k) CHECK(multi_leaf_repeater(std::vector<int>(static_cast<std::size_t>(k), 2)) == repeater(k));
}

TEST_CASE("orbit home of the multi-leaf repeater follows parity") {
  CHECK(mlr_orbit_home(4) == OrbitTag::KPartite);
  CHECK(mlr_orbit_home(3) == OrbitTag::CliqueStar);
  CHECK(mlr_orbit_home(5) == OrbitTag::CliqueStar);
}
