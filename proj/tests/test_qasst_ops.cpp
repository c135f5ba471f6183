#include <numeric>
#include <random>

#include "doctest.h"
#include "lcq/families.hpp"
#include "lcq/qasst_ops.hpp"
#include "support/oracle.hpp"
#include "support/properties.hpp"

using namespace lcq;

TEST_CASE("local complements are transmitted across split-node pairs") {
  const Qasst t = compute_qasst(complete_multipartite({2, 2, 2}));
  REQUIRE(t.quotients.size() == 4);
  const Qasst u = lc_propagate(t, 1);
  REQUIRE(props::shape(u) == props::shape(t));

  const auto [home, local] = t.locate_leaf(1);
  CHECK(u.quotients[home].graph == local_complement(t.quotients[home].graph, local));
  // Q_0 is complemented at its split-node toward the home quotient, every
  // other outer quotient at its split-node toward Q_0.
  CHECK(u.quotients[0].graph == local_complement(t.quotients[0].graph, t.quotients[0].find_split(home)));
  for (int i = 1; i < 4; ++i) {
    if (i == home) continue;
    CHECK(u.quotients[i].graph == local_complement(t.quotients[i].graph, t.quotients[i].find_split(0)));
  }
  CHECK(reconstruct(u) == local_complement(complete_multipartite({2, 2, 2}), 1));
}

TEST_CASE("propagation stays local when no split-node is adjacent") {
  std::mt19937_64 rng(61);
  int local_only = 0;
  for (int i = 0; i < 300; ++i) {
    const int n = oracle::uniform(rng, 3, 10);
    const Qasst t = compute_qasst(random_dh(n, rng()).graph);
    const Vertex v = oracle::uniform(rng, 1, n);
    const auto [home, local] = t.locate_leaf(v);
    const Quotient& q = t.quotients[home];
    bool touches_split = false;
    for_each_vertex(q.graph.row(local), [&](Vertex w) { touches_split |= q.nodes[w - 1].is_split; });
    if (touches_split) continue;
    ++local_only;
    const Qasst u = lc_propagate(t, v);
    for (std::size_t j = 0; j < t.quotients.size(); ++j)
      if (static_cast<int>(j) != home) CHECK(u.quotients[j] == t.quotients[j]);
  }
  CHECK(local_only > 20);
}

TEST_CASE("induced decompositions") {
  const Graph k222 = complete_multipartite({2, 2, 2});
  const Qasst t = compute_qasst(k222);
  CHECK(induced_qasst(t, {1, 2, 3, 4, 5, 6}) == t);

  // Dropping block 1 leaves a quotient with only its split-node; it is
  // pruned and the remaining tree is that of K_{2,2}.
  const Qasst small = induced_qasst(t, {3, 4, 5, 6});
  CHECK(small == compute_qasst(complete_bipartite(2, 2)));
  CHECK(small.quotients.size() == 2);

  CHECK_THROWS_AS(induced_qasst(compute_qasst(path_graph(4)), {1, 4}), NotConnectedError);
  CHECK_THROWS_AS(induced_qasst(t, {1, 7}), InvalidVertexError);
}

TEST_CASE("one-vertex extension worked examples") {
  ExtensionSubcase sub{};
  // Pendant on the center of a star: the star gains a spoke.
  const Qasst star = extend(compute_qasst(star_graph(3)), {ExtensionKind::Pendant, 1}, 5, &sub);
  CHECK(sub == ExtensionSubcase::StarCenterPendant);
  REQUIRE(star.quotients.size() == 1);
  CHECK(reconstruct(star) == star_graph(4));

  // True twin in a complete quotient: one more fully connected vertex.
  const Qasst k5 = extend(compute_qasst(complete_graph(4)), {ExtensionKind::TrueTwin, 2}, 5, &sub);
  CHECK(sub == ExtensionSubcase::CompleteTrueTwin);
  REQUIRE(k5.quotients.size() == 1);
  CHECK(reconstruct(k5) == complete_graph(5));

  // Any extension of a prime quotient splits off a three-node quotient.
  const ExtensionKind kinds[] = {ExtensionKind::Pendant, ExtensionKind::FalseTwin, ExtensionKind::TrueTwin};
  const ExtensionSubcase expected[] = {ExtensionSubcase::PrimePendant, ExtensionSubcase::PrimeFalseTwin,
                                       ExtensionSubcase::PrimeTrueTwin};
  for (int k = 0; k < 3; ++k) {
    const Qasst t = extend(compute_qasst(cycle_graph(5)), {kinds[k], 3}, 6, &sub);
    CHECK(sub == expected[k]);
    REQUIRE(t.quotients.size() == 2);
    const Quotient& fresh = t.quotients[t.locate_leaf(6).first];
    CHECK(fresh.size() == 3);
    CHECK(classify_quotient(fresh).tag == (kinds[k] == ExtensionKind::TrueTwin ? KindTag::Complete : KindTag::Star));
    CHECK(t == compute_qasst(extend_graph(cycle_graph(5), {kinds[k], 3})));
  }
  CHECK_THROWS_AS(extend(compute_qasst(cycle_graph(5)), {ExtensionKind::Pendant, 1}, 7), InvalidVertexError);
  CHECK_THROWS_AS(extend(compute_qasst(cycle_graph(5)), {ExtensionKind::Pendant, 6}, 6), InvalidVertexError);
}

TEST_CASE("extension names") {
  for (ExtensionKind k : {ExtensionKind::Pendant, ExtensionKind::FalseTwin, ExtensionKind::TrueTwin})
    CHECK(parse_extension_kind(extension_kind_name(k)) == k);
  CHECK_THROWS_AS(parse_extension_kind("cousin"), ParseError);
  CHECK(subcase_name(ExtensionSubcase::StarCenterPendant) == "star-center/pendant");
}

TEST_CASE("random distance-hereditary graphs") {
  const DhSample one = random_dh(1, 9);
  CHECK(one.graph.n() == 1);
  CHECK(one.trace.empty());
  CHECK(random_dh(12, 77).graph == random_dh(12, 77).graph);

  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int n = 1 + static_cast<int>(seed % 14);
    const DhSample s = random_dh(n, seed);
    REQUIRE(s.graph.n() == n);
    REQUIRE(static_cast<int>(s.trace.size()) == n - 1);
    CHECK(is_distance_hereditary(s.graph));
    Graph g(1);
    Qasst t = compute_qasst(g);
    for (const Extension& e : s.trace) {
      t = extend(t, e, g.n() + 1);
      g = extend_graph(g, e);
    }
    CHECK(g == s.graph);
    CHECK(t == compute_qasst(s.graph));
  }
}

TEST_CASE("property: lc_propagate matches recomputation") {
  const auto r = props::propagate_oracle(0x1c9, 300);
  CHECK_MESSAGE(r.ok(), r.first_failure);
}

TEST_CASE("property: induced_qasst matches recomputation") {
  const auto r = props::induced_oracle(0x1d7, 300);
  CHECK_MESSAGE(r.ok(), r.first_failure);
}

TEST_CASE("property: every extension subcase commutes with reconstruction") {
  const auto r = props::extension_subcases(0xe47, 50);
  CHECK_MESSAGE(r.report.ok(), r.report.first_failure);
  for (int s = 0; s < kExtensionSubcaseCount; ++s) {
    INFO(subcase_name(static_cast<ExtensionSubcase>(s)));
    CHECK(r.hits[static_cast<std::size_t>(s)] >= 50);
  }
  CHECK(r.report.instances >= 200);
}

TEST_CASE("property: quotients of locally equivalent graphs are locally equivalent") {
  const auto r = props::quotient_equivalence(0x90e, 200);
  CHECK_MESSAGE(r.ok(), r.first_failure);
}
