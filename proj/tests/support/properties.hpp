#pragma once

// Seeded randomized property checks. Each returns a Report so the same code
// backs both the doctest property suite and the acceptance driver.

#include <array>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lcq/graph.hpp"
#include "lcq/orbit.hpp"
#include "lcq/qasst.hpp"
#include "lcq/qasst_ops.hpp"
#include "oracle.hpp"

namespace props {

struct Report {
  explicit Report(std::string title) : name(std::move(title)) {}

  std::string name;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0 && instances > 0; }
  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
};

inline std::string show(const lcq::Graph& g) {
  std::ostringstream out;
  out << "n=" << g.n() << " {";
  for (const auto& [u, v] : g.edges()) out << u << "-" << v << " ";
  out << "}";
  return out.str();
}

/// Quotient membership (leaf labels and split partners) without the
/// quotient graphs: the "same splits" shape of a decomposition.
inline std::vector<std::vector<lcq::QNode>> shape(const lcq::Qasst& t) {
  std::vector<std::vector<lcq::QNode>> out;
  for (const lcq::Quotient& q : t.quotients) out.push_back(q.nodes);
  return out;
}

inline std::vector<std::pair<lcq::VertexMask, lcq::VertexMask>> split_set(const lcq::Graph& g) {
  std::vector<std::pair<lcq::VertexMask, lcq::VertexMask>> out;
  for (const lcq::Split& s : lcq::all_splits(g)) out.emplace_back(s.side_a, s.side_b);
  std::sort(out.begin(), out.end());
  return out;
}

/// c_v is an involution and preserves connectivity, the vertex count and
/// the neighborhood of v.
inline Report lc_self_inverse(std::uint64_t seed, std::size_t count) {
  Report r{"LC self-inverse and connectivity"};
  oracle::Rng rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const int n = oracle::uniform(rng, 1, 10);
    const lcq::Graph g = i % 2 ? oracle::random_connected_graph(rng, n) : oracle::random_graph(rng, n);
    const lcq::Vertex v = oracle::uniform(rng, 1, n);
    const lcq::Graph h = lcq::local_complement(g, v);
    ++r.instances;
    if (lcq::local_complement(h, v) != g) r.fail("c_v twice differs on " + show(g));
    if (lcq::is_connected(h) != lcq::is_connected(g)) r.fail("connectivity changed on " + show(g));
    if (h.n() != g.n() || h.row(v) != g.row(v)) r.fail("N(v) or order changed on " + show(g));
    if (oracle::to_graph(oracle::lc(oracle::from_graph(g), v - 1)) != h) r.fail("disagrees with definition on " + show(g));
  }
  return r;
}

/// Locally equivalent graphs have the same splits and the same split tree.
inline Report sst_invariance(std::uint64_t seed, std::size_t count) {
  Report r{"split tree invariant under LC sequences"};
  oracle::Rng rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const int n = oracle::uniform(rng, 2, 10);
    const lcq::Graph g = i % 2 ? lcq::random_dh(n, rng()).graph : oracle::random_connected_graph(rng, n);
    const lcq::Graph h = lcq::apply_sequence(g, oracle::random_sequence(rng, n, 6));
    ++r.instances;
    if (split_set(g) != split_set(h)) r.fail("split sets differ for " + show(g));
    if (shape(lcq::compute_qasst(g)) != shape(lcq::compute_qasst(h))) r.fail("tree shapes differ for " + show(g));
  }
  return r;
}

/// reconstruct(compute_qasst(g)) == g, with a valid tree whose joins are
/// all valid; both decomposition paths agree.
inline Report qasst_round_trip(std::uint64_t seed, std::size_t count) {
  Report r{"QASST round-trip"};
  oracle::Rng rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const int n = oracle::uniform(rng, 1, 12);
    const lcq::Graph g = i % 2 ? lcq::random_dh(n, rng()).graph : oracle::random_connected_graph(rng, n);
    ++r.instances;
    const lcq::Qasst t = lcq::compute_qasst(g);
    lcq::validate(t);
    if (lcq::reconstruct(t) != g) r.fail("reconstruct differs for " + show(g));
    if (n <= 10 && lcq::compute_qasst(g, lcq::DecompositionMethod::BruteForce) != t)
      r.fail("auto and brute-force disagree for " + show(g));
    for (const auto& [a, b] : t.tree_edges())
      if (!lcq::join_validity(lcq::kind_toward(t, a, b), lcq::kind_toward(t, b, a)))
        r.fail("invalid join in decomposition of " + show(g));
  }
  return r;
}

/// lc_propagate(t, v) equals the decomposition of c_v(g), and its
/// reconstruction equals c_v(g).
inline Report propagate_oracle(std::uint64_t seed, std::size_t count) {
  Report r{"lc_propagate matches recomputation"};
  oracle::Rng rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const int n = oracle::uniform(rng, 2, 12);
    const lcq::Graph g = i % 2 ? lcq::random_dh(n, rng()).graph : oracle::random_connected_graph(rng, n);
    const lcq::Vertex v = oracle::uniform(rng, 1, n);
    const lcq::Qasst t = lcq::lc_propagate(lcq::compute_qasst(g), v);
    const lcq::Graph h = lcq::local_complement(g, v);
    ++r.instances;
    if (lcq::reconstruct(t) != h) r.fail("reconstruction differs for v=" + std::to_string(v) + " on " + show(g));
    if (t != lcq::compute_qasst(h)) r.fail("tree differs for v=" + std::to_string(v) + " on " + show(g));
  }
  return r;
}

/// induced_qasst(t, S) equals the decomposition of G[S] for connected G[S].
inline Report induced_oracle(std::uint64_t seed, std::size_t count) {
  Report r{"induced_qasst matches recomputation"};
  oracle::Rng rng(seed);
  while (r.instances < count) {
    const int n = oracle::uniform(rng, 2, 12);
    const bool dh = r.instances % 2 == 0;
    const lcq::Graph g = dh ? lcq::random_dh(n, rng()).graph : oracle::random_connected_graph(rng, n);
    const auto keep = oracle::random_subset(rng, n, oracle::uniform(rng, 1, n));
    const lcq::InducedSubgraph sub = lcq::induced_subgraph(g, keep);
    if (!lcq::is_connected(sub.graph)) continue;
    ++r.instances;
    const lcq::Qasst t = lcq::induced_qasst(lcq::compute_qasst(g), keep);
    if (t != lcq::compute_qasst(sub.graph)) r.fail("induced tree differs on " + show(g));
    if (dh && !lcq::is_distance_hereditary(sub.graph)) r.fail("induced subgraph of DH graph not DH: " + show(g));
  }
  return r;
}

struct ExtensionReport {
  Report report{"one-vertex extensions commute with reconstruction"};
  std::array<std::size_t, lcq::kExtensionSubcaseCount> hits{};
};

/// Random extensions on DH and non-DH bases until every subcase has been hit
/// at least `per_subcase` times.
inline ExtensionReport extension_subcases(std::uint64_t seed, std::size_t per_subcase) {
  ExtensionReport out;
  oracle::Rng rng(seed);
  auto done = [&] {
    for (std::size_t h : out.hits)
      if (h < per_subcase) return false;
    return true;
  };
  constexpr std::size_t kCap = 200'000;
  while (!done() && out.report.instances < kCap) {
    const int n = oracle::uniform(rng, 1, 10);
    const int flavor = oracle::uniform(rng, 0, 2);
    // Flavor 0: random DH; 1: arbitrary connected (prime quotients);
    // 2: DH built mostly from true twins (large complete quotients).
    lcq::Graph g;
    if (flavor == 0) {
      g = lcq::random_dh(n, rng()).graph;
    } else if (flavor == 1) {
      g = oracle::random_connected_graph(rng, std::max(n, 5));
    } else {
      g = lcq::Graph(1);
      for (int p = 2; p <= n; ++p) {
        const int roll = oracle::uniform(rng, 0, 5);
        auto kind = roll < 4 ? lcq::ExtensionKind::TrueTwin
                             : (roll == 4 ? lcq::ExtensionKind::Pendant : lcq::ExtensionKind::FalseTwin);
        if (p == 2 && kind == lcq::ExtensionKind::FalseTwin) kind = lcq::ExtensionKind::Pendant;
        g = lcq::extend_graph(g, {kind, oracle::uniform(rng, 1, p - 1)});
      }
    }
    lcq::Extension e{static_cast<lcq::ExtensionKind>(oracle::uniform(rng, 0, 2)), oracle::uniform(rng, 1, g.n())};
    // A false twin of a lone vertex would be disconnected from it.
    if (g.n() == 1 && e.kind == lcq::ExtensionKind::FalseTwin) e.kind = lcq::ExtensionKind::Pendant;
    lcq::ExtensionSubcase subcase{};
    const lcq::Qasst t = lcq::extend(lcq::compute_qasst(g), e, g.n() + 1, &subcase);
    const lcq::Graph h = lcq::extend_graph(g, e);
    ++out.report.instances;
    ++out.hits[static_cast<std::size_t>(subcase)];
    if (lcq::reconstruct(t) != h) out.report.fail(lcq::subcase_name(subcase) + ": reconstruction differs on " + show(g));
    if (t != lcq::compute_qasst(h)) out.report.fail(lcq::subcase_name(subcase) + ": tree differs on " + show(g));
  }
  if (!done()) out.report.fail("some subcase was hit fewer than the required number of times");
  return out;
}

/// Every tree in the orbit of a tree is isomorphic to it.
inline Report tree_orbits(std::uint64_t seed, std::size_t count) {
  Report r{"locally equivalent trees are isomorphic"};
  oracle::Rng rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const int n = oracle::uniform(rng, 2, 9);
    const lcq::Graph t = oracle::random_tree(rng, n);
    ++r.instances;
    const lcq::Orbit o = lcq::enumerate_orbit(t, lcq::kDefaultOrbitBudget, false);
    for (const lcq::Graph& m : o.members)
      if (lcq::edge_count(m) == n - 1 && !lcq::is_isomorphic(m, t)) {
        r.fail("non-isomorphic tree in orbit of " + show(t));
        break;
      }
  }
  return r;
}

/// Quotients of locally equivalent graphs, matched through lc_propagate
/// along a random witness sequence, are locally equivalent.
inline Report quotient_equivalence(std::uint64_t seed, std::size_t count) {
  Report r{"corresponding quotients are locally equivalent"};
  oracle::Rng rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const int n = oracle::uniform(rng, 3, 10);
    const lcq::Graph g = i % 2 ? lcq::random_dh(n, rng()).graph : oracle::random_connected_graph(rng, n);
    const lcq::Qasst t = lcq::compute_qasst(g);
    lcq::Qasst u = t;
    for (lcq::Vertex v : oracle::random_sequence(rng, n, 5).steps) u = lcq::lc_propagate(u, v);
    ++r.instances;
    if (shape(u) != shape(t)) {
      r.fail("shape changed along sequence on " + show(g));
      continue;
    }
    for (std::size_t q = 0; q < t.quotients.size(); ++q)
      if (lcq::are_lc_equivalent(t.quotients[q].graph, u.quotients[q].graph) != lcq::Equivalence::Equivalent)
        r.fail("quotient " + std::to_string(q) + " not equivalent on " + show(g));
  }
  return r;
}

}  // namespace props
