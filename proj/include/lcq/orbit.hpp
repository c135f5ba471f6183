#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lcq/graph.hpp"

namespace lcq {

inline constexpr std::size_t kDefaultOrbitBudget = 1'000'000;

/// Breadth-first closure of a graph under all primitive local complements.
struct Orbit {
  static constexpr std::size_t kNoParent = std::numeric_limits<std::size_t>::max();

  Graph base;
  /// Members in discovery order (vertices ascending, FIFO frontier); members[0] is base.
  std::vector<Graph> members;
  std::unordered_map<std::string, std::size_t> index;
  /// parent[i] = (predecessor index, vertex) with members[i] = c_vertex(members[pred]).
  /// Empty when the orbit was enumerated without parent tracking.
  std::vector<std::pair<std::size_t, Vertex>> parent;

  std::size_t size() const { return members.size(); }
  bool contains(const Graph& g) const;
  /// Index of g in members, or kNoParent when absent.
  std::size_t find(const Graph& g) const;
  /// Sequence taking base to members[i]; requires parent tracking.
  LcSequence path_to(std::size_t i) const;
};

/// Enumerates O(g). Throws BudgetExceededError (with the partial count) when
/// the member count would exceed `limit`.
Orbit enumerate_orbit(const Graph& g, std::size_t limit = kDefaultOrbitBudget,
                      bool keep_parents = true);

enum class Equivalence { Equivalent, NotEquivalent, Indeterminate };

/// Orbit-membership decision. Budget exhaustion yields Indeterminate rather
/// than a false negative.
Equivalence are_lc_equivalent(const Graph& g, const Graph& h,
                              std::size_t limit = kDefaultOrbitBudget);

/// Minimal-depth witness f with apply_sequence(g, f) == h.
LcSequence transformation_between(const Graph& g, const Graph& h,
                                  std::size_t limit = kDefaultOrbitBudget);

struct IsoClass {
  Graph representative;
  std::size_t multiplicity = 0;
};

/// Partition of the orbit members into isomorphism classes, in order of
/// first appearance.
std::vector<IsoClass> orbit_iso_classes(const Orbit& o);

struct MemberMetric {
  Graph graph;
  int value = 0;
};

/// Member with the fewest edges; ties go to the smallest canonical key.
MemberMetric min_edge_member(const Orbit& o);
/// Member with the smallest maximum degree; ties go to the smallest canonical key.
MemberMetric min_max_degree_member(const Orbit& o);

/// Members sorted by canonical key (the order used for listings).
std::vector<Graph> sorted_members(const Orbit& o);

}  // namespace lcq
