#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lcq/counting.hpp"
#include "lcq/families.hpp"
#include "lcq/graph.hpp"

namespace lcq {

/// One QASST symmetry class member pattern of the K_{n_1..n_k} or clique-star
/// orbit: the behavior of Q_0 (case 1: complete; 2(j): pointed at Q_j with
/// Q_j star-center; 3(j): pointed at Q_j with Q_j complete) and the set I of
/// star-spoke outer quotients.
struct SymmetryCase {
  OrbitTag tag = OrbitTag::KPartite;
  int case_id = 1;
  /// Pointer index for cases 2 and 3 (1-based); 0 for case 1.
  int j = 0;
  /// Star-spoke quotient indices, ascending, 1-based.
  std::vector<int> I;
  /// centers[i - 1]: 1-based leaf index within block i of the star center of
  /// Q_i for i in I; 0 (or an empty vector) selects the first leaf.
  std::vector<int> centers;
  bool operator==(const SymmetryCase& other) const = default;
};

/// Throws InvalidSpecError unless the parity of |I|, the pointer index and
/// the centers are consistent with the case and orbit.
void validate_case(const SymmetryCase& c, const std::vector<int>& n_list);

/// The star-shaped quotient assignment of a case.
Assignment case_assignment(const SymmetryCase& c, const std::vector<int>& n_list);
/// Labeled graph of the case (blocks on consecutive labels).
Graph realize(const SymmetryCase& c, const std::vector<int>& n_list);

struct CasePattern {
  SymmetryCase pattern;  // centers left at their defaults
  /// Number of distinct graphs: prod_{i in I} n_i (choices of star centers).
  BigInt multiplicity;
};

/// Every (case, j, I) of the orbit in order (case id, j, I lexicographic).
/// The multiplicities sum to the orbit size.
std::vector<CasePattern> enumerate_cases(OrbitTag tag, const std::vector<int>& n_list);
/// Every member of the orbit, realized case by case with all center choices.
std::vector<Graph> enumerate_members(OrbitTag tag, const std::vector<int>& n_list);

/// Base graph of the orbit: K_{n_1..n_k}, or CS^r for the clique-star.
Graph orbit_base(OrbitTag tag, const std::vector<int>& n_list, int r = 1);

/// Explicit LC sequence taking the base graph (clique-center r for the
/// clique-star) to realize(c) exactly. Star centers are chosen by the
/// complemented leaves, so the centers of `c` are honored.
LcSequence synthesize_transformation(const SymmetryCase& c, const std::vector<int>& n_list, int r = 1);

/// Reads the case back from a graph's decomposition; std::nullopt if the
/// graph does not have the star-shaped tree with the given blocks.
std::optional<SymmetryCase> classify_member(const std::vector<int>& n_list, const Graph& g);

enum class VertexRole { CenterOfSpokeStar, SpokeOfSpokeStar, NodeOfCenterStar, NodeOfComplete };
std::string vertex_role_name(VertexRole role);

struct RoleAt {
  VertexRole role;
  /// Outer quotient (block) index holding the vertex, 1-based.
  int i;
};
/// Role of vertex v in the realized case.
RoleAt vertex_role(const SymmetryCase& c, const std::vector<int>& n_list, Vertex v);

struct CaseRef {
  int case_id = 1;
  int j = 0;
  bool operator==(const CaseRef& other) const = default;
};

/// Case reached by one local complement at a vertex with the given role in
/// quotient i; identical for both orbits. Throws InvalidSpecError for a role
/// that cannot occur in the case.
CaseRef closure_step(const SymmetryCase& c, VertexRole role, int i);

std::string case_label(int case_id, int j);

// --------------------------------------------------------- K_{n,m} rows ---

/// Replacement of the two quotients of K_{n,m} by complete or star quotients.
struct BipartiteRow {
  LeafKind q1 = LeafKind::StarCenter;
  LeafKind q2 = LeafKind::StarCenter;
  bool valid = false;
  /// Distinct graphs in the row: n per star-spoke Q_1 choice, m per Q_2.
  std::int64_t multiplicity = 0;
};

/// All nine kind pairs; the three invalid joins carry multiplicity 0.
std::vector<BipartiteRow> bipartite_rows(int n, int m);
/// Graph of a row with star centers at leaf c1 of block 1 and c2 of block 2
/// (1-based within the block, only used for star-spoke quotients).
Graph realize_bipartite(int n, int m, LeafKind q1, LeafKind q2, int c1 = 1, int c2 = 1);
/// Every member of O(K_{n,m}) by row.
std::vector<Graph> enumerate_bipartite_members(int n, int m);

}  // namespace lcq
