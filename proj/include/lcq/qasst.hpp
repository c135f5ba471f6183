#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lcq/graph.hpp"

namespace lcq {

/// Bipartition of the vertex set.
struct Split {
  VertexMask side_a = 0;
  VertexMask side_b = 0;

  bool trivial() const { return popcount(side_a) == 1 || popcount(side_b) == 1; }
};

/// True when the edges crossing the bipartition form a complete bipartite
/// subgraph. Throws InvalidSpecError if `s` is not a bipartition of V(g).
bool is_split(const Graph& g, const Split& s);
/// True when `s` is a split that no other split of g crosses.
bool is_strong(const Graph& g, const Split& s);
/// All splits of g (each reported once, with vertex 1 on side_a).
std::vector<Split> all_splits(const Graph& g);

/// A node of a quotient graph: either a leaf-node carrying an original vertex
/// label, or a split-node s_i^j (i is the owning quotient, j = partner).
struct QNode {
  bool is_split = false;
  Vertex leaf = 0;
  int partner = -1;

  static QNode make_leaf(Vertex v) { return QNode{false, v, -1}; }
  static QNode make_split(int partner) { return QNode{true, 0, partner}; }
  bool operator==(const QNode& other) const = default;
};

/// Quotient graph: local vertex t (1-based) of `graph` is nodes[t - 1].
struct Quotient {
  std::vector<QNode> nodes;
  Graph graph;

  int size() const { return static_cast<int>(nodes.size()); }
  /// Local index of the leaf-node for v, or 0.
  int find_leaf(Vertex v) const;
  /// Local index of the split-node pointing at quotient `partner`, or 0.
  int find_split(int partner) const;
  std::vector<Vertex> leaves() const;
  bool operator==(const Quotient& other) const = default;
};

/// Quotient-augmented strong split tree: quotients Q_0..Q_k whose paired
/// split-nodes form the tree edges. Quotients are numbered canonically:
/// quotients without leaf-nodes first, then by smallest leaf label.
struct Qasst {
  int n = 0;
  std::vector<Quotient> quotients;

  /// Tree edges as quotient index pairs (i, j), i < j, ascending.
  std::vector<std::pair<int, int>> tree_edges() const;
  /// (quotient index, local node index) of the leaf-node for v.
  std::pair<int, int> locate_leaf(Vertex v) const;
  bool operator==(const Qasst& other) const = default;
};

enum class KindTag {
  Complete,
  StarCenter,  // star whose center is the designated split-node
  StarSpoke,   // star with the designated split-node on a spoke
  Star,        // star, classified without a designated split-node
  Prime,
};

struct QuotientKind {
  KindTag tag = KindTag::Prime;
  /// Local index of the star center for StarSpoke and Star; 0 otherwise.
  int center = 0;
  bool operator==(const QuotientKind& other) const = default;
};

/// Classifies a quotient relative to the split-node at local index `at`, or
/// globally (Complete / Star / Prime) when `at` is empty. One- and two-node
/// quotients are reported as Complete.
QuotientKind classify_quotient(const Quotient& q, std::optional<int> at = std::nullopt);

/// Kind of quotient `i` relative to its split-node toward quotient `j`.
QuotientKind kind_toward(const Qasst& t, int i, int j);

/// Whether two quotients may be joined by a strong split: complete-complete
/// and star-center/star-spoke pairs are the invalid combinations.
bool join_validity(const QuotientKind& a, const QuotientKind& b);

enum class DecompositionMethod {
  /// Strip pendants and twins, decompose the remainder, replay the extensions.
  Auto,
  /// Exhaustive split search on the whole graph (independent reference path).
  BruteForce,
};

/// Canonical split decomposition of a connected graph.
Qasst compute_qasst(const Graph& g, DecompositionMethod method = DecompositionMethod::Auto);

/// Merges every split-node pair back into full connections between the
/// respective neighborhoods. Works for any tree, strong or not.
Graph reconstruct(const Qasst& t);

/// Throws MalformedQasstError if pairing, tree shape or leaf coverage is broken.
void validate(const Qasst& t);

bool is_distance_hereditary(const Graph& g);
/// Literal definition check: every connected induced subgraph preserves distances.
bool dh_definition_oracle(const Graph& g);

// --- structural editing used by the decomposition and dynamic operations ---

/// Merges quotient j into quotient i across their tree edge (indices renumbered).
void merge_quotients(Qasst& t, int i, int j);
/// Splits quotients with nontrivial splits and merges invalid joins until the
/// tree is the canonical decomposition, then renumbers canonically.
void normalize(Qasst& t);
/// Renumbers quotients and orders nodes canonically without changing structure.
void canonicalize(Qasst& t);

/// Exhaustive split search handles quotients up to this many nodes.
inline constexpr int kBruteSplitLimit = 24;

}  // namespace lcq
