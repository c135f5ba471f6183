#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lcq/error.hpp"

namespace lcq {

/// Vertex labels are 1-based: a graph on n vertices uses {1, ..., n}.
using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;
/// Neighborhood bitset: bit (u - 1) is set when u is a neighbor.
using VertexMask = std::uint64_t;

inline constexpr VertexMask bit_of(Vertex v) { return VertexMask{1} << (v - 1); }

/// Labeled simple undirected graph on {1..n}, stored as adjacency bitsets.
///
/// The bitset layout makes a local complement a handful of word XORs; the
/// price is a hard ceiling of 64 vertices, which is far above anything an
/// exhaustive orbit enumeration can reach anyway.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<Edge>& edges);

  int n() const { return n_; }
  bool has_edge(Vertex u, Vertex v) const;
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  void toggle_edge(Vertex u, Vertex v);

  /// Neighborhood bitset of v.
  VertexMask row(Vertex v) const { return adj_[v - 1]; }
  /// Bitset with one bit per vertex of the graph.
  VertexMask all_mask() const;

  /// Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  bool operator==(const Graph& other) const = default;

  /// Replaces the neighborhood rows wholesale; used by hot loops that
  /// manipulate bitsets directly. Rows must be symmetric and loop-free.
  static Graph from_rows(std::vector<VertexMask> rows);
  const std::vector<VertexMask>& rows() const { return adj_; }

 private:
  void check_vertex(Vertex v) const;
  void check_pair(Vertex u, Vertex v) const;

  int n_ = 0;
  std::vector<VertexMask> adj_;
};

/// Ordered list of primitive local complements, applied left to right.
struct LcSequence {
  std::vector<Vertex> steps;

  /// The group inverse: the same steps in reverse order.
  LcSequence inverse() const;
  /// This sequence followed by `next`.
  LcSequence then(const LcSequence& next) const;
  bool operator==(const LcSequence& other) const = default;
};

/// c_v(g): toggles every edge between two neighbors of v.
Graph local_complement(const Graph& g, Vertex v);
/// Applies the steps of f from first to last.
Graph apply_sequence(const Graph& g, const LcSequence& f);
/// ep(i, j) = c_i c_j c_i for an existing edge (i, j); refuses non-edges.
Graph edge_pivot(const Graph& g, Vertex i, Vertex j);

/// Deterministic byte key; equal exactly when the labeled edge sets match.
std::string canonical_key(const Graph& g);

VertexMask neighborhood(const Graph& g, Vertex v);
int degree(const Graph& g, Vertex v);
int max_degree(const Graph& g);
int edge_count(const Graph& g);
bool is_connected(const Graph& g);
/// Bitsets of the connected components, ordered by smallest vertex.
std::vector<VertexMask> connected_components(const Graph& g);

/// G[S] relabeled to 1..|S| in ascending order of the kept labels.
struct InducedSubgraph {
  Graph graph;
  /// original_label[i - 1] is the label in the parent graph of new vertex i.
  std::vector<Vertex> original_label;
};
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<Vertex>& keep);
InducedSubgraph induced_subgraph(const Graph& g, VertexMask keep);

/// Graphs above this size are rejected by is_isomorphic.
inline constexpr int kIsomorphismLimit = 16;

/// Returns a witness bijection (map[v - 1] is the image of v) when g and h are
/// isomorphic, std::nullopt otherwise. Throws SizeLimitError above 16 vertices.
std::optional<std::vector<Vertex>> is_isomorphic(const Graph& g, const Graph& h);

/// Iterates the set bits of a mask as 1-based vertex labels.
template <typename Fn>
void for_each_vertex(VertexMask mask, Fn&& fn) {
  while (mask != 0) {
    const int v = __builtin_ctzll(mask) + 1;
    mask &= mask - 1;
    fn(v);
  }
}

inline int popcount(VertexMask mask) { return __builtin_popcountll(mask); }

std::vector<Vertex> mask_to_vertices(VertexMask mask);
VertexMask vertices_to_mask(const std::vector<Vertex>& vs);

}  // namespace lcq
