#pragma once

#include <string>
#include <vector>

#include "lcq/graph.hpp"

namespace lcq {

enum class Family {
  Complete,              // K_n
  Star,                  // S_n: center 1, spokes 2..n+1
  Path,                  // P_n: 1-2-...-n
  Cycle,                 // C_n: 1-2-...-n-1
  CompleteBipartite,     // K_{n,m}: blocks {1..n}, {n+1..n+m}
  CompleteMultipartite,  // K_{n1..nk}: consecutive blocks
  CliqueStar,            // CS^r_{n1..nk}: cliques, block r joined to all others
  Repeater,              // R_n: core K_n with one leaf per core vertex
  MultiLeafRepeater,     // MR_{n1..nk}: core K_k, n_i - 1 leaves on core vertex i
};

/// Which LC orbit a multi-partite-style graph lives in.
enum class OrbitTag { KPartite, CliqueStar };

struct FamilySpec {
  Family family = Family::Complete;
  std::vector<int> params;
  /// Clique-center block for CliqueStar (1-based); ignored otherwise.
  int center = 1;
};

/// Builds the family member. Multi-block families number vertices block by
/// block: block i occupies the next n_i consecutive labels. For the repeater
/// families the first label of block i is the core vertex.
Graph build(const FamilySpec& spec);

Graph complete_graph(int n);
Graph star_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_bipartite(int n, int m);
Graph complete_multipartite(const std::vector<int>& sizes);
Graph clique_star(const std::vector<int>& sizes, int r);
Graph repeater(int n);
Graph multi_leaf_repeater(const std::vector<int>& sizes);

/// Vertex labels of block i (1-based) under the block-by-block convention.
std::vector<Vertex> block_vertices(const std::vector<int>& sizes, int i);
/// Block index (1-based) containing vertex v.
int block_of(const std::vector<int>& sizes, Vertex v);

/// Orbit hosting MR_{n1..nk}: KPartite for even k, CliqueStar for odd k.
OrbitTag mlr_orbit_home(int k);

Family parse_family(const std::string& name);
std::string family_name(Family f);
std::string orbit_tag_name(OrbitTag t);

}  // namespace lcq
