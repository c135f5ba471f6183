#include "lcq/families.hpp"

#include <numeric>

namespace lcq {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidSpecError(what);
}

void require_blocks(const std::vector<int>& sizes, const char* family) {
  require(sizes.size() >= 3, std::string(family) + " requires k >= 3 blocks");
  for (int s : sizes) require(s >= 2, std::string(family) + " requires every n_i >= 2");
}

int total(const std::vector<int>& sizes) { return std::accumulate(sizes.begin(), sizes.end(), 0); }

}  // namespace

std::vector<Vertex> block_vertices(const std::vector<int>& sizes, int i) {
  require(i >= 1 && i <= static_cast<int>(sizes.size()), "block index out of range");
  int first = 1;
  for (int b = 0; b < i - 1; ++b) first += sizes[b];
  std::vector<Vertex> out(static_cast<std::size_t>(sizes[i - 1]));
  std::iota(out.begin(), out.end(), first);
  return out;
}

int block_of(const std::vector<int>& sizes, Vertex v) {
  int last = 0;
  for (std::size_t b = 0; b < sizes.size(); ++b) {
    last += sizes[b];
    if (v <= last) return static_cast<int>(b) + 1;
  }
  throw InvalidVertexError("vertex " + std::to_string(v) + " beyond the last block");
}

Graph complete_graph(int n) {
  require(n >= 1, "K_n requires n >= 1");
  Graph g(n);
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v) g.add_edge(u, v);
  return g;
}

Graph star_graph(int n) {
  require(n >= 1, "S_n requires n >= 1");
  Graph g(n + 1);
  for (Vertex v = 2; v <= n + 1; ++v) g.add_edge(1, v);
  return g;
}

Graph path_graph(int n) {
  require(n >= 1, "P_n requires n >= 1");
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  require(n >= 3, "C_n requires n >= 3");
  Graph g = path_graph(n);
  g.add_edge(n, 1);
  return g;
}

Graph complete_bipartite(int n, int m) {
  require(n >= 1 && m >= 1, "K_{n,m} requires n, m >= 1");
  Graph g(n + m);
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = n + 1; v <= n + m; ++v) g.add_edge(u, v);
  return g;
}

Graph complete_multipartite(const std::vector<int>& sizes) {
  require(!sizes.empty(), "K_{n1..nk} requires at least one block");
  for (int s : sizes) require(s >= 1, "K_{n1..nk} requires positive block sizes");
  Graph g(total(sizes));
  for (Vertex u = 1; u <= g.n(); ++u)
    for (Vertex v = u + 1; v <= g.n(); ++v)
      if (block_of(sizes, u) != block_of(sizes, v)) g.add_edge(u, v);
  return g;
}

Graph clique_star(const std::vector<int>& sizes, int r) {
  require_blocks(sizes, "clique-star");
  require(r >= 1 && r <= static_cast<int>(sizes.size()), "clique-star center index out of range");
  Graph g(total(sizes));
  for (Vertex u = 1; u <= g.n(); ++u) {
    for (Vertex v = u + 1; v <= g.n(); ++v) {
      const int bu = block_of(sizes, u), bv = block_of(sizes, v);
      if (bu == bv || bu == r || bv == r) g.add_edge(u, v);
    }
  }
  return g;
}

Graph repeater(int n) {
  require(n >= 1, "R_n requires n >= 1");
  // Core vertex of pair i is 2i-1, its leaf is 2i.
  Graph g(2 * n);
  for (int i = 1; i <= n; ++i) {
    g.add_edge(2 * i - 1, 2 * i);
    for (int j = i + 1; j <= n; ++j) g.add_edge(2 * i - 1, 2 * j - 1);
  }
  return g;
}

Graph multi_leaf_repeater(const std::vector<int>& sizes) {
  require_blocks(sizes, "multi-leaf repeater");
  Graph g(total(sizes));
  const int k = static_cast<int>(sizes.size());
  for (int i = 1; i <= k; ++i) {
    const auto block = block_vertices(sizes, i);
    for (std::size_t t = 1; t < block.size(); ++t) g.add_edge(block[0], block[t]);
    for (int j = i + 1; j <= k; ++j) g.add_edge(block[0], block_vertices(sizes, j)[0]);
  }
  return g;
}

Graph build(const FamilySpec& spec) {
  const auto& p = spec.params;
  auto one = [&](const char* name) {
    require(p.size() == 1, std::string(name) + " takes exactly one parameter");
    return p[0];
  };
  switch (spec.family) {
    case Family::Complete: return complete_graph(one("complete"));
    case Family::Star: return star_graph(one("star"));
    case Family::Path: return path_graph(one("path"));
    case Family::Cycle: return cycle_graph(one("cycle"));
    case Family::CompleteBipartite:
      require(p.size() == 2, "complete bipartite takes two parameters");
      return complete_bipartite(p[0], p[1]);
    case Family::CompleteMultipartite: return complete_multipartite(p);
    case Family::CliqueStar: return clique_star(p, spec.center);
    case Family::Repeater: return repeater(one("repeater"));
    case Family::MultiLeafRepeater: return multi_leaf_repeater(p);
  }
  throw InvalidSpecError("unknown family");
}

OrbitTag mlr_orbit_home(int k) {
  require(k >= 3, "multi-leaf repeater requires k >= 3");
  return k % 2 == 0 ? OrbitTag::KPartite : OrbitTag::CliqueStar;
}

Family parse_family(const std::string& name) {
  if (name == "complete") return Family::Complete;
  if (name == "star") return Family::Star;
  if (name == "path") return Family::Path;
  if (name == "cycle") return Family::Cycle;
  if (name == "bipartite" || name == "complete-bipartite") return Family::CompleteBipartite;
  if (name == "kpartite" || name == "multipartite") return Family::CompleteMultipartite;
  if (name == "clique-star" || name == "cliquestar") return Family::CliqueStar;
  if (name == "repeater") return Family::Repeater;
  if (name == "mlr" || name == "multi-leaf-repeater") return Family::MultiLeafRepeater;
  throw InvalidSpecError("unknown family '" + name + "'");
}

std::string family_name(Family f) {
  switch (f) {
    case Family::Complete: return "complete";
    case Family::Star: return "star";
    case Family::Path: return "path";
    case Family::Cycle: return "cycle";
    case Family::CompleteBipartite: return "bipartite";
    case Family::CompleteMultipartite: return "kpartite";
    case Family::CliqueStar: return "clique-star";
    case Family::Repeater: return "repeater";
    case Family::MultiLeafRepeater: return "mlr";
  }
  return "unknown";
}

std::string orbit_tag_name(OrbitTag t) { return t == OrbitTag::KPartite ? "kpartite" : "clique-star"; }

}  // namespace lcq
