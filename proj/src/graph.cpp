#include "lcq/graph.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace lcq {

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw SizeLimitError("graph size " + std::to_string(n) + " outside 0.." +
                         std::to_string(kMaxVertices));
  }
  adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(Vertex v) const {
  if (v < 1 || v > n_) {
    throw InvalidVertexError("vertex " + std::to_string(v) + " outside 1.." +
                             std::to_string(n_));
  }
}

void Graph::check_pair(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InvalidVertexError("self-loop at vertex " + std::to_string(u));
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return (adj_[u - 1] & bit_of(v)) != 0;
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  adj_[u - 1] |= bit_of(v);
  adj_[v - 1] |= bit_of(u);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  adj_[u - 1] &= ~bit_of(v);
  adj_[v - 1] &= ~bit_of(u);
}

void Graph::toggle_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  adj_[u - 1] ^= bit_of(v);
  adj_[v - 1] ^= bit_of(u);
}

VertexMask Graph::all_mask() const {
  return n_ == 64 ? ~VertexMask{0} : (VertexMask{1} << n_) - 1;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 1; u <= n_; ++u) {
    const VertexMask higher = adj_[u - 1] & ~((bit_of(u) << 1) - 1);
    for_each_vertex(higher, [&](Vertex v) { out.emplace_back(u, v); });
  }
  return out;
}

Graph Graph::from_rows(std::vector<VertexMask> rows) {
  Graph g(static_cast<int>(rows.size()));
  g.adj_ = std::move(rows);
  return g;
}

LcSequence LcSequence::inverse() const {
  return LcSequence{std::vector<Vertex>(steps.rbegin(), steps.rend())};
}

LcSequence LcSequence::then(const LcSequence& next) const {
  LcSequence out = *this;
  out.steps.insert(out.steps.end(), next.steps.begin(), next.steps.end());
  return out;
}

namespace {

// In-place c_v on raw rows: for every neighbor u of v, flip u's adjacency to
// the other neighbors of v. Each affected pair is touched from both ends.
void complement_rows(std::vector<VertexMask>& rows, Vertex v) {
  const VertexMask nb = rows[v - 1];
  for_each_vertex(nb, [&](Vertex u) { rows[u - 1] ^= nb & ~bit_of(u); });
}

}  // namespace

Graph local_complement(const Graph& g, Vertex v) {
  if (v < 1 || v > g.n()) {
    throw InvalidVertexError("local complement at vertex " + std::to_string(v) +
                             " outside 1.." + std::to_string(g.n()));
  }
  std::vector<VertexMask> rows = g.rows();
  complement_rows(rows, v);
  return Graph::from_rows(std::move(rows));
}

Graph apply_sequence(const Graph& g, const LcSequence& f) {
  for (Vertex v : f.steps) {
    if (v < 1 || v > g.n()) {
      throw InvalidVertexError("sequence step " + std::to_string(v) + " outside 1.." +
                               std::to_string(g.n()));
    }
  }
  std::vector<VertexMask> rows = g.rows();
  for (Vertex v : f.steps) complement_rows(rows, v);
  return Graph::from_rows(std::move(rows));
}

Graph edge_pivot(const Graph& g, Vertex i, Vertex j) {
  if (!g.has_edge(i, j)) {
    throw NotAnEdgeError("edge pivot on non-edge (" + std::to_string(i) + "," +
                         std::to_string(j) + ")");
  }
  return apply_sequence(g, LcSequence{{i, j, i}});
}

std::string canonical_key(const Graph& g) {
  // One length byte, then each row truncated to the bytes needed for n bits.
  const int n = g.n();
  const int row_bytes = (n + 7) / 8;
  std::string key;
  key.reserve(1 + static_cast<std::size_t>(n * row_bytes));
  key.push_back(static_cast<char>(n));
  for (Vertex v = 1; v <= n; ++v) {
    const VertexMask r = g.row(v);
    for (int b = 0; b < row_bytes; ++b) key.push_back(static_cast<char>((r >> (8 * b)) & 0xff));
  }
  return key;
}

VertexMask neighborhood(const Graph& g, Vertex v) {
  if (v < 1 || v > g.n()) throw InvalidVertexError("vertex " + std::to_string(v) + " out of range");
  return g.row(v);
}

int degree(const Graph& g, Vertex v) { return popcount(neighborhood(g, v)); }

int max_degree(const Graph& g) {
  int best = 0;
  for (Vertex v = 1; v <= g.n(); ++v) best = std::max(best, popcount(g.row(v)));
  return best;
}

int edge_count(const Graph& g) {
  int total = 0;
  for (Vertex v = 1; v <= g.n(); ++v) total += popcount(g.row(v));
  return total / 2;
}

std::vector<VertexMask> connected_components(const Graph& g) {
  std::vector<VertexMask> comps;
  VertexMask unseen = g.all_mask();
  while (unseen != 0) {
    VertexMask comp = unseen & (~unseen + 1);
    VertexMask frontier = comp;
    while (frontier != 0) {
      VertexMask next = 0;
      for_each_vertex(frontier, [&](Vertex v) { next |= g.row(v); });
      frontier = next & ~comp;
      comp |= frontier;
    }
    comps.push_back(comp);
    unseen &= ~comp;
  }
  return comps;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

InducedSubgraph induced_subgraph(const Graph& g, VertexMask keep) {
  if ((keep & ~g.all_mask()) != 0) throw InvalidVertexError("induced subgraph keeps unknown vertices");
  InducedSubgraph out;
  out.original_label = mask_to_vertices(keep);
  const int m = static_cast<int>(out.original_label.size());
  std::array<int, 64> position{};
  for (int i = 0; i < m; ++i) position[out.original_label[i] - 1] = i + 1;
  std::vector<VertexMask> rows(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < m; ++i) {
    for_each_vertex(g.row(out.original_label[i]) & keep,
                    [&](Vertex u) { rows[i] |= bit_of(position[u - 1]); });
  }
  out.graph = Graph::from_rows(std::move(rows));
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<Vertex>& keep) {
  for (Vertex v : keep) {
    if (v < 1 || v > g.n()) throw InvalidVertexError("vertex " + std::to_string(v) + " out of range");
  }
  return induced_subgraph(g, vertices_to_mask(keep));
}

std::vector<Vertex> mask_to_vertices(VertexMask mask) {
  std::vector<Vertex> out;
  for_each_vertex(mask, [&](Vertex v) { out.push_back(v); });
  return out;
}

VertexMask vertices_to_mask(const std::vector<Vertex>& vs) {
  VertexMask m = 0;
  for (Vertex v : vs) m |= bit_of(v);
  return m;
}

namespace {

// Backtracking isomorphism search over vertices ordered by decreasing degree,
// with candidates restricted to equal (degree, neighbor-degree multiset) color.
class IsoSearch {
 public:
  IsoSearch(const Graph& g, const Graph& h) : g_(g), h_(h), n_(g.n()) {
    color_g_ = colors(g);
    color_h_ = colors(h);
    order_.resize(static_cast<std::size_t>(n_));
    std::iota(order_.begin(), order_.end(), 1);
    // Degree-descending order, but keep vertices connected to earlier ones
    // early so adjacency constraints prune the search quickly.
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return degree(g, a) > degree(g, b); });
    std::vector<Vertex> bfs;
    VertexMask placed = 0;
    for (Vertex start : order_) {
      if (placed & bit_of(start)) continue;
      std::vector<Vertex> queue{start};
      placed |= bit_of(start);
      for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        bfs.push_back(queue[qi]);
        for (Vertex w : order_) {
          if ((g.row(queue[qi]) & bit_of(w)) && !(placed & bit_of(w))) {
            placed |= bit_of(w);
            queue.push_back(w);
          }
        }
      }
    }
    order_ = bfs;
    map_.assign(static_cast<std::size_t>(n_), 0);
  }

  std::optional<std::vector<Vertex>> run() {
    std::vector<std::vector<int>> cg = color_g_, ch = color_h_;
    std::sort(cg.begin(), cg.end());
    std::sort(ch.begin(), ch.end());
    if (cg != ch) return std::nullopt;
    if (extend(0, 0)) return map_;
    return std::nullopt;
  }

 private:
  static std::vector<std::vector<int>> colors(const Graph& g) {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(g.n()));
    for (Vertex v = 1; v <= g.n(); ++v) {
      auto& c = out[v - 1];
      c.push_back(degree(g, v));
      std::vector<int> nd;
      for_each_vertex(g.row(v), [&](Vertex u) { nd.push_back(degree(g, u)); });
      std::sort(nd.begin(), nd.end());
      c.insert(c.end(), nd.begin(), nd.end());
    }
    return out;
  }

  bool extend(std::size_t depth, VertexMask used) {
    if (depth == order_.size()) return true;
    const Vertex v = order_[depth];
    for (Vertex w = 1; w <= n_; ++w) {
      if (used & bit_of(w)) continue;
      if (color_g_[v - 1] != color_h_[w - 1]) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        const Vertex a = order_[d];
        const bool eg = (g_.row(v) & bit_of(a)) != 0;
        const bool eh = (h_.row(w) & bit_of(map_[a - 1])) != 0;
        ok = eg == eh;
      }
      if (!ok) continue;
      map_[v - 1] = w;
      if (extend(depth + 1, used | bit_of(w))) return true;
    }
    map_[v - 1] = 0;
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  int n_;
  std::vector<std::vector<int>> color_g_, color_h_;
  std::vector<Vertex> order_;
  std::vector<Vertex> map_;
};

}  // namespace

std::optional<std::vector<Vertex>> is_isomorphic(const Graph& g, const Graph& h) {
  if (g.n() != h.n()) return std::nullopt;
  if (g.n() > kIsomorphismLimit) {
    throw SizeLimitError("isomorphism test limited to " + std::to_string(kIsomorphismLimit) +
                         " vertices, got " + std::to_string(g.n()));
  }
  if (edge_count(g) != edge_count(h)) return std::nullopt;
  return IsoSearch(g, h).run();
}

}  // namespace lcq
