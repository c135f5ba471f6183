#include "lcq/qasst.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

#include "qasst_internal.hpp"

namespace lcq {

// ---------------------------------------------------------------- splits ---

namespace {

void check_bipartition(const Graph& g, const Split& s) {
  if (s.side_a == 0 || s.side_b == 0 || (s.side_a & s.side_b) != 0 ||
      (s.side_a | s.side_b) != g.all_mask()) {
    throw InvalidSpecError("split sides must be disjoint, nonempty and cover all vertices");
  }
}

// Split test on raw rows: every vertex of A with a neighbor in B sees the same
// set of B-vertices.
bool crossing_complete(const std::vector<VertexMask>& rows, VertexMask a, VertexMask b) {
  VertexMask common = 0;
  bool first = true;
  bool ok = true;
  for_each_vertex(a, [&](Vertex v) {
    if (!ok) return;
    const VertexMask cross = rows[v - 1] & b;
    if (cross == 0) return;
    if (first) {
      common = cross;
      first = false;
    } else if (cross != common) {
      ok = false;
    }
  });
  return ok;
}

bool crosses(const Split& s, const Split& t) {
  return (s.side_a & t.side_a) && (s.side_a & t.side_b) && (s.side_b & t.side_a) &&
         (s.side_b & t.side_b);
}

constexpr int kAllSplitsLimit = 22;

}  // namespace

bool is_split(const Graph& g, const Split& s) {
  check_bipartition(g, s);
  return crossing_complete(g.rows(), s.side_a, s.side_b);
}

std::vector<Split> all_splits(const Graph& g) {
  if (g.n() > kAllSplitsLimit) {
    throw SizeLimitError("split enumeration limited to " + std::to_string(kAllSplitsLimit) +
                         " vertices");
  }
  std::vector<Split> out;
  const VertexMask all = g.all_mask();
  if (g.n() < 2) return out;
  const std::uint64_t count = std::uint64_t{1} << (g.n() - 1);
  for (std::uint64_t m = 0; m + 1 < count; ++m) {
    const VertexMask a = (m << 1) | 1;  // vertex 1 always on side A
    const VertexMask b = all & ~a;
    if (crossing_complete(g.rows(), a, b)) out.push_back(Split{a, b});
  }
  return out;
}

bool is_strong(const Graph& g, const Split& s) {
  if (!is_split(g, s)) return false;
  for (const Split& t : all_splits(g)) {
    if (crosses(s, t)) return false;
  }
  return true;
}

// -------------------------------------------------------------- quotients ---

int Quotient::find_leaf(Vertex v) const {
  for (int t = 0; t < size(); ++t)
    if (!nodes[t].is_split && nodes[t].leaf == v) return t + 1;
  return 0;
}

int Quotient::find_split(int partner) const {
  for (int t = 0; t < size(); ++t)
    if (nodes[t].is_split && nodes[t].partner == partner) return t + 1;
  return 0;
}

std::vector<Vertex> Quotient::leaves() const {
  std::vector<Vertex> out;
  for (const QNode& node : nodes)
    if (!node.is_split) out.push_back(node.leaf);
  return out;
}

std::vector<std::pair<int, int>> Qasst::tree_edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < static_cast<int>(quotients.size()); ++i)
    for (const QNode& node : quotients[i].nodes)
      if (node.is_split && i < node.partner) out.emplace_back(i, node.partner);
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<int, int> Qasst::locate_leaf(Vertex v) const {
  for (int i = 0; i < static_cast<int>(quotients.size()); ++i) {
    const int t = quotients[i].find_leaf(v);
    if (t != 0) return {i, t};
  }
  throw InvalidVertexError("vertex " + std::to_string(v) + " is not a leaf-node");
}

QuotientKind classify_quotient(const Quotient& q, std::optional<int> at) {
  const int m = q.size();
  if (at && (*at < 1 || *at > m)) throw InvalidVertexError("node not in quotient");
  const Graph& h = q.graph;
  if (m <= 2 || edge_count(h) == m * (m - 1) / 2) return QuotientKind{KindTag::Complete, 0};
  if (edge_count(h) == m - 1) {
    for (int c = 1; c <= m; ++c) {
      if (degree(h, c) != m - 1) continue;
      if (!at) return QuotientKind{KindTag::Star, c};
      if (*at == c) return QuotientKind{KindTag::StarCenter, 0};
      return QuotientKind{KindTag::StarSpoke, c};
    }
  }
  return QuotientKind{KindTag::Prime, 0};
}

QuotientKind kind_toward(const Qasst& t, int i, int j) {
  const int at = t.quotients.at(static_cast<std::size_t>(i)).find_split(j);
  if (at == 0) throw MalformedQasstError("no split-node from Q" + std::to_string(i) + " to Q" + std::to_string(j));
  return classify_quotient(t.quotients[i], at);
}

bool join_validity(const QuotientKind& a, const QuotientKind& b) {
  if (a.tag == KindTag::Complete && b.tag == KindTag::Complete) return false;
  if (a.tag == KindTag::StarCenter && b.tag == KindTag::StarSpoke) return false;
  if (a.tag == KindTag::StarSpoke && b.tag == KindTag::StarCenter) return false;
  return true;
}

// ------------------------------------------------------- structural edits ---

namespace detail {

// Every split-node in quotient `owner` that points to `from` is redirected.
void repoint(Qasst& t, int owner, int from, int to) {
  for (QNode& node : t.quotients[owner].nodes)
    if (node.is_split && node.partner == from) node.partner = to;
}

// Removes quotient `gone` and shifts every higher partner index down.
void erase_quotient(Qasst& t, int gone) {
  t.quotients.erase(t.quotients.begin() + gone);
  for (Quotient& q : t.quotients)
    for (QNode& node : q.nodes)
      if (node.is_split && node.partner > gone) --node.partner;
}

// Quotient restricted to local node set `keep` (bitset over local indices),
// preserving node order.
Quotient restrict_quotient(const Quotient& q, VertexMask keep) {
  Quotient out;
  const InducedSubgraph sub = induced_subgraph(q.graph, keep);
  for (Vertex t : sub.original_label) out.nodes.push_back(q.nodes[t - 1]);
  out.graph = sub.graph;
  return out;
}

// Appends a node and returns its new local index.
int append_node(Quotient& q, const QNode& node) {
  std::vector<VertexMask> rows = q.graph.rows();
  rows.push_back(0);
  q.graph = Graph::from_rows(std::move(rows));
  q.nodes.push_back(node);
  return q.size();
}

}  // namespace detail

using namespace detail;

namespace {

// Replaces quotient a by (A + s_a^b) and a new quotient b = (s_b^a + B).
void split_quotient(Qasst& t, int a, VertexMask side_a, VertexMask side_b) {
  const Quotient old = t.quotients[a];
  const int b = static_cast<int>(t.quotients.size());
  VertexMask a_touch = 0, b_touch = 0;
  for_each_vertex(side_a, [&](Vertex v) {
    const VertexMask cross = old.graph.row(v) & side_b;
    if (cross) {
      a_touch |= bit_of(v);
      b_touch |= cross;
    }
  });

  Quotient qa = restrict_quotient(old, side_a);
  const int sa = append_node(qa, QNode::make_split(b));
  for (int t2 = 1; t2 < sa; ++t2) {
    // restrict_quotient keeps ascending local order, so the i-th set bit of
    // side_a is local node i of qa.
    const Vertex orig = mask_to_vertices(side_a)[t2 - 1];
    if (a_touch & bit_of(orig)) qa.graph.add_edge(t2, sa);
  }

  Quotient qb = restrict_quotient(old, side_b);
  const int sb = append_node(qb, QNode::make_split(a));
  const auto b_nodes = mask_to_vertices(side_b);
  for (int t2 = 1; t2 < sb; ++t2)
    if (b_touch & bit_of(b_nodes[t2 - 1])) qb.graph.add_edge(t2, sb);

  t.quotients[a] = std::move(qa);
  t.quotients.push_back(std::move(qb));
  for (const QNode& node : t.quotients[b].nodes)
    if (node.is_split && node.partner != a) repoint(t, node.partner, a, b);
}

// Searches for a nontrivial split of the quotient graph; returns side A.
std::optional<VertexMask> find_nontrivial_split(const Graph& h) {
  const int m = h.n();
  if (m < 4) return std::nullopt;
  if (m > kBruteSplitLimit) {
    throw SizeLimitError("exhaustive split search limited to " + std::to_string(kBruteSplitLimit) +
                         " quotient nodes, got " + std::to_string(m));
  }
  const VertexMask all = h.all_mask();
  const std::uint64_t count = std::uint64_t{1} << (m - 1);
  for (std::uint64_t mask = 1; mask + 1 < count; ++mask) {
    const VertexMask a = (mask << 1) | 1;
    const int size_a = popcount(a);
    if (size_a < 2 || m - size_a < 2) continue;
    if (crossing_complete(h.rows(), a, all & ~a)) return a;
  }
  return std::nullopt;
}

bool try_split(Qasst& t, int a) {
  const Quotient& q = t.quotients[a];
  if (q.size() < 4) return false;
  const KindTag tag = classify_quotient(q).tag;
  if (tag == KindTag::Complete || tag == KindTag::Star) return false;
  const auto side = find_nontrivial_split(q.graph);
  if (!side) return false;
  split_quotient(t, a, *side, q.graph.all_mask() & ~*side);
  return true;
}

bool needs_merge(const Qasst& t, int a, int b) {
  if (t.quotients[a].size() <= 2 || t.quotients[b].size() <= 2) return true;
  return !join_validity(kind_toward(t, a, b), kind_toward(t, b, a));
}

// Leaf bitset lying beyond every (quotient, split-node) direction.
std::map<std::pair<int, int>, VertexMask> far_sides(const Qasst& t) {
  const int k = static_cast<int>(t.quotients.size());
  std::vector<VertexMask> own(static_cast<std::size_t>(k), 0);
  for (int i = 0; i < k; ++i)
    for (Vertex v : t.quotients[i].leaves()) own[i] |= bit_of(v);
  std::map<std::pair<int, int>, VertexMask> memo;
  // Leaves reachable from `to` without crossing back into `from`.
  auto beyond = [&](auto&& self, int from, int to) -> VertexMask {
    const auto key = std::make_pair(from, to);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    VertexMask m = own[to];
    for (const QNode& node : t.quotients[to].nodes)
      if (node.is_split && node.partner != from) m |= self(self, to, node.partner);
    memo[key] = m;
    return m;
  };
  for (int i = 0; i < k; ++i)
    for (const QNode& node : t.quotients[i].nodes)
      if (node.is_split) beyond(beyond, i, node.partner);
  return memo;
}

}  // namespace

void merge_quotients(Qasst& t, int i, int j) {
  const int si = t.quotients.at(static_cast<std::size_t>(i)).find_split(j);
  const int sj = t.quotients.at(static_cast<std::size_t>(j)).find_split(i);
  if (si == 0 || sj == 0) throw MalformedQasstError("merge of non-adjacent quotients");
  const Quotient& qi = t.quotients[i];
  const Quotient& qj = t.quotients[j];

  const VertexMask keep_i = qi.graph.all_mask() & ~bit_of(si);
  const VertexMask keep_j = qj.graph.all_mask() & ~bit_of(sj);
  Quotient merged = restrict_quotient(qi, keep_i);
  const int offset = merged.size();
  const Quotient tail = restrict_quotient(qj, keep_j);
  std::vector<VertexMask> rows = merged.graph.rows();
  for (const VertexMask r : tail.graph.rows()) rows.push_back(r << offset);
  merged.graph = Graph::from_rows(std::move(rows));
  merged.nodes.insert(merged.nodes.end(), tail.nodes.begin(), tail.nodes.end());

  // Full connections between the two neighborhoods of the removed pair.
  const auto local_i = mask_to_vertices(keep_i);
  const auto local_j = mask_to_vertices(keep_j);
  for (int a = 0; a < static_cast<int>(local_i.size()); ++a) {
    if (!qi.graph.has_edge(local_i[a], si)) continue;
    for (int b = 0; b < static_cast<int>(local_j.size()); ++b)
      if (qj.graph.has_edge(local_j[b], sj)) merged.graph.add_edge(a + 1, offset + b + 1);
  }

  for (const QNode& node : tail.nodes)
    if (node.is_split) repoint(t, node.partner, j, i);
  t.quotients[i] = std::move(merged);
  erase_quotient(t, j);
}

void canonicalize(Qasst& t) {
  const int k = static_cast<int>(t.quotients.size());
  const auto far = far_sides(t);
  // Sort key: leafless quotients first, then smallest leaf, then the sorted
  // far-side leaf sets (distinct for distinct quotients of one tree).
  using Key = std::tuple<int, Vertex, std::vector<VertexMask>>;
  std::vector<Key> keys;
  for (int i = 0; i < k; ++i) {
    const auto leaves = t.quotients[i].leaves();
    std::vector<VertexMask> sides;
    for (const QNode& node : t.quotients[i].nodes)
      if (node.is_split) sides.push_back(far.at({i, node.partner}));
    std::sort(sides.begin(), sides.end());
    const Vertex min_leaf = leaves.empty() ? 0 : *std::min_element(leaves.begin(), leaves.end());
    keys.emplace_back(leaves.empty() ? 0 : 1, min_leaf, std::move(sides));
  }
  std::vector<int> order(static_cast<std::size_t>(k));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return keys[a] < keys[b]; });
  std::vector<int> new_index(static_cast<std::size_t>(k));
  for (int pos = 0; pos < k; ++pos) new_index[order[pos]] = pos;

  std::vector<Quotient> out;
  out.reserve(static_cast<std::size_t>(k));
  for (int pos = 0; pos < k; ++pos) {
    Quotient q = t.quotients[order[pos]];
    for (QNode& node : q.nodes)
      if (node.is_split) node.partner = new_index[node.partner];
    // Leaves ascending, then split-nodes by partner index.
    std::vector<int> perm(static_cast<std::size_t>(q.size()));
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](int a, int b) {
      const QNode& x = q.nodes[a];
      const QNode& y = q.nodes[b];
      return std::make_tuple(x.is_split, x.leaf, x.partner) <
             std::make_tuple(y.is_split, y.leaf, y.partner);
    });
    std::vector<int> where(perm.size());
    for (std::size_t p = 0; p < perm.size(); ++p) where[perm[p]] = static_cast<int>(p);
    Quotient sorted;
    for (int p : perm) sorted.nodes.push_back(q.nodes[p]);
    std::vector<VertexMask> rows(perm.size(), 0);
    for (std::size_t p = 0; p < perm.size(); ++p) {
      for_each_vertex(q.graph.row(perm[p] + 1),
                      [&](Vertex u) { rows[p] |= bit_of(where[u - 1] + 1); });
    }
    sorted.graph = Graph::from_rows(std::move(rows));
    out.push_back(std::move(sorted));
  }
  t.quotients = std::move(out);
}

void normalize(Qasst& t) {
  for (;;) {
    bool changed = false;
    for (int a = 0; a < static_cast<int>(t.quotients.size()) && !changed; ++a) changed = try_split(t, a);
    if (!changed) {
      for (const auto& [a, b] : t.tree_edges()) {
        if (needs_merge(t, a, b)) {
          merge_quotients(t, a, b);
          changed = true;
          break;
        }
      }
    }
    if (!changed) break;
  }
  canonicalize(t);
}

// --------------------------------------------------------- decomposition ---

namespace detail {

Qasst single_quotient(const Graph& g, const std::vector<Vertex>& labels, int n) {
  Qasst t;
  t.n = n;
  Quotient q;
  for (Vertex v : labels) q.nodes.push_back(QNode::make_leaf(v));
  q.graph = g;
  t.quotients.push_back(std::move(q));
  return t;
}

}  // namespace detail

namespace {

struct Elimination {
  Vertex p;
  ExtensionKind kind;
  Vertex anchor;
};

// Repeatedly removes a pendant or twin vertex (highest label first). What
// remains has no pendant and no twin; it is a single vertex exactly when the
// graph is distance-hereditary.
std::vector<Elimination> strip_pendants_and_twins(const Graph& g, VertexMask& alive) {
  std::vector<Elimination> steps;
  alive = g.all_mask();
  while (popcount(alive) > 1) {
    bool found = false;
    for (Vertex p = g.n(); p >= 1 && !found; --p) {
      if (!(alive & bit_of(p))) continue;
      const VertexMask np = g.row(p) & alive;
      if (popcount(np) == 1) {
        steps.push_back({p, ExtensionKind::Pendant, __builtin_ctzll(np) + 1});
        found = true;
      } else {
        for_each_vertex(alive & ~bit_of(p), [&](Vertex q) {
          if (found) return;
          const VertexMask nq = g.row(q) & alive;
          if ((np & ~bit_of(q)) != (nq & ~bit_of(p))) return;
          const bool adjacent = (np & bit_of(q)) != 0;
          steps.push_back({p, adjacent ? ExtensionKind::TrueTwin : ExtensionKind::FalseTwin, q});
          found = true;
        });
      }
      if (found) alive &= ~bit_of(p);
    }
    if (!found) break;
  }
  return steps;
}

Qasst brute_decomposition(const Graph& g, const std::vector<Vertex>& labels, int n) {
  Qasst t = detail::single_quotient(g, labels, n);
  normalize(t);
  return t;
}

}  // namespace

Qasst compute_qasst(const Graph& g, DecompositionMethod method) {
  if (g.n() < 1) throw InvalidSpecError("decomposition requires at least one vertex");
  if (!is_connected(g)) throw NotConnectedError("split decomposition requires a connected graph");
  std::vector<Vertex> labels(static_cast<std::size_t>(g.n()));
  std::iota(labels.begin(), labels.end(), 1);
  if (method == DecompositionMethod::BruteForce) return brute_decomposition(g, labels, g.n());

  VertexMask alive = 0;
  const auto steps = strip_pendants_and_twins(g, alive);
  const InducedSubgraph core = induced_subgraph(g, alive);
  Qasst t = brute_decomposition(core.graph, core.original_label, g.n());
  for (auto it = steps.rbegin(); it != steps.rend(); ++it)
    t = detail::extend_labeled(t, it->kind, it->anchor, it->p, nullptr);
  canonicalize(t);
  return t;
}

// ---------------------------------------------------------- reconstruction ---

void validate(const Qasst& t) {
  const int k = static_cast<int>(t.quotients.size());
  if (k == 0) throw MalformedQasstError("no quotients");
  if (t.n < 1 || t.n > Graph::kMaxVertices) throw MalformedQasstError("n must lie in 1..64");
  VertexMask seen = 0;
  int edges = 0;
  for (int i = 0; i < k; ++i) {
    const Quotient& q = t.quotients[i];
    if (q.graph.n() != q.size()) throw MalformedQasstError("quotient graph size mismatch");
    std::vector<int> partners;
    for (const QNode& node : q.nodes) {
      if (node.is_split) {
        if (node.partner < 0 || node.partner >= k || node.partner == i)
          throw MalformedQasstError("split-node with invalid partner in Q" + std::to_string(i));
        if (t.quotients[node.partner].find_split(i) == 0)
          throw MalformedQasstError("unmatched split-node s_" + std::to_string(i) + "^" +
                                    std::to_string(node.partner));
        partners.push_back(node.partner);
        if (i < node.partner) ++edges;
      } else {
        if (node.leaf < 1 || node.leaf > t.n || (seen & bit_of(node.leaf)))
          throw MalformedQasstError("leaf-node " + std::to_string(node.leaf) + " invalid or repeated");
        seen |= bit_of(node.leaf);
      }
    }
    std::sort(partners.begin(), partners.end());
    if (std::adjacent_find(partners.begin(), partners.end()) != partners.end())
      throw MalformedQasstError("duplicate split-nodes between one pair of quotients");
    if (k > 1 && partners.empty()) throw MalformedQasstError("quotient without split-node");
  }
  if (t.n < 1 || t.n > Graph::kMaxVertices || seen != Graph(t.n).all_mask())
    throw MalformedQasstError("leaf-nodes do not cover 1..n exactly once");
  if (edges != k - 1) throw MalformedQasstError("tree edges do not form a tree");
  // Connectedness of the quotient tree.
  std::vector<bool> reached(static_cast<std::size_t>(k), false);
  std::vector<int> stack{0};
  reached[0] = true;
  while (!stack.empty()) {
    const int i = stack.back();
    stack.pop_back();
    for (const QNode& node : t.quotients[i].nodes) {
      if (node.is_split && !reached[node.partner]) {
        reached[node.partner] = true;
        stack.push_back(node.partner);
      }
    }
  }
  if (std::find(reached.begin(), reached.end(), false) != reached.end())
    throw MalformedQasstError("tree edges do not form a tree");
}

Graph reconstruct(const Qasst& t) {
  validate(t);
  Graph g(t.n);
  // Leaves reachable from `node` of quotient `i` by alternating paths that
  // cross split-node pairs; `from` is the split-node we entered through.
  auto walk = [&](auto&& self, int i, int node, Vertex source) -> void {
    const Quotient& q = t.quotients[i];
    for_each_vertex(q.graph.row(node), [&](Vertex u) {
      const QNode& other = q.nodes[u - 1];
      if (!other.is_split) {
        if (other.leaf != source) g.add_edge(source, other.leaf);
        return;
      }
      const int j = other.partner;
      self(self, j, t.quotients[j].find_split(i), source);
    });
  };
  for (int i = 0; i < static_cast<int>(t.quotients.size()); ++i) {
    const Quotient& q = t.quotients[i];
    for (int node = 1; node <= q.size(); ++node)
      if (!q.nodes[node - 1].is_split) walk(walk, i, node, q.nodes[node - 1].leaf);
  }
  return g;
}

// --------------------------------------------------- distance heredity ---

bool is_distance_hereditary(const Graph& g) {
  const Qasst t = compute_qasst(g);
  for (const Quotient& q : t.quotients)
    if (classify_quotient(q).tag == KindTag::Prime) return false;
  return true;
}

namespace {

std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
  const int n = g.n();
  std::vector<std::vector<int>> d(static_cast<std::size_t>(n), std::vector<int>(n, -1));
  for (Vertex s = 1; s <= n; ++s) {
    d[s - 1][s - 1] = 0;
    VertexMask seen = bit_of(s), frontier = bit_of(s);
    for (int dist = 1; frontier != 0; ++dist) {
      VertexMask next = 0;
      for_each_vertex(frontier, [&](Vertex v) { next |= g.row(v); });
      next &= ~seen;
      for_each_vertex(next, [&](Vertex v) { d[s - 1][v - 1] = dist; });
      seen |= next;
      frontier = next;
    }
  }
  return d;
}

constexpr int kDhOracleLimit = 10;

}  // namespace

bool dh_definition_oracle(const Graph& g) {
  if (g.n() > kDhOracleLimit) {
    throw SizeLimitError("distance-hereditary definition check limited to " +
                         std::to_string(kDhOracleLimit) + " vertices");
  }
  if (!is_connected(g)) throw NotConnectedError("distance heredity is checked on connected graphs");
  const auto full = all_pairs_distances(g);
  const std::uint64_t count = std::uint64_t{1} << g.n();
  for (std::uint64_t s = 1; s < count; ++s) {
    if (popcount(s) < 3) continue;
    // Breadth-first search inside G[S] from every vertex of S; S is skipped
    // when the induced subgraph is disconnected.
    bool connected = true;
    bool preserved = true;
    for_each_vertex(s, [&](Vertex a) {
      if (!connected || !preserved) return;
      VertexMask seen = bit_of(a), frontier = bit_of(a);
      for (int dist = 1; frontier != 0 && preserved; ++dist) {
        VertexMask next = 0;
        for_each_vertex(frontier, [&](Vertex v) { next |= g.row(v); });
        next &= s & ~seen;
        for_each_vertex(next, [&](Vertex v) { preserved = preserved && full[a - 1][v - 1] == dist; });
        seen |= next;
        frontier = next;
      }
      connected = seen == s;
    });
    if (connected && !preserved) return false;
  }
  return true;
}

}  // namespace lcq
