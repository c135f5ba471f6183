#include "lcq/qasst_ops.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "qasst_internal.hpp"

namespace lcq {

std::string extension_kind_name(ExtensionKind kind) {
  switch (kind) {
    case ExtensionKind::Pendant: return "pendant";
    case ExtensionKind::FalseTwin: return "false-twin";
    case ExtensionKind::TrueTwin: return "true-twin";
  }
  return "?";
}

ExtensionKind parse_extension_kind(const std::string& name) {
  if (name == "pendant") return ExtensionKind::Pendant;
  if (name == "false-twin" || name == "false_twin") return ExtensionKind::FalseTwin;
  if (name == "true-twin" || name == "true_twin") return ExtensionKind::TrueTwin;
  throw ParseError("unknown extension kind '" + name + "' (pendant, false-twin, true-twin)");
}

std::string subcase_name(ExtensionSubcase subcase) {
  static const char* const kNames[kExtensionSubcaseCount] = {
      "star-center/pendant", "star-center/false-twin", "star-center/true-twin",
      "star-spoke/pendant",  "star-spoke/false-twin",  "star-spoke/true-twin",
      "complete/pendant",    "complete/false-twin",    "complete/true-twin",
      "prime/pendant",       "prime/false-twin",       "prime/true-twin",
  };
  return kNames[static_cast<int>(subcase)];
}

Graph extend_graph(const Graph& g, const Extension& e) {
  if (e.anchor < 1 || e.anchor > g.n()) {
    throw InvalidVertexError("anchor " + std::to_string(e.anchor) + " is not a vertex");
  }
  if (g.n() + 1 > Graph::kMaxVertices) throw SizeLimitError("graph is at the vertex limit");
  const Vertex p = g.n() + 1;
  if (e.kind == ExtensionKind::FalseTwin && g.row(e.anchor) == 0) {
    throw NotConnectedError("a false twin of an isolated vertex is disconnected from it");
  }
  std::vector<VertexMask> rows = g.rows();
  VertexMask np = 0;
  switch (e.kind) {
    case ExtensionKind::Pendant: np = bit_of(e.anchor); break;
    case ExtensionKind::FalseTwin: np = g.row(e.anchor); break;
    case ExtensionKind::TrueTwin: np = g.row(e.anchor) | bit_of(e.anchor); break;
  }
  rows.push_back(np);
  for_each_vertex(np, [&](Vertex u) { rows[u - 1] |= bit_of(p); });
  return Graph::from_rows(std::move(rows));
}

// ------------------------------------------------------------ extension ---

namespace {

ExtensionSubcase subcase_of(KindTag tag, ExtensionKind kind) {
  int row = 0;
  switch (tag) {
    case KindTag::StarCenter: row = 0; break;
    case KindTag::StarSpoke: row = 1; break;
    case KindTag::Complete: row = 2; break;
    default: row = 3; break;
  }
  return static_cast<ExtensionSubcase>(row * 3 + static_cast<int>(kind));
}

// Adds leaf-node p to quotient `q`, adjacent to the local nodes in `nbrs`.
void grow_in_place(Quotient& q, Vertex p, VertexMask nbrs) {
  const int local = detail::append_node(q, QNode::make_leaf(p));
  for_each_vertex(nbrs, [&](Vertex u) { q.graph.add_edge(u, local); });
}

}  // namespace

namespace detail {

Qasst extend_labeled(const Qasst& t, ExtensionKind kind, Vertex anchor, Vertex p,
                     ExtensionSubcase* subcase) {
  const auto [i, x] = t.locate_leaf(anchor);
  Qasst out = t;
  Quotient& q = out.quotients[i];
  const int m = q.size();
  const VertexMask nx = q.graph.row(x);

  if (m <= 2) {
    // A one- or two-node quotient is the whole graph (K1 or K2): every
    // extension stays inside it.
    if (kind == ExtensionKind::FalseTwin && nx == 0) {
      throw NotConnectedError("a false twin of an isolated vertex is disconnected from it");
    }
    ExtensionSubcase sc = ExtensionSubcase::CompleteTrueTwin;
    switch (kind) {
      case ExtensionKind::Pendant:
        grow_in_place(q, p, bit_of(x));
        sc = ExtensionSubcase::StarCenterPendant;
        break;
      case ExtensionKind::FalseTwin:
        grow_in_place(q, p, nx);
        sc = ExtensionSubcase::StarSpokeFalseTwin;
        break;
      case ExtensionKind::TrueTwin:
        grow_in_place(q, p, nx | bit_of(x));
        sc = ExtensionSubcase::CompleteTrueTwin;
        break;
    }
    if (subcase) *subcase = sc;
    return out;
  }

  const QuotientKind qk = classify_quotient(q, x);
  const ExtensionSubcase sc = subcase_of(qk.tag, kind);
  if (subcase) *subcase = sc;

  // In-place growth: the anchor's quotient stays star or complete.
  switch (sc) {
    case ExtensionSubcase::StarCenterPendant:
      grow_in_place(q, p, bit_of(x));
      return out;
    case ExtensionSubcase::StarSpokeFalseTwin:
      grow_in_place(q, p, bit_of(qk.center));
      return out;
    case ExtensionSubcase::CompleteTrueTwin:
      grow_in_place(q, p, q.graph.all_mask());
      return out;
    default:
      break;
  }

  // Otherwise the anchor's leaf-node becomes a split-node (keeping its
  // adjacency) toward a new three-node quotient {s, anchor, p}.
  const int b = static_cast<int>(out.quotients.size());
  q.nodes[x - 1] = QNode::make_split(b);
  Quotient fresh;
  fresh.nodes = {QNode::make_split(i), QNode::make_leaf(anchor), QNode::make_leaf(p)};
  switch (kind) {
    case ExtensionKind::Pendant:  // star centered at the anchor
      fresh.graph = Graph(3, {{1, 2}, {2, 3}});
      break;
    case ExtensionKind::FalseTwin:  // star centered at the split-node
      fresh.graph = Graph(3, {{1, 2}, {1, 3}});
      break;
    case ExtensionKind::TrueTwin:  // triangle
      fresh.graph = Graph(3, {{1, 2}, {1, 3}, {2, 3}});
      break;
  }
  out.quotients.push_back(std::move(fresh));
  return out;
}

}  // namespace detail

Qasst extend(const Qasst& t, const Extension& e, Vertex p, ExtensionSubcase* subcase) {
  if (p != t.n + 1) {
    throw InvalidVertexError("new vertex must be labeled n + 1 = " + std::to_string(t.n + 1));
  }
  if (e.anchor < 1 || e.anchor > t.n) {
    throw InvalidVertexError("anchor " + std::to_string(e.anchor) + " is not a vertex");
  }
  if (p > Graph::kMaxVertices) throw SizeLimitError("graph is at the vertex limit");
  Qasst out = detail::extend_labeled(t, e.kind, e.anchor, p, subcase);
  out.n = p;
  canonicalize(out);
  return out;
}

// -------------------------------------------------------- LC propagation ---

Qasst lc_propagate(const Qasst& t, Vertex v) {
  const auto [start, x] = t.locate_leaf(v);
  Qasst out = t;
  std::set<std::pair<int, int>> visited;  // directed tree edges already crossed
  auto apply = [&](auto&& self, int i, int node) -> void {
    Quotient& q = out.quotients[i];
    const VertexMask nbrs = q.graph.row(node);  // unchanged by complementing at node
    q.graph = local_complement(q.graph, node);
    for_each_vertex(nbrs, [&](Vertex u) {
      const QNode& other = out.quotients[i].nodes[u - 1];
      if (!other.is_split) return;
      const int j = other.partner;
      if (!visited.insert({i, j}).second) return;
      visited.insert({j, i});
      self(self, j, out.quotients[j].find_split(i));
    });
  };
  apply(apply, start, x);
  canonicalize(out);
  return out;
}

// ------------------------------------------------------ induced subtree ---

Qasst induced_qasst(const Qasst& t, const std::vector<Vertex>& keep) {
  const Graph g = reconstruct(t);
  const VertexMask kept = vertices_to_mask(keep);
  if (kept == 0) throw InvalidSpecError("keep-set must be nonempty");
  if ((kept & ~g.all_mask()) != 0) throw InvalidVertexError("keep-set contains a non-vertex");
  if (!is_connected(induced_subgraph(g, kept).graph)) {
    throw NotConnectedError("induced subgraph on the keep-set is disconnected");
  }

  // New label of each kept vertex: its rank among the kept labels.
  std::map<Vertex, Vertex> relabel;
  for (Vertex v : mask_to_vertices(kept)) relabel.emplace(v, static_cast<Vertex>(relabel.size() + 1));

  Qasst out = t;
  for (Quotient& q : out.quotients) {
    VertexMask stay = 0;
    for (int node = 1; node <= q.size(); ++node) {
      const QNode& qn = q.nodes[node - 1];
      if (qn.is_split || (kept & bit_of(qn.leaf))) stay |= bit_of(node);
    }
    q = detail::restrict_quotient(q, stay);
    for (QNode& qn : q.nodes)
      if (!qn.is_split) qn.leaf = relabel.at(qn.leaf);
  }
  out.n = static_cast<int>(relabel.size());

  // Quotients left holding a single split-node carry no kept leaf anywhere
  // beyond them: remove them together with their partner split-node, until
  // every tree direction leads to at least one kept leaf.
  for (bool pruned = true; pruned && out.quotients.size() > 1;) {
    pruned = false;
    for (int i = 0; i < static_cast<int>(out.quotients.size()); ++i) {
      const Quotient& q = out.quotients[i];
      if (q.size() != 1 || !q.nodes[0].is_split) continue;
      const int j = q.nodes[0].partner;
      Quotient& nbr = out.quotients[j];
      nbr = detail::restrict_quotient(nbr, nbr.graph.all_mask() & ~bit_of(nbr.find_split(i)));
      detail::erase_quotient(out, i);
      pruned = true;
      break;
    }
  }

  // What remains is a split tree of the induced graph, possibly with invalid
  // joins, tiny quotients, or quotients that lost their primality.
  normalize(out);
  return out;
}

// ---------------------------------------------------------- random graphs ---

DhSample random_dh(int n, std::uint64_t seed) {
  if (n < 1) throw InvalidSpecError("random_dh requires n >= 1");
  if (n > Graph::kMaxVertices) throw SizeLimitError("random_dh limited to 64 vertices");
  std::mt19937_64 rng(seed);
  DhSample s;
  s.graph = Graph(1);
  for (Vertex p = 2; p <= n; ++p) {
    std::uniform_int_distribution<Vertex> pick_anchor(1, p - 1);
    // A false twin of the lone first vertex would be isolated.
    std::uniform_int_distribution<int> pick_kind(p == 2 ? 1 : 0, 2);
    static constexpr ExtensionKind kKinds[] = {ExtensionKind::FalseTwin, ExtensionKind::Pendant,
                                               ExtensionKind::TrueTwin};
    const Extension e{kKinds[pick_kind(rng)], pick_anchor(rng)};
    s.graph = extend_graph(s.graph, e);
    s.trace.push_back(e);
  }
  return s;
}

}  // namespace lcq
