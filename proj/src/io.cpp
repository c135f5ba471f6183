#include "lcq/io.hpp"

#include <algorithm>
#include <istream>
#include <iterator>
#include <sstream>

namespace lcq {

namespace {

// Wraps schema violations and nlohmann type errors into ParseError.
template <typename Fn>
auto guarded(const char* what, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

void expect(bool ok, const std::string& what) {
  if (!ok) throw ParseError(what);
}

Json split_ref(int i, int j) { return Json{{"i", i}, {"j", j}}; }

}  // namespace

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return Json{{"n", g.n()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const Json& j) {
  return guarded("graph JSON", [&] {
    expect(j.is_object() && j.contains("n") && j.contains("edges"), "graph JSON needs \"n\" and \"edges\"");
    const int n = j.at("n").get<int>();
    expect(n >= 0 && n <= Graph::kMaxVertices, "graph JSON: n out of range 0..64");
    Graph g(n);
    for (const Json& e : j.at("edges")) {
      expect(e.is_array() && e.size() == 2, "graph JSON: each edge is a pair");
      const int u = e[0].get<int>(), v = e[1].get<int>();
      expect(u >= 1 && u <= n && v >= 1 && v <= n && u != v, "graph JSON: bad edge endpoint");
      g.add_edge(u, v);
    }
    return g;
  });
}

Json qasst_to_json(const Qasst& t) {
  Json quotients = Json::array();
  for (int i = 0; i < static_cast<int>(t.quotients.size()); ++i) {
    const Quotient& q = t.quotients[i];
    Json leaves = Json::array(), splits = Json::array(), edges = Json::array();
    auto endpoint = [&](int local) -> Json {
      const QNode& node = q.nodes[local - 1];
      return node.is_split ? split_ref(i, node.partner) : Json(node.leaf);
    };
    for (const QNode& node : q.nodes) {
      if (node.is_split)
        splits.push_back(split_ref(i, node.partner));
      else
        leaves.push_back(node.leaf);
    }
    for (const auto& [a, b] : q.graph.edges()) edges.push_back({endpoint(a), endpoint(b)});
    quotients.push_back(Json{{"leaf_nodes", std::move(leaves)}, {"split_nodes", std::move(splits)}, {"edges", std::move(edges)}});
  }
  Json tree = Json::array();
  for (const auto& [a, b] : t.tree_edges()) tree.push_back({split_ref(a, b), split_ref(b, a)});
  return Json{{"n", t.n}, {"quotients", std::move(quotients)}, {"tree_edges", std::move(tree)}};
}

Qasst qasst_from_json(const Json& j) {
  Qasst t = guarded("QASST JSON", [&] {
    expect(j.is_object() && j.contains("quotients"), "QASST JSON needs \"quotients\"");
    Qasst out;
    const Json& qs = j.at("quotients");
    expect(qs.is_array() && !qs.empty(), "QASST JSON: quotients must be a nonempty array");
    int max_leaf = 0;
    for (int i = 0; i < static_cast<int>(qs.size()); ++i) {
      const Json& qj = qs[i];
      Quotient q;
      for (const Json& v : qj.at("leaf_nodes")) {
        q.nodes.push_back(QNode::make_leaf(v.get<int>()));
        max_leaf = std::max(max_leaf, v.get<int>());
      }
      for (const Json& s : qj.at("split_nodes")) {
        expect(s.at("i").get<int>() == i, "QASST JSON: split-node owner index does not match its quotient");
        q.nodes.push_back(QNode::make_split(s.at("j").get<int>()));
      }
      expect(q.size() <= Graph::kMaxVertices, "QASST JSON: quotient too large");
      q.graph = Graph(q.size());
      auto local_of = [&](const Json& e) {
        const int local = e.is_object() ? q.find_split(e.at("j").get<int>()) : q.find_leaf(e.get<int>());
        expect(local != 0, "QASST JSON: edge endpoint is not a node of quotient " + std::to_string(i));
        return local;
      };
      for (const Json& e : qj.at("edges")) {
        expect(e.is_array() && e.size() == 2, "QASST JSON: each edge is a pair");
        const int a = local_of(e[0]), b = local_of(e[1]);
        expect(a != b, "QASST JSON: self-loop in quotient " + std::to_string(i));
        q.graph.add_edge(a, b);
      }
      out.quotients.push_back(std::move(q));
    }
    out.n = j.contains("n") ? j.at("n").get<int>() : max_leaf;
    expect(out.n >= 1 && out.n <= Graph::kMaxVertices, "QASST JSON: n out of range 1..64");
    expect(max_leaf <= out.n, "QASST JSON: leaf label exceeds n");
    return out;
  });
  try {
    validate(t);
  } catch (const MalformedQasstError& e) {
    throw ParseError(std::string("QASST JSON: ") + e.what());
  }
  canonicalize(t);
  return t;
}

Json sequence_to_json(const LcSequence& f) { return Json{{"steps", f.steps}}; }

LcSequence sequence_from_json(const Json& j) {
  return guarded("sequence JSON", [&] {
    expect(j.is_object() && j.contains("steps"), "sequence JSON needs \"steps\"");
    return LcSequence{j.at("steps").get<std::vector<Vertex>>()};
  });
}

std::string graph_to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 1; v <= g.n(); ++v) out << "  " << v << ";\n";
  for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string qasst_to_dot(const Qasst& t) {
  std::ostringstream out;
  auto node_id = [](int i, const QNode& node) {
    return node.is_split ? "s" + std::to_string(i) + "_" + std::to_string(node.partner)
                         : "v" + std::to_string(node.leaf);
  };
  out << "graph QASST {\n";
  for (int i = 0; i < static_cast<int>(t.quotients.size()); ++i) {
    const Quotient& q = t.quotients[i];
    out << "  subgraph cluster_" << i << " {\n    label=\"Q" << i << "\";\n";
    for (const QNode& node : q.nodes) {
      if (node.is_split) {
        out << "    " << node_id(i, node) << " [shape=box, label=\"s" << i << "^" << node.partner << "\"];\n";
      } else {
        out << "    " << node_id(i, node) << " [shape=circle, label=\"" << node.leaf << "\"];\n";
      }
    }
    for (const auto& [a, b] : q.graph.edges())
      out << "    " << node_id(i, q.nodes[a - 1]) << " -- " << node_id(i, q.nodes[b - 1]) << ";\n";
    out << "  }\n";
  }
  for (const auto& [a, b] : t.tree_edges()) {
    out << "  s" << a << "_" << b << " -- s" << b << "_" << a << " [style=bold, color=red];\n";
  }
  out << "}\n";
  return out.str();
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

Json read_json(std::istream& in) {
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_json(text);
}

}  // namespace lcq
