#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "lcq/graph.hpp"
#include "lcq/qasst.hpp"

namespace lcq {

using Json = nlohmann::json;

/// {"n": int, "edges": [[u, v], ...]} with u < v, lexicographically sorted.
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

/// {"n": int,
///  "quotients": [{"leaf_nodes": [v...], "split_nodes": [{"i": i, "j": j}...],
///                 "edges": [[a, b], ...]}, ...],
///  "tree_edges": [[{"i": i, "j": j}, {"i": j, "j": i}], ...]}
/// Quotient edge endpoints are a leaf label (integer) or a split-node object.
Json qasst_to_json(const Qasst& t);
Qasst qasst_from_json(const Json& j);

/// {"steps": [v, ...]}
Json sequence_to_json(const LcSequence& f);
LcSequence sequence_from_json(const Json& j);

/// Undirected DOT, one node per vertex labeled by its id.
std::string graph_to_dot(const Graph& g);
/// One cluster per quotient; leaf-nodes as circles, split-nodes as boxes,
/// tree edges bold between paired split-nodes.
std::string qasst_to_dot(const Qasst& t);

/// Parses JSON text; malformed input raises ParseError.
Json parse_json(const std::string& text);
/// Reads a whole stream and parses it.
Json read_json(std::istream& in);

}  // namespace lcq
