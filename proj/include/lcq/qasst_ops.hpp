#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lcq/graph.hpp"
#include "lcq/qasst.hpp"

namespace lcq {

enum class ExtensionKind { Pendant, FalseTwin, TrueTwin };

/// One-vertex extension: the new vertex becomes a pendant on, or a false or
/// true twin of, the anchor.
struct Extension {
  ExtensionKind kind = ExtensionKind::Pendant;
  Vertex anchor = 1;
  bool operator==(const Extension& other) const = default;
};

/// The twelve ways an anchor's quotient can evolve under an extension: the
/// quotient kind as seen from the anchor's leaf-node, times the extension kind.
enum class ExtensionSubcase {
  StarCenterPendant,
  StarCenterFalseTwin,
  StarCenterTrueTwin,
  StarSpokePendant,
  StarSpokeFalseTwin,
  StarSpokeTrueTwin,
  CompletePendant,
  CompleteFalseTwin,
  CompleteTrueTwin,
  PrimePendant,
  PrimeFalseTwin,
  PrimeTrueTwin,
};
inline constexpr int kExtensionSubcaseCount = 12;

std::string extension_kind_name(ExtensionKind kind);
/// Parses "pendant", "false-twin" or "true-twin".
ExtensionKind parse_extension_kind(const std::string& name);
std::string subcase_name(ExtensionSubcase subcase);

/// Graph-level extension: adds vertex n + 1 attached according to `e`.
Graph extend_graph(const Graph& g, const Extension& e);

/// Evolves the decomposition of G into that of G extended by `e`, with new
/// vertex p = n + 1. Only the anchor's quotient changes: it grows in place or
/// hands the anchor to a new three-node quotient. The applied subcase is
/// reported through `subcase` when non-null.
Qasst extend(const Qasst& t, const Extension& e, Vertex p, ExtensionSubcase* subcase = nullptr);

/// Local complement transmitted through the tree: complement at v's node,
/// then at the partner of every split-node neighbor, recursively.
Qasst lc_propagate(const Qasst& t, Vertex v);

/// Decomposition of the induced subgraph on `keep` (relabeled 1..|keep| in
/// ascending order), obtained by deleting the other leaf-nodes and repairing
/// the tree. Throws NotConnectedError when the induced subgraph is disconnected.
Qasst induced_qasst(const Qasst& t, const std::vector<Vertex>& keep);

struct DhSample {
  Graph graph;
  /// trace[p - 2] created vertex p.
  std::vector<Extension> trace;
};

/// Reproducible random distance-hereditary graph on n vertices, built from a
/// single vertex by uniformly random one-vertex extensions.
DhSample random_dh(int n, std::uint64_t seed);

}  // namespace lcq
