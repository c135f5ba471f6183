#pragma once

// Entry points shared between the decomposition and the dynamic operations.

#include "lcq/qasst.hpp"
#include "lcq/qasst_ops.hpp"

namespace lcq::detail {

/// One-vertex extension adding a leaf with an arbitrary label `p` (the public
/// extend() insists on p = n + 1). Does not renumber canonically.
Qasst extend_labeled(const Qasst& t, ExtensionKind kind, Vertex anchor, Vertex p,
                     ExtensionSubcase* subcase);

/// Single-quotient tree holding `g`, with leaf t labeled labels[t - 1].
Qasst single_quotient(const Graph& g, const std::vector<Vertex>& labels, int n);

/// Redirects every split-node of quotient `owner` pointing at `from` to `to`.
void repoint(Qasst& t, int owner, int from, int to);
/// Removes quotient `gone` and shifts higher partner indices down.
void erase_quotient(Qasst& t, int gone);
/// Quotient restricted to the local nodes in `keep`, preserving node order.
Quotient restrict_quotient(const Quotient& q, VertexMask keep);
/// Appends an isolated node; returns its local index.
int append_node(Quotient& q, const QNode& node);

}  // namespace lcq::detail
