#include "lcq/symmetry.hpp"

#include <algorithm>

namespace lcq {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidSpecError(what);
}

int center_index(const SymmetryCase& c, int i) {
  if (c.centers.empty() || c.centers[i - 1] == 0) return 1;
  return c.centers[i - 1];
}

// Label of the star center of block i.
Vertex center_label(const SymmetryCase& c, const std::vector<int>& n_list, int i) {
  return block_vertices(n_list, i)[center_index(c, i) - 1];
}

Vertex first_leaf(const std::vector<int>& n_list, int i) { return block_vertices(n_list, i).front(); }

bool in_set(const std::vector<int>& I, int i) { return std::find(I.begin(), I.end(), i) != I.end(); }

void push_pivot(LcSequence& f, Vertex a, Vertex b) {
  f.steps.insert(f.steps.end(), {a, b, a});
}

}  // namespace

std::string case_label(int case_id, int j) {
  if (case_id == 1) return "1";
  return std::to_string(case_id) + "(" + std::to_string(j) + ")";
}

void validate_case(const SymmetryCase& c, const std::vector<int>& n_list) {
  const int k = static_cast<int>(n_list.size());
  require(k >= 3, "at least three parts required (k >= 3)");
  for (int n : n_list) require(n >= 2, "every part needs at least two vertices");
  require(c.case_id >= 1 && c.case_id <= 3, "case id must be 1, 2 or 3");
  if (c.case_id == 1) {
    require(c.j == 0, "case 1 has no pointer index");
  } else {
    require(c.j >= 1 && c.j <= k, "pointer index j out of range");
    require(!in_set(c.I, c.j), "pointer index j cannot be a star-spoke quotient");
  }
  require(std::is_sorted(c.I.begin(), c.I.end()) &&
              std::adjacent_find(c.I.begin(), c.I.end()) == c.I.end(),
          "index set I must be strictly ascending");
  for (int i : c.I) require(i >= 1 && i <= k, "index set I out of range");
  require(static_cast<int>(c.I.size() % 2) == ss_parity(c.tag, c.case_id),
          "parity of |I| does not match case " + case_label(c.case_id, c.j) + " of the " +
              orbit_tag_name(c.tag) + " orbit");
  if (!c.centers.empty()) {
    require(static_cast<int>(c.centers.size()) == k, "centers must list one entry per part");
    for (int i = 1; i <= k; ++i)
      require(c.centers[i - 1] >= 0 && c.centers[i - 1] <= n_list[i - 1], "star center out of range");
  }
}

Assignment case_assignment(const SymmetryCase& c, const std::vector<int>& n_list) {
  validate_case(c, n_list);
  const int k = static_cast<int>(n_list.size());
  Assignment a;
  a.n_list = n_list;
  a.center = c.j;
  const LeafKind other = c.case_id == 1 ? LeafKind::StarCenter : LeafKind::Complete;
  a.kinds.assign(static_cast<std::size_t>(k), other);
  for (int i : c.I) a.kinds[i - 1] = LeafKind::StarSpoke;
  if (c.case_id == 2) a.kinds[c.j - 1] = LeafKind::StarCenter;
  if (c.case_id == 3) a.kinds[c.j - 1] = LeafKind::Complete;
  a.spoke_centers.assign(static_cast<std::size_t>(k), 0);
  for (int i : c.I) a.spoke_centers[i - 1] = center_index(c, i);
  return a;
}

Graph realize(const SymmetryCase& c, const std::vector<int>& n_list) {
  return reconstruct(assignment_qasst(case_assignment(c, n_list)));
}

std::vector<CasePattern> enumerate_cases(OrbitTag tag, const std::vector<int>& n_list) {
  const int k = static_cast<int>(n_list.size());
  require(k >= 3 && k <= 20, "enumeration supports 3 <= k <= 20");
  for (int n : n_list) require(n >= 2, "every part needs at least two vertices");
  // Subsets of `pool` with the given |I| parity, lexicographically ordered.
  auto subsets = [&](int excluded, int parity) {
    std::vector<std::vector<int>> out;
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
      if (excluded && (mask & (1u << (excluded - 1)))) continue;
      if (__builtin_popcount(mask) % 2 != parity) continue;
      std::vector<int> I;
      for (int i = 1; i <= k; ++i)
        if (mask & (1u << (i - 1))) I.push_back(i);
      out.push_back(std::move(I));
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  std::vector<CasePattern> out;
  auto emit = [&](int case_id, int j) {
    for (auto& I : subsets(j, ss_parity(tag, case_id))) {
      BigInt mult = 1;
      for (int i : I) mult *= n_list[i - 1];
      out.push_back(CasePattern{SymmetryCase{tag, case_id, j, std::move(I), {}}, mult});
    }
  };
  emit(1, 0);
  for (int case_id = 2; case_id <= 3; ++case_id)
    for (int j = 1; j <= k; ++j) emit(case_id, j);
  return out;
}

std::vector<Graph> enumerate_members(OrbitTag tag, const std::vector<int>& n_list) {
  std::vector<Graph> out;
  for (const CasePattern& p : enumerate_cases(tag, n_list)) {
    SymmetryCase c = p.pattern;
    c.centers.assign(n_list.size(), 0);
    for (int i : c.I) c.centers[i - 1] = 1;
    // Odometer over the star-center choices of the quotients in I.
    for (;;) {
      out.push_back(realize(c, n_list));
      std::size_t pos = 0;
      for (; pos < c.I.size(); ++pos) {
        const int i = c.I[pos];
        if (c.centers[i - 1] < n_list[i - 1]) {
          ++c.centers[i - 1];
          break;
        }
        c.centers[i - 1] = 1;
      }
      if (pos == c.I.size()) break;
    }
  }
  return out;
}

Graph orbit_base(OrbitTag tag, const std::vector<int>& n_list, int r) {
  return tag == OrbitTag::KPartite ? complete_multipartite(n_list) : clique_star(n_list, r);
}

LcSequence synthesize_transformation(const SymmetryCase& c, const std::vector<int>& n_list, int r) {
  validate_case(c, n_list);
  const int k = static_cast<int>(n_list.size());
  LcSequence f;
  if (c.tag == OrbitTag::KPartite) {
    if (c.case_id == 1) {
      // Consecutive pairs of I, each turned star-spoke by one component pivot.
      for (std::size_t p = 0; p + 1 < c.I.size(); p += 2)
        push_pivot(f, center_label(c, n_list, c.I[p]), center_label(c, n_list, c.I[p + 1]));
    } else {
      // Point Q_0 at Q_j, then each complement at a star center flips Q_j
      // between star-center and complete.
      f.steps.push_back(first_leaf(n_list, c.j));
      for (int i : c.I) f.steps.push_back(center_label(c, n_list, i));
    }
    return f;
  }
  require(r >= 1 && r <= k, "clique-center index r out of range");
  if (c.case_id == 1) {
    for (int i : c.I)
      if (i != r) f.steps.push_back(center_label(c, n_list, i));
    f.steps.push_back(in_set(c.I, r) ? center_label(c, n_list, r) : first_leaf(n_list, r));
  } else {
    if (c.j != r) push_pivot(f, first_leaf(n_list, r), first_leaf(n_list, c.j));
    for (int i : c.I) f.steps.push_back(center_label(c, n_list, i));
  }
  return f;
}

std::optional<SymmetryCase> classify_member(const std::vector<int>& n_list, const Graph& g) {
  const int k = static_cast<int>(n_list.size());
  if (k < 3 || !is_connected(g)) return std::nullopt;
  const Qasst t = compute_qasst(g);
  if (static_cast<int>(t.quotients.size()) != k + 1) return std::nullopt;
  const Quotient& q0 = t.quotients[0];
  if (!q0.leaves().empty() || q0.size() != k) return std::nullopt;

  // Outer quotient index of each block.
  std::vector<int> quotient_of(static_cast<std::size_t>(k + 1), -1);
  for (int qi = 1; qi <= k; ++qi) {
    auto leaves = t.quotients[qi].leaves();
    std::sort(leaves.begin(), leaves.end());
    if (leaves.empty()) return std::nullopt;
    const int i = block_of(n_list, leaves.front());
    if (leaves != block_vertices(n_list, i) || quotient_of[i] != -1) return std::nullopt;
    if (t.quotients[qi].size() != n_list[i - 1] + 1 || t.quotients[qi].find_split(0) == 0) return std::nullopt;
    quotient_of[i] = qi;
  }

  SymmetryCase c;
  c.centers.assign(static_cast<std::size_t>(k), 0);
  const QuotientKind k0 = classify_quotient(q0);
  if (k0.tag == KindTag::Star) {
    const int partner = q0.nodes[k0.center - 1].partner;
    c.j = block_of(n_list, t.quotients[partner].leaves().front());
  } else if (k0.tag != KindTag::Complete) {
    return std::nullopt;
  }
  std::vector<LeafKind> kinds(static_cast<std::size_t>(k));
  for (int i = 1; i <= k; ++i) {
    const int qi = quotient_of[i];
    const QuotientKind kind = kind_toward(t, qi, 0);
    switch (kind.tag) {
      case KindTag::Complete: kinds[i - 1] = LeafKind::Complete; break;
      case KindTag::StarCenter: kinds[i - 1] = LeafKind::StarCenter; break;
      case KindTag::StarSpoke: {
        kinds[i - 1] = LeafKind::StarSpoke;
        c.I.push_back(i);
        const Vertex center = t.quotients[qi].nodes[kind.center - 1].leaf;
        const auto block = block_vertices(n_list, i);
        c.centers[i - 1] = static_cast<int>(std::find(block.begin(), block.end(), center) - block.begin()) + 1;
        break;
      }
      default: return std::nullopt;
    }
  }
  if (c.j == 0) {
    c.case_id = 1;
  } else {
    c.case_id = kinds[c.j - 1] == LeafKind::StarCenter ? 2 : 3;
  }
  // The parity of |I| tells the two orbits apart.
  c.tag = static_cast<int>(c.I.size() % 2) == ss_parity(OrbitTag::KPartite, c.case_id) ? OrbitTag::KPartite
                                                                                      : OrbitTag::CliqueStar;
  return c;
}

std::string vertex_role_name(VertexRole role) {
  switch (role) {
    case VertexRole::CenterOfSpokeStar: return "center of ss";
    case VertexRole::SpokeOfSpokeStar: return "spoke of ss";
    case VertexRole::NodeOfCenterStar: return "node of sc";
    case VertexRole::NodeOfComplete: return "node of c";
  }
  return "?";
}

RoleAt vertex_role(const SymmetryCase& c, const std::vector<int>& n_list, Vertex v) {
  const Assignment a = case_assignment(c, n_list);
  const int i = block_of(n_list, v);
  switch (a.kinds[i - 1]) {
    case LeafKind::Complete: return {VertexRole::NodeOfComplete, i};
    case LeafKind::StarCenter: return {VertexRole::NodeOfCenterStar, i};
    case LeafKind::StarSpoke:
      return {v == center_label(c, n_list, i) ? VertexRole::CenterOfSpokeStar : VertexRole::SpokeOfSpokeStar, i};
  }
  throw InvalidSpecError("unreachable vertex role");
}

CaseRef closure_step(const SymmetryCase& c, VertexRole role, int i) {
  const int k = static_cast<int>(c.centers.empty() ? 0 : c.centers.size());
  require(i >= 1 && (k == 0 || i <= k), "quotient index out of range");
  const bool spoke_star = in_set(c.I, i);
  const bool ss_role = role == VertexRole::CenterOfSpokeStar || role == VertexRole::SpokeOfSpokeStar;
  require(ss_role == spoke_star, "role " + vertex_role_name(role) + " cannot occur at Q_" + std::to_string(i) +
                                     " in case " + case_label(c.case_id, c.j));
  if (ss_role) {
    if (role == VertexRole::SpokeOfSpokeStar) return {c.case_id, c.j};  // 1-b, 2(j)-c, 3(j)-c
    if (c.case_id == 1) return {3, i};                                   // 1-a
    return {c.case_id == 2 ? 3 : 2, c.j};                                // 2(j)-b, 3(j)-b
  }
  switch (c.case_id) {
    case 1:
      require(role == VertexRole::NodeOfCenterStar, "case 1 has no complete outer quotient");
      return {2, i};  // 1-c
    case 2:
      if (role == VertexRole::NodeOfCenterStar) {
        require(i == c.j, "only Q_j is star-center in case 2(j)");
        return {1, 0};  // 2(j)-a
      }
      require(i != c.j, "Q_j is star-center in case 2(j)");
      return {3, c.j};  // 2(j)-d
    default:
      require(role == VertexRole::NodeOfComplete, "case 3(j) has no star-center outer quotient");
      if (i == c.j) return {1, 0};  // 3(j)-a
      return {2, c.j};              // 3(j)-d
  }
}

// ------------------------------------------------------------- K_{n,m} ---

std::vector<BipartiteRow> bipartite_rows(int n, int m) {
  require(n >= 2 && m >= 2, "K_{n,m} requires n, m >= 2");
  static constexpr LeafKind kOrder[] = {LeafKind::StarCenter, LeafKind::Complete, LeafKind::StarSpoke};
  std::vector<BipartiteRow> rows;
  for (LeafKind a : kOrder) {
    for (LeafKind b : kOrder) {
      BipartiteRow row{a, b, false, 0};
      const bool invalid = (a == LeafKind::Complete && b == LeafKind::Complete) ||
                           (a == LeafKind::StarCenter && b == LeafKind::StarSpoke) ||
                           (a == LeafKind::StarSpoke && b == LeafKind::StarCenter);
      row.valid = !invalid;
      if (row.valid) row.multiplicity = (a == LeafKind::StarSpoke ? n : 1) * (b == LeafKind::StarSpoke ? m : 1);
      rows.push_back(row);
    }
  }
  return rows;
}

Graph realize_bipartite(int n, int m, LeafKind q1, LeafKind q2, int c1, int c2) {
  require(n >= 2 && m >= 2, "K_{n,m} requires n, m >= 2");
  require(c1 >= 1 && c1 <= n && c2 >= 1 && c2 <= m, "star center out of range");
  Qasst t;
  t.n = n + m;
  auto side = [](int size, Vertex first, int partner, LeafKind kind, int center) {
    Quotient q;
    for (int x = 0; x < size; ++x) q.nodes.push_back(QNode::make_leaf(first + x));
    q.nodes.push_back(QNode::make_split(partner));
    const int s = size + 1;
    q.graph = Graph(s);
    for (int u = 1; u <= s; ++u) {
      for (int v = u + 1; v <= s; ++v) {
        const bool edge = kind == LeafKind::Complete || (kind == LeafKind::StarCenter && v == s) ||
                          (kind == LeafKind::StarSpoke && (u == center || v == center));
        if (edge) q.graph.add_edge(u, v);
      }
    }
    return q;
  };
  t.quotients.push_back(side(n, 1, 1, q1, c1));
  t.quotients.push_back(side(m, n + 1, 0, q2, c2));
  const QuotientKind k1 = kind_toward(t, 0, 1), k2 = kind_toward(t, 1, 0);
  require(join_validity(k1, k2), "invalid join: " + leaf_kind_name(q1) + "-" + leaf_kind_name(q2));
  return reconstruct(t);
}

std::vector<Graph> enumerate_bipartite_members(int n, int m) {
  std::vector<Graph> out;
  for (const BipartiteRow& row : bipartite_rows(n, m)) {
    if (!row.valid) continue;
    const int r1 = row.q1 == LeafKind::StarSpoke ? n : 1;
    const int r2 = row.q2 == LeafKind::StarSpoke ? m : 1;
    for (int c1 = 1; c1 <= r1; ++c1)
      for (int c2 = 1; c2 <= r2; ++c2) out.push_back(realize_bipartite(n, m, row.q1, row.q2, c1, c2));
  }
  return out;
}

}  // namespace lcq
