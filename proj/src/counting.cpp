#include "lcq/counting.hpp"

#include <algorithm>
#include <functional>

namespace lcq {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidSpecError(what);
}

void require_parts(const std::vector<int>& n_list) {
  require(n_list.size() >= 3, "at least three parts required (k >= 3)");
  for (int n : n_list) require(n >= 2, "every part needs at least two vertices");
  std::int64_t total = 0;
  for (int n : n_list) total += n;
  require(total <= Graph::kMaxVertices, "total vertex count exceeds 64");
}

// m-th terms of s_m = 2 s_{m-1} + 2 s_{m-2}, the recurrence whose
// characteristic roots are 1 +- sqrt3.
BigInt sqrt3_recurrence(int m, BigInt s0, BigInt s1) {
  if (m == 0) return s0;
  for (int i = 2; i <= m; ++i) {
    BigInt next = 2 * s1 + 2 * s0;
    s0 = std::move(s1);
    s1 = std::move(next);
  }
  return s1;
}

// prod (1 + n_i x) at x = +1 and x = -1.
std::pair<BigInt, BigInt> signed_products(const std::vector<int>& n_list) {
  BigInt plus = 1, minus = 1;
  for (int n : n_list) {
    plus *= 1 + n;
    minus *= 1 - n;
  }
  return {plus, minus};
}

// sum_j prod_{i != j} (n_i + 1)
BigInt pointed_terms(const std::vector<int>& n_list) {
  BigInt sum = 0;
  for (std::size_t j = 0; j < n_list.size(); ++j) {
    BigInt p = 1;
    for (std::size_t i = 0; i < n_list.size(); ++i)
      if (i != j) p *= n_list[i] + 1;
    sum += p;
  }
  return sum;
}

}  // namespace

BigInt bouchet_path_count(int n) {
  require(n >= 1, "path count requires n >= 1");
  // ((1+sqrt3)^m - (1-sqrt3)^m) / sqrt3 starts 0, 2; the closed form is half
  // of its (n+1)-th term.
  return sqrt3_recurrence(n + 1, 0, 2) / 2;
}

BigInt bouchet_cycle_count(int n) {
  require(n >= 3, "cycle count requires n >= 3");
  // (1+sqrt3)^m + (1-sqrt3)^m starts 2, 2.
  const BigInt lucas = sqrt3_recurrence(n, 2, 2);
  const BigInt pow2 = BigInt(1) << (n - 1);
  const BigInt correction = 4 * (pow2 + (n % 2 == 0 ? 1 : -1)) / 3;
  return lucas - correction;
}

// ---------------------------------------------------------------- phi DP ---

BigInt phi_count(const Qasst& t) {
  validate(t);
  const int k = static_cast<int>(t.quotients.size());
  for (const Quotient& q : t.quotients) {
    if (classify_quotient(q).tag == KindTag::Prime) {
      throw UnsupportedError("counting requires star or complete quotients (distance-hereditary graph)");
    }
  }
  if (k == 1 && t.quotients[0].size() <= 2) return 1;
  if (k == 1) return t.quotients[0].size() + 1;

  // Option 0 is the complete quotient, option c >= 1 the star centered at
  // local node c.
  auto kind_of = [](int option, int at) {
    if (option == 0) return QuotientKind{KindTag::Complete, 0};
    return option == at ? QuotientKind{KindTag::StarCenter, 0} : QuotientKind{KindTag::StarSpoke, option};
  };
  std::function<std::vector<BigInt>(int, int)> solve = [&](int i, int parent) {
    const Quotient& q = t.quotients[i];
    std::vector<BigInt> ways(static_cast<std::size_t>(q.size() + 1), 1);
    for (const QNode& node : q.nodes) {
      if (!node.is_split || node.partner == parent) continue;
      const int j = node.partner;
      const std::vector<BigInt> sub = solve(j, i);
      const int here = q.find_split(j);
      const int there = t.quotients[j].find_split(i);
      for (int o = 0; o <= q.size(); ++o) {
        BigInt acc = 0;
        for (int o2 = 0; o2 < static_cast<int>(sub.size()); ++o2)
          if (join_validity(kind_of(o, here), kind_of(o2, there))) acc += sub[o2];
        ways[o] *= acc;
      }
    }
    return ways;
  };
  BigInt total = 0;
  for (const BigInt& w : solve(0, -1)) total += w;
  return total;
}

BigInt kpartite_phi(const std::vector<int>& n_list) {
  require_parts(n_list);
  return signed_products(n_list).first + 2 * pointed_terms(n_list);
}

BigInt bipartite_orbit_size(int n, int m) {
  require(n >= 2 && m >= 2, "K_{n,m} orbit formula requires n, m >= 2");
  return BigInt(n) * m + n + m + 3;
}

BigInt kpartite_orbit_size(const std::vector<int>& n_list) {
  require_parts(n_list);
  const auto [plus, minus] = signed_products(n_list);
  return (plus + minus) / 2 + pointed_terms(n_list);
}

BigInt clique_star_orbit_size(const std::vector<int>& n_list) {
  require_parts(n_list);
  const auto [plus, minus] = signed_products(n_list);
  return (plus - minus) / 2 + pointed_terms(n_list);
}

BigInt orbit_size(OrbitTag tag, const std::vector<int>& n_list) {
  return tag == OrbitTag::KPartite ? kpartite_orbit_size(n_list) : clique_star_orbit_size(n_list);
}

std::int64_t iso_class_count(OrbitTag tag, int k) {
  require(k >= 3, "isomorphism-class count requires k >= 3");
  if (tag == OrbitTag::KPartite) return k / 2 + k + 1;
  return (k + 1) / 2 + k;
}

std::int64_t bipartite_iso_class_count(int n, int m) {
  require(n >= 2 && m >= 2, "K_{n,m} class count requires n, m >= 2");
  return n == m ? 4 : 6;
}

// ----------------------------------------------------------- assignments ---

std::string leaf_kind_name(LeafKind kind) {
  switch (kind) {
    case LeafKind::Complete: return "c";
    case LeafKind::StarCenter: return "sc";
    case LeafKind::StarSpoke: return "ss";
  }
  return "?";
}

bool assignment_valid(const Assignment& a) {
  const int k = static_cast<int>(a.n_list.size());
  if (k < 3 || static_cast<int>(a.kinds.size()) != k || a.center < 0 || a.center > k) return false;
  for (int n : a.n_list)
    if (n < 2) return false;
  for (int i = 1; i <= k; ++i) {
    const LeafKind kind = a.kinds[i - 1];
    if (a.center == 0) {
      if (kind == LeafKind::Complete) return false;  // complete-complete
    } else if (i == a.center) {
      if (kind == LeafKind::StarSpoke) return false;  // center-spoke
    } else if (kind == LeafKind::StarCenter) {
      return false;  // spoke-center
    }
  }
  return true;
}

void require_valid(const Assignment& a) {
  require(assignment_valid(a), "assignment violates a join rule or has bad parameters");
  if (!a.spoke_centers.empty()) {
    require(a.spoke_centers.size() == a.n_list.size(), "spoke_centers must list one entry per part");
    for (std::size_t i = 0; i < a.n_list.size(); ++i)
      require(a.spoke_centers[i] >= 0 && a.spoke_centers[i] <= a.n_list[i], "spoke center out of range");
  }
}

Qasst assignment_qasst(const Assignment& a) {
  require_valid(a);
  const int k = static_cast<int>(a.n_list.size());
  Qasst t;
  Quotient q0;
  for (int i = 1; i <= k; ++i) q0.nodes.push_back(QNode::make_split(i));
  q0.graph = Graph(k);
  for (int u = 1; u <= k; ++u)
    for (int v = u + 1; v <= k; ++v)
      if (a.center == 0 || u == a.center || v == a.center) q0.graph.add_edge(u, v);
  t.quotients.push_back(std::move(q0));
  for (int i = 1; i <= k; ++i) {
    const int n = a.n_list[i - 1];
    Quotient q;
    for (Vertex v : block_vertices(a.n_list, i)) q.nodes.push_back(QNode::make_leaf(v));
    q.nodes.push_back(QNode::make_split(0));
    q.graph = Graph(n + 1);
    const int split = n + 1;
    switch (a.kinds[i - 1]) {
      case LeafKind::Complete:
        for (int u = 1; u <= split; ++u)
          for (int v = u + 1; v <= split; ++v) q.graph.add_edge(u, v);
        break;
      case LeafKind::StarCenter:
        for (int u = 1; u < split; ++u) q.graph.add_edge(u, split);
        break;
      case LeafKind::StarSpoke: {
        const int c = a.spoke_centers.empty() || a.spoke_centers[i - 1] == 0 ? 1 : a.spoke_centers[i - 1];
        for (int u = 1; u <= split; ++u)
          if (u != c) q.graph.add_edge(c, u);
        break;
      }
    }
    t.quotients.push_back(std::move(q));
  }
  t.n = 0;
  for (int n : a.n_list) t.n += n;
  canonicalize(t);
  return t;
}

namespace {

// Number of leaves each outer quotient exposes across its split: all of them
// unless it is a star whose center is a leaf.
std::int64_t exposed(const Assignment& a, int i) {
  return a.kinds[i - 1] == LeafKind::StarSpoke ? 1 : a.n_list[i - 1];
}

bool central_adjacent(const Assignment& a, int i, int l) {
  return a.center == 0 || i == a.center || l == a.center;
}

}  // namespace

std::int64_t edge_count_from_assignment(const Assignment& a) {
  require_valid(a);
  const int k = static_cast<int>(a.n_list.size());
  std::int64_t edges = 0;
  for (int i = 1; i <= k; ++i) {
    const std::int64_t n = a.n_list[i - 1];
    switch (a.kinds[i - 1]) {
      case LeafKind::Complete: edges += n * (n - 1) / 2; break;
      case LeafKind::StarCenter: break;
      case LeafKind::StarSpoke: edges += n - 1; break;
    }
  }
  for (int i = 1; i <= k; ++i)
    for (int l = i + 1; l <= k; ++l)
      if (central_adjacent(a, i, l)) edges += exposed(a, i) * exposed(a, l);
  return edges;
}

std::int64_t max_degree_from_assignment(const Assignment& a) {
  require_valid(a);
  const int k = static_cast<int>(a.n_list.size());
  std::int64_t best = 0;
  for (int i = 1; i <= k; ++i) {
    std::int64_t ext = 0;
    for (int l = 1; l <= k; ++l)
      if (l != i && central_adjacent(a, i, l)) ext += exposed(a, l);
    const std::int64_t n = a.n_list[i - 1];
    std::int64_t d = 0;
    switch (a.kinds[i - 1]) {
      case LeafKind::Complete: d = n - 1 + ext; break;
      case LeafKind::StarCenter: d = ext; break;
      case LeafKind::StarSpoke: d = std::max<std::int64_t>(n - 1 + ext, 1); break;
    }
    best = std::max(best, d);
  }
  return best;
}

std::vector<Assignment> all_assignments(const std::vector<int>& n_list) {
  require_parts(n_list);
  const int k = static_cast<int>(n_list.size());
  std::vector<Assignment> out;
  std::int64_t combos = 1;
  for (int i = 0; i < k; ++i) combos *= 3;
  for (int center = 0; center <= k; ++center) {
    for (std::int64_t code = 0; code < combos; ++code) {
      Assignment a{n_list, center, {}, {}};
      std::int64_t c = code;
      for (int i = 0; i < k; ++i, c /= 3) a.kinds.push_back(static_cast<LeafKind>(c % 3));
      if (assignment_valid(a)) out.push_back(std::move(a));
    }
  }
  return out;
}

// ------------------------------------------------------- representatives ---

int ss_parity(OrbitTag tag, int case_id) {
  require(case_id >= 1 && case_id <= 3, "case id must be 1, 2 or 3");
  const int kpartite = case_id == 3 ? 1 : 0;
  return tag == OrbitTag::KPartite ? kpartite : 1 - kpartite;
}

RepSpec build_case(OrbitTag tag, const std::vector<int>& n_list, int case_id, int j, int l) {
  require_parts(n_list);
  const int k = static_cast<int>(n_list.size());
  require(j >= 1 && j <= k && l >= 1 && l <= k && j != l, "case indices out of range");
  const int parity = ss_parity(tag, case_id);
  RepSpec r;
  r.tag = tag;
  r.case_id = case_id;
  r.assignment = Assignment{n_list, 0, std::vector<LeafKind>(static_cast<std::size_t>(k), LeafKind::StarSpoke), {}};
  auto& kinds = r.assignment.kinds;
  if (case_id == 1) {
    if (k % 2 != parity) {
      kinds[j - 1] = LeafKind::StarCenter;
      r.j = j;
    }
  } else {
    r.j = j;
    r.assignment.center = j;
    kinds[j - 1] = case_id == 2 ? LeafKind::StarCenter : LeafKind::Complete;
    if ((k - 1) % 2 != parity) {
      kinds[l - 1] = LeafKind::Complete;
      r.l = l;
    }
  }
  r.value = edge_count_from_assignment(r.assignment);
  return r;
}

std::int64_t edge_hyperbola(int k, int n_j) {
  const std::int64_t kk = k, n = n_j;
  return (n - 1) * (kk - 1) + (n - 2) * (n - 1) / 2 - (kk - 2) * (kk - 1) / 2;
}

namespace {

// 1-based indices of the first minimum and of the first minimum among the rest.
std::pair<int, int> two_smallest(const std::vector<int>& n_list) {
  const int k = static_cast<int>(n_list.size());
  int j = 1;
  for (int i = 2; i <= k; ++i)
    if (n_list[i - 1] < n_list[j - 1]) j = i;
  int l = j == 1 ? 2 : 1;
  for (int i = 1; i <= k; ++i)
    if (i != j && n_list[i - 1] < n_list[l - 1]) l = i;
  return {j, l};
}

}  // namespace

std::vector<RepSpec> min_edge_rep(OrbitTag tag, const std::vector<int>& n_list) {
  require_parts(n_list);
  const int k = static_cast<int>(n_list.size());
  const auto [j, l] = two_smallest(n_list);
  const std::int64_t f = edge_hyperbola(k, n_list[j - 1]);
  // The pointed-center candidate wins outright for one parity of k; for the
  // other, the hyperbola sign chooses between case 1 and case 3.
  const bool pointed_parity = tag == OrbitTag::KPartite ? (k % 2 == 1) : (k % 2 == 0);
  std::vector<int> cases;
  if (pointed_parity) {
    cases = {2};
  } else {
    if (f >= 0) cases.push_back(1);
    if (f <= 0) cases.push_back(3);
  }
  std::vector<RepSpec> out;
  for (int c : cases) {
    RepSpec r = build_case(tag, n_list, c, j, l);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<std::int64_t> max_degree_case_values(OrbitTag tag, const std::vector<int>& n_list) {
  require_parts(n_list);
  const std::int64_t k = static_cast<std::int64_t>(n_list.size());
  std::vector<int> sorted = n_list;
  std::sort(sorted.begin(), sorted.end());
  const std::int64_t nj = sorted[0], nt = sorted[1], nl = sorted.back();
  // Whether the number of outer quotients matches the case-1 parity; the
  // complete-center case then uses star-spokes throughout.
  const bool aligned = (k % 2) == ss_parity(tag, 1);
  if (aligned) {
    return {nl + k - 2, std::max(k - 2 + nt, nl - 1 + nj), std::max(nj + k - 2, nl - 1 + nj)};
  }
  return {nl + nj + k - 3, std::max(k - 1, nl - 1 + nj), std::max(nj + nt + k - 3, nl - 1 + nj)};
}

std::vector<RepSpec> min_max_degree_rep(OrbitTag tag, const std::vector<int>& n_list) {
  const auto values = max_degree_case_values(tag, n_list);
  const std::int64_t best = *std::min_element(values.begin(), values.end());
  const auto [j, l] = two_smallest(n_list);
  std::vector<RepSpec> out;
  for (int c = 1; c <= 3; ++c) {
    if (values[c - 1] != best) continue;
    RepSpec r = build_case(tag, n_list, c, j, l);
    r.value = best;
    out.push_back(std::move(r));
  }
  return out;
}

std::int64_t bipartite_min_edges(int n, int m) {
  require(n >= 2 && m >= 2, "K_{n,m} requires n, m >= 2");
  return std::int64_t{n} + m - 1;
}

std::int64_t bipartite_min_max_degree(int n, int m) {
  require(n >= 2 && m >= 2, "K_{n,m} requires n, m >= 2");
  return std::max(n, m);
}

}  // namespace lcq
