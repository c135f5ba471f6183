#include "verify.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "lcq/counting.hpp"
#include "lcq/io.hpp"
#include "lcq/orbit.hpp"
#include "lcq/qasst_ops.hpp"
#include "lcq/symmetry.hpp"

namespace lcq::cli {

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Check {
  std::string id;
  std::string name;
  std::function<Outcome()> run;
};

std::string join(const std::vector<int>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s;
}

std::set<std::string> key_set(const std::vector<Graph>& gs) {
  std::set<std::string> keys;
  for (const Graph& g : gs) keys.insert(canonical_key(g));
  return keys;
}

// Orbit-size, member-set, minimum-edge and minimum-degree agreement for one
// multipartite instance.
Outcome multipartite_instance(OrbitTag tag, const std::vector<int>& n_list, std::size_t budget) {
  const Orbit o = enumerate_orbit(orbit_base(tag, n_list), budget, false);
  const BigInt formula = orbit_size(tag, n_list);
  Outcome r;
  std::ostringstream d;
  d << "oracle=" << o.size() << " formula=" << formula;
  r.pass = BigInt(o.size()) == formula;
  const bool same_members = key_set(o.members) == key_set(enumerate_members(tag, n_list));
  r.pass = r.pass && same_members;
  const auto edge_reps = min_edge_rep(tag, n_list);
  const auto degree_reps = min_max_degree_rep(tag, n_list);
  const int min_e = min_edge_member(o).value, min_d = min_max_degree_member(o).value;
  d << " minE=" << min_e << "/" << edge_reps.front().value << " minD=" << min_d << "/"
    << degree_reps.front().value;
  r.pass = r.pass && min_e == edge_reps.front().value && min_d == degree_reps.front().value;
  if (!same_members) d << " member-set mismatch";
  r.detail = d.str();
  return r;
}

Outcome bipartite_instance(int n, int m, std::size_t budget) {
  const Orbit o = enumerate_orbit(complete_bipartite(n, m), budget, false);
  Outcome r;
  std::ostringstream d;
  d << "oracle=" << o.size() << " formula=" << bipartite_orbit_size(n, m);
  const int min_e = min_edge_member(o).value, min_d = min_max_degree_member(o).value;
  d << " minE=" << min_e << " minD=" << min_d;
  r.pass = BigInt(o.size()) == bipartite_orbit_size(n, m) && min_e == bipartite_min_edges(n, m) &&
           min_d == bipartite_min_max_degree(n, m) &&
           key_set(o.members) == key_set(enumerate_bipartite_members(n, m));
  r.detail = d.str();
  return r;
}

Outcome random_dh_checks(int count, int max_n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  int failures = 0;
  for (int s = 0; s < count; ++s) {
    const int n = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n - 1));
    const DhSample dh = random_dh(n, rng());
    const Qasst t = compute_qasst(dh.graph);
    Qasst replay = compute_qasst(Graph(1));
    for (std::size_t p = 0; p < dh.trace.size(); ++p) replay = extend(replay, dh.trace[p], static_cast<Vertex>(p + 2));
    bool ok = reconstruct(t) == dh.graph && t == compute_qasst(dh.graph, DecompositionMethod::BruteForce) &&
              replay == t && is_distance_hereditary(dh.graph);
    const Vertex v = 1 + static_cast<Vertex>(rng() % static_cast<std::uint64_t>(n));
    ok = ok && lc_propagate(t, v) == compute_qasst(local_complement(dh.graph, v));
    if (!ok) ++failures;
  }
  return {failures == 0, std::to_string(count) + " graphs, " + std::to_string(failures) + " failures"};
}

Outcome closure_instance(OrbitTag tag, const std::vector<int>& n_list, std::size_t budget) {
  const Orbit o = enumerate_orbit(orbit_base(tag, n_list), budget, false);
  std::size_t checked = 0, wrong = 0;
  for (const Graph& g : o.members) {
    const auto c = classify_member(n_list, g);
    if (!c || c->tag != tag) {
      ++wrong;
      continue;
    }
    for (Vertex v = 1; v <= g.n(); ++v) {
      const RoleAt role = vertex_role(*c, n_list, v);
      const CaseRef predicted = closure_step(*c, role.role, role.i);
      const auto next = classify_member(n_list, local_complement(g, v));
      ++checked;
      if (!next || next->tag != tag || CaseRef{next->case_id, next->j} != predicted) ++wrong;
    }
  }
  return {wrong == 0, std::to_string(checked) + " transitions, " + std::to_string(wrong) + " mismatches"};
}

std::vector<Check> desk_checks(const VerifyOptions& opt) {
  const std::size_t budget = opt.budget;
  std::vector<Check> checks;
  for (auto [n, m] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 3}}) {
    checks.push_back({"bip-" + std::to_string(n) + std::to_string(m), "K_{" + std::to_string(n) + "," + std::to_string(m) + "} orbit and rows",
                      [=] { return bipartite_instance(n, m, budget); }});
  }
  for (const auto& n_list : std::vector<std::vector<int>>{{2, 2, 2}, {2, 2, 3}, {2, 2, 2, 2}}) {
    for (OrbitTag tag : {OrbitTag::KPartite, OrbitTag::CliqueStar}) {
      checks.push_back({orbit_tag_name(tag) + "-" + join(n_list), orbit_tag_name(tag) + " (" + join(n_list) + ") orbit",
                        [=] { return multipartite_instance(tag, n_list, budget); }});
    }
  }
  checks.push_back({"disjoint-222", "K_{2,2,2} and CS^1 orbits disjoint", [=] {
                      const Orbit a = enumerate_orbit(orbit_base(OrbitTag::KPartite, {2, 2, 2}), budget, false);
                      const Orbit b = enumerate_orbit(orbit_base(OrbitTag::CliqueStar, {2, 2, 2}), budget, false);
                      std::size_t shared = 0;
                      for (const Graph& g : b.members) shared += a.contains(g) ? 1 : 0;
                      const BigInt total = BigInt(a.size() + b.size());
                      return Outcome{shared == 0 && total == kpartite_phi({2, 2, 2}),
                                     "shared=" + std::to_string(shared) + " sum=" + total.str()};
                    }});
  checks.push_back({"mlr-parity", "R_3 in O(CS^1_{2,2,2}), R_4 in O(K_{2,2,2,2})", [=] {
                      const bool r3 = are_lc_equivalent(clique_star({2, 2, 2}, 1), repeater(3), budget) == Equivalence::Equivalent;
                      const bool r4 = are_lc_equivalent(complete_multipartite({2, 2, 2, 2}), repeater(4), budget) ==
                                      Equivalence::Equivalent;
                      return Outcome{r3 && r4, std::string("R3:") + (r3 ? "yes" : "no") + " R4:" + (r4 ? "yes" : "no")};
                    }});
  checks.push_back({"iso-classes", "isomorphism classes per orbit", [=] {
                      const auto count = [&](const Graph& g) { return orbit_iso_classes(enumerate_orbit(g, budget, false)).size(); };
                      const std::size_t a = count(complete_bipartite(2, 2)), b = count(complete_bipartite(2, 3));
                      const std::size_t c = count(complete_multipartite({2, 2, 2})), d = count(clique_star({2, 2, 2}, 1));
                      const bool ok = static_cast<std::int64_t>(a) == bipartite_iso_class_count(2, 2) &&
                                      static_cast<std::int64_t>(b) == bipartite_iso_class_count(2, 3) &&
                                      static_cast<std::int64_t>(c) == iso_class_count(OrbitTag::KPartite, 3) &&
                                      static_cast<std::int64_t>(d) == iso_class_count(OrbitTag::CliqueStar, 3);
                      return Outcome{ok, std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "," +
                                             std::to_string(d)};
                    }});
  checks.push_back({"phi-dp", "tree DP equals closed form (k<=4, n_i<=3)", [] {
                      int cases = 0, bad = 0;
                      for (int k = 3; k <= 4; ++k) {
                        std::vector<int> n_list(static_cast<std::size_t>(k), 2);
                        for (;;) {
                          ++cases;
                          if (phi_count(compute_qasst(complete_multipartite(n_list))) != kpartite_phi(n_list)) ++bad;
                          std::size_t p = 0;
                          while (p < n_list.size() && n_list[p] == 3) n_list[p++] = 2;
                          if (p == n_list.size()) break;
                          ++n_list[p];
                        }
                      }
                      const bool k22 = phi_count(compute_qasst(complete_bipartite(2, 2))) == 11;
                      return Outcome{bad == 0 && k22, std::to_string(cases) + " instances, K22=11:" + (k22 ? "yes" : "no")};
                    }});
  for (OrbitTag tag : {OrbitTag::KPartite, OrbitTag::CliqueStar}) {
    checks.push_back({"closure-" + orbit_tag_name(tag), orbit_tag_name(tag) + " (2,2,2) closure table",
                      [=] { return closure_instance(tag, {2, 2, 2}, budget); }});
  }
  checks.push_back({"bouchet", "path/cycle formulas (oracle ratio reported)", [=] {
                      std::ostringstream d;
                      const bool ok = bouchet_path_count(3) == 16 && bouchet_path_count(4) == 44 &&
                                      bouchet_path_count(5) == 120 && bouchet_cycle_count(4) == 44 &&
                                      bouchet_cycle_count(5) == 132;
                      for (int n : {3, 4, 5}) d << "P" << n << "=" << bouchet_path_count(n) << "/" << enumerate_orbit(path_graph(n), budget, false).size() << " ";
                      for (int n : {4, 5}) d << "C" << n << "=" << bouchet_cycle_count(n) << "/" << enumerate_orbit(cycle_graph(n), budget, false).size() << " ";
                      return Outcome{ok, d.str() + "(formula/oracle)"};
                    }});
  checks.push_back({"random-dh", "decomposition, extension and propagation on random DH graphs",
                    [seed = opt.seed] { return random_dh_checks(200, 12, seed); }});
  return checks;
}

std::vector<Check> extended_checks(const VerifyOptions& opt) {
  const std::size_t budget = opt.budget;
  std::vector<Check> checks;
  for (auto [n, m] : std::vector<std::pair<int, int>>{{2, 4}, {3, 4}, {4, 4}, {3, 5}}) {
    checks.push_back({"bip-" + std::to_string(n) + std::to_string(m), "K_{" + std::to_string(n) + "," + std::to_string(m) + "} orbit and rows",
                      [=] { return bipartite_instance(n, m, budget); }});
  }
  for (const auto& n_list : std::vector<std::vector<int>>{
           {2, 3, 3}, {3, 3, 3}, {2, 3, 4}, {2, 2, 2, 2, 2}, {2, 2, 2, 3}, {3, 3, 3, 3}, {4, 4, 4, 4}, {5, 5, 5, 5}}) {
    for (OrbitTag tag : {OrbitTag::KPartite, OrbitTag::CliqueStar}) {
      checks.push_back({orbit_tag_name(tag) + "-" + join(n_list), orbit_tag_name(tag) + " (" + join(n_list) + ") orbit",
                        [=] { return multipartite_instance(tag, n_list, budget); }});
    }
  }
  for (OrbitTag tag : {OrbitTag::KPartite, OrbitTag::CliqueStar}) {
    checks.push_back({"closure-" + orbit_tag_name(tag) + "-2222", orbit_tag_name(tag) + " (2,2,2,2) closure table",
                      [=] { return closure_instance(tag, {2, 2, 2, 2}, budget); }});
  }
  checks.push_back({"random-dh-large", "random DH graphs up to 20 vertices",
                    [seed = opt.seed] { return random_dh_checks(1000, 20, seed + 1); }});
  return checks;
}

}  // namespace

int run_verify(const VerifyOptions& options, std::ostream& out) {
  std::vector<Check> checks = desk_checks(options);
  if (options.suite == Suite::Extended) {
    auto more = extended_checks(options);
    checks.insert(checks.end(), more.begin(), more.end());
  }
  int failed = 0;
  Json rows = Json::array();
  for (const Check& c : checks) {
    Outcome r;
    try {
      r = c.run();
    } catch (const BudgetExceededError& e) {
      r = {false, std::string("budget exceeded: ") + e.what()};
    } catch (const Error& e) {
      r = {false, std::string("error: ") + e.what()};
    }
    failed += r.pass ? 0 : 1;
    if (options.json) {
      rows.push_back(Json{{"id", c.id}, {"name", c.name}, {"pass", r.pass}, {"detail", r.detail}});
    } else {
      out << (r.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(26) << c.id << ' ' << c.name << " -- " << r.detail
          << '\n';
    }
  }
  if (options.json) {
    out << Json{{"checks", rows}, {"failed", failed}}.dump(2) << '\n';
  } else {
    out << (checks.size() - static_cast<std::size_t>(failed)) << "/" << checks.size() << " checks passed\n";
  }
  return failed;
}

}  // namespace lcq::cli
