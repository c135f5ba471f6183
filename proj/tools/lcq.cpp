// lcq: command-line front end for local complementation orbits and split
// decompositions. Exit codes: 0 success, 1 verification failure, 2 usage or
// input error, 3 orbit budget exceeded.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "lcq/counting.hpp"
#include "lcq/io.hpp"
#include "lcq/orbit.hpp"
#include "lcq/qasst_ops.hpp"
#include "lcq/symmetry.hpp"
#include "verify.hpp"

namespace {

using namespace lcq;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr const char* kBudgetEnv = "LCQ_ORBIT_BUDGET";

struct Config {
  std::string input = "-";
  std::string output = "-";
  std::string format;
  std::size_t budget = kDefaultOrbitBudget;
  std::uint64_t seed = 1;
};

std::size_t default_budget() {
  if (const char* env = std::getenv(kBudgetEnv)) {
    try {
      const long long v = std::stoll(env);
      if (v >= 1) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    throw InvalidSpecError(std::string(kBudgetEnv) + " must be a positive integer");
  }
  return kDefaultOrbitBudget;
}

Json read_input(const Config& cfg) {
  if (cfg.input == "-") return read_json(std::cin);
  std::ifstream in(cfg.input);
  if (!in) throw ParseError("cannot open input file " + cfg.input);
  return read_json(in);
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file " + path);
  return read_json(in);
}

void write_output(const Config& cfg, const std::string& text) {
  if (cfg.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output);
  if (!out) throw ParseError("cannot open output file " + cfg.output);
  out << text;
}

std::string fmt_or(const Config& cfg, const std::string& fallback) {
  return cfg.format.empty() ? fallback : cfg.format;
}

void emit_graph(const Config& cfg, const Graph& g) {
  const std::string f = fmt_or(cfg, "json");
  if (f == "dot") return write_output(cfg, graph_to_dot(g));
  if (f != "json") throw InvalidSpecError("graphs support --format json or dot");
  write_output(cfg, graph_to_json(g).dump() + "\n");
}

void emit_qasst(const Config& cfg, const Qasst& t) {
  const std::string f = fmt_or(cfg, "json");
  if (f == "dot") return write_output(cfg, qasst_to_dot(t));
  if (f != "json") throw InvalidSpecError("decompositions support --format json or dot");
  write_output(cfg, qasst_to_json(t).dump() + "\n");
}

// Either a single JSON value or a one-line table entry, depending on --format.
void emit_value(const Config& cfg, const std::string& label, const Json& value) {
  if (fmt_or(cfg, "table") == "json") {
    write_output(cfg, Json{{label, value}}.dump() + "\n");
  } else {
    write_output(cfg, (value.is_string() ? value.get<std::string>() : value.dump()) + "\n");
  }
}

std::vector<int> parse_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InvalidSpecError("not an integer list: '" + text + "'");
    }
  }
  return out;
}

OrbitTag parse_tag(const std::string& family) {
  if (family == "kpartite") return OrbitTag::KPartite;
  if (family == "clique-star") return OrbitTag::CliqueStar;
  throw InvalidSpecError("family must be kpartite or clique-star, got '" + family + "'");
}

Json rep_json(const RepSpec& r) {
  Json kinds = Json::array();
  for (LeafKind k : r.assignment.kinds) kinds.push_back(leaf_kind_name(k));
  const Graph g = reconstruct(assignment_qasst(r.assignment));
  return Json{{"case", case_label(r.case_id, r.j)},
              {"q0", r.assignment.center == 0 ? "c" : "sc_" + std::to_string(r.assignment.center)},
              {"kinds", kinds},
              {"value", r.value},
              {"graph", graph_to_json(g)}};
}

// ------------------------------------------------------------ handlers ---

void cmd_orbit(const Config& cfg, const std::string& action, const std::string& to) {
  const Graph g = graph_from_json(read_input(cfg));
  if (action == "transform") {
    if (to.empty()) throw InvalidSpecError("orbit transform needs --to <graph.json>");
    const Graph h = graph_from_json(read_file(to));
    const LcSequence f = transformation_between(g, h, cfg.budget);
    return write_output(cfg, sequence_to_json(f).dump() + "\n");
  }
  const Orbit o = enumerate_orbit(g, cfg.budget, false);
  if (action == "size") return emit_value(cfg, "size", o.size());
  if (action == "list") {
    const std::string f = fmt_or(cfg, "json");
    std::string text;
    for (const Graph& m : sorted_members(o)) text += (f == "dot" ? graph_to_dot(m) : graph_to_json(m).dump() + "\n");
    return write_output(cfg, text);
  }
  if (action == "iso") return emit_value(cfg, "iso_classes", orbit_iso_classes(o).size());
  if (action == "min-edge" || action == "min-degree") {
    const MemberMetric m = action == "min-edge" ? min_edge_member(o) : min_max_degree_member(o);
    if (fmt_or(cfg, "json") == "json") {
      return write_output(cfg, Json{{"value", m.value}, {"graph", graph_to_json(m.graph)}}.dump() + "\n");
    }
    return emit_graph(cfg, m.graph);
  }
  throw InvalidSpecError("orbit action must be size, list, iso, min-edge, min-degree or transform");
}

void cmd_count(const Config& cfg, const std::string& what, const std::string& family, const std::string& params,
               bool oracle) {
  const std::vector<int> p = parse_list(params);
  if (what == "phi") {
    const Graph g = family.empty() ? graph_from_json(read_input(cfg)) : build(FamilySpec{parse_family(family), p, 1});
    return emit_value(cfg, "phi", phi_count(compute_qasst(g)).str());
  }
  if (what == "iso-classes") {
    if (family == "bipartite") {
      if (p.size() != 2) throw InvalidSpecError("bipartite needs --params n,m");
      return emit_value(cfg, "iso_classes", bipartite_iso_class_count(p[0], p[1]));
    }
    if (p.size() < 3) throw InvalidSpecError("need --params with at least three parts");
    for (int x : p)
      if (x != p[0]) throw InvalidSpecError("isomorphism-class formula assumes equal part sizes");
    return emit_value(cfg, "iso_classes", iso_class_count(parse_tag(family), static_cast<int>(p.size())));
  }
  if (what != "orbit") throw InvalidSpecError("count target must be orbit, phi or iso-classes");
  BigInt formula;
  Graph base;
  if (family == "bipartite") {
    if (p.size() != 2) throw InvalidSpecError("bipartite needs --params n,m");
    formula = bipartite_orbit_size(p[0], p[1]);
    base = complete_bipartite(p[0], p[1]);
  } else if (family == "path" || family == "cycle") {
    if (p.size() != 1) throw InvalidSpecError(family + " needs --params n");
    formula = family == "path" ? bouchet_path_count(p[0]) : bouchet_cycle_count(p[0]);
    base = family == "path" ? path_graph(p[0]) : cycle_graph(p[0]);
  } else if (family == "mlr") {
    formula = orbit_size(mlr_orbit_home(static_cast<int>(p.size())), p);
    base = multi_leaf_repeater(p);
  } else {
    const OrbitTag tag = parse_tag(family);
    formula = orbit_size(tag, p);
    base = orbit_base(tag, p);
  }
  if (!oracle) return emit_value(cfg, "size", formula.str());
  const std::size_t brute = enumerate_orbit(base, cfg.budget, false).size();
  if (fmt_or(cfg, "table") == "json") {
    return write_output(cfg, Json{{"formula", formula.str()}, {"oracle", brute}}.dump() + "\n");
  }
  write_output(cfg, "formula " + formula.str() + "\noracle  " + std::to_string(brute) + "\n");
}

void cmd_rep(const Config& cfg, const std::string& which, const std::string& family, const std::string& params) {
  const std::vector<int> p = parse_list(params);
  if (family == "bipartite") {
    if (p.size() != 2) throw InvalidSpecError("bipartite needs --params n,m");
    const auto v = which == "min-edge" ? bipartite_min_edges(p[0], p[1]) : bipartite_min_max_degree(p[0], p[1]);
    return emit_value(cfg, "value", v);
  }
  const OrbitTag tag = parse_tag(family);
  std::vector<RepSpec> reps;
  if (which == "min-edge")
    reps = min_edge_rep(tag, p);
  else if (which == "min-degree")
    reps = min_max_degree_rep(tag, p);
  else
    throw InvalidSpecError("rep target must be min-edge or min-degree");
  if (fmt_or(cfg, "table") == "json") {
    Json arr = Json::array();
    for (const RepSpec& r : reps) arr.push_back(rep_json(r));
    return write_output(cfg, arr.dump(2) + "\n");
  }
  std::ostringstream out;
  for (const RepSpec& r : reps) {
    out << "case " << std::left << std::setw(6) << case_label(r.case_id, r.j) << " Q0="
        << (r.assignment.center == 0 ? "c" : "sc_" + std::to_string(r.assignment.center)) << " kinds=";
    for (std::size_t i = 0; i < r.assignment.kinds.size(); ++i)
      out << (i ? "," : "") << leaf_kind_name(r.assignment.kinds[i]);
    out << " value=" << r.value << '\n';
  }
  write_output(cfg, out.str());
}

void cmd_sym(const Config& cfg, const std::string& action, const std::string& family, const std::string& params,
             int case_id, int j, const std::string& I, const std::string& centers, int r) {
  const std::vector<int> p = parse_list(params);
  if (action == "enumerate") {
    if (family == "bipartite") {
      if (p.size() != 2) throw InvalidSpecError("bipartite needs --params n,m");
      std::ostringstream out;
      std::int64_t total = 0;
      for (const BipartiteRow& row : bipartite_rows(p[0], p[1])) {
        out << leaf_kind_name(row.q1) << "-" << leaf_kind_name(row.q2) << "  "
            << (row.valid ? std::to_string(row.multiplicity) : "invalid") << '\n';
        total += row.multiplicity;
      }
      out << "total " << total << '\n';
      return write_output(cfg, out.str());
    }
    const OrbitTag tag = parse_tag(family);
    const bool json = fmt_or(cfg, "table") == "json";
    Json arr = Json::array();
    std::ostringstream out;
    BigInt total = 0;
    for (const CasePattern& cp : enumerate_cases(tag, p)) {
      total += cp.multiplicity;
      if (json) {
        arr.push_back(Json{{"case", case_label(cp.pattern.case_id, cp.pattern.j)},
                           {"I", cp.pattern.I},
                           {"multiplicity", cp.multiplicity.str()}});
      } else {
        out << "case " << std::left << std::setw(6) << case_label(cp.pattern.case_id, cp.pattern.j) << " I={";
        for (std::size_t x = 0; x < cp.pattern.I.size(); ++x) out << (x ? "," : "") << cp.pattern.I[x];
        out << "}  " << cp.multiplicity << '\n';
      }
    }
    if (json) return write_output(cfg, Json{{"cases", arr}, {"total", total.str()}}.dump(2) + "\n");
    out << "total " << total << '\n';
    return write_output(cfg, out.str());
  }
  if (action == "transform" || action == "realize") {
    SymmetryCase c{parse_tag(family), case_id, j, parse_list(I), {}};
    const std::vector<int> ctr = parse_list(centers);
    if (!ctr.empty()) c.centers = ctr;
    if (action == "realize") return emit_graph(cfg, realize(c, p));
    return write_output(cfg, sequence_to_json(synthesize_transformation(c, p, r)).dump() + "\n");
  }
  if (action == "classify") {
    const auto c = classify_member(p, graph_from_json(read_input(cfg)));
    if (!c) return emit_value(cfg, "case", "none");
    return write_output(cfg, Json{{"orbit", orbit_tag_name(c->tag)},
                                  {"case", case_label(c->case_id, c->j)},
                                  {"I", c->I},
                                  {"centers", c->centers}}
                                 .dump() +
                                 "\n");
  }
  throw InvalidSpecError("sym action must be enumerate, transform, realize or classify");
}

int run(int argc, char** argv) {
  CLI::App app{"Local complementation orbits and split decompositions of small graphs"};
  // Global options may also follow the subcommand.
  app.fallthrough();
  app.require_subcommand(1);
  Config cfg;
  cfg.budget = default_budget();
  app.add_option("-i,--input", cfg.input, "Input JSON file ('-' for stdin)");
  app.add_option("-o,--output", cfg.output, "Output file ('-' for stdout)");
  app.add_option("--format", cfg.format, "Output format: json, dot or table")
      ->check(CLI::IsMember({"json", "dot", "table"}));
  app.add_option("--budget,--limit", cfg.budget,
                 std::string("Maximum orbit size explored (default from ") + kBudgetEnv + " or 1000000)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "Seed for randomized checks");

  // gen
  auto* gen = app.add_subcommand("gen", "Build a family member");
  std::string gen_family, gen_params;
  int gen_center = 1;
  gen->add_option("family,--family", gen_family, "complete, star, path, cycle, bipartite, kpartite, clique-star, repeater, mlr")
      ->required();
  gen->add_option("--params", gen_params, "Comma-separated parameters")->required();
  gen->add_option("--center", gen_center, "Clique-center block for clique-star");

  // lc
  auto* lc = app.add_subcommand("lc", "Apply local complements to a graph");
  std::string lc_seq;
  int lc_vertex = 0;
  lc->add_option("--vertex", lc_vertex, "Single vertex");
  lc->add_option("--seq", lc_seq, "Comma-separated sequence applied left to right");

  // orbit
  auto* orbit = app.add_subcommand("orbit", "Enumerate the LC orbit of a graph");
  std::string orbit_action, orbit_to;
  orbit->add_option("action", orbit_action, "size, list, iso, min-edge, min-degree or transform")->required();
  orbit->add_option("--to", orbit_to, "Target graph for transform");

  // decompose / reconstruct
  auto* decompose = app.add_subcommand("decompose", "Split decomposition of a connected graph");
  std::string method = "auto";
  decompose->add_option("--method", method, "auto or brute")->check(CLI::IsMember({"auto", "brute"}));
  auto* recon = app.add_subcommand("reconstruct", "Graph of a decomposition");

  // qasst
  auto* qasst = app.add_subcommand("qasst", "Dynamic operations on a decomposition");
  qasst->require_subcommand(1);
  auto* q_lc = qasst->add_subcommand("lc", "Propagate a local complement");
  int q_vertex = 0;
  q_lc->add_option("--vertex", q_vertex)->required();
  auto* q_induce = qasst->add_subcommand("induce", "Decomposition of an induced subgraph");
  std::string q_keep;
  q_induce->add_option("--keep", q_keep, "Comma-separated kept vertices")->required();
  auto* q_extend = qasst->add_subcommand("extend", "One-vertex extension");
  std::string q_kind;
  int q_anchor = 0;
  q_extend->add_option("--kind", q_kind, "pendant, false-twin or true-twin")->required();
  q_extend->add_option("--anchor", q_anchor)->required();

  // count / rep / sym
  auto* count = app.add_subcommand("count", "Closed-form counts");
  std::string count_what, family, params;
  bool oracle = false;
  count->add_option("what", count_what, "orbit, phi or iso-classes")->required();
  count->add_option("--family", family, "bipartite, kpartite, clique-star, mlr, path, cycle");
  count->add_option("--params", params, "Comma-separated parameters");
  count->add_flag("--oracle", oracle, "Also enumerate the orbit by brute force");
  auto* rep = app.add_subcommand("rep", "Optimal orbit representatives");
  std::string rep_which;
  rep->add_option("which", rep_which, "min-edge or min-degree")->required();
  rep->add_option("--family", family)->required();
  rep->add_option("--params", params)->required();
  auto* sym = app.add_subcommand("sym", "Symmetry classes of the multipartite orbits");
  std::string sym_action, sym_I, sym_centers;
  int sym_case = 1, sym_j = 0, sym_r = 1;
  sym->add_option("action", sym_action, "enumerate, transform, realize or classify")->required();
  sym->add_option("--family", family)->required();
  sym->add_option("--params", params)->required();
  sym->add_option("--case", sym_case);
  sym->add_option("--j", sym_j);
  sym->add_option("--I", sym_I, "Comma-separated star-spoke quotient indices");
  sym->add_option("--centers", sym_centers, "Per-part star center leaf index (0 = first)");
  sym->add_option("--r", sym_r, "Clique-center of the clique-star base");

  // verify
  auto* verify = app.add_subcommand("verify", "Cross-check formulas against the orbit oracle");
  std::string suite = "desk";
  verify->add_option("--suite", suite, "desk or extended")->check(CLI::IsMember({"desk", "extended"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (*gen) {
    emit_graph(cfg, build(FamilySpec{parse_family(gen_family), parse_list(gen_params), gen_center}));
  } else if (*lc) {
    LcSequence f;
    if (lc_vertex != 0) f.steps.push_back(lc_vertex);
    for (int v : parse_list(lc_seq)) f.steps.push_back(v);
    if (f.steps.empty()) throw InvalidSpecError("lc needs --vertex or --seq");
    emit_graph(cfg, apply_sequence(graph_from_json(read_input(cfg)), f));
  } else if (*orbit) {
    cmd_orbit(cfg, orbit_action, orbit_to);
  } else if (*decompose) {
    const auto m = method == "brute" ? DecompositionMethod::BruteForce : DecompositionMethod::Auto;
    emit_qasst(cfg, compute_qasst(graph_from_json(read_input(cfg)), m));
  } else if (*recon) {
    emit_graph(cfg, reconstruct(qasst_from_json(read_input(cfg))));
  } else if (*qasst) {
    const Qasst t = qasst_from_json(read_input(cfg));
    if (*q_lc) emit_qasst(cfg, lc_propagate(t, q_vertex));
    if (*q_induce) emit_qasst(cfg, induced_qasst(t, parse_list(q_keep)));
    if (*q_extend) emit_qasst(cfg, extend(t, Extension{parse_extension_kind(q_kind), q_anchor}, t.n + 1));
  } else if (*count) {
    cmd_count(cfg, count_what, family, params, oracle);
  } else if (*rep) {
    cmd_rep(cfg, rep_which, family, params);
  } else if (*sym) {
    cmd_sym(cfg, sym_action, family, params, sym_case, sym_j, sym_I, sym_centers, sym_r);
  } else if (*verify) {
    cli::VerifyOptions opt{suite == "extended" ? cli::Suite::Extended : cli::Suite::Desk, cfg.budget, cfg.seed,
                           fmt_or(cfg, "table") == "json"};
    std::ostringstream out;
    const int failed = cli::run_verify(opt, out);
    write_output(cfg, out.str());
    return failed == 0 ? 0 : kExitVerifyFailed;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const lcq::BudgetExceededError& e) {
    std::cerr << "lcq: " << e.what() << '\n';
    return kExitBudget;
  } catch (const lcq::Error& e) {
    std::cerr << "lcq: " << e.what() << '\n';
    return kExitUsage;
  }
}
