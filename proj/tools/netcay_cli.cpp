// Command-line front end: group inspection, relative Frattini subgroups,
// Cayley graph construction, normal edge-transitivity tests, subdirect
// decomposition, the 4-valent dihedral classification, and the casebook.
//
// Reports are printed as text by default; --json switches to a stable
// machine-readable schema {command, inputs, results, claims, timing_ms}.
// Exit codes: 0 success, 1 failed claims, 2 usage/parse/domain errors.

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "netcay/casebook.hpp"
#include "netcay/cayley.hpp"
#include "netcay/dihedral.hpp"
#include "netcay/frattini.hpp"
#include "netcay/parse.hpp"

using json = nlohmann::ordered_json;
using namespace netcay;

namespace {

struct CliContext {
  bool as_json = false;
  Limits limits;
  long long seed = 0;  // reserved: every algorithm here is deterministic
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
};

long long elapsed_ms(const CliContext& ctx) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                               ctx.start)
      .count();
}

json ids_json(const std::vector<int>& ids) { return json(ids); }

void emit(const CliContext& ctx, const std::string& command, json inputs, json results,
          json claims = json::array()) {
  if (ctx.as_json) {
    json report;
    report["command"] = command;
    report["inputs"] = std::move(inputs);
    report["results"] = std::move(results);
    report["claims"] = std::move(claims);
    report["timing_ms"] = elapsed_ms(ctx);
    std::cout << report.dump(2) << "\n";
  }
}

void say(const CliContext& ctx, const std::string& line) {
  if (!ctx.as_json) std::cout << line << "\n";
}

int cmd_group_show(CliContext& ctx, const std::string& spec) {
  GroupRef G = parse_group_spec(spec);
  auto normals = all_normal_subgroups(G, ctx.limits);
  Subgroup phi = frattini_subgroup(G, ctx.limits);
  std::vector<int> normal_sizes;
  for (const auto& N : normals) normal_sizes.push_back(N.size());
  say(ctx, "group " + G->label + "  order " + std::to_string(G->order) +
               (G->is_abelian() ? "  abelian" : "  nonabelian"));
  say(ctx, "exponent " + std::to_string(G->exponent()));
  say(ctx, "normal subgroup sizes: " + caselib::show_ids(normal_sizes));
  say(ctx, "frattini subgroup: " + caselib::show_ids(phi.elements));
  emit(ctx, "group show", {{"spec", spec}},
       {{"label", G->label},
        {"order", G->order},
        {"abelian", G->is_abelian()},
        {"exponent", G->exponent()},
        {"normal_subgroup_sizes", normal_sizes},
        {"frattini", ids_json(phi.elements)}});
  return 0;
}

int cmd_frattini(CliContext& ctx, const std::string& spec, const std::string& setexpr, bool oracle) {
  GroupRef G = parse_group_spec(spec);
  ConnectionSet C = make_connection_set(G, parse_connection_expr(G, setexpr), ctx.limits);
  auto lattice = invariant_normal_lattice(C, ctx.limits);
  json maximal = json::array();
  for (const auto& N : lattice.maximal) maximal.push_back(ids_json(N.elements));
  std::vector<int> all_sizes;
  for (const auto& N : lattice.all) all_sizes.push_back(N.size());
  bool transitive = is_generating(C) && is_transitive_set(C);
  say(ctx, "group " + G->label + ", C = " + caselib::show_ids(C.elements));
  say(ctx, "|Aut(G;C)| = " + std::to_string(C.aut_gc.size()) +
               (transitive ? "  (transitive set)" : "  (not transitive)"));
  say(ctx, "invariant proper normal subgroups: " + std::to_string(lattice.all.size()) +
               ", maximal: " + std::to_string(lattice.maximal.size()));
  say(ctx, "phi(G;C) = " + caselib::show_ids(lattice.phi.elements));
  json results = {{"aut_gc_order", C.aut_gc.size()},
                  {"transitive", transitive},
                  {"lattice_sizes", all_sizes},
                  {"maximal", maximal},
                  {"phi", ids_json(lattice.phi.elements)}};
  json claims = json::array();
  if (oracle) {
    auto profile = phi_membership_profile(C);
    Bitset phimask = lattice.phi.mask();
    bool agree = true;
    for (int y = 0; y < G->order; ++y)
      if (profile[y] != phimask.test(y)) agree = false;
    results["oracle_agrees"] = agree;
    claims.push_back({{"description", "membership criterion matches the lattice definition"},
                      {"expected", "true"},
                      {"computed", agree ? "true" : "false"},
                      {"pass", agree}});
    say(ctx, std::string("membership criterion agrees: ") + (agree ? "yes" : "NO"));
    emit(ctx, "frattini", {{"spec", spec}, {"set", setexpr}, {"oracle", true}}, results, claims);
    return agree ? 0 : 1;
  }
  emit(ctx, "frattini", {{"spec", spec}, {"set", setexpr}, {"oracle", false}}, results, claims);
  return 0;
}

int cmd_cayley_build(CliContext& ctx, const std::string& spec, const std::string& setexpr,
                     const std::string& g6path, const std::string& edges_path) {
  GroupRef G = parse_group_spec(spec);
  ConnectionSet C = make_connection_set(G, parse_connection_expr(G, setexpr), ctx.limits);
  CayleyGraph gamma = cayley_graph(C);
  std::string g6 = graph6_encode(gamma.graph);
  if (!g6path.empty()) {
    std::ofstream out(g6path);
    if (!out) fail(errc::parse_error, "cannot write '" + g6path + "'");
    out << g6 << "\n";
  }
  if (!edges_path.empty()) {
    std::ofstream out(edges_path);
    if (!out) fail(errc::parse_error, "cannot write '" + edges_path + "'");
    out << edge_list_text(gamma.graph);
  }
  say(ctx, "Cay(" + G->label + "; " + caselib::show_ids(C.elements) + ")");
  say(ctx, "vertices " + std::to_string(gamma.graph.vertex_count) + ", valency " +
               std::to_string(C.size()) + ", edges " + std::to_string(gamma.graph.edge_count()) +
               (is_connected(gamma.graph) ? ", connected" : ", disconnected"));
  say(ctx, "graph6 " + g6);
  emit(ctx, "cayley build", {{"spec", spec}, {"set", setexpr}, {"g6", g6path}},
       {{"vertices", gamma.graph.vertex_count},
        {"valency", C.size()},
        {"edges", gamma.graph.edge_count()},
        {"connected", is_connected(gamma.graph)},
        {"graph6", g6}});
  return 0;
}

int cmd_net_test(CliContext& ctx, const std::string& spec, const std::string& setexpr) {
  GroupRef G = parse_group_spec(spec);
  ConnectionSet C = make_connection_set(G, parse_connection_expr(G, setexpr), ctx.limits);
  CayleyGraph gamma = cayley_graph(C);
  bool net = is_normal_edge_transitive(gamma);
  std::vector<int> orbit_sizes;
  for (const auto& o : C.orbit_partition) orbit_sizes.push_back(static_cast<int>(o.size()));
  say(ctx, std::string("normal edge-transitive: ") + (net ? "yes" : "no") +
               "  (stabilizer orbits on C: " + caselib::show_ids(orbit_sizes) + ")");
  emit(ctx, "net test", {{"spec", spec}, {"set", setexpr}},
       {{"normal_edge_transitive", net},
        {"aut_gc_order", C.aut_gc.size()},
        {"orbit_sizes", orbit_sizes}});
  return 0;
}

int cmd_decompose(CliContext& ctx, const std::string& spec, const std::string& setexpr,
                  bool all_factorizations) {
  GroupRef G = parse_group_spec(spec);
  ConnectionSet C = make_connection_set(G, parse_connection_expr(G, setexpr), ctx.limits);
  CayleyGraph gamma = cayley_graph(C);
  DecompositionReport d = decompose(gamma, ctx.limits);
  say(ctx, "phi(G;C) = " + caselib::show_ids(d.phi.elements) + ", k = " +
               std::to_string(d.factors.size()));
  json factors = json::array();
  for (const auto& f : d.factors) {
    say(ctx, "  N = " + caselib::show_ids(f.kernel.elements) + "  quotient order " +
                 std::to_string(f.coset_map.quotient->order) + "  graph6 " +
                 graph6_encode(f.quotient_graph.graph));
    factors.push_back({{"kernel", ids_json(f.kernel.elements)},
                       {"quotient_order", f.coset_map.quotient->order},
                       {"quotient_graph6", graph6_encode(f.quotient_graph.graph)}});
  }
  say(ctx, std::string("full subdirect image: ") + (d.certificate.full_subdirect ? "yes" : "NO"));
  json results = {{"phi", ids_json(d.phi.elements)},
                  {"k", d.factors.size()},
                  {"factors", factors},
                  {"phi_quotient_graph6", graph6_encode(d.phi_quotient_graph.graph)},
                  {"full_subdirect", d.certificate.full_subdirect}};
  if (all_factorizations) {
    json families = json::array();
    for (const auto& fam : all_minimal_factorizations(gamma, ctx.limits)) {
      json f = json::array();
      for (const auto& N : fam) f.push_back(ids_json(N.elements));
      families.push_back(f);
    }
    results["minimal_factorizations"] = families;
    say(ctx, "minimal valid families: " + std::to_string(families.size()));
  }
  emit(ctx, "decompose",
       {{"spec", spec}, {"set", setexpr}, {"all_factorizations", all_factorizations}}, results);
  return 0;
}

int cmd_dihedral_classify(CliContext& ctx, int n, const std::string& setexpr) {
  GroupRef G = build_dihedral(n);
  auto ids = parse_connection_expr(G, setexpr);
  dihedral::FourValentClass cls = dihedral::classify_4valent(n, ids);
  json params;
  std::string desc = dihedral::four_valent_kind_name(cls.kind);
  switch (cls.kind) {
    case dihedral::FourValentKind::talebi_a: params = {{"i", cls.i_a}}; break;
    case dihedral::FourValentKind::talebi_b: params = {{"k", cls.k_b}}; break;
    case dihedral::FourValentKind::overlap: params = {{"i", cls.i_a}, {"k", cls.k_b}}; break;
    case dihedral::FourValentKind::new_family:
      params = {{"i", cls.nf.i}, {"j", cls.nf.j}, {"k", cls.nf.k}, {"ell", cls.nf.ell}, {"m", cls.nf.m}};
      break;
    case dihedral::FourValentKind::not_net: params = json::object(); break;
  }
  say(ctx, "class " + desc + " " + params.dump() + "  sigma=(k=" + std::to_string(cls.sigma.k) +
               ",j=" + std::to_string(cls.sigma.j) + ")");
  emit(ctx, "dihedral classify", {{"n", n}, {"set", setexpr}},
       {{"kind", desc}, {"params", params}, {"sigma", {{"k", cls.sigma.k}, {"j", cls.sigma.j}}}});
  return 0;
}

int cmd_dihedral_enumerate(CliContext& ctx, int n, bool full_scan) {
  auto found = dihedral::enumerate_4valent(n, ctx.limits, full_scan);
  say(ctx, "n=" + std::to_string(n) + ": " + std::to_string(found.size()) +
               " orbits of transitive 4-element generating sets");
  json orbits = json::array();
  for (const auto& o : found) {
    std::string kind = dihedral::four_valent_kind_name(o.cls.kind);
    say(ctx, "  " + caselib::show_ids(o.canonical) + "  " + kind);
    json entry = {{"canonical", ids_json(o.canonical)}, {"kind", kind}};
    if (o.cls.kind == dihedral::FourValentKind::talebi_a) entry["i"] = o.cls.i_a;
    if (o.cls.kind == dihedral::FourValentKind::talebi_b) entry["k"] = o.cls.k_b;
    if (o.cls.kind == dihedral::FourValentKind::overlap) {
      entry["i"] = o.cls.i_a;
      entry["k"] = o.cls.k_b;
    }
    if (o.cls.kind == dihedral::FourValentKind::new_family)
      entry["params"] = {{"i", o.cls.nf.i}, {"j", o.cls.nf.j}, {"k", o.cls.nf.k},
                         {"ell", o.cls.nf.ell}, {"m", o.cls.nf.m}};
    orbits.push_back(entry);
  }
  emit(ctx, "dihedral enumerate", {{"n", n}, {"full_scan", full_scan}},
       {{"orbit_count", found.size()}, {"orbits", orbits}});
  return 0;
}

int cmd_dihedral_mersenne(CliContext& ctx, int p, int q) {
  dihedral::MersenneFamilyInstance inst = dihedral::mersenne_family(p, q);
  bool valid = dihedral::new_family_valid(inst.n, inst.params).ok();
  bool fresh = dihedral::new_family_not_talebi(inst.n, inst.params);
  auto cls = dihedral::classify_4valent(inst.n, dihedral::new_family_set(inst.n, inst.params));
  say(ctx, "n=" + std::to_string(inst.n) + "  (i,j,k,ell,m)=(" + std::to_string(inst.params.i) + "," +
               std::to_string(inst.params.j) + "," + std::to_string(inst.params.k) + "," +
               std::to_string(inst.params.ell) + "," + std::to_string(inst.params.m) + ")");
  say(ctx, std::string("family conditions hold: ") + (valid ? "yes" : "NO") +
               ", distinct from both known families: " + (fresh ? "yes" : "NO"));
  emit(ctx, "dihedral mersenne", {{"p", p}, {"q", q}},
       {{"n", inst.n},
        {"i", inst.params.i},
        {"j", inst.params.j},
        {"k", inst.params.k},
        {"ell", inst.params.ell},
        {"m", inst.params.m},
        {"valid", valid},
        {"kind", dihedral::four_valent_kind_name(cls.kind)},
        {"not_talebi", fresh}});
  return 0;
}

int cmd_casebook(CliContext& ctx, const std::string& only_case) {
  std::vector<std::string> ids = only_case.empty() ? casebook_ids() : std::vector<std::string>{only_case};
  json cases = json::array();
  json claims = json::array();
  bool all_pass = true;
  for (const auto& id : ids) {
    CaseReport rep = run_case(id, ctx.limits);
    all_pass = all_pass && rep.all_pass();
    say(ctx, (rep.all_pass() ? "PASS " : "FAIL ") + rep.case_id + "  (" +
                 std::to_string(rep.claims.size()) + " claims)");
    if (!ctx.as_json)
      for (const auto& c : rep.claims)
        if (!c.pass)
          std::cout << "   claim failed: " << c.description << "  expected " << c.expected
                    << "  computed " << c.computed << "\n";
    cases.push_back(to_json(rep));
    for (const auto& c : rep.claims)
      claims.push_back({{"description", rep.case_id + ": " + c.description},
                        {"expected", c.expected},
                        {"computed", c.computed},
                        {"pass", c.pass}});
  }
  say(ctx, all_pass ? "all cases pass" : "FAILURES present");
  emit(ctx, "casebook run", {{"case", only_case.empty() ? json() : json(only_case)}},
       {{"all_pass", all_pass}, {"cases", cases}}, claims);
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CliContext ctx;
  CLI::App app{"normal edge-transitive Cayley graph toolkit"};
  app.require_subcommand(1);
  app.add_flag("--json", ctx.as_json, "emit a machine-readable JSON report");
  app.add_option("--order-cap", ctx.limits.order_cap, "group order cap for enumerations");
  app.add_option("--seed", ctx.seed, "reserved; all algorithms are deterministic");

  std::string spec, setexpr, g6path, edges_path, case_id;
  int n = 0, p = 0, q = 0;
  bool oracle = false, all_fact = false, full_scan = false;

  auto* group = app.add_subcommand("group", "group inspection");
  auto* group_show = group->add_subcommand("show", "print basic structure of a group");
  group_show->add_option("spec", spec, "group spec, e.g. dihedral:6")->required();

  auto* frattini_cmd = app.add_subcommand("frattini", "invariant normal lattice and phi(G;C)");
  frattini_cmd->add_option("spec", spec)->required();
  frattini_cmd->add_option("--set", setexpr, "connection-set expression")->required();
  frattini_cmd->add_flag("--oracle", oracle, "also run the subset-quantified membership criterion (|G| <= 16)");

  auto* cayley_cmd = app.add_subcommand("cayley", "Cayley graphs");
  auto* cayley_build = cayley_cmd->add_subcommand("build", "construct Cay(G;C)");
  cayley_build->add_option("spec", spec)->required();
  cayley_build->add_option("--set", setexpr)->required();
  cayley_build->add_option("--g6", g6path, "write the graph6 line to a file");
  cayley_build->add_option("--edges", edges_path, "write the sorted edge list to a file");

  auto* net = app.add_subcommand("net", "normal edge-transitivity");
  auto* net_test = net->add_subcommand("test", "test whether Cay(G;C) is normal edge-transitive");
  net_test->add_option("spec", spec)->required();
  net_test->add_option("--set", setexpr)->required();

  auto* decompose_cmd = app.add_subcommand("decompose", "subdirect-product decomposition modulo phi(G;C)");
  decompose_cmd->add_option("spec", spec)->required();
  decompose_cmd->add_option("--set", setexpr)->required();
  decompose_cmd->add_flag("--all-factorizations", all_fact, "list every minimal valid family (|G| <= 48)");

  auto* dih = app.add_subcommand("dihedral", "4-valent dihedral classification");
  auto* dih_classify = dih->add_subcommand("classify", "classify a 4-element connection set of D_2n");
  dih_classify->add_option("--n", n)->required();
  dih_classify->add_option("--set", setexpr)->required();
  auto* dih_enum = dih->add_subcommand("enumerate", "orbits of transitive 4-element generating sets");
  dih_enum->add_option("--n", n)->required();
  dih_enum->add_flag("--full-scan", full_scan, "also sweep the central-involution shapes");
  auto* dih_mers = dih->add_subcommand("mersenne", "new-family instance from a non-Mersenne prime");
  dih_mers->add_option("--p", p)->required();
  dih_mers->add_option("--q", q)->required();

  auto* casebook_cmd = app.add_subcommand("casebook", "scripted verification cases");
  auto* casebook_run = casebook_cmd->add_subcommand("run", "run all cases or one");
  casebook_run->add_option("--case", case_id, "single case id");

  // let the global flags (--json, --order-cap, --seed) appear anywhere
  for (CLI::App* sub : {group, group_show, frattini_cmd, cayley_cmd, cayley_build, net, net_test,
                        decompose_cmd, dih, dih_classify, dih_enum, dih_mers, casebook_cmd,
                        casebook_run})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (group_show->parsed()) return cmd_group_show(ctx, spec);
    if (frattini_cmd->parsed()) return cmd_frattini(ctx, spec, setexpr, oracle);
    if (cayley_build->parsed()) return cmd_cayley_build(ctx, spec, setexpr, g6path, edges_path);
    if (net_test->parsed()) return cmd_net_test(ctx, spec, setexpr);
    if (decompose_cmd->parsed()) return cmd_decompose(ctx, spec, setexpr, all_fact);
    if (dih_classify->parsed()) return cmd_dihedral_classify(ctx, n, setexpr);
    if (dih_enum->parsed()) return cmd_dihedral_enumerate(ctx, n, full_scan);
    if (dih_mers->parsed()) return cmd_dihedral_mersenne(ctx, p, q);
    if (casebook_run->parsed()) return cmd_casebook(ctx, case_id);
    std::cerr << "no subcommand\n";
    return 2;
  } catch (const error& e) {
    if (ctx.as_json) {
      json err = {{"error", {{"kind", errc_name(e.code())}, {"message", e.what()}}}};
      std::cerr << err.dump(2) << "\n";
    } else {
      std::cerr << "error: " << e.what() << "\n";
    }
    return 2;
  }
}
