// Command-line front end: exact RO(G)-graded invariants of configuration
// spaces over the catalogued groups, with JSON and ASCII chart output.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include "ocb/assembly.hpp"
#include "ocb/chart_data.hpp"
#include "ocb/config_ring.hpp"
#include "ocb/mackey.hpp"
#include "ocb/render.hpp"
#include "ocb/stirling.hpp"
#include "ocb/vanishing.hpp"
#include "ocb/vg.hpp"

using json = nlohmann::ordered_json;
using namespace ocb;

namespace {

json group_json(const GradedGroup& g) {
  json out = json::array();
  for (const auto& s : g.summands) out.push_back({{"order", s.order.str()}, {"label", s.label}});
  return out;
}

json degree_json(const Degree& d) {
  json out = json::array();
  for (auto c : d.c) out.push_back(c);
  return out;
}

struct Output {
  std::string format = "ascii";
  bool is_json() const { return format == "json"; }
};

DegreeWindow parse_window(const GroupSpec& g, const std::string& spec) {
  DegreeWindow w{Degree(g), Degree(g)};
  std::stringstream ss(spec);
  std::string part;
  size_t i = 0;
  while (std::getline(ss, part, ',')) {
    if (i >= w.lo.c.size()) throw std::invalid_argument("window has too many ranges");
    auto colon = part.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("window range needs lo:hi");
    w.lo.c[i] = std::stoll(part.substr(0, colon));
    w.hi.c[i] = std::stoll(part.substr(colon + 1));
    if (w.lo.c[i] > w.hi.c[i]) throw std::invalid_argument("window range reversed");
    ++i;
  }
  if (i == 0) throw std::invalid_argument("empty window");
  return w;
}

json chart_entries_json(const AdditiveChart& chart) {
  json entries = json::array();
  for (const auto& [deg, entry] : chart.entries) {
    if (entry.supported && entry.summands.empty()) continue;
    json je;
    je["degree"] = degree_json(deg);
    je["rank"] = deg.rank();
    if (!entry.supported) {
      je["supported"] = false;
      je["error"] = entry.error;
    } else {
      json sums = json::array();
      for (const auto& s : entry.summands) {
        json js{{"order", s.order.str()}, {"label", s.label}, {"summand", s.j}};
        if (s.extension_unresolved) js["extension_unresolved"] = true;
        sums.push_back(js);
      }
      je["summands"] = sums;
    }
    entries.push_back(je);
  }
  return entries;
}

void emit(const Output& out, const json& j, const std::string& ascii) {
  if (out.is_json())
    std::cout << j.dump(2) << "\n";
  else
    std::cout << ascii;
}

int run(int argc, char** argv) {
  CLI::App app{"exact equivariant cohomology calculator for configuration spaces"};
  app.require_subcommand(1);

  Output out;
  if (const char* env = std::getenv("OCBREDON_FORMAT")) out.format = env;
  app.add_option("--format", out.format, "output format: ascii or json")
      ->check(CLI::IsMember({"ascii", "json"}));

  std::string chart_data_path;
  app.add_option("--chart-data", chart_data_path,
                 "JSON file with replacement point-cohomology family tables");

  // ---- group ----
  auto* cmd_group = app.add_subcommand("group", "numerical invariants of a representation");
  std::string g_group, g_rep;
  cmd_group->add_option("--group", g_group, "group name, e.g. C4 or Sigma3")->required();
  cmd_group->add_option("--rep", g_rep, "representation, e.g. \"2*1+lambda(1)+sigma\"")->required();

  // ---- stirling ----
  auto* cmd_stirling = app.add_subcommand("stirling", "Stirling numbers and splitting counts");
  int64_t st_k = 0;
  bool st_amult = false;
  cmd_stirling->add_option("--k", st_k, "number of points")->required();
  cmd_stirling->add_flag("--amult", st_amult, "print the alternating sums a(k, j) instead");

  // ---- point ----
  auto* cmd_point = app.add_subcommand("point", "cohomology of a point at one degree or window");
  std::string p_group, p_degree, p_window;
  cmd_point->add_option("--group", p_group)->required();
  cmd_point->add_option("--degree", p_degree, "degree, e.g. \"2-lambda(1)\"");
  cmd_point->add_option("--window", p_window, "coefficient window lo:hi[,lo:hi...]");

  // ---- sphere ----
  auto* cmd_sphere = app.add_subcommand("sphere", "cohomology of unit spheres S(V)");
  std::string s_group, s_rep, s_degree, s_window;
  cmd_sphere->add_option("--group", s_group)->required();
  cmd_sphere->add_option("--rep", s_rep, "the ambient representation V")->required();
  cmd_sphere->add_option("--degree", s_degree, "a single degree to evaluate");
  cmd_sphere->add_option("--window", s_window, "chart window lo:hi[,lo:hi...]");
  cmd_sphere->add_flag("--c2-exact", "use the exact C2 sign-plane ring");

  // ---- vanishing ----
  auto* cmd_van = app.add_subcommand("vanishing", "the multiplication-by-a_V requirement");
  std::string v_group, v_rep;
  int64_t v_lmin = -12, v_lmax = 12;
  cmd_van->add_option("--group", v_group)->required();
  cmd_van->add_option("--rep", v_rep)->required();
  cmd_van->add_option("--lmin", v_lmin);
  cmd_van->add_option("--lmax", v_lmax);

  // ---- config-ring ----
  auto* cmd_ring = app.add_subcommand("config-ring", "the deformed presentation ring");
  int r_k = 3;
  std::string r_parity = "even", r_expr, r_action = "reduce";
  int64_t r_d = 2, r_j = -1;
  cmd_ring->add_option("--k", r_k)->required();
  cmd_ring->add_option("--parity", r_parity)->check(CLI::IsMember({"even", "odd"}));
  cmd_ring->add_option("--d", r_d, "torsion of the deformation class a");
  cmd_ring->add_option("action", r_action, "reduce | basis | specialize")
      ->check(CLI::IsMember({"reduce", "basis", "specialize"}));
  cmd_ring->add_option("expr", r_expr, "expression, e.g. \"w(1,2)*w(2,1)+a*w(1,3)\"");
  cmd_ring->add_option("--j", r_j, "degree for 'basis'");

  // ---- oc-chart ----
  auto* cmd_oc = app.add_subcommand("oc-chart", "additive chart of H(OC_k(V))");
  std::string oc_group, oc_rep, oc_window;
  int oc_k = 3;
  cmd_oc->add_option("--group", oc_group)->required();
  cmd_oc->add_option("--rep", oc_rep)->required();
  cmd_oc->add_option("--k", oc_k)->required();
  cmd_oc->add_option("--window", oc_window, "coefficient window lo:hi[,lo:hi...]");

  // ---- vg ----
  auto* cmd_vg = app.add_subcommand("vg", "the ring of integer functions on Sigma_k");
  int vg_k = 3;
  std::string vg_action = "ranks";
  cmd_vg->add_option("--k", vg_k)->required();
  cmd_vg->add_option("action", vg_action, "ranks | check-relations | delta-basis")
      ->check(CLI::IsMember({"ranks", "check-relations", "delta-basis"}));

  // ---- mackey ----
  auto* cmd_mackey = app.add_subcommand("mackey", "chain complexes of permutation modules");
  auto* mk_lambda = cmd_mackey->add_subcommand("lambda-sphere", "rotation-plane cell complex");
  int64_t mk_p = 3, mk_e = 1, mk_k = 1, mk_r = 1;
  std::string mk_level, mk_group, mk_rep;
  mk_lambda->add_option("--p", mk_p)->required();
  mk_lambda->add_option("--e", mk_e)->required();
  mk_lambda->add_option("--k", mk_k)->required();
  mk_lambda->add_option("--level", mk_level, "subgroup label for the fixed-point level");
  auto* mk_cmp = cmd_mackey->add_subcommand("compare", "chain map between cell structures");
  mk_cmp->add_option("--p", mk_p)->required();
  mk_cmp->add_option("--e", mk_e)->required();
  mk_cmp->add_option("--k", mk_k)->required();
  mk_cmp->add_option("--r", mk_r)->required();
  auto* mk_h0 = cmd_mackey->add_subcommand("h0", "H~0 of a representation sphere skeleton");
  mk_h0->add_option("--group", mk_group)->required();
  mk_h0->add_option("--rep", mk_rep)->required();
  cmd_mackey->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;  // usage error
  }

  std::optional<ChartTable> loaded_table;
  if (!chart_data_path.empty()) {
    std::ifstream in(chart_data_path);
    if (!in) throw std::runtime_error("cannot open chart data file: " + chart_data_path);
    std::stringstream ss;
    ss << in.rdbuf();
    loaded_table = chart_table_from_json(ss.str());
  }

  if (*cmd_group) {
    const GroupSpec& g = group_by_name(g_group);
    Representation v = parse_representation(g, g_rep);
    json j;
    j["group"] = g.name;
    j["rep"] = v.to_string();
    j["dim"] = v.dim();
    j["orientable"] = is_orientable(v);
    j["e"] = e_invariant(v);
    json fixed = json::object();
    for (const auto& sub : g.subgroups) fixed[sub.label] = fixed_subrep_dim(v, sub.label);
    j["fixed_dim"] = fixed;
    std::ostringstream os;
    os << g.name << "  V = " << v.to_string() << "  dim " << v.dim() << "\n";
    if (!v.is_zero()) {
      auto di = d_invariant(v);
      j["d"] = di.d;
      json dd = json::array();
      for (auto x : di.D) dd.push_back(x);
      j["D"] = dd;
      os << "d(V) = " << di.d << "   D(V) = {";
      bool first = true;
      for (auto x : di.D) {
        os << (first ? "" : ", ") << x;
        first = false;
      }
      os << "}\n";
    }
    os << "e(V) = " << e_invariant(v) << "   orientable: " << (is_orientable(v) ? "yes" : "no")
       << "\n";
    for (const auto& sub : g.subgroups)
      os << "  dim V^" << sub.label << " = " << fixed_subrep_dim(v, sub.label) << "\n";
    emit(out, j, os.str());
    return 0;
  }

  if (*cmd_stirling) {
    json j;
    j["k"] = st_k;
    json row = json::array();
    std::ostringstream os;
    Int sum = 0;
    if (st_amult) {
      os << "a(" << st_k << ", j) for j = 0.." << st_k - 1 << ": (";
      for (int64_t jj = 0; jj <= st_k - 1; ++jj) {
        Int v = a_multiplicity(st_k, jj);
        row.push_back(v.str());
        os << (jj ? ", " : "") << v;
      }
      j["a"] = row;
      os << ")\n";
    } else {
      os << "c(" << st_k << ", " << st_k << "-j) for j = 0.." << st_k - 1 << ": (";
      for (int64_t jj = 0; jj <= st_k - 1; ++jj) {
        Int v = stirling_c(st_k, st_k - jj);
        row.push_back(v.str());
        sum += v;
        os << (jj ? ", " : "") << v;
      }
      j["c"] = row;
      j["sum"] = sum.str();
      os << "), sum " << sum << "\n";
    }
    emit(out, j, os.str());
    return 0;
  }

  if (*cmd_point) {
    const GroupSpec& g = group_by_name(p_group);
    PointChart chart(g);
    if (!p_degree.empty()) {
      Degree d = parse_degree(g, p_degree);
      GradedGroup grp;
      if (loaded_table)
        grp = table_group_at(*loaded_table, chart_coords(chart, d));
      else
        grp = chart.group_at(d);
      json j;
      j["group"] = g.name;
      j["degree"] = degree_json(d);
      j["value"] = group_json(grp);
      std::ostringstream os;
      os << "M^{" << d.to_string() << "} = " << render_group(grp) << "\n";
      for (const auto& s : grp.summands)
        os << "  " << (s.order == 0 ? "Z" : "Z/" + s.order.str()) << " . " << s.label << "\n";
      emit(out, j, os.str());
      return 0;
    }
    if (!p_window.empty()) {
      DegreeWindow w = parse_window(g, p_window);
      Representation one = parse_representation(g, "1");
      AdditiveChart mchart = additive_free_chart(chart, one, 1, w);
      mchart.rep = "point";
      json j;
      j["group"] = g.name;
      j["entries"] = chart_entries_json(mchart);
      emit(out, j, render_motivic_grid(mchart));
      return 0;
    }
    if (loaded_table && p_degree.empty() && p_window.empty()) {
      emit(out, json::parse(chart_table_to_json(*loaded_table)), chart_table_to_json(*loaded_table));
      return 0;
    }
    // default: print the built-in family table
    ChartTable t = chart_table(chart);
    emit(out, json::parse(chart_table_to_json(t)), chart_table_to_json(t) + "\n");
    return 0;
  }

  if (*cmd_sphere) {
    const GroupSpec& g = group_by_name(s_group);
    Representation v = parse_representation(g, s_rep);
    if (!s_window.empty()) {
      PointChart chart(g);
      AdditiveChart c = unit_sphere_chart(chart, v, parse_window(g, s_window));
      json j;
      j["group"] = g.name;
      j["rep"] = v.to_string();
      j["entries"] = chart_entries_json(c);
      emit(out, j, render_motivic_grid(c));
      return 0;
    }
    if (s_degree.empty()) throw std::invalid_argument("sphere needs --degree or --window");
    Degree d = parse_degree(g, s_degree);
    json j;
    j["group"] = g.name;
    j["rep"] = v.to_string();
    j["degree"] = degree_json(d);
    std::ostringstream os;
    if (cmd_sphere->count("--c2-exact")) {
      if (g.kind != GroupSpec::Kind::Cyclic || g.n != 2)
        throw std::invalid_argument("--c2-exact needs group C2");
      GradedGroup grp = c2_unit_sphere_ring(v.mult[g.irrep_pos("sigma")], d);
      j["value"] = group_json(grp);
      os << "H^{" << d.to_string() << "}(S(" << v.to_string() << ")) = " << render_group(grp)
         << "\n";
      for (const auto& s : grp.summands)
        os << "  " << (s.order == 0 ? "Z" : "Z/" + s.order.str()) << " . " << s.label << "\n";
    } else {
      PointChart chart(g);
      UnitSphereGroup usg = unit_sphere_groups(chart, v, d);
      j["sub"] = group_json(usg.sub);
      j["quot"] = group_json(usg.quot);
      j["extension"] = usg.extension == ExtensionState::Unknown      ? "unknown"
                       : usg.extension == ExtensionState::SplitKnown ? "split-known"
                                                                     : "exact-ring-known";
      os << "H^{" << d.to_string() << "}(S(" << v.to_string() << ")):\n";
      os << "  sub  (restriction image):  " << render_group(usg.sub) << "\n";
      os << "  quot (residual kernel):    " << render_group(usg.quot) << "\n";
      os << "  extension: " << j["extension"].get<std::string>() << "\n";
    }
    emit(out, j, os.str());
    return 0;
  }

  if (*cmd_van) {
    const GroupSpec& g = group_by_name(v_group);
    PointChart chart(g);
    Representation v = parse_representation(g, v_rep);
    VanishingReport rep = vanishing_sweep(chart, v, v_lmin, v_lmax);
    json j;
    j["group"] = rep.group;
    j["rep"] = rep.rep;
    j["normalized_rep"] = rep.normalized_rep;
    j["lmin"] = rep.lmin;
    j["lmax"] = rep.lmax;
    j["overall"] = rep.overall;
    j["failing_l"] = rep.failing_l;
    json recs = json::array();
    for (const auto& r : rep.records)
      recs.push_back({{"l", r.l},
                      {"first_map_surjective", r.first_map_surjective},
                      {"second_map_injective", r.second_map_injective},
                      {"middle_group", group_json(r.middle_group)}});
    j["records"] = recs;
    std::ostringstream os;
    os << "vanishing requirement for " << rep.group << ", V = " << rep.rep;
    if (rep.normalized_rep != rep.rep) os << " (normalized: " << rep.normalized_rep << ")";
    os << ", l in [" << rep.lmin << ", " << rep.lmax << "]\n";
    os << "overall: " << (rep.overall ? "PASS" : "FAIL") << "\n";
    for (const auto& r : rep.records)
      if (!r.passed())
        os << "  l = " << r.l << ": surjective=" << r.first_map_surjective
           << " injective=" << r.second_map_injective
           << " middle = " << render_group(r.middle_group) << "\n";
    emit(out, j, os.str());
    return 0;
  }

  if (*cmd_ring) {
    RingParams params = make_ring(r_k, r_parity == "even" ? 1 : -1, Int(r_d));
    json j;
    j["k"] = r_k;
    j["parity"] = r_parity;
    j["d"] = r_d;
    std::ostringstream os;
    if (r_action == "basis") {
      if (r_j < 0) throw std::invalid_argument("basis needs --j");
      auto basis = basis_enumerate(r_k, static_cast<int>(r_j));
      json bl = json::array();
      os << "degree-" << r_j << " basis (" << basis.size() << " monomials):\n";
      for (const auto& m : basis) {
        RingElement e = from_monomial(params, m);
        bl.push_back(e.to_string());
        os << "  " << e.to_string() << "\n";
      }
      j["basis"] = bl;
    } else {
      if (r_expr.empty()) throw std::invalid_argument(r_action + " needs an expression");
      RingElement red = reduce(params, parse_ring_expr(r_expr));
      if (r_action == "reduce") {
        j["input"] = r_expr;
        j["normal_form"] = red.to_string();
        os << red.to_string() << "\n";
      } else {
        SigmaFunction f = vg_specialize(red);
        json vals = json::array();
        for (const auto& v : f.values) vals.push_back(v.str());
        j["input"] = r_expr;
        j["modulus"] = params.d.str();
        j["values"] = vals;
        os << "values on Sigma_" << r_k << " (lex order)";
        if (params.d != 0) os << " mod " << params.d;
        os << ":";
        for (const auto& v : f.values) os << " " << v;
        os << "\n";
      }
    }
    emit(out, j, os.str());
    return 0;
  }

  if (*cmd_oc) {
    const GroupSpec& g = group_by_name(oc_group);
    PointChart chart(g);
    Representation v = parse_representation(g, oc_rep);
    DegreeWindow w{Degree(g), Degree(g)};
    if (!oc_window.empty()) {
      w = parse_window(g, oc_window);
    } else {
      w.lo.c.assign(g.irreps.size(), 0);
      w.hi.c.assign(g.irreps.size(), 0);
      w.lo.c[0] = -6;
      w.hi.c[0] = 6;
      for (size_t i = 1; i < g.irreps.size(); ++i) {
        w.lo.c[i] = -6;
        w.hi.c[i] = 6;
      }
    }
    AdditiveChart c = v.contains_trivial() ? additive_free_chart(chart, v, oc_k, w)
                                           : additive_sphere_chart(chart, v, oc_k, w);
    json j;
    j["group"] = g.name;
    j["rep"] = v.to_string();
    j["k"] = oc_k;
    j["kind"] = v.contains_trivial() ? "free" : "sphere";
    j["entries"] = chart_entries_json(c);
    emit(out, j, render_motivic_grid(c));
    return 0;
  }

  if (*cmd_vg) {
    json j;
    j["k"] = vg_k;
    std::ostringstream os;
    if (vg_action == "ranks") {
      FiltrationReport rep = filtration_ranks(vg_k);
      j["ranks"] = rep.ranks;
      json tor = json::array();
      for (const auto& t : rep.torsion_invariants) tor.push_back(t.str());
      j["torsion"] = tor;
      os << "filtration quotient ranks for k = " << vg_k << ": (";
      for (size_t i = 0; i < rep.ranks.size(); ++i) os << (i ? ", " : "") << rep.ranks[i];
      os << ")";
      os << (rep.torsion_invariants.empty() ? ", torsion-free\n" : ", TORSION PRESENT\n");
    } else if (vg_action == "check-relations") {
      bool ok = rees_relations_hold(vg_k);
      j["relations_hold"] = ok;
      os << "homogenized relations for k = " << vg_k << ": " << (ok ? "hold" : "FAIL") << "\n";
    } else {
      Int det = delta_basis_determinant(vg_k);
      j["determinant"] = det.str();
      os << "delta-basis evaluation determinant for k = " << vg_k << ": " << det << "\n";
    }
    emit(out, j, os.str());
    return 0;
  }

  if (*cmd_mackey) {
    json j;
    std::ostringstream os;
    if (*mk_lambda) {
      LambdaSphereComplex c = lambda_sphere_complex(mk_p, mk_e, mk_k);
      j["p"] = mk_p;
      j["e"] = mk_e;
      j["k"] = mk_k;
      j["j"] = c.j;
      j["m"] = c.m;
      os << "rotation plane lambda(" << mk_k << ") over C" << ipow(mk_p, mk_e) << ": j = " << c.j
         << ", twist m = " << c.m << "\n";
      if (!mk_level.empty()) {
        IntChainComplex lvl = fixed_point_level(c.complex, mk_level);
        auto h = homology(lvl);
        json hs = json::array();
        for (size_t n = 0; n < h.size(); ++n) {
          hs.push_back(group_json(h[n]));
          os << "H_" << n << " at level " << mk_level << ": " << render_group(h[n]) << "\n";
        }
        j["level"] = mk_level;
        j["homology"] = hs;
      } else {
        auto top = reduced_top_level_homology(c.complex);
        json hs = json::array();
        for (size_t n = 0; n < top.size(); ++n) {
          hs.push_back(group_json(top[n]));
          os << "reduced H_" << n << " at top level: " << render_group(top[n]) << "\n";
        }
        j["reduced_top_homology"] = hs;
      }
    } else if (*mk_cmp) {
      ComparisonResult r = comparison_check(mk_p, mk_e, mk_k, mk_r);
      j["p"] = mk_p;
      j["e"] = mk_e;
      j["k"] = mk_k;
      j["r"] = mk_r;
      j["s"] = r.s;
      j["is_chain_map"] = r.is_chain_map;
      j["h2_multiplication_by_s"] = r.h2_is_mult_by_s;
      j["unit_mod_p"] = r.unit_mod_p;
      os << "comparison for (p,e,k,r) = (" << mk_p << "," << mk_e << "," << mk_k << "," << mk_r
         << "): s = " << r.s << ", chain map: " << (r.is_chain_map ? "yes" : "NO")
         << ", H_2 is x" << r.s << ": " << (r.h2_is_mult_by_s ? "yes" : "NO")
         << ", unit mod p: " << (r.unit_mod_p ? "yes" : "NO") << "\n";
    } else if (*mk_h0) {
      const GroupSpec& g = group_by_name(mk_group);
      Representation v = parse_representation(g, mk_rep);
      SphereH0Result res = sphere_h0_complex(v);
      j["group"] = g.name;
      j["rep"] = v.to_string();
      j["reduced_h0"] = group_json(res.reduced_h0);
      j["d"] = d_invariant(v).d;
      os << "H~0 of the sphere skeleton for W = " << v.to_string() << ": "
         << render_group(res.reduced_h0) << " (d(W) = " << d_invariant(v).d << ")\n";
    }
    emit(out, j, os.str());
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::ParseError& e) {
    return e.get_exit_code() == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
