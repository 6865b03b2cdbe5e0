#include "ocb/chart_data.hpp"

#include <json.hpp>

#include <sstream>

namespace ocb {

namespace {

using Fam = GeneratorFamily;

Fam fam(std::string name, std::vector<FamilyParam> params, std::array<int64_t, 3> offset,
        std::vector<std::array<int64_t, 3>> steps, Int order, std::string prov) {
  Fam f;
  f.name = std::move(name);
  f.params = std::move(params);
  f.offset = offset;
  f.steps = std::move(steps);
  f.order = order;
  f.provenance = std::move(prov);
  return f;
}

constexpr int64_t kNoMax = -1;  // sentinel used only while building tables

FamilyParam par(const std::string& n, int64_t min, int64_t max = kNoMax) {
  FamilyParam p;
  p.name = n;
  p.min = min;
  if (max != kNoMax) p.max = max;
  return p;
}

ChartTable table_c2_like(const PointChart& chart) {
  const bool c2 = chart.kind() == PointChart::Kind::C2;
  const int64_t p = chart.prime();
  const std::string u = c2 ? "u_{2sigma}" : "u_{lambda}";
  const std::string a = c2 ? "a_{sigma}" : "a_{lambda}";
  std::array<int64_t, 3> ustep = c2 ? std::array<int64_t, 3>{-2, 2, 0}
                                    : std::array<int64_t, 3>{-2, 1, 0};
  std::array<int64_t, 3> astep{0, 1, 0};
  std::array<int64_t, 3> uinv{-ustep[0], -ustep[1], 0};
  ChartTable t;
  t.group = chart.group().name;
  t.coords = c2 ? std::vector<std::string>{"1", "sigma"} : std::vector<std::string>{"1", "lambda"};
  t.families = {
      fam(u + "^R", {par("R", 0)}, {0, 0, 0}, {ustep}, 0, "positive-cone monomials, torsion-free"),
      fam(u + "^R " + a + "^S", {par("R", 0), par("S", 1)}, {0, 0, 0}, {ustep, astep}, p,
          "positive-cone monomials with Euler factors"),
      fam(std::to_string(p) + "/" + u + "^k", {par("k", 1)}, {0, 0, 0}, {uinv}, 0,
          "orientation-class reciprocals e(W)/u_W"),
      fam("S1(1/(" + u + "^k " + a + "^l))", {par("k", 1), par("l", 1)}, {1, 0, 0},
          {uinv, {0, -1, 0}}, p, "shifted torsion classes in the negative cone"),
  };
  return t;
}

ChartTable table_c4(const PointChart& chart) {
  std::array<int64_t, 3> u2s{-2, 0, 2}, ul{-2, 1, 0}, al{0, 1, 0}, as{0, 0, 1};
  std::array<int64_t, 3> iu2s{2, 0, -2}, iul{2, -1, 0}, ial{0, -1, 0}, ias{0, 0, -1};
  ChartTable t;
  t.group = chart.group().name;
  t.coords = {"1", "lambda", "sigma"};
  t.families = {
      fam("u_{2sigma}^Q u_{lambda}^R", {par("Q", 0), par("R", 0)}, {0, 0, 0}, {u2s, ul}, 0,
          "positive cone, torsion-free monomials"),
      fam("u_{2sigma}^Q u_{lambda}^R a_{lambda}^T", {par("Q", 0), par("R", 0), par("T", 1)},
          {0, 0, 0}, {u2s, ul, al}, 4, "positive cone, a_lambda multiples"),
      fam("u_{2sigma}^Q u_{lambda}^R a_{sigma} a_{lambda}^T",
          {par("Q", 0), par("R", 0), par("T", 0)}, {0, 0, 1}, {u2s, ul, al}, 2,
          "positive cone, one a_sigma factor (au-relation normal form)"),
      fam("u_{2sigma}^Q a_{sigma}^S a_{lambda}^T", {par("Q", 0), par("S", 2), par("T", 0)},
          {0, 0, 0}, {u2s, as, al}, 2, "positive cone, a_sigma powers with no u_lambda"),
      fam("2/u_{2sigma}^r", {par("r", 1)}, {0, 0, 0}, {iu2s}, 0,
          "orientation-class reciprocals e(2r sigma)/u"),
      fam("4/(u_{2sigma}^r u_{lambda}^s)", {par("r", 0), par("s", 1)}, {0, 0, 0}, {iu2s, iul}, 0,
          "orientation-class reciprocals e(W)/u_W with a lambda factor"),
      fam("S1(1/(u_{lambda}^k u_{2sigma}^s a_{lambda}^P))",
          {par("k", 1), par("s", 0), par("P", 1)}, {1, 0, 0}, {iul, iu2s, ial}, 4,
          "shifted torsion classes divided by a_lambda"),
      fam("S1(1/(u_{2sigma}^k a_{lambda}^P a_{sigma}^Q))",
          {par("k", 1), par("P", 1), par("Q", 0)}, {1, 0, 0}, {iu2s, ial, ias}, 2,
          "shifted torsion classes divided by both Euler classes"),
      fam("S1(1/(u_{2sigma}^k a_{sigma}^Q))", {par("k", 1), par("Q", 1)}, {1, 0, 0}, {iu2s, ias},
          2, "shifted torsion classes divided by a_sigma only"),
      fam("a_{sigma} S1(1/(u_{2sigma}^k a_{lambda}^P))", {par("k", 1), par("P", 1)}, {1, 0, 1},
          {iu2s, ial}, 2, "one a_sigma multiple of the divided shifted classes"),
  };
  return t;
}

ChartTable table_cp2(const PointChart& chart) {
  const int64_t p = chart.prime();
  std::array<int64_t, 3> u0{-2, 1, 0}, u1{-2, 0, 1}, a0{0, 1, 0}, a1{0, 0, 1};
  std::array<int64_t, 3> iu0{2, -1, 0}, iu1{2, 0, -1}, ia0{0, -1, 0}, ia1{0, 0, -1};
  const std::string p2 = std::to_string(p * p), ps = std::to_string(p);
  ChartTable t;
  t.group = chart.group().name;
  t.coords = {"1", "lambda(1)", "lambda(" + ps + ")"};
  t.families = {
      fam("u_0^R u_1^S", {par("R", 0), par("S", 0)}, {0, 0, 0}, {u0, u1}, 0,
          "positive cone, torsion-free monomials"),
      fam("u_0^R u_1^S a_0^P", {par("R", 0), par("S", 0), par("P", 1)}, {0, 0, 0}, {u0, u1, a0},
          p * p, "positive cone, a_0 multiples"),
      fam("u_1^S a_0^P a_1^Q", {par("S", 0), par("P", 0), par("Q", 1)}, {0, 0, 0}, {u1, a0, a1},
          p, "positive cone, a_1 multiples (au-relation normal form)"),
      fam(p2 + "/(u_0^r u_1^s)", {par("r", 1), par("s", 0)}, {0, 0, 0}, {iu0, iu1}, 0,
          "orientation-class reciprocals with a faithful factor"),
      fam(ps + "/u_1^s", {par("s", 1)}, {0, 0, 0}, {iu1}, 0,
          "orientation-class reciprocals on the non-faithful axis"),
      fam("S1(1/(u_0^r u_1^s a_0^t))", {par("r", 1), par("s", 0), par("t", 1)}, {1, 0, 0},
          {iu0, iu1, ia0}, p * p, "shifted torsion classes divided by a_0"),
      fam("S1(1/(u_1^l a_0^P a_1^Q))", {par("l", 1), par("P", 1), par("Q", 0)}, {1, 0, 0},
          {iu1, ia0, ia1}, p, "shifted torsion classes divided by both Euler classes"),
      fam("S1(1/(u_1^l a_1^Q))", {par("l", 1), par("Q", 1)}, {1, 0, 0}, {iu1, ia1}, p,
          "shifted torsion classes divided by a_1 only"),
  };
  return t;
}

ChartTable table_sigma3(const PointChart& chart) {
  std::array<int64_t, 3> u{-2, 0, 2}, v{-1, 1, -1}, al{0, 1, 0}, as{0, 0, 1};
  std::array<int64_t, 3> iu{2, 0, -2}, iv{1, -1, 1}, ial{0, -1, 0}, ias{0, 0, -1};
  ChartTable t;
  t.group = chart.group().name;
  t.coords = {"1", "lambda", "sigma"};
  auto quadrant = [&](const std::string& label, int64_t coeff_u, int64_t coeff_v) {
    (void)label;
    return std::to_string((coeff_u < 0 ? 2 : 1) * (coeff_v < 0 ? 3 : 1));
  };
  (void)quadrant;
  t.families = {
      // the plane of infinite cyclic classes, one subfamily per quadrant
      fam("u_{2sigma}^i u_{lambda-sigma}^j", {par("i", 0), par("j", 0)}, {0, 0, 0}, {u, v}, 0,
          "grid of torsion-free classes, first quadrant"),
      fam("2 u_{lambda-sigma}^j/u_{2sigma}^i", {par("i", 1), par("j", 0)}, {0, 0, 0}, {iu, v}, 0,
          "grid of torsion-free classes, u_{2sigma} reciprocals"),
      fam("3 u_{2sigma}^i/u_{lambda-sigma}^j", {par("i", 0), par("j", 1)}, {0, 0, 0}, {u, iv}, 0,
          "grid of torsion-free classes, u_{lambda-sigma} reciprocals"),
      fam("6/(u_{2sigma}^i u_{lambda-sigma}^j)", {par("i", 1), par("j", 1)}, {0, 0, 0}, {iu, iv},
          0, "grid of torsion-free classes, third quadrant"),
      // a_lambda rays on rows j >= 0
      fam("a_{lambda}^T u_{2sigma}^i u_{lambda-sigma}^j", {par("i", 0), par("j", 0), par("T", 1)},
          {0, 0, 0}, {u, v, al}, 3, "a_lambda rays from the grid, i >= 0"),
      fam("a_{lambda}^T u_{lambda-sigma}^j/u_{2sigma}^i", {par("i", 1), par("j", 0), par("T", 1)},
          {0, 0, 0}, {iu, v, al}, 3, "a_lambda rays from the grid, i < 0"),
      // a_sigma rays on columns i >= 0
      fam("a_{sigma}^S u_{2sigma}^i u_{lambda-sigma}^j", {par("i", 0), par("j", 0), par("S", 1)},
          {0, 0, 0}, {u, v, as}, 2, "a_sigma rays from the grid, j >= 0"),
      fam("a_{sigma}^S u_{2sigma}^i/u_{lambda-sigma}^j", {par("i", 0), par("j", 1), par("S", 1)},
          {0, 0, 0}, {u, iv, as}, 2, "a_sigma rays from the grid, j < 0"),
      // divided shifted classes
      fam("S1(u_{2sigma}^i/(u_{lambda-sigma}^j a_{lambda}^T))",
          {par("i", 0), par("j", 1), par("T", 1)}, {1, 0, 0}, {u, iv, ial}, 3,
          "shifted classes divided by a_lambda, i >= 0"),
      fam("S1(1/(u_{2sigma}^i u_{lambda-sigma}^j a_{lambda}^T))",
          {par("i", 1), par("j", 1), par("T", 1)}, {1, 0, 0}, {iu, iv, ial}, 3,
          "shifted classes divided by a_lambda, i < 0"),
      fam("S1(u_{lambda-sigma}^j/(u_{2sigma}^i a_{sigma}^S))",
          {par("i", 1), par("j", 0), par("S", 1)}, {1, 0, 0}, {iu, v, ias}, 2,
          "shifted classes divided by a_sigma, j >= 0"),
      fam("S1(1/(u_{2sigma}^i u_{lambda-sigma}^j a_{sigma}^S))",
          {par("i", 1), par("j", 1), par("S", 1)}, {1, 0, 0}, {iu, iv, ias}, 2,
          "shifted classes divided by a_sigma, j < 0"),
  };
  return t;
}

}  // namespace

ChartTable chart_table(const PointChart& chart) {
  switch (chart.kind()) {
    case PointChart::Kind::C2:
    case PointChart::Kind::CpOdd:
      return table_c2_like(chart);
    case PointChart::Kind::C4:
      return table_c4(chart);
    case PointChart::Kind::Cp2:
      return table_cp2(chart);
    case PointChart::Kind::Sigma3:
      return table_sigma3(chart);
  }
  throw std::logic_error("chart_table: unknown kind");
}

std::array<int64_t, 3> chart_coords(const PointChart& chart, const Degree& alpha) {
  return chart.chart_coordinates(alpha);
}

GradedGroup table_group_at(const ChartTable& table, const std::array<int64_t, 3>& coord) {
  GradedGroup out;
  for (const auto& f : table.families) {
    // solve offset + sum p_i step_i = coord over the integers
    const size_t n = f.params.size();
    IntMat m = IntMat::Zero(3, static_cast<Index>(n));
    for (size_t c = 0; c < n; ++c)
      for (int r = 0; r < 3; ++r) m(r, static_cast<Index>(c)) = f.steps[c][r];
    IntVec rhs(3);
    for (int r = 0; r < 3; ++r) rhs(r) = coord[r] - f.offset[r];
    auto sol = solve_integer(m, rhs);
    if (!sol) continue;
    if (kernel_basis(m).cols() != 0)
      throw std::invalid_argument("table family '" + f.name + "' has dependent steps");
    bool ok = true;
    for (size_t c = 0; c < n; ++c) {
      int64_t v = to_i64((*sol)(static_cast<Index>(c)));
      if (v < f.params[c].min || (f.params[c].max && v > *f.params[c].max)) ok = false;
    }
    if (!ok) continue;
    std::string label = f.name + " [";
    for (size_t c = 0; c < n; ++c) {
      if (c) label += ",";
      label += f.params[c].name + "=" + (*sol)(static_cast<Index>(c)).str();
    }
    label += "]";
    out.summands.push_back({f.order, label});
  }
  return out;
}

std::string chart_table_to_json(const ChartTable& table) {
  nlohmann::ordered_json j;
  j["group"] = table.group;
  j["coords"] = table.coords;
  j["families"] = nlohmann::ordered_json::array();
  for (const auto& f : table.families) {
    nlohmann::ordered_json jf;
    jf["name"] = f.name;
    jf["params"] = nlohmann::ordered_json::array();
    for (const auto& p : f.params) {
      nlohmann::ordered_json jp;
      jp["name"] = p.name;
      jp["min"] = p.min;
      if (p.max) jp["max"] = *p.max;
      jf["params"].push_back(jp);
    }
    jf["degree_offset"] = f.offset;
    jf["degree"] = nlohmann::ordered_json::array();
    for (const auto& s : f.steps) jf["degree"].push_back(s);
    jf["order"] = f.order.str();
    jf["provenance"] = f.provenance;
    j["families"].push_back(jf);
  }
  return j.dump(2);
}

ChartTable chart_table_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  ChartTable t;
  t.group = j.at("group").get<std::string>();
  if (j.contains("coords")) t.coords = j.at("coords").get<std::vector<std::string>>();
  for (const auto& jf : j.at("families")) {
    GeneratorFamily f;
    f.name = jf.at("name").get<std::string>();
    for (const auto& jp : jf.at("params")) {
      FamilyParam p;
      p.name = jp.at("name").get<std::string>();
      p.min = jp.at("min").get<int64_t>();
      if (jp.contains("max")) p.max = jp.at("max").get<int64_t>();
      f.params.push_back(p);
    }
    auto off = jf.at("degree_offset").get<std::vector<int64_t>>();
    for (size_t i = 0; i < 3 && i < off.size(); ++i) f.offset[i] = off[i];
    for (const auto& js : jf.at("degree")) {
      auto s = js.get<std::vector<int64_t>>();
      std::array<int64_t, 3> step{0, 0, 0};
      for (size_t i = 0; i < 3 && i < s.size(); ++i) step[i] = s[i];
      f.steps.push_back(step);
    }
    f.order = Int(jf.at("order").get<std::string>());
    if (jf.contains("provenance")) f.provenance = jf.at("provenance").get<std::string>();
    t.families.push_back(std::move(f));
  }
  return t;
}

}  // namespace ocb
