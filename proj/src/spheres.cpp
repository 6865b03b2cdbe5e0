#include "ocb/spheres.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace ocb {

namespace {

// Collect like terms and drop zero coefficients (modulo generator orders).
MElement normalize_terms(const PointChart& chart, MElement e) {
  std::map<std::string, std::pair<Int, PointGen>> acc;
  for (auto& [c, g] : e.terms) {
    std::string key = std::to_string(g.fam) + "|" + std::to_string(g.p[0]) + "," +
                      std::to_string(g.p[1]) + "," + std::to_string(g.p[2]) + "," +
                      std::to_string(g.p[3]);
    auto it = acc.find(key);
    if (it == acc.end())
      acc.emplace(key, std::make_pair(c, g));
    else
      it->second.first += c;
  }
  MElement out;
  out.deg = e.deg;
  for (auto& [key, cg] : acc) {
    Int c = cg.first;
    Int ord = chart.gen_order(cg.second);
    if (ord != 0) c = mod_pos(c, ord);
    if (c != 0) out.terms.emplace_back(c, cg.second);
  }
  return out;
}

}  // namespace

MElement m_zero(const Degree& d) { return MElement{d, {}}; }

MElement m_unit(const PointChart& chart) {
  Degree zero(chart.group());
  auto cls = chart.classes_at(zero);
  return MElement{zero, {{Int(1), cls.at(0)}}};
}

MElement m_euler(const PointChart& chart, const Representation& w) {
  Degree d = Degree::of(w);
  MElement unit = m_unit(chart);
  MElement out{d, {}};
  if (w.contains_trivial()) return out;
  // multiply the unit by each Euler class in turn
  MElement cur = unit;
  for (size_t i = 1; i < w.mult.size(); ++i) {
    for (int64_t c = 0; c < w.mult[i]; ++c) {
      MElement next;
      next.deg = cur.deg;
      for (auto& [coeff, g] : cur.terms) {
        auto [c2, img] = chart.mult_step(g, static_cast<int>(i));
        if (c2 == 0 || !img) continue;
        next.terms.emplace_back(coeff * c2, *img);
      }
      Degree step(chart.group());
      step.c[i] = 1;
      next.deg = cur.deg + step;
      cur = normalize_terms(chart, next);
    }
  }
  cur.deg = d;
  return cur;
}

MElement m_add(const PointChart& chart, const MElement& a, const MElement& b) {
  if (!(a.deg == b.deg) && !a.is_zero() && !b.is_zero())
    throw std::invalid_argument("m_add: degree mismatch");
  MElement out;
  out.deg = a.is_zero() ? b.deg : a.deg;
  out.terms = a.terms;
  out.terms.insert(out.terms.end(), b.terms.begin(), b.terms.end());
  return normalize_terms(chart, out);
}

MElement m_scale(const PointChart& chart, const Int& c, const MElement& a) {
  MElement out = a;
  for (auto& t : out.terms) t.first *= c;
  return normalize_terms(chart, out);
}

MElement m_mult(const PointChart& chart, const MElement& a, const MElement& b) {
  MElement out;
  out.deg = a.deg + b.deg;
  for (const auto& [ca, ga] : a.terms)
    for (const auto& [cb, gb] : b.terms) {
      auto [c, g] = chart.mult_class(ga, gb);
      if (c == 0 || !g) continue;
      out.terms.emplace_back(ca * cb * c, *g);
    }
  return normalize_terms(chart, out);
}

Int m_psi(const PointChart& chart, const MElement& a) {
  Int v = 0;
  for (const auto& [c, g] : a.terms) v += c * chart.psi_value(g);
  return v;
}

std::string m_to_string(const PointChart& chart, const MElement& a) {
  if (a.terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [c, g] : a.terms) {
    if (!first) os << " + ";
    if (c != 1) os << c << "*";
    os << chart.gen_label(g);
    first = false;
  }
  return os.str();
}

SphereElement sphere_unit(const PointChart& chart, const Representation& w) {
  SphereElement e;
  e.ambient = w;
  e.deg = Degree(chart.group());
  e.base = m_unit(chart);
  e.top = m_zero(e.deg - Degree::of(w));
  return e;
}

SphereElement sphere_iota(const PointChart& chart, const Representation& w) {
  SphereElement e;
  e.ambient = w;
  e.deg = Degree::of(w);
  e.base = m_zero(e.deg);
  e.top = m_unit(chart);
  return e;
}

SphereElement sphere_add(const PointChart& chart, const SphereElement& x, const SphereElement& y) {
  SphereElement e = x;
  e.base = m_add(chart, x.base, y.base);
  e.top = m_add(chart, x.top, y.top);
  return e;
}

bool sphere_equal(const SphereElement& x, const SphereElement& y) {
  auto key = [](const MElement& m) {
    std::vector<std::pair<std::array<int64_t, 5>, Int>> v;
    for (auto& [c, g] : m.terms)
      v.push_back({{int64_t(g.fam), g.p[0], g.p[1], g.p[2], g.p[3]}, c});
    std::sort(v.begin(), v.end());
    return v;
  };
  return key(x.base) == key(y.base) && key(x.top) == key(y.top);
}

std::string sphere_to_string(const PointChart& chart, const SphereElement& x) {
  return "(" + m_to_string(chart, x.base) + ") + (" + m_to_string(chart, x.top) + ")*iota";
}

SphereElement sphere_mult(const PointChart& chart, const SphereElement& x, const SphereElement& y) {
  const int64_t wdim = Degree::of(x.ambient).rank();
  const int64_t ydim = y.deg.rank();
  SphereElement out;
  out.ambient = x.ambient;
  out.deg = x.deg + y.deg;

  out.base = m_mult(chart, x.base, y.base);

  // top coefficient: bx*ty + (-1)^{|W||y|} tx*by + (-1)^{|W|(|y|+1)} tx*ty*a_W
  MElement t1 = m_mult(chart, x.base, y.top);
  MElement t2 = m_mult(chart, x.top, y.base);
  if ((wdim * ydim) % 2 != 0) t2 = m_scale(chart, -1, t2);
  MElement t3 = m_mult(chart, m_mult(chart, x.top, y.top), m_euler(chart, x.ambient));
  if ((wdim * (ydim + 1)) % 2 != 0) t3 = m_scale(chart, -1, t3);
  out.top = m_add(chart, m_add(chart, t1, t2), t3);
  return out;
}

SphereElement antipodal_pullback(const PointChart& chart, const SphereElement& x) {
  const int64_t wdim = Degree::of(x.ambient).rank();
  SphereElement out = x;
  out.base = m_add(chart, x.base, m_mult(chart, x.top, m_euler(chart, x.ambient)));
  out.top = (wdim % 2 == 0) ? m_scale(chart, -1, x.top) : x.top;
  return out;
}

SphereElement iota_restrict(const PointChart& chart, const Representation& k_rep,
                            const Representation& l_rep) {
  if (!k_rep.contains_trivial())
    throw std::invalid_argument("iota_restrict: K must contain a trivial line");
  SphereElement e;
  e.ambient = k_rep;
  e.deg = Degree::of(k_rep) + Degree::of(l_rep);
  e.base = m_zero(e.deg);
  e.top = m_euler(chart, l_rep);
  return e;
}

std::pair<Int, Int> sphere_psi(const PointChart& chart, const SphereElement& x) {
  return {m_psi(chart, x.base), m_psi(chart, x.top)};
}

UnitSphereGroup unit_sphere_groups(const PointChart& chart, const Representation& v,
                                   const Degree& alpha) {
  Degree dv = Degree::of(v);
  Degree a_minus = alpha - dv;
  Degree a1 = alpha;
  a1.shift_trivial(1);
  Degree a1_minus = a1 - dv;

  AbelianMap lower{chart.group_at(a_minus), chart.group_at(alpha), chart.euler_matrix(a_minus, v)};
  AbelianMap upper{chart.group_at(a1_minus), chart.group_at(a1), chart.euler_matrix(a1_minus, v)};

  UnitSphereGroup out;
  out.sub = cokernel_group(lower, "s");
  out.quot = kernel_group(upper, "q");
  Degree fundamental = dv;
  fundamental.shift_trivial(-1);
  if (chart.kind() == PointChart::Kind::C2 && !v.contains_trivial())
    out.extension = ExtensionState::ExactRingKnown;
  else if (alpha == fundamental)
    out.extension = ExtensionState::SplitKnown;
  else
    out.extension = ExtensionState::Unknown;
  return out;
}

GradedGroup c2_unit_sphere_ring(int64_t q, const Degree& alpha) {
  const GroupSpec& g = cyclic_group(2);
  if (alpha.group != &g) throw std::invalid_argument("c2_unit_sphere_ring: degree must be over C2");
  if (q < 1) throw std::invalid_argument("c2_unit_sphere_ring: q >= 1");
  int64_t c0 = alpha.c[0], cs = alpha.c[g.irrep_pos("sigma")];
  GradedGroup out;
  // u^x a^y of degree (-2x, 2x+y), 0 <= y < q
  if (c0 % 2 == 0) {
    int64_t x = -c0 / 2, y = cs - 2 * x;
    if (y >= 0 && y < q) {
      std::string label = y == 0 ? (x == 0 ? "1" : "u^" + std::to_string(x))
                                 : "u^" + std::to_string(x) + " a^" + std::to_string(y);
      out.summands.push_back({y == 0 ? Int(0) : Int(2), label});
    }
  }
  // u^x iota of degree (-2x-1, 2x+q)
  if ((c0 + 1) % 2 == 0) {
    int64_t x = -(c0 + 1) / 2;
    if (2 * x + q == cs)
      out.summands.push_back({0, x == 0 ? "iota" : "u^" + std::to_string(x) + " iota"});
  }
  return out;
}

}  // namespace ocb
