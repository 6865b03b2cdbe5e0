#include "ocb/assembly.hpp"

#include <algorithm>
#include <sstream>

#include "ocb/stirling.hpp"

namespace ocb {

std::vector<Degree> DegreeWindow::degrees() const {
  std::vector<Degree> out;
  Degree cur = lo;
  size_t dims = lo.c.size();
  for (;;) {
    out.push_back(cur);
    size_t i = 0;
    for (; i < dims; ++i) {
      if (cur.c[i] < hi.c[i]) {
        ++cur.c[i];
        for (size_t j = 0; j < i; ++j) cur.c[j] = lo.c[j];
        break;
      }
    }
    if (i == dims) break;
  }
  return out;
}

namespace {

Degree shift_degree(const Representation& v, int j) {
  // j * (V - 1)
  Degree d = Degree::of(v) * j;
  d.shift_trivial(-j);
  return d;
}

}  // namespace

AdditiveChart additive_free_chart(const PointChart& chart, const Representation& v, int k,
                                  const DegreeWindow& window) {
  if (!v.contains_trivial())
    throw std::invalid_argument("additive_free_chart: V must contain a trivial line");
  AdditiveChart out;
  out.group = chart.group().name;
  out.rep = v.to_string();
  out.k = k;
  for (const Degree& alpha : window.degrees()) {
    ChartEntry entry;
    try {
      for (int j = 0; j <= k - 1; ++j) {
        Int mult = stirling_c(k, k - j);
        if (mult == 0) continue;
        GradedGroup g = chart.group_at(alpha - shift_degree(v, j));
        for (Int c = 0; c < mult; ++c)
          for (const auto& s : g.summands) entry.summands.push_back({s.order, s.label, j, false});
      }
    } catch (const ChartError& e) {
      entry.supported = false;
      entry.error = e.what();
      entry.summands.clear();
    }
    out.entries.emplace_back(alpha, std::move(entry));
  }
  return out;
}

bool sphere_chart_whitelisted(const GroupSpec& g, const Representation& v) {
  // certified exception: the two-dimensional sign-plane over C2
  if (g.kind != GroupSpec::Kind::Cyclic || g.n != 2) return false;
  Representation two_sigma = parse_representation(g, "2*sigma");
  return v.mult == two_sigma.mult;
}

AdditiveChart additive_sphere_chart(const PointChart& chart, const Representation& v, int k,
                                    const DegreeWindow& window, int64_t sweep_lo,
                                    int64_t sweep_hi) {
  const GroupSpec& g = chart.group();
  if (fixed_subrep_dim(v, g.subgroups.back().label) != 0)
    throw std::invalid_argument("additive_sphere_chart: V must have no fixed vectors");

  if (!sphere_chart_whitelisted(g, v)) {
    VanishingReport rep = vanishing_sweep(chart, v, sweep_lo, sweep_hi);
    if (!rep.overall) {
      std::ostringstream os;
      os << "additive_sphere_chart: the vanishing requirement fails for " << v.to_string()
         << " at l =";
      for (int64_t l : rep.failing_l) os << " " << l;
      throw std::runtime_error(os.str());
    }
  }

  const bool c2_exact = chart.kind() == PointChart::Kind::C2;
  int64_t q = c2_exact ? v.mult[g.irrep_pos("sigma")] : 0;

  AdditiveChart out;
  out.group = g.name;
  out.rep = v.to_string();
  out.k = k;
  for (const Degree& alpha : window.degrees()) {
    ChartEntry entry;
    try {
      for (int j = 0; j <= k - 1; ++j) {
        Int mult = a_multiplicity(k, j);
        if (mult == 0) continue;
        Degree beta = alpha - shift_degree(v, j);
        if (c2_exact) {
          GradedGroup grp = c2_unit_sphere_ring(q, beta);
          for (Int c = 0; c < mult; ++c)
            for (const auto& s : grp.summands)
              entry.summands.push_back({s.order, s.label, j, false});
        } else {
          UnitSphereGroup usg = unit_sphere_groups(chart, v, beta);
          bool unresolved = usg.extension == ExtensionState::Unknown && !usg.sub.is_trivial() &&
                            !usg.quot.is_trivial();
          for (Int c = 0; c < mult; ++c) {
            for (const auto& s : usg.sub.summands)
              entry.summands.push_back({s.order, "sub:" + s.label, j, unresolved});
            for (const auto& s : usg.quot.summands)
              entry.summands.push_back({s.order, "quot:" + s.label, j, unresolved});
          }
        }
      }
    } catch (const ChartError& e) {
      entry.supported = false;
      entry.error = e.what();
      entry.summands.clear();
    }
    out.entries.emplace_back(alpha, std::move(entry));
  }
  return out;
}

AdditiveChart unit_sphere_chart(const PointChart& chart, const Representation& v,
                                const DegreeWindow& window) {
  const GroupSpec& g = chart.group();
  const bool c2_exact = chart.kind() == PointChart::Kind::C2 && !v.contains_trivial();
  int64_t q = c2_exact ? v.mult[g.irrep_pos("sigma")] : 0;
  AdditiveChart out;
  out.group = g.name;
  out.rep = "S(" + v.to_string() + ")";
  out.k = 1;
  for (const Degree& alpha : window.degrees()) {
    ChartEntry entry;
    try {
      if (c2_exact) {
        for (const auto& s : c2_unit_sphere_ring(q, alpha).summands)
          entry.summands.push_back({s.order, s.label, 0, false});
      } else {
        UnitSphereGroup usg = unit_sphere_groups(chart, v, alpha);
        bool unresolved = usg.extension == ExtensionState::Unknown && !usg.sub.is_trivial() &&
                          !usg.quot.is_trivial();
        for (const auto& s : usg.sub.summands)
          entry.summands.push_back({s.order, "sub:" + s.label, 0, unresolved});
        for (const auto& s : usg.quot.summands)
          entry.summands.push_back({s.order, "quot:" + s.label, 0, unresolved});
      }
    } catch (const ChartError& e) {
      entry.supported = false;
      entry.error = e.what();
      entry.summands.clear();
    }
    out.entries.emplace_back(alpha, std::move(entry));
  }
  return out;
}

C2SigmaRingReport c2_sigma_ring(int k, int64_t n) {
  if (k > 5) throw std::invalid_argument("c2_sigma_ring: cap exceeded (k <= 5)");
  if (n < 2) throw std::invalid_argument("c2_sigma_ring: n >= 2");
  C2SigmaRingReport rep;
  rep.k = k;
  rep.n = n;

  // classical ring: torsion d = 1 kills the deformation class
  RingParams ring = make_ring(k, n % 2 == 0 ? 1 : -1, 1);

  // degree-1 lattice generators: differences and doubles over all ordered pairs
  std::vector<RingElement> lattice_gens;
  std::vector<RingElement> omegas;
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j)
      if (i != j) omegas.push_back(reduce(ring, {FormalTerm{1, {{i, j}}, 0, 0}}));
  for (size_t a = 0; a < omegas.size(); ++a) {
    lattice_gens.push_back(scale(2, omegas[a]));
    for (size_t b = a + 1; b < omegas.size(); ++b)
      lattice_gens.push_back(add(omegas[a], scale(-1, omegas[b])));
  }

  auto coords_in_basis = [&](const std::vector<RingElement>& elems, int degree) {
    auto basis = basis_enumerate(k, degree);
    std::map<OmegaMonomial, int> pos;
    for (size_t b = 0; b < basis.size(); ++b) pos[basis[b]] = static_cast<int>(b);
    IntMat m(static_cast<Index>(basis.size()), static_cast<Index>(elems.size()));
    m.setZero();
    for (size_t c = 0; c < elems.size(); ++c)
      for (const auto& [mono, coeff] : elems[c].terms) {
        auto it = pos.find(mono);
        if (it == pos.end()) throw std::logic_error("c2_sigma_ring: element outside the basis");
        m(it->second, static_cast<Index>(c)) = coeff;
      }
    return m;
  };

  // iteratively build T^m = T^1 * T^{m-1} as lattices in the classical basis
  std::vector<RingElement> level{reduce(ring, {FormalTerm{1, {}, 0, 0}})};
  for (int m = 0; m <= k - 1; ++m) {
    if (m > 0) {
      std::vector<RingElement> next;
      for (const auto& g1 : lattice_gens)
        for (const auto& b : level) next.push_back(multiply(g1, b));
      level = std::move(next);
    }
    IntMat coords = coords_in_basis(level, m);
    auto ech = col_echelon(coords);
    Index rank = static_cast<Index>(ech.pivots.size());
    IntMat basis_mat = ech.h.leftCols(rank);
    rep.t_ranks.push_back(rank);

    // full classical lattice at this degree and the quotient by T^m
    Index full = static_cast<Index>(basis_enumerate(k, m).size());
    GradedGroup quot = lattice_quotient(identity<Int>(full), basis_mat);
    std::vector<Int> orders;
    for (const auto& s : quot.summands) orders.push_back(s.order);
    rep.quotient_orders.push_back(orders);

    // keep a reduced generating set for the next level and for the report
    std::vector<RingElement> reduced_level;
    std::vector<std::string> names;
    auto basis = basis_enumerate(k, m);
    for (Index c = 0; c < rank; ++c) {
      RingElement e;
      e.params = ring;
      for (Index r = 0; r < basis_mat.rows(); ++r)
        if (basis_mat(r, c) != 0) e.terms[basis[r]] = basis_mat(r, c);
      names.push_back(e.to_string());
      reduced_level.push_back(std::move(e));
    }
    rep.t_basis.push_back(names);
    level = std::move(reduced_level);
  }

  std::ostringstream os;
  os << "E_" << n << " (tensor) T,  T-ranks (";
  for (size_t i = 0; i < rep.t_ranks.size(); ++i) os << (i ? ", " : "") << rep.t_ranks[i];
  os << "), generators of T^1 in degree " << n << "sigma-1";
  rep.presentation = os.str();

  // degreewise comparison with the sphere chart over a window
  const GroupSpec& c2 = cyclic_group(2);
  PointChart chart(c2);
  Representation v(c2);
  v.add("sigma", n);
  Degree lo(c2), hi(c2);
  lo.c = {-5, -5};
  hi.c = {5, 5};
  AdditiveChart sphere = additive_sphere_chart(chart, v, k, DegreeWindow{lo, hi});
  rep.matches_sphere_chart = true;
  for (const auto& [alpha, entry] : sphere.entries) {
    // E_n (x) T at alpha. The generators of T^m split into a(k, m) classes
    // carrying a full copy of E_n and t_m - a(k, m) classes carrying E_n/(a):
    // the latter are images of the semi-fundamental class, which the Euler
    // class annihilates.
    GradedGroup tensor;
    for (int m = 0; m <= k - 1; ++m) {
      Degree beta = alpha;
      beta.c[0] += m;
      beta.c[1] -= m * n;
      int64_t c0 = beta.c[0], cs = beta.c[1];
      if (c0 % 2 != 0) continue;
      int64_t y = cs + c0;
      Int full = a_multiplicity(k, m);
      Int divided = Int(rep.t_ranks[m]) - full;
      if (y >= 0 && y < n)
        for (Int t = 0; t < full; ++t) tensor.summands.push_back({y == 0 ? Int(0) : Int(2), "E"});
      if (y == 0)
        for (Int t = 0; t < divided; ++t) tensor.summands.push_back({0, "E/a"});
    }
    if (!tensor.same_iso_class(entry.as_group())) rep.matches_sphere_chart = false;
  }
  return rep;
}

}  // namespace ocb
