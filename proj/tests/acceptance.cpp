// Acceptance suite: one line per criterion, exact arithmetic throughout.
// Exit code = number of failing criteria.

#include <chrono>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "ocb/assembly.hpp"
#include "ocb/chart_data.hpp"
#include "ocb/config_ring.hpp"
#include "ocb/mackey.hpp"
#include "ocb/stirling.hpp"
#include "ocb/vanishing.hpp"
#include "ocb/vg.hpp"

using namespace ocb;

namespace {

struct Criterion {
  int id;
  std::string title;
  bool pass = true;
  std::vector<std::string> notes;
  void check(bool cond, const std::string& what) {
    if (!cond) {
      pass = false;
      if (notes.size() < 8) notes.push_back(what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

std::vector<const GroupSpec*> catalog_groups() {
  std::vector<const GroupSpec*> out;
  for (int64_t n = 2; n <= 12; ++n) out.push_back(&cyclic_group(n));
  out.push_back(&sigma3_group());
  return out;
}

std::vector<const GroupSpec*> chart_groups() {
  return {&cyclic_group(2), &cyclic_group(3), &cyclic_group(5),
          &cyclic_group(9), &cyclic_group(4), &sigma3_group()};
}

std::vector<Representation> all_reps(const GroupSpec& g, int64_t maxdim, bool fixed_point_free,
                                     bool need_trivial) {
  std::vector<Representation> out;
  std::vector<int64_t> mult(g.irreps.size(), 0);
  auto rec = [&](auto&& self, size_t i, int64_t left) -> void {
    if (i == g.irreps.size()) {
      Representation r(g);
      r.mult = mult;
      if (r.dim() < 1) return;
      if (need_trivial && !r.contains_trivial()) return;
      if (fixed_point_free && r.contains_trivial()) return;
      out.push_back(r);
      return;
    }
    for (int64_t m = 0; m * g.irreps[i].dim <= left; ++m) {
      mult[i] = m;
      self(self, i + 1, left - m * g.irreps[i].dim);
    }
    mult[i] = 0;
  };
  rec(rec, 0, maxdim);
  return out;
}

// ---------------------------------------------------------------------------

void criterion1(Criterion& c) {
  const GroupSpec& s3 = sigma3_group();
  auto sig = parse_representation(s3, "sigma");
  auto lam = parse_representation(s3, "lambda");
  auto both = parse_representation(s3, "sigma+lambda");
  c.check(d_invariant(sig).d == 2, "d(sigma) != 2");
  c.check(e_invariant(sig) == 2, "e(sigma) != 2");
  c.check(d_invariant(lam).d == 3, "d(lambda) != 3");
  c.check(e_invariant(lam) == 6, "e(lambda) != 6");
  c.check(d_invariant(both).d == 1, "d(sigma+lambda) != 1");
  c.check(e_invariant(both) == 6, "e(sigma+lambda) != 6");
  for (int64_t n = 2; n <= 12; ++n) {
    auto l1 = parse_representation(cyclic_group(n), "lambda(1)");
    c.check(d_invariant(l1).d == n, "d(lambda(1)) != n for C" + std::to_string(n));
  }
  for (const GroupSpec* g : catalog_groups())
    for (size_t i = 0; i < g->irreps.size(); ++i)
      for (size_t j = 0; j < g->irreps.size(); ++j) {
        Representation a(*g), b(*g);
        a.mult[i] = 1;
        b.mult[j] = 1;
        int64_t expect = std::gcd(d_invariant(a).d, d_invariant(b).d);
        c.check(d_invariant(a + b).d == expect, "gcd law fails in " + g->name);
      }
}

void criterion2(Criterion& c) {
  for (const GroupSpec* g : catalog_groups())
    for (const auto& v : all_reps(*g, 7, false, false)) {
      if (v.dim() % 2 == 0) continue;
      int64_t d = d_invariant(v).d;
      c.check(d == 1 || d == 2, "odd-dimension law fails for " + v.to_string() + " in " + g->name);
    }
}

void criterion3(Criterion& c) {
  for (const GroupSpec* gs : chart_groups()) {
    PointChart chart(*gs);
    for (const auto& w : all_reps(*gs, 6, false, false)) {
      Degree dw = Degree::of(w);
      GradedGroup at_w = chart.group_at(dw);
      int64_t d = w.contains_trivial() ? 1 : d_invariant(w).d;
      Int order = at_w.total_order();
      c.check(order == (d == 1 ? 1 : d), "order of M^W != d(W) at " + w.to_string());
      if (d > 1) c.check(at_w.summands.size() == 1, "M^W not cyclic at " + w.to_string());
      // negative side
      c.check(chart.group_at(-dw).is_trivial(), "M^{-W} != 0 at " + w.to_string());
      bool is_one_triv = w.dim() == 1 && w.contains_trivial();
      if (!is_one_triv) {
        Degree one_minus = -dw;
        one_minus.shift_trivial(1);
        c.check(chart.group_at(one_minus).is_trivial(), "M^{1-W} != 0 at " + w.to_string());
      }
      // (1 - (-1)^{|W|}) a_W = 0
      if (w.dim() % 2 != 0)
        c.check(order == 1 || order == 2, "odd W with order(a_W) > 2 at " + w.to_string());
    }
  }
}

void criterion4(Criterion& c) {
  int64_t lmin = -12, lmax = 12;
  int points_checked = 0;
  for (const GroupSpec* gs : chart_groups()) {
    PointChart chart(*gs);
    // V containing a trivial line, V != 2-dim trivial
    for (const auto& v : all_reps(*gs, 6, false, true)) {
      if (v.dim() == 2 && v.mult[0] == 2) continue;
      VanishingReport rep = vanishing_sweep(chart, v, lmin, lmax);
      c.check(rep.overall, gs->name + " sweep fails for V = " + v.to_string());
      for (const auto& rec : rep.records) {
        c.check(sphere_crosscheck(chart, v, rec.l) == rec.passed(),
                "crosscheck mismatch at " + v.to_string() + ", l=" + std::to_string(rec.l));
        ++points_checked;
      }
    }
    // fixed-point-free V of dimension 3..6
    for (const auto& v : all_reps(*gs, 6, true, false)) {
      if (v.dim() < 3) continue;
      VanishingReport rep = vanishing_sweep(chart, v, lmin, lmax);
      c.check(rep.overall, gs->name + " sweep fails for V = " + v.to_string());
      for (const auto& rec : rep.records) {
        c.check(sphere_crosscheck(chart, v, rec.l) == rec.passed(),
                "crosscheck mismatch at " + v.to_string() + ", l=" + std::to_string(rec.l));
        ++points_checked;
      }
    }
    // the 2-dimensional orientable fixed-point-free anomaly
    for (const auto& v : all_reps(*gs, 2, true, false)) {
      if (v.dim() != 2 || !is_orientable(v)) continue;
      VanishingReport rep = vanishing_sweep(chart, v, lmin, lmax);
      c.check(!rep.overall, "2-dim anomaly unexpectedly passes for " + v.to_string());
      c.check(rep.failing_l == std::vector<int64_t>{-3, -2},
              "anomaly fail set != {-3,-2} for " + v.to_string() + " in " + gs->name);
      // the degreewise identity linking the sphere to the two halves
      for (int64_t l = lmin + 1; l <= lmax; ++l) {
        bool sphere_zero = sphere_crosscheck(chart, v, l);
        bool surj = vanishing_at(chart, v, l).first_map_surjective;
        bool inj = vanishing_at(chart, v, l - 1).second_map_injective;
        c.check(sphere_zero == (surj && inj), "shifted identity fails at l=" + std::to_string(l));
      }
    }
  }
  // V = 2-dim trivial checked directly: fails exactly at l = -2
  PointChart c2(cyclic_group(2));
  VanishingReport two = vanishing_sweep(c2, parse_representation(cyclic_group(2), "2*1"), lmin, lmax);
  c.check(two.failing_l == std::vector<int64_t>{-2}, "V = 2 should fail exactly at l = -2");
  c.note("crosscheck agreed with vanishing_at at " + std::to_string(points_checked) + " points");
  c.note("documented deviation: dim-2 anomalies fail at {-3,-2}, not only -2 (see ledger)");
}

void criterion5(Criterion& c) {
  for (int k = 2; k <= 5; ++k) {
    for (int j = 0; j <= k - 1; ++j)
      c.check(Int(basis_enumerate(k, j).size()) == stirling_c(k, k - j),
              "basis count mismatch at k=" + std::to_string(k) + ", j=" + std::to_string(j));
    for (int sign : {1, -1}) {
      RingParams p = make_ring(k, sign, sign == 1 ? 2 : 3);
      c.check(reduce(p, parse_ring_expr("w(1,2)*w(2,1)")).is_zero(), "w12 w21 != 0");
      if (k >= 3) {
        RingElement prod = multiply(reduce(p, parse_ring_expr("w(1,2)-w(1,3)")),
                                    reduce(p, parse_ring_expr("w(2,1)-w(2,3)")));
        c.check(prod.is_zero(), "(w12-w13)(w21-w23) != 0");
      }
    }
  }
  // 1000-word confluence audit for k <= 4
  std::mt19937 rng(424242);
  for (int k = 3; k <= 4; ++k) {
    std::vector<std::pair<int, int>> gens;
    for (int i = 1; i <= k; ++i)
      for (int j = 1; j <= k; ++j)
        if (i != j) gens.emplace_back(i, j);
    std::vector<RingParams> rings = {make_ring(k, 1, 2), make_ring(k, -1, 3)};
    for (int trial = 0; trial < 1000; ++trial) {
      const RingParams& p = rings[trial % rings.size()];
      FormalTerm t;
      t.coeff = 1 + static_cast<int64_t>(rng() % 4);
      t.a_exp = rng() % 2;
      int len = 1 + static_cast<int>(rng() % 4);
      for (int u = 0; u < len; ++u) t.factors.push_back(gens[rng() % gens.size()]);
      RingElement a = reduce(p, {t}, ReduceStrategy::LargestColumn);
      RingElement b = reduce(p, {t}, ReduceStrategy::SmallestColumn);
      c.check(equal(a, b), "confluence audit failed at k=" + std::to_string(k) + " trial " +
                               std::to_string(trial));
    }
  }
}

void criterion6(Criterion& c) {
  // classical slice: the a = 0 quotient satisfies the undeformed relations
  for (int k = 3; k <= 5; ++k)
    for (int sign : {1, -1}) {
      RingParams classical = make_ring(k, sign, 1);
      for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j) {
          if (i == j) continue;
          FormalExpr flip{FormalTerm{1, {{i, j}}, 0, 0}, FormalTerm{-sign, {{j, i}}, 0, 0}};
          c.check(reduce(classical, flip).is_zero(), "classical flip fails");
          FormalExpr square{FormalTerm{1, {{i, j}, {i, j}}, 0, 0}};
          c.check(reduce(classical, square).is_zero(), "classical square fails");
          int l = (std::max(i, j) % k) + 1;
          if (l != i && l != j) {
            FormalExpr arn{FormalTerm{1, {{i, j}, {j, l}}, 0, 0},
                           FormalTerm{1, {{j, l}, {l, i}}, 0, 0},
                           FormalTerm{1, {{l, i}, {i, j}}, 0, 0}};
            c.check(reduce(classical, arn).is_zero(), "classical Arnold fails");
          }
        }
    }
  // a = 1 evaluation mod d kills the deformed relations
  for (int k = 3; k <= 5; ++k)
    for (const RingParams& p : {make_ring(k, 1, 2), make_ring(k, -1, 3), make_ring(k, -1, 0)}) {
      for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j) {
          if (i == j) continue;
          c.check(eval_expr(k, relation_flip(p, i, j), p.d).is_zero(), "a=1 flip fails");
          c.check(eval_expr(k, relation_square(p, i, j), p.d).is_zero(), "a=1 square fails");
          int l = (std::max(i, j) % k) + 1;
          if (l != i && l != j)
            c.check(eval_expr(k, relation_arnold(p, i, j, l), p.d).is_zero(), "a=1 Arnold fails");
        }
    }
  // restriction maps relations into the target ideal
  for (int k = 3; k <= 4; ++k)
    for (int src_sign : {1, -1})
      for (int w_sign : {1, -1}) {
        Int d_src = src_sign == 1 ? 2 : 3;
        Int d_tgt = (src_sign * w_sign) == 1 ? 2 : 3;
        Int d_w = w_sign == -1 ? 2 : 4;
        RingParams src = make_ring(k, src_sign, d_src);
        for (int i = 1; i <= k; ++i)
          for (int j = 1; j <= k; ++j) {
            if (i == j) continue;
            for (const FormalExpr& rel :
                 {relation_flip(src, i, j), relation_square(src, i, j)}) {
              RingElement img = restrict_to_subrep(reduce(src, rel), w_sign, d_tgt, d_w);
              c.check(img.is_zero(), "restricted relation nonzero");
            }
            int l = (std::max(i, j) % k) + 1;
            if (l != i && l != j) {
              RingElement img = restrict_to_subrep(reduce(src, relation_arnold(src, i, j, l)),
                                                   w_sign, d_tgt, d_w);
              c.check(img.is_zero(), "restricted Arnold nonzero");
            }
          }
      }
}

void criterion7(Criterion& c) {
  for (int k = 2; k <= 5; ++k) {
    auto perms = permutations_lex(k);
    for (const auto& s : perms)
      c.check(p_sigma(k, s) == delta_sigma(k, s), "P_sigma != delta_sigma at k=" + std::to_string(k));
    Int det = delta_basis_determinant(k);
    c.check(det == 1 || det == -1, "delta determinant not +-1 at k=" + std::to_string(k));
  }
  FiltrationReport r3 = filtration_ranks(3);
  c.check(r3.ranks == std::vector<int64_t>{1, 3, 2}, "k=3 ranks != (1,3,2)");
  FiltrationReport r4 = filtration_ranks(4);
  c.check(r4.ranks == std::vector<int64_t>{1, 6, 11, 6}, "k=4 ranks != (1,6,11,6)");
  for (int k = 2; k <= 5; ++k) {
    FiltrationReport r = filtration_ranks(k);
    int64_t total = std::accumulate(r.ranks.begin(), r.ranks.end(), int64_t{0});
    int64_t fact = 1;
    for (int i = 2; i <= k; ++i) fact *= i;
    c.check(total == fact, "rank sum != k! at k=" + std::to_string(k));
    c.check(r.torsion_invariants.empty(), "filtration quotient has torsion");
  }
}

void criterion8(Criterion& c) {
  const GroupSpec& g2 = cyclic_group(2);
  // Figure-area check: the sign-plane sphere charts over rank in [-6, 6]
  for (int64_t q : {2, 3}) {
    for (int64_t x = -14; x <= 14; ++x)
      for (int64_t y = -14; y <= 14; ++y) {
        int64_t rank = x + y;
        if (rank < -6 || rank > 6) continue;
        Degree d(g2);
        d.c[0] = x;
        d.c[1] = y;
        GradedGroup got = c2_unit_sphere_ring(q, d);
        // transcription of the two displayed charts: spot (rank, weight)
        GradedGroup expect;
        if (q == 2) {
          if (rank == 0 && y % 2 == 0) expect.summands.push_back({0, "u"});
          if (rank == 1 && y % 2 == 0) expect.summands.push_back({0, "iota"});
          if (rank == 1 && y % 2 != 0) expect.summands.push_back({2, "a"});
        } else {
          if (rank == 0 && y % 2 == 0) expect.summands.push_back({0, "u"});
          if (rank == 1 && y % 2 != 0) expect.summands.push_back({2, "a"});
          if (rank == 2 && y % 2 == 0) expect.summands.push_back({2, "a2"});
          if (rank == 2 && y % 2 != 0) expect.summands.push_back({0, "iota"});
        }
        c.check(got.same_iso_class(expect),
                "S(" + std::to_string(q) + "sigma) chart mismatch at (" + std::to_string(x) +
                    "," + std::to_string(y) + ")");
      }
  }
  // the pinned table for OC_3(2 sigma)
  PointChart chart(g2);
  Representation v = parse_representation(g2, "2*sigma");
  DegreeWindow w{Degree(g2), Degree(g2)};
  w.lo.c = {-4, -2};
  w.hi.c = {2, 6};
  AdditiveChart oc = additive_sphere_chart(chart, v, 3, w);
  auto expect_at = [&](int64_t a, int64_t b, std::vector<Int> orders, const std::string& name) {
    Degree d(g2);
    d.c = {a, b};
    const ChartEntry* e = oc.entry_at(d);
    if (!e || !e->supported) {
      c.check(false, "missing entry " + name);
      return;
    }
    GradedGroup want;
    for (auto& o : orders) want.summands.push_back({o, "x"});
    c.check(e->as_group().same_iso_class(want), "OC_3(2sigma) mismatch at " + name);
  };
  expect_at(-1, 1, {}, "H^{sigma-1}");
  expect_at(-1, 2, {0, 0, 0}, "H^{2sigma-1}");
  expect_at(0, 1, {2}, "H^{sigma}");
  expect_at(0, 2, {0, 0}, "H^{2sigma}");
  expect_at(-2, 3, {2}, "H^{3sigma-2}");
  expect_at(-2, 4, {0, 0}, "H^{4sigma-2}");
  expect_at(-1, 3, {2, 2}, "H^{3sigma-1}");
  // the subring lattice data
  C2SigmaRingReport r3 = c2_sigma_ring(3, 2);
  c.check(r3.t_ranks == std::vector<int64_t>{1, 3, 2}, "T-ranks != (1,3,2)");
  c.check(r3.quotient_orders[1] == std::vector<Int>{2}, "T-degree-1 index != 2");
  c.check(r3.t_basis[2] ==
              std::vector<std::string>{"2*w(1,2)*w(1,3)", "2*w(1,2)*w(2,3)"},
          "T-degree-2 generators differ");
  c.check(r3.matches_sphere_chart, "E_2 (x) T does not match the chart");
}

void criterion9(Criterion& c) {
  c.check(a_multiplicity(3, 0) == 1 && a_multiplicity(3, 1) == 2 && a_multiplicity(3, 2) == 0,
          "a(3,.) != (1,2,0)");
  c.check(a_multiplicity(4, 0) == 1 && a_multiplicity(4, 1) == 5 && a_multiplicity(4, 2) == 6 &&
              a_multiplicity(4, 3) == 0,
          "a(4,.) != (1,5,6,0)");

  // rank collapse: free summand counts at the splitting degrees equal the
  // classical Betti numbers c(k, k-j)
  auto count_free = [&](const AdditiveChart& chart, const Degree& alpha) {
    const ChartEntry* e = chart.entry_at(alpha);
    Int n = 0;
    if (e && e->supported)
      for (const auto& s : e->summands)
        if (s.order == 0) ++n;
    return n;
  };
  struct Case {
    const GroupSpec* g;
    std::string rep;
    bool free_case;
  };
  std::vector<Case> cases = {{&cyclic_group(2), "1+sigma", true},
                             {&cyclic_group(3), "1+lambda(1)", true},
                             {&cyclic_group(2), "2*sigma", false},
                             {&cyclic_group(2), "3*sigma", false},
                             {&cyclic_group(3), "2*lambda(1)", false}};
  for (const auto& cs : cases) {
    PointChart chart(*cs.g);
    Representation v = parse_representation(*cs.g, cs.rep);
    for (int k = 2; k <= 5; ++k) {
      DegreeWindow w{Degree(*cs.g), Degree(*cs.g)};
      for (size_t i = 0; i < w.lo.c.size(); ++i) {
        w.lo.c[i] = -(k + 1) * 3 - 1;
        w.hi.c[i] = (k + 1) * 3 + 1;
      }
      AdditiveChart chartk = cs.free_case ? additive_free_chart(chart, v, k, w)
                                          : additive_sphere_chart(chart, v, k, w);
      for (int j = 0; j <= k - 1; ++j) {
        Degree alpha = (Degree::of(v) * j);
        alpha.shift_trivial(-j);  // j(V - 1)
        c.check(count_free(chartk, alpha) == stirling_c(k, k - j),
                "collapse mismatch for " + cs.rep + " at k=" + std::to_string(k) +
                    ", j=" + std::to_string(j));
      }
    }
  }
}

void criterion10(Criterion& c) {
  // sphere skeleton H~0 for every catalogued W of dimension <= 6
  for (const GroupSpec* g : catalog_groups())
    for (const auto& w : all_reps(*g, 6, false, false)) {
      SphereH0Result res = sphere_h0_complex(w);
      int64_t d = d_invariant(w).d;
      Int order = res.reduced_h0.total_order();
      c.check(order == (d == 1 ? 1 : d), "H~0 != Z/d(W) for " + w.to_string() + " in " + g->name);
    }
  // rotation-plane complexes and their comparisons
  for (auto [p, e] : std::vector<std::pair<int64_t, int64_t>>{{2, 1}, {3, 1}, {3, 2}, {5, 1}}) {
    for (int64_t k = 1; k < ipow(p, e) && k <= 8; ++k) {
      LambdaSphereComplex lc = lambda_sphere_complex(p, e, k);
      IntChainComplex und = fixed_point_level(lc.complex, "C1");
      auto hu = homology(und);
      c.check(hu[0].order_multiset() == std::vector<Int>{0}, "underlying H0 != Z");
      c.check(hu[1].is_trivial(), "underlying H1 != 0");
      c.check(hu[2].order_multiset() == std::vector<Int>{0}, "underlying H2 != Z");
      auto top = reduced_top_level_homology(lc.complex);
      c.check(top[0].total_order() == ipow(p, e - lc.j),
              "top-level reduced H0 order != p^(e-j)");
      for (int64_t r = 1; r <= 8; ++r) {
        if (std::gcd(r, p) != 1) continue;
        ComparisonResult res = comparison_check(p, e, k, r);
        c.check(res.verdict(), "comparison fails at (" + std::to_string(p) + "," +
                                   std::to_string(e) + "," + std::to_string(k) + "," +
                                   std::to_string(r) + ")");
        c.check(mod_pos(Int(res.s) * r, Int(ipow(p, e))) == 1, "s is not the inverse of r");
      }
    }
  }
}

}  // namespace

int main() {
  using Clock = std::chrono::steady_clock;
  std::vector<std::pair<std::string, void (*)(Criterion&)>> list = {
      {"invariant tables: d and e over the catalog", criterion1},
      {"odd-dimension law: d(V) in {1,2}", criterion2},
      {"point-chart soundness: orders, cones, torsion of a_W", criterion3},
      {"vanishing reproduction and sphere crosscheck", criterion4},
      {"ring presentation: bases, pinned products, confluence", criterion5},
      {"specialization diagram: a=0, a=1 mod d, restriction", criterion6},
      {"function ring on permutations: delta basis and filtration", criterion7},
      {"C2 assembly: sphere charts, OC_3(2sigma), subring T", criterion8},
      {"splitting multiplicities and rank collapse", criterion9},
      {"Mackey engine: skeleta, rotation complexes, comparisons", criterion10},
  };
  int failures = 0;
  for (size_t i = 0; i < list.size(); ++i) {
    Criterion c;
    c.id = static_cast<int>(i + 1);
    c.title = list[i].first;
    auto t0 = Clock::now();
    list[i].second(c);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
    std::ostringstream line;
    line << "[" << (c.id < 10 ? " " : "") << c.id << "] " << (c.pass ? "PASS" : "FAIL") << "  "
         << c.title << "  (" << ms << " ms)";
    std::cout << line.str() << "\n";
    for (const auto& n : c.notes) std::cout << "      - " << n << "\n";
    if (!c.pass) ++failures;
  }
  std::cout << (failures == 0 ? "all criteria passed" : "FAILURES: " + std::to_string(failures))
            << "\n";
  return failures;
}
