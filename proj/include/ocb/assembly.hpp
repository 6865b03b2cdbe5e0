#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ocb/config_ring.hpp"
#include "ocb/spheres.hpp"
#include "ocb/vanishing.hpp"

namespace ocb {

struct ChartSummand {
  Int order;
  std::string label;
  int j = 0;  // which splitting summand contributed this class
  bool extension_unresolved = false;
};

struct ChartEntry {
  std::vector<ChartSummand> summands;
  bool supported = true;
  std::string error;

  GradedGroup as_group() const {
    GradedGroup g;
    for (const auto& s : summands) g.summands.push_back({s.order, s.label});
    return g;
  }
};

// A rectangular window of degrees, componentwise between lo and hi.
struct DegreeWindow {
  Degree lo, hi;
  std::vector<Degree> degrees() const;
};

struct AdditiveChart {
  std::string group;
  std::string rep;
  int k = 0;
  std::vector<std::pair<Degree, ChartEntry>> entries;

  const ChartEntry* entry_at(const Degree& d) const {
    for (const auto& [deg, e] : entries)
      if (deg == d) return &e;
    return nullptr;
  }
};

// Degree-wise chart of the configuration-space cohomology for V containing a
// trivial line: entry(alpha) = sum_j M^{alpha - j(V-1)} with multiplicity
// c(k, k-j).
AdditiveChart additive_free_chart(const PointChart& chart, const Representation& v, int k,
                                  const DegreeWindow& window);

// Degree-wise chart for fixed-point-free V via shifted copies of H^*(S(V))
// with multiplicities a(k, j). Refuses to run when the vanishing sweep fails,
// unless the pair is on the certified exception list.
AdditiveChart additive_sphere_chart(const PointChart& chart, const Representation& v, int k,
                                    const DegreeWindow& window, int64_t sweep_lo = -12,
                                    int64_t sweep_hi = 12);

bool sphere_chart_whitelisted(const GroupSpec& g, const Representation& v);

// Plain degree-wise chart of H^*(S(V)) itself (no splitting, no vanishing
// gate): the exact ring for the C2 sign planes, the two halves elsewhere.
AdditiveChart unit_sphere_chart(const PointChart& chart, const Representation& v,
                                const DegreeWindow& window);

// Graded data of the subring T of the classical configuration ring generated
// by differences and doubles of the omega classes, plus the degreewise
// comparison of E_n (x) T with the sphere chart.
struct C2SigmaRingReport {
  int k = 0;
  int64_t n = 0;
  std::vector<int64_t> t_ranks;                     // rank of T^m, m = 0..k-1
  std::vector<std::vector<Int>> quotient_orders;    // invariants of H^m / T^m
  std::vector<std::vector<std::string>> t_basis;    // lattice basis, reduced words
  std::string presentation;
  bool matches_sphere_chart = false;
};

C2SigmaRingReport c2_sigma_ring(int k, int64_t n);

}  // namespace ocb
