#pragma once

#include <vector>

#include "ocb/spheres.hpp"

namespace ocb {

// One step of the vanishing requirement: in
//   M^{lV-l} --a_V--> M^{(l+1)V-l} --a_V--> M^{(l+2)V-l}
// the first map must be surjective and the second injective.
struct VanishingRecord {
  int64_t l = 0;
  bool first_map_surjective = false;
  bool second_map_injective = false;
  GradedGroup middle_group;
  bool passed() const { return first_map_surjective && second_map_injective; }
};

struct VanishingReport {
  std::string group;
  std::string rep;
  std::string normalized_rep;  // equal to rep when normalization changed nothing
  int64_t lmin = 0, lmax = 0;
  std::vector<VanishingRecord> records;
  bool overall = true;
  std::vector<int64_t> failing_l;
};

VanishingRecord vanishing_at(const PointChart& chart, const Representation& v, int64_t l);
VanishingReport vanishing_sweep(const PointChart& chart, const Representation& v, int64_t lmin,
                                int64_t lmax);

// Triviality of H^{l(V-1)+V}(S(V)). Equivalent to the conjunction of the
// surjectivity half at l with the injectivity half at l-1; the sweep-level
// statements match the per-l requirement exactly when V passes everywhere.
bool sphere_crosscheck(const PointChart& chart, const Representation& v, int64_t l);

}  // namespace ocb
