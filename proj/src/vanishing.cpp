#include "ocb/vanishing.hpp"

namespace ocb {

VanishingRecord vanishing_at(const PointChart& chart, const Representation& v, int64_t l) {
  Degree dv = Degree::of(v);
  auto spot = [&](int64_t m) {
    Degree d = dv * m;
    d.shift_trivial(-l);
    return d;
  };
  Degree lo = spot(l), mid = spot(l + 1), hi = spot(l + 2);

  auto group_or_tag = [&](const Degree& d, const char* which) {
    try {
      return chart.group_at(d);
    } catch (const ChartError& e) {
      throw ChartError(std::string(e.what()) + " [the " + which + " degree " + d.to_string() +
                       " of the l=" + std::to_string(l) + " window]");
    }
  };
  VanishingRecord rec;
  rec.l = l;
  AbelianMap first{group_or_tag(lo, "lower"), group_or_tag(mid, "middle"),
                   chart.euler_matrix(lo, v)};
  AbelianMap second{first.tgt, group_or_tag(hi, "upper"), chart.euler_matrix(mid, v)};
  rec.middle_group = first.tgt;
  rec.first_map_surjective = is_surjective(first);
  rec.second_map_injective = is_injective(second);
  return rec;
}

VanishingReport vanishing_sweep(const PointChart& chart, const Representation& v, int64_t lmin,
                                int64_t lmax) {
  VanishingReport rep;
  rep.group = chart.group().name;
  rep.rep = v.to_string();
  rep.normalized_rep = normalize_representation(v).to_string();
  rep.lmin = lmin;
  rep.lmax = lmax;
  for (int64_t l = lmin; l <= lmax; ++l) {
    VanishingRecord rec = vanishing_at(chart, v, l);
    if (!rec.passed()) {
      rep.overall = false;
      rep.failing_l.push_back(l);
    }
    rep.records.push_back(std::move(rec));
  }
  return rep;
}

bool sphere_crosscheck(const PointChart& chart, const Representation& v, int64_t l) {
  // l(V-1) + V = (l+1)V - l
  Degree alpha = Degree::of(v) * (l + 1);
  alpha.shift_trivial(-l);
  return unit_sphere_groups(chart, v, alpha).is_trivial();
}

}  // namespace ocb
