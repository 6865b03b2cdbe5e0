#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ocb/point.hpp"

namespace ocb {

// A coefficient-level element of the point cohomology: an integer combination
// of named chart classes, all in one degree.
struct MElement {
  Degree deg;
  std::vector<std::pair<Int, PointGen>> terms;

  bool is_zero() const { return terms.empty(); }
};

MElement m_zero(const Degree& d);
MElement m_unit(const PointChart& chart);
// The Euler class a_W as an element of M^{deg W}; zero when W contains 1.
MElement m_euler(const PointChart& chart, const Representation& w);
MElement m_add(const PointChart& chart, const MElement& a, const MElement& b);
MElement m_scale(const PointChart& chart, const Int& c, const MElement& a);
MElement m_mult(const PointChart& chart, const MElement& a, const MElement& b);
Int m_psi(const PointChart& chart, const MElement& a);  // forget to singular cohomology
std::string m_to_string(const PointChart& chart, const MElement& a);

// An element of H^*(S^W): base + top * iota_W, with base in M^alpha and top in
// M^{alpha - W}.
struct SphereElement {
  Representation ambient;  // W
  Degree deg;              // alpha
  MElement base;           // coefficient of 1
  MElement top;            // coefficient of iota_W
};

SphereElement sphere_unit(const PointChart& chart, const Representation& w);
SphereElement sphere_iota(const PointChart& chart, const Representation& w);
SphereElement sphere_add(const PointChart& chart, const SphereElement& x, const SphereElement& y);
bool sphere_equal(const SphereElement& x, const SphereElement& y);
std::string sphere_to_string(const PointChart& chart, const SphereElement& x);

// Product in H^*(S^W); uses iota^2 = a_W iota, centrality of Euler classes and
// the skew sign rule on the coefficients.
SphereElement sphere_mult(const PointChart& chart, const SphereElement& x, const SphereElement& y);

// Pullback along the antipodal map: iota |-> (-1)^{|W|+1} iota + a_W.
SphereElement antipodal_pullback(const PointChart& chart, const SphereElement& x);

// Image of iota_{K + L} under restriction S^K -> S^{K + L}: iota_K * a_L.
// Requires K to contain a trivial line.
SphereElement iota_restrict(const PointChart& chart, const Representation& k_rep,
                            const Representation& l_rep);

// Forgetful images (base, top coefficient of the underlying fundamental class).
std::pair<Int, Int> sphere_psi(const PointChart& chart, const SphereElement& x);

enum class ExtensionState { Unknown, SplitKnown, ExactRingKnown };

// H^alpha(S(V)) presented as the two halves of the long exact sequence:
// sub = coker(a_V on M^{alpha-V} -> M^alpha), quot = ker(a_V on
// M^{alpha+1-V} -> M^{alpha+1}).
struct UnitSphereGroup {
  GradedGroup sub;
  GradedGroup quot;
  ExtensionState extension = ExtensionState::Unknown;

  bool is_trivial() const { return sub.is_trivial() && quot.is_trivial(); }
  Int total_order() const {
    Int a = sub.total_order(), b = quot.total_order();
    return (a == 0 || b == 0) ? Int(0) : Int(a * b);
  }
  // Underlying group when the extension is immaterial (direct sum of halves).
  GradedGroup as_direct_sum() const {
    GradedGroup g = sub;
    for (const auto& s : quot.summands) g.summands.push_back(s);
    return g;
  }
};

UnitSphereGroup unit_sphere_groups(const PointChart& chart, const Representation& v,
                                   const Degree& alpha);

// The exact answer for G = C2 and V = q*sigma: monomials u^x a^y and u^x iota
// with iota of degree q*sigma - 1, iota^2 = 0 and a_sigma iota = 0.
GradedGroup c2_unit_sphere_ring(int64_t q, const Degree& alpha);

}  // namespace ocb
