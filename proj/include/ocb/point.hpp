#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ocb/abelian.hpp"
#include "ocb/degree.hpp"
#include "ocb/groups.hpp"
#include "ocb/intmat.hpp"

namespace ocb {

struct ChartError : std::runtime_error {
  explicit ChartError(const std::string& what) : std::runtime_error(what) {}
};

// Replace each lambda(k) coefficient by the same coefficient on
// lambda(p^{v_p(k)}). Only defined for cyclic p-groups; idempotent and
// rank-preserving.
Degree normalize_degree(const GroupSpec& g, const Degree& alpha);
Representation normalize_representation(const Representation& v);

// One generator of the cohomology of a point at some degree. The family tag
// and parameters fix the class; interpretation depends on the chart kind.
struct PointGen {
  enum Family {
    kMono,   // products of u- and a-classes (the positive cone)
    kNegZ,   // infinite cyclic classes e(W)/u_W in the negative cone
    kNegT1,  // shifted torsion classes, first family
    kNegT2,  // shifted torsion classes, second family
    kNegT3,  // a_sigma multiples of second-family classes (C4 only)
    kZGrid,  // Sigma3: the plane of infinite cyclic classes c * u^i v^j
    kT1,     // Sigma3: a_lambda rays (Z/3)
    kT2,     // Sigma3: a_sigma rays (Z/2)
    kU1,     // Sigma3: a_lambda-divided shifted classes (Z/3)
    kU2,     // Sigma3: a_sigma-divided shifted classes (Z/2)
  };
  Family fam;
  std::array<int64_t, 4> p{0, 0, 0, 0};

  bool operator==(const PointGen& o) const { return fam == o.fam && p == o.p; }
};

// RO(G)-graded cohomology of a point for the catalogued groups with known
// charts: C2, C_p and C_{p^2} for odd primes p, C4, and Sigma3. Queries on
// degrees outside the transcribed regions throw ChartError rather than
// reporting a silent zero.
class PointChart {
 public:
  enum class Kind { C2, CpOdd, C4, Cp2, Sigma3 };

  static bool has_chart(const GroupSpec& g);
  explicit PointChart(const GroupSpec& g);

  const GroupSpec& group() const { return *group_; }
  Kind kind() const { return kind_; }
  int64_t prime() const { return p_; }

  // Coordinates of a degree in the chart plane/space (after normalization).
  std::array<int64_t, 3> chart_coordinates(const Degree& alpha) const;

  // Generators of M^alpha in a fixed order; throws ChartError if unsupported.
  std::vector<PointGen> classes_at(const Degree& alpha) const;
  GradedGroup group_at(const Degree& alpha) const;

  Int gen_order(const PointGen& g) const;  // 0 means infinite
  std::string gen_label(const PointGen& g) const;

  // Multiplication by the Euler class of one irreducible (by basis position).
  // Returns (coefficient, class); coefficient 0 encodes the zero product.
  std::pair<Int, std::optional<PointGen>> mult_step(const PointGen& g, int irrep_pos) const;

  // Matrix of multiplication by a_W: M^alpha -> M^{alpha + deg W}. Both ends
  // must be supported.
  IntMat euler_matrix(const Degree& alpha, const Representation& w) const;

  // Product of two named classes (monomial-type algebra; shifted classes
  // multiply to zero against each other). Throws when outside the implemented
  // fragment.
  std::pair<Int, std::optional<PointGen>> mult_class(const PointGen& a, const PointGen& b) const;

  // Image under the forgetful map to singular cohomology with u -> 1, a -> 0:
  // nonzero only for infinite-order classes.
  Int psi_value(const PointGen& g) const;

 private:
  struct Coord {
    int64_t x = 0, y = 0, z = 0;
  };
  Coord coord_of(const Degree& alpha) const;
  Degree degree_of_coord(const Coord& c) const;

  std::vector<PointGen> gens_at(const Coord& c) const;
  std::vector<PointGen> gens_c2_like(const Coord& c) const;  // C2 and CpOdd
  std::vector<PointGen> gens_c4(const Coord& c) const;
  std::vector<PointGen> gens_cp2(const Coord& c) const;
  std::vector<PointGen> gens_sigma3(const Coord& c) const;

  std::pair<Int, std::optional<PointGen>> step_c2_like(const PointGen& g) const;
  std::pair<Int, std::optional<PointGen>> step_c4(const PointGen& g, bool sigma) const;
  std::pair<Int, std::optional<PointGen>> step_cp2(const PointGen& g, bool inner) const;
  std::pair<Int, std::optional<PointGen>> step_sigma3(const PointGen& g, bool sigma) const;

  const GroupSpec* group_;
  Kind kind_;
  int64_t p_ = 0;  // prime for cyclic charts (2 for C2/C4)
};

}  // namespace ocb
