#pragma once

#include <map>
#include <string>
#include <vector>

#include "ocb/int.hpp"

namespace ocb {

// A normal-form monomial: omega factors (i,j) with i < j, sorted, no two
// sharing a second index, times powers of the deformation class a and of an
// inert auxiliary Euler class b (used by restriction maps; 0 elsewhere).
struct OmegaMonomial {
  std::vector<std::pair<int, int>> factors;
  int64_t a_exp = 0;
  int64_t b_exp = 0;

  bool operator<(const OmegaMonomial& o) const {
    if (factors != o.factors) return factors < o.factors;
    if (a_exp != o.a_exp) return a_exp < o.a_exp;
    return b_exp < o.b_exp;
  }
  bool operator==(const OmegaMonomial& o) const {
    return factors == o.factors && a_exp == o.a_exp && b_exp == o.b_exp;
  }
};

// Ambient parameters of the presentation ring: the coefficient ring is
// T = Z[a]/(d a), signs depend only on the parity of |V|, and b carries its
// own torsion d_b (for the extended ring of restriction targets).
struct RingParams {
  int k = 0;          // number of points
  int sign = 1;       // (-1)^{|V|}
  Int d = 0;          // torsion of a = a_{V-1}; 0 = infinite order
  Int d_b = 0;        // torsion of b; only used by restricted elements

  bool operator==(const RingParams& o) const {
    return k == o.k && sign == o.sign && d == o.d && d_b == o.d_b;
  }
};

RingParams make_ring(int k, int sign, const Int& d, const Int& d_b = 0);

struct RingElement {
  RingParams params;
  std::map<OmegaMonomial, Int> terms;

  bool is_zero() const { return terms.empty(); }
  std::string to_string() const;
};

// A formal (unreduced) word: integer coefficient times omega factors in any
// order with arbitrary index pairs, times a- and b-powers.
struct FormalTerm {
  Int coeff = 1;
  std::vector<std::pair<int, int>> factors;
  int64_t a_exp = 0;
  int64_t b_exp = 0;
};
using FormalExpr = std::vector<FormalTerm>;

enum class ReduceStrategy { LargestColumn, SmallestColumn };

RingElement reduce(const RingParams& params, const FormalExpr& expr,
                   ReduceStrategy strategy = ReduceStrategy::LargestColumn);
RingElement from_monomial(const RingParams& params, const OmegaMonomial& m, const Int& c = 1);

RingElement add(const RingElement& x, const RingElement& y);
RingElement scale(const Int& c, const RingElement& x);
RingElement multiply(const RingElement& x, const RingElement& y,
                     ReduceStrategy strategy = ReduceStrategy::LargestColumn);
bool equal(const RingElement& x, const RingElement& y);

// All admissible degree-j monomials with no a/b part; the count is the
// Stirling number c(k, k-j).
std::vector<OmegaMonomial> basis_enumerate(int k, int j);

// Kill every term with a_exp >= 1 (the classical slice a = 0).
RingElement forgetful_classical(const RingElement& x);

// Substitute omega_ij(V + W) -> b * omega_ij(V), a -> a*b. The target ring has
// sign flipped by (-1)^{|W|} and torsions (d_target, d_w).
RingElement restrict_to_subrep(const RingElement& x, int w_dim_parity_sign, const Int& d_target,
                               const Int& d_w);

// The three relation families, as formal expressions normalizing to zero.
FormalExpr relation_flip(const RingParams& p, int i, int j);       // w_ij - sign*w_ji - a
FormalExpr relation_square(const RingParams& p, int i, int j);     // w_ij^2 - a*w_ij
FormalExpr relation_arnold(const RingParams& p, int i, int j, int k);

// Parser for expressions like "w(1,2)*w(2,1) + 3*a*w(1,3) - a^2".
FormalExpr parse_ring_expr(const std::string& text);

// Every r-fold intersection of pairwise diagonals in V^k is V^s with
// s >= k - r (checked by counting blocks of the generated partition).
bool diagonal_arrangement_check(int k, int r_max);

}  // namespace ocb
