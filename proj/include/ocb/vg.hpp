#pragma once

#include <string>
#include <vector>

#include "ocb/config_ring.hpp"
#include "ocb/int.hpp"
#include "ocb/abelian.hpp"
#include "ocb/intmat.hpp"

namespace ocb {

// All permutations of {0..k-1} in lexicographic one-line order.
std::vector<std::vector<int>> permutations_lex(int k);

// An integer-valued function on Sigma_k; modulus 0 means values in Z.
struct SigmaFunction {
  int k = 0;
  Int modulus = 0;
  std::vector<Int> values;  // indexed like permutations_lex(k)

  bool is_zero() const {
    for (const auto& v : values)
      if (v != 0) return false;
    return true;
  }
  bool operator==(const SigmaFunction& o) const {
    return k == o.k && modulus == o.modulus && values == o.values;
  }
};

SigmaFunction sf_constant(int k, const Int& c, const Int& modulus = 0);
// e_ij(sigma) = 1 if sigma(i) > sigma(j) else 0 (1-based indices).
SigmaFunction heaviside(int k, int i, int j, const Int& modulus = 0);
SigmaFunction sf_add(const SigmaFunction& a, const SigmaFunction& b);
SigmaFunction sf_mult(const SigmaFunction& a, const SigmaFunction& b);
SigmaFunction sf_scale(const Int& c, const SigmaFunction& a);

// Pointwise evaluation of a formal omega/a-word with omega_ij -> e_ij and
// a -> 1 (and b -> 1).
SigmaFunction eval_expr(int k, const FormalExpr& expr, const Int& modulus = 0);
// Same, parsing "w(i,j)" as e_ij from a string like "w(2,1)*w(3,2)*w(1,3)".
SigmaFunction eval_poly(int k, const std::string& text, const Int& modulus = 0);
SigmaFunction vg_specialize(const RingElement& x);  // modulus = the element's d

// delta function of one permutation, and the Heaviside product formula for it.
SigmaFunction delta_sigma(int k, const std::vector<int>& sigma);
SigmaFunction p_sigma(int k, const std::vector<int>& sigma);

struct FiltrationReport {
  int k = 0;
  std::vector<int64_t> ranks;                      // rank of F_r / F_{r-1}
  std::vector<Int> torsion_invariants;             // must stay empty: gr is free
  std::vector<std::vector<std::string>> monomials; // generating monomials per level
};

// Integer lattice filtration by e-monomial degree; rank F_r/F_{r-1} recovers
// the Stirling numbers c(k, k-r).
FiltrationReport filtration_ranks(int k);

// Determinant of the evaluation matrix of { P_sigma }; +-1 iff they form a
// Z-basis of Func(Sigma_k, Z).
Int delta_basis_determinant(int k);

// The homogenized filtration relations hold in the Rees object: substituting
// [t e_ij] -> t * e_ij sends each relation to the zero polynomial function.
bool rees_relations_hold(int k);

}  // namespace ocb
