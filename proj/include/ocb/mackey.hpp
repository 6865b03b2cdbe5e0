#pragma once

#include <string>
#include <vector>

#include "ocb/abelian.hpp"
#include "ocb/groups.hpp"
#include "ocb/intmat.hpp"

namespace ocb {

// Z[G/H] with its G-action: one permutation of the coset basis per group
// generator (cyclic groups have one generator, Sigma3 has two).
struct PermutationModule {
  std::string subgroup;
  int64_t rank = 0;
  std::vector<std::vector<int>> gen_perms;  // gen_perms[g][b] = image of basis b
};

PermutationModule permutation_module(const GroupSpec& g, const std::string& subgroup_label);

// A bounded chain complex of sums of permutation modules over Z[G] with
// equivariant integer boundaries. terms[n] is the list of modules in degree n;
// boundaries[n]: C_n -> C_{n-1} on the concatenated bases.
struct GroupChainComplex {
  const GroupSpec* group = nullptr;
  std::vector<std::vector<PermutationModule>> terms;
  std::vector<IntMat> boundaries;  // boundaries[n] defined for n >= 1

  int64_t rank_at(size_t n) const {
    if (n >= terms.size()) return 0;
    int64_t r = 0;
    for (const auto& m : terms[n]) r += m.rank;
    return r;
  }
  // Permutation matrix of one group generator acting on degree n.
  IntMat generator_matrix(size_t n, int gen) const;
  void validate() const;  // throws unless d*d = 0 and boundaries are equivariant
};

// Plain integer chain complex (no group action).
struct IntChainComplex {
  std::vector<int64_t> ranks;
  std::vector<IntMat> boundaries;  // boundaries[n]: C_n -> C_{n-1}
};

// Value of the fixed-point Mackey functor at level J: bases become J-orbit
// sums and boundaries restrict.
IntChainComplex fixed_point_level(const GroupChainComplex& c, const std::string& subgroup_label);

// H_n = ker d_n / im d_{n+1} for every degree, by integer normal forms.
std::vector<GradedGroup> homology(const IntChainComplex& c);

// The reduced degree-<=1 skeleton computing H~_0 of a representation sphere:
// one pair of 1-cells per subgroup with nonzero fixed space, each mapping to
// the index #(G/H) at top level; returns the complex and H~_0 = Z/d(W).
struct SphereH0Result {
  GroupChainComplex complex;
  GradedGroup reduced_h0;  // computed at the top (G-fixed) level
};
SphereH0Result sphere_h0_complex(const Representation& w);

// The three-term cell complex of the rotation plane lambda(k) over C_{p^e}:
// 0 -> Z[C/(p^{e-j})] --(1 - t^m)--> Z[C/(p^{e-j})] -> Z + Z -> 0
// with j = v_p(k) and m k = p^j mod p^e.
struct LambdaSphereComplex {
  GroupChainComplex complex;
  int64_t p = 0, e = 0, k = 0;
  int64_t j = 0;  // v_p(k)
  int64_t m = 0;  // the attaching twist, coprime to p
};
LambdaSphereComplex lambda_sphere_complex(int64_t p, int64_t e, int64_t k);

// Reduced top-level H~_* of a sphere-type complex whose degree-0 part is the
// two fixed cells (augmentation added in degree -1).
std::vector<GradedGroup> reduced_top_level_homology(const GroupChainComplex& c);

// Chain-level comparison between the lambda(kr) and lambda(k) cell structures:
// the degree-2 map 1 + t^m + ... + t^{m(s-1)} with rs = 1 mod p^e induces
// multiplication by s on H_2, a unit mod p.
struct ComparisonResult {
  int64_t s = 0;
  bool is_chain_map = false;
  bool h2_is_mult_by_s = false;
  bool unit_mod_p = false;
  bool verdict() const { return is_chain_map && h2_is_mult_by_s && unit_mod_p; }
};
ComparisonResult comparison_check(int64_t p, int64_t e, int64_t k, int64_t r);

}  // namespace ocb
