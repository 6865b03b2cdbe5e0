#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "ocb/int.hpp"

namespace ocb {

struct SubgroupRec {
  std::string label;
  int64_t order;
  int64_t index;  // #(G/H)
};

struct IrrepRec {
  std::string label;
  int dim;
  // dim of the fixed subspace at each subgroup, indexed like GroupSpec::subgroups
  std::vector<int> fixed_dim;
  // determinant of each group generator acting on this irreducible
  std::vector<int> gen_det;
};

// Catalog entry for one finite group. For Sigma3 subgroups are stored up to
// conjugacy; indices and fixed dimensions are conjugation invariant, which is
// all the invariants below consume.
class GroupSpec {
 public:
  enum class Kind { Cyclic, Sigma3 };

  Kind kind;
  int64_t n = 0;  // cyclic order (0 for Sigma3)
  std::string name;
  std::vector<SubgroupRec> subgroups;
  std::vector<IrrepRec> irreps;  // irreps[0] is always the trivial rep "1"

  int64_t order() const { return kind == Kind::Cyclic ? n : 6; }
  int num_generators() const { return kind == Kind::Cyclic ? 1 : 2; }

  int subgroup_index_of(const std::string& label) const;  // position, throws
  int irrep_pos(const std::string& label) const;          // position, throws

  bool has_sigma() const;
  // Position of lambda(k) in the canonical basis, for cyclic groups.
  int lambda_pos(int64_t k) const;
};

// The closed catalog: cyclic(n) for n >= 2 and Sigma3. References are stable
// for the lifetime of the program.
const GroupSpec& cyclic_group(int64_t n);
const GroupSpec& sigma3_group();
const GroupSpec& group_by_name(const std::string& name);  // "C7", "Sigma3", ...

// An orthogonal representation as irreducible multiplicities (aligned with
// GroupSpec::irreps).
struct Representation {
  const GroupSpec* group = nullptr;
  std::vector<int64_t> mult;

  Representation() = default;
  explicit Representation(const GroupSpec& g)
      : group(&g), mult(g.irreps.size(), 0) {}

  int64_t dim() const;
  bool is_zero() const { return dim() == 0; }
  bool contains_trivial() const { return !mult.empty() && mult[0] > 0; }
  Representation& add(const std::string& irrep_label, int64_t count = 1);
  Representation operator+(const Representation& other) const;
  std::string to_string() const;
};

struct DInvariant {
  std::set<int64_t> D;  // indices #(G/H) over subgroups with nonzero fixed space
  int64_t d = 0;        // gcd of D
};

int64_t fixed_subrep_dim(const Representation& v, const std::string& subgroup_label);
DInvariant d_invariant(const Representation& v);  // throws on the zero rep
int64_t e_invariant(const Representation& v);
bool is_orientable(const Representation& v);

// Parse "2*1 + 3*lambda(1) + sigma" (whitespace-insensitive; 'L' for lambda,
// 's' for sigma). lambda(k) is reduced mod n and folded by lambda(k) ~
// lambda(n-k); lambda(0) decomposes as 2*1 and lambda(n/2) as 2*sigma.
Representation parse_representation(const GroupSpec& g, const std::string& text);

}  // namespace ocb
