#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "ocb/intmat.hpp"

namespace ocb {

// One cyclic summand; order 0 encodes an infinite cyclic group.
struct Summand {
  Int order;
  std::string label;
  bool operator==(const Summand& o) const { return order == o.order && label == o.label; }
};

// A finitely generated abelian group as an ordered list of cyclic summands.
struct GradedGroup {
  std::vector<Summand> summands;

  bool is_trivial() const { return summands.empty(); }
  Index ngens() const { return static_cast<Index>(summands.size()); }

  // 1 for the trivial group, 0 if infinite.
  Int total_order() const {
    Int t = 1;
    for (const auto& s : summands) {
      if (s.order == 0) return 0;
      t *= s.order;
    }
    return t;
  }

  int free_rank() const {
    int r = 0;
    for (const auto& s : summands)
      if (s.order == 0) ++r;
    return r;
  }

  // Multiset of orders as stored (summand-wise comparison).
  std::vector<Int> order_multiset() const {
    std::vector<Int> v;
    for (const auto& s : summands) v.push_back(s.order);
    std::sort(v.begin(), v.end());
    return v;
  }

  bool same_iso_class(const GradedGroup& o) const {
    return normalized_orders() == o.normalized_orders();
  }

  // Invariant factors of the underlying group (computed via Smith form of the
  // relation matrix), so e.g. Z/2 + Z/3 and Z/6 compare equal.
  std::vector<Int> normalized_orders() const {
    IntMat rel = IntMat::Zero(ngens(), ngens());
    int torsion_cols = 0;
    for (Index i = 0; i < ngens(); ++i)
      if (summands[i].order != 0) rel(i, torsion_cols++) = summands[i].order;
    IntMat r = rel.leftCols(torsion_cols);
    std::vector<Int> inv = smith_invariants(r);
    std::vector<Int> out;
    for (const auto& d : inv)
      if (d > 1) out.push_back(d);
    std::sort(out.begin(), out.end());
    for (int i = 0; i < free_rank(); ++i) out.push_back(0);
    return out;
  }

  static GradedGroup zero() { return {}; }
  static GradedGroup free_of_rank(int n, const std::string& base = "e") {
    GradedGroup g;
    for (int i = 0; i < n; ++i) g.summands.push_back({0, base + std::to_string(i + 1)});
    return g;
  }
};

namespace detail {
// Relation matrix of a group: columns order_i * e_i for the torsion summands.
inline IntMat relations(const GradedGroup& g) {
  int t = 0;
  for (const auto& s : g.summands)
    if (s.order != 0) ++t;
  IntMat r = IntMat::Zero(g.ngens(), t);
  int c = 0;
  for (Index i = 0; i < g.ngens(); ++i)
    if (g.summands[i].order != 0) r(i, c++) = g.summands[i].order;
  return r;
}

inline IntMat hstack(const IntMat& a, const IntMat& b) {
  IntMat m(a.rows(), a.cols() + b.cols());
  m.leftCols(a.cols()) = a;
  m.rightCols(b.cols()) = b;
  return m;
}
}  // namespace detail

// A homomorphism between presented groups: matrix columns give the images of
// the source generators in terms of the target generators.
struct AbelianMap {
  GradedGroup src;
  GradedGroup tgt;
  IntMat matrix;  // tgt.ngens() x src.ngens()

  // The matrix must send each source relation into the target relation lattice.
  bool well_defined() const {
    IntMat rt = detail::relations(tgt);
    for (Index j = 0; j < src.ngens(); ++j) {
      if (src.summands[j].order == 0) continue;
      IntVec v = matrix.col(j) * src.summands[j].order;
      if (!solve_integer(rt, IntVec(v))) return false;
    }
    return true;
  }
};

// Lattice of x in Z^{src} with A x lying in the target relation lattice,
// i.e. generators of the kernel of the induced map before quotienting.
inline IntMat preimage_of_relations(const AbelianMap& f) {
  IntMat rt = detail::relations(f.tgt);
  IntMat stacked = detail::hstack(f.matrix, rt);
  IntMat k = kernel_basis(stacked);
  IntMat proj = k.topRows(f.src.ngens());
  auto ech = col_echelon(proj);
  Index rank = static_cast<Index>(ech.pivots.size());
  return ech.h.leftCols(rank);
}

inline bool is_injective(const AbelianMap& f) {
  IntMat pre = preimage_of_relations(f);
  IntMat rs = detail::relations(f.src);
  for (Index c = 0; c < pre.cols(); ++c)
    if (!solve_integer(rs, IntVec(pre.col(c)))) return false;
  return true;
}

inline bool is_surjective(const AbelianMap& f) {
  IntMat m = detail::hstack(f.matrix, detail::relations(f.tgt));
  auto inv = smith_invariants(m);
  if (static_cast<Index>(inv.size()) < f.tgt.ngens()) return false;
  for (const auto& d : inv)
    if (d != 1) return false;
  return true;
}

// Present a quotient lattice L/M (columns; M contained in L spanwise).
inline GradedGroup lattice_quotient(const IntMat& latt, const IntMat& sub,
                                    const std::string& base = "q") {
  auto ech = col_echelon(latt);
  Index rank = static_cast<Index>(ech.pivots.size());
  IntMat basis = ech.h.leftCols(rank);
  IntMat coords(rank, sub.cols());
  for (Index c = 0; c < sub.cols(); ++c) {
    auto sol = solve_integer(basis, IntVec(sub.col(c)));
    if (!sol) throw std::logic_error("lattice_quotient: submodule not contained in lattice");
    coords.col(c) = *sol;
  }
  auto inv = smith_invariants(coords);
  GradedGroup g;
  int idx = 1;
  for (const auto& d : inv)
    if (d > 1) g.summands.push_back({d, base + std::to_string(idx++)});
  Index free = rank - static_cast<Index>(inv.size());
  for (Index i = 0; i < free; ++i) g.summands.push_back({0, base + std::to_string(idx++)});
  return g;
}

inline GradedGroup kernel_group(const AbelianMap& f, const std::string& base = "k") {
  IntMat pre = preimage_of_relations(f);
  return lattice_quotient(pre, detail::relations(f.src), base);
}

inline GradedGroup cokernel_group(const AbelianMap& f, const std::string& base = "c") {
  IntMat gens = identity<Int>(f.tgt.ngens());
  IntMat rel = detail::hstack(f.matrix, detail::relations(f.tgt));
  return lattice_quotient(gens, rel, base);
}

}  // namespace ocb
