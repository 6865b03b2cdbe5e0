#include "ocb/mackey.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ocb {

namespace {

// Sigma3 as permutations of {0,1,2}; generators r = (012) and s = (01).
using Perm3 = std::array<int, 3>;

Perm3 compose(const Perm3& a, const Perm3& b) {  // (a*b)(x) = a(b(x))
  return {a[b[0]], a[b[1]], a[b[2]]};
}

std::vector<Perm3> sigma3_elements() {
  std::vector<Perm3> out;
  Perm3 p{0, 1, 2};
  std::vector<int> v{0, 1, 2};
  do {
    out.push_back({v[0], v[1], v[2]});
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::vector<Perm3> sigma3_subgroup_elements(const std::string& label) {
  const Perm3 e{0, 1, 2}, r{1, 2, 0}, r2{2, 0, 1}, s{1, 0, 2};
  if (label == "e") return {e};
  if (label == "C2") return {e, s};
  if (label == "C3") return {e, r, r2};
  if (label == "Sigma3") {
    auto all = sigma3_elements();
    return {all.begin(), all.end()};
  }
  throw std::invalid_argument("no such subgroup: " + label);
}

// coset space G/H for Sigma3 with the action of the generators r and s
PermutationModule sigma3_coset_module(const std::string& label) {
  auto elements = sigma3_elements();
  auto sub = sigma3_subgroup_elements(label);
  // left cosets gH as sorted element sets
  std::vector<std::vector<Perm3>> cosets;
  std::map<int, int> elem_to_coset;
  auto index_of = [&](const Perm3& p) {
    for (size_t i = 0; i < elements.size(); ++i)
      if (elements[i] == p) return static_cast<int>(i);
    throw std::logic_error("element lookup");
  };
  std::set<int> seen;
  for (const auto& g : elements) {
    if (seen.count(index_of(g))) continue;
    std::vector<Perm3> coset;
    for (const auto& h : sub) {
      Perm3 gh = compose(g, h);
      coset.push_back(gh);
      seen.insert(index_of(gh));
      elem_to_coset[index_of(gh)] = static_cast<int>(cosets.size());
    }
    cosets.push_back(coset);
  }
  PermutationModule m;
  m.subgroup = label;
  m.rank = static_cast<int64_t>(cosets.size());
  const Perm3 r{1, 2, 0}, s{1, 0, 2};
  for (const Perm3& gen : {r, s}) {
    std::vector<int> perm(cosets.size());
    for (size_t c = 0; c < cosets.size(); ++c)
      perm[c] = elem_to_coset.at(index_of(compose(gen, cosets[c][0])));
    m.gen_perms.push_back(std::move(perm));
  }
  return m;
}

// Generator words for a subgroup acting on a module of the ambient group:
// each word is a list of (generator index, power).
std::vector<std::vector<std::pair<int, int64_t>>> subgroup_generator_words(
    const GroupSpec& g, const std::string& label) {
  if (g.kind == GroupSpec::Kind::Cyclic) {
    int64_t m = g.subgroups[g.subgroup_index_of(label)].order;
    if (m == 1) return {};
    return {{{0, g.n / m}}};  // t^{n/m} generates the order-m subgroup
  }
  if (label == "e") return {};
  if (label == "C2") return {{{1, 1}}};
  if (label == "C3") return {{{0, 1}}};
  return {{{0, 1}}, {{1, 1}}};
}

std::vector<int> apply_word(const PermutationModule& m,
                            const std::vector<std::pair<int, int64_t>>& word) {
  std::vector<int> perm(m.rank);
  std::iota(perm.begin(), perm.end(), 0);
  for (auto [gen, pow] : word)
    for (int64_t i = 0; i < pow; ++i) {
      std::vector<int> next(m.rank);
      for (int64_t b = 0; b < m.rank; ++b) next[b] = m.gen_perms[gen][perm[b]];
      perm = next;
    }
  return perm;
}

IntMat perm_matrix(const std::vector<int>& perm) {
  IntMat m = IntMat::Zero(static_cast<Index>(perm.size()), static_cast<Index>(perm.size()));
  for (size_t b = 0; b < perm.size(); ++b) m(perm[b], static_cast<Index>(b)) = 1;
  return m;
}

}  // namespace

PermutationModule permutation_module(const GroupSpec& g, const std::string& label) {
  if (g.kind == GroupSpec::Kind::Sigma3) return sigma3_coset_module(label);
  int64_t m = g.subgroups[g.subgroup_index_of(label)].order;
  PermutationModule mod;
  mod.subgroup = label;
  mod.rank = g.n / m;  // cosets of C_m in C_n
  std::vector<int> perm(mod.rank);
  for (int64_t b = 0; b < mod.rank; ++b) perm[b] = static_cast<int>((b + 1) % mod.rank);
  mod.gen_perms.push_back(std::move(perm));
  return mod;
}

IntMat GroupChainComplex::generator_matrix(size_t n, int gen) const {
  int64_t r = rank_at(n);
  IntMat m = IntMat::Zero(r, r);
  int64_t off = 0;
  for (const auto& mod : terms[n]) {
    for (int64_t b = 0; b < mod.rank; ++b) m(off + mod.gen_perms[gen][b], off + b) = 1;
    off += mod.rank;
  }
  return m;
}

void GroupChainComplex::validate() const {
  int ngens = group->num_generators();
  for (size_t n = 1; n < terms.size(); ++n) {
    const IntMat& d = boundaries[n];
    if (d.rows() != rank_at(n - 1) || d.cols() != rank_at(n))
      throw std::invalid_argument("boundary shape mismatch at degree " + std::to_string(n));
    for (int g = 0; g < ngens; ++g) {
      IntMat lhs = mul(generator_matrix(n - 1, g), d);
      IntMat rhs = mul(d, generator_matrix(n, g));
      if (!mat_equal(lhs, rhs))
        throw std::invalid_argument("boundary is not equivariant at degree " + std::to_string(n));
    }
    if (n >= 2) {
      IntMat dd = mul(boundaries[n - 1], d);
      for (Index i = 0; i < dd.rows(); ++i)
        for (Index j = 0; j < dd.cols(); ++j)
          if (dd(i, j) != 0) throw std::invalid_argument("d*d != 0");
    }
  }
}

IntChainComplex fixed_point_level(const GroupChainComplex& c, const std::string& label) {
  const GroupSpec& g = *c.group;
  auto words = subgroup_generator_words(g, label);

  IntChainComplex out;
  std::vector<std::vector<std::vector<int64_t>>> orbit_sums;  // per degree: columns
  for (size_t n = 0; n < c.terms.size(); ++n) {
    // orbits of the subgroup on the concatenated basis
    int64_t rank = c.rank_at(n);
    std::vector<int> ident(rank);
    std::iota(ident.begin(), ident.end(), 0);
    std::vector<std::vector<int>> sub_perms(words.size(), ident);
    int64_t off = 0;
    for (const auto& mod : c.terms[n]) {
      for (size_t w = 0; w < words.size(); ++w) {
        auto local = apply_word(mod, words[w]);
        for (int64_t b = 0; b < mod.rank; ++b) sub_perms[w][off + b] = static_cast<int>(off) + local[b];
      }
      off += mod.rank;
    }
    // union-find orbits
    std::vector<int> parent(rank);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](auto&& self, int x) -> int {
      return parent[x] == x ? x : parent[x] = self(self, parent[x]);
    };
    for (const auto& sp : sub_perms)
      for (int64_t b = 0; b < rank; ++b) {
        int ra = find(find, static_cast<int>(b)), rb = find(find, sp[b]);
        if (ra != rb) parent[ra] = rb;
      }
    std::map<int, int> root_to_orbit;
    std::vector<std::vector<int64_t>> sums;
    for (int64_t b = 0; b < rank; ++b) {
      int root = find(find, static_cast<int>(b));
      auto it = root_to_orbit.find(root);
      if (it == root_to_orbit.end()) {
        it = root_to_orbit.emplace(root, static_cast<int>(sums.size())).first;
        sums.emplace_back();
      }
      sums[it->second].push_back(b);
    }
    orbit_sums.push_back(sums);
    out.ranks.push_back(static_cast<int64_t>(sums.size()));
  }
  // restrict boundaries to orbit-sum vectors
  out.boundaries.resize(c.terms.size());
  for (size_t n = 1; n < c.terms.size(); ++n) {
    const auto& src = orbit_sums[n];
    const auto& tgt = orbit_sums[n - 1];
    std::vector<int> owner(c.rank_at(n - 1), -1);
    for (size_t o = 0; o < tgt.size(); ++o)
      for (int64_t b : tgt[o]) owner[b] = static_cast<int>(o);
    IntMat m = IntMat::Zero(static_cast<Index>(tgt.size()), static_cast<Index>(src.size()));
    for (size_t sc = 0; sc < src.size(); ++sc) {
      // image of the orbit sum, expressed in target orbit sums: equivariance
      // forces constancy along target orbits, so read one representative each
      IntVec img = IntVec::Zero(c.rank_at(n - 1));
      for (int64_t b : src[sc])
        for (Index i = 0; i < img.size(); ++i) img(i) += c.boundaries[n](i, b);
      std::vector<bool> seen(tgt.size(), false);
      for (Index i = 0; i < img.size(); ++i) {
        if (img(i) == 0) continue;
        int o = owner[i];
        if (!seen[o]) {
          m(o, static_cast<Index>(sc)) = img(i);
          seen[o] = true;
        } else if (m(o, static_cast<Index>(sc)) != img(i)) {
          throw std::logic_error("fixed_point_level: image not constant on orbits");
        }
      }
    }
    out.boundaries[n] = std::move(m);
  }
  return out;
}

std::vector<GradedGroup> homology(const IntChainComplex& c) {
  std::vector<GradedGroup> out;
  for (size_t n = 0; n < c.ranks.size(); ++n) {
    IntMat dn = (n >= 1 && n < c.boundaries.size()) ? c.boundaries[n]
                                                    : IntMat::Zero(0, c.ranks[n]);
    IntMat dnext =
        (n + 1 < c.boundaries.size()) ? c.boundaries[n + 1] : IntMat::Zero(c.ranks[n], 0);
    IntMat kernel = kernel_basis(dn);
    out.push_back(lattice_quotient(kernel, dnext, "h"));
  }
  return out;
}

SphereH0Result sphere_h0_complex(const Representation& w) {
  if (w.is_zero()) throw std::invalid_argument("sphere_h0_complex: W must be nonzero");
  const GroupSpec& g = *w.group;
  SphereH0Result res;
  res.complex.group = &g;
  // degree 0: the two fixed cells
  res.complex.terms.emplace_back();
  res.complex.terms[0].push_back(permutation_module(g, g.subgroups.back().label));
  res.complex.terms[0].push_back(permutation_module(g, g.subgroups.back().label));
  // degree 1: two cells of type G/H per subgroup with nonzero fixed space
  res.complex.terms.emplace_back();
  for (const auto& sub : g.subgroups)
    if (fixed_subrep_dim(w, sub.label) > 0) {
      res.complex.terms[1].push_back(permutation_module(g, sub.label));
      res.complex.terms[1].push_back(permutation_module(g, sub.label));
    }
  // each underlying 1-cell runs from the cell at 0 to the cell at infinity
  IntMat d = IntMat::Zero(2, res.complex.rank_at(1));
  for (Index ccol = 0; ccol < d.cols(); ++ccol) {
    d(0, ccol) = -1;
    d(1, ccol) = 1;
  }
  res.complex.boundaries.resize(2);
  res.complex.boundaries[1] = d;
  res.complex.validate();

  // top level with augmentation: H~_0 = ker(aug)/im(d^G)
  IntChainComplex top = fixed_point_level(res.complex, g.subgroups.back().label);
  IntMat aug = IntMat::Zero(1, top.ranks[0]);
  for (Index i = 0; i < top.ranks[0]; ++i) aug(0, i) = 1;
  IntMat ker = kernel_basis(aug);
  res.reduced_h0 = lattice_quotient(ker, top.boundaries[1], "h");
  return res;
}

LambdaSphereComplex lambda_sphere_complex(int64_t p, int64_t e, int64_t k) {
  if (e < 1) throw std::invalid_argument("lambda_sphere_complex: e >= 1");
  int64_t n = ipow(p, e);
  if (k < 1 || k >= n) throw std::invalid_argument("lambda_sphere_complex: 1 <= k < p^e");
  const GroupSpec& g = cyclic_group(n);

  LambdaSphereComplex res;
  res.p = p;
  res.e = e;
  res.k = k;
  res.j = padic_valuation(p, k);
  // m with m * k = p^j mod p^e, equivalently m = (k / p^j)^{-1} mod p^{e-j}
  int64_t q = ipow(p, e - res.j);  // number of cosets (and the modulus for m)
  res.m = to_i64(mod_inverse(Int(k / ipow(p, res.j)), Int(q)));

  GroupChainComplex& c = res.complex;
  c.group = &g;
  std::string cell_sub = "C" + std::to_string(ipow(p, res.j));
  c.terms.resize(3);
  c.terms[0].push_back(permutation_module(g, g.subgroups.back().label));
  c.terms[0].push_back(permutation_module(g, g.subgroups.back().label));
  c.terms[1].push_back(permutation_module(g, cell_sub));
  c.terms[2].push_back(permutation_module(g, cell_sub));

  c.boundaries.resize(3);
  IntMat d1 = IntMat::Zero(2, q);
  for (Index b = 0; b < q; ++b) {
    d1(0, b) = -1;
    d1(1, b) = 1;
  }
  c.boundaries[1] = d1;
  // 1 - t^m on the coset basis (t acts by the cyclic shift)
  IntMat d2 = IntMat::Zero(q, q);
  for (int64_t b = 0; b < q; ++b) {
    d2(b, b) += 1;
    d2((b + res.m) % q, b) -= 1;
  }
  c.boundaries[2] = d2;
  c.validate();
  return res;
}

std::vector<GradedGroup> reduced_top_level_homology(const GroupChainComplex& c) {
  const GroupSpec& g = *c.group;
  IntChainComplex top = fixed_point_level(c, g.subgroups.back().label);
  // augment: degree-0 cells all map to 1
  IntMat aug = IntMat::Zero(1, top.ranks[0]);
  for (Index i = 0; i < top.ranks[0]; ++i) aug(0, i) = 1;
  std::vector<GradedGroup> out;
  for (size_t n = 0; n < top.ranks.size(); ++n) {
    IntMat dn = n == 0 ? aug : top.boundaries[n];
    IntMat dnext = n + 1 < top.boundaries.size() ? top.boundaries[n + 1]
                                                 : IntMat::Zero(top.ranks[n], 0);
    IntMat ker = kernel_basis(dn);
    out.push_back(lattice_quotient(ker, dnext, "h"));
  }
  return out;
}

ComparisonResult comparison_check(int64_t p, int64_t e, int64_t k, int64_t r) {
  int64_t n = ipow(p, e);
  if (std::gcd(r, p) != 1) throw std::invalid_argument("comparison_check: need gcd(r, p) = 1");
  ComparisonResult res;
  res.s = to_i64(mod_inverse(Int(r), Int(n)));

  LambdaSphereComplex base = lambda_sphere_complex(p, e, k);
  int64_t q = ipow(p, e - base.j);

  // cell structure for lambda(kr): same modules, twist m' = m*s mod p^e
  int64_t m2 = to_i64(mod_pos(Int(base.m) * res.s, Int(q)));
  IntMat d2_src = IntMat::Zero(q, q);
  for (int64_t b = 0; b < q; ++b) {
    d2_src(b, b) += 1;
    d2_src((b + m2) % q, b) -= 1;
  }

  // chain map: F2 = 1 + t^m + ... + t^{m(s-1)}, F1 = F0 = identity
  IntMat f2 = IntMat::Zero(q, q);
  for (int64_t i = 0; i < res.s; ++i)
    for (int64_t b = 0; b < q; ++b) f2((b + i * base.m) % q, b) += 1;

  // chain-map condition in degree 2: d2 * F2 = F1 * d2_src
  IntMat lhs = mul(base.complex.boundaries[2], f2);
  res.is_chain_map = mat_equal(lhs, d2_src);

  // H_2 on both sides is Z generated by the norm (all-ones vector)
  IntVec norm = IntVec::Zero(q);
  for (Index i = 0; i < q; ++i) norm(i) = 1;
  IntVec img = mul(f2, norm);
  res.h2_is_mult_by_s = true;
  for (Index i = 0; i < q; ++i)
    if (img(i) != res.s) res.h2_is_mult_by_s = false;
  res.unit_mod_p = std::gcd(res.s, p) == 1;
  return res;
}

}  // namespace ocb
