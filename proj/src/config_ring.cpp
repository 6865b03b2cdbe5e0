#include "ocb/config_ring.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ocb {

RingParams make_ring(int k, int sign, const Int& d, const Int& d_b) {
  if (k < 1) throw std::invalid_argument("ring: k >= 1");
  if (sign != 1 && sign != -1) throw std::invalid_argument("ring: sign must be +-1");
  if (d < 0 || d_b < 0) throw std::invalid_argument("ring: torsion must be >= 0");
  // the double flip omega -> omega forces (1 + sign) a = 0 in T
  if (sign == 1 && !(d == 1 || d == 2))
    throw std::invalid_argument("ring: even |V| forces 2a = 0, so d must be 1 or 2");
  return RingParams{k, sign, d, d_b};
}

namespace {

Int term_modulus(const RingParams& p, const OmegaMonomial& m) {
  bool has_a = m.a_exp >= 1, has_b = m.b_exp >= 1;
  if (has_a && has_b) return gcd_int(p.d, p.d_b);
  if (has_a) return p.d;
  if (has_b) return p.d_b;
  return 0;
}

void add_term(RingElement& out, const OmegaMonomial& m, const Int& c) {
  auto [it, fresh] = out.terms.emplace(m, c);
  if (!fresh) it->second += c;
}

void cleanup(RingElement& out) {
  for (auto it = out.terms.begin(); it != out.terms.end();) {
    Int mod = term_modulus(out.params, it->first);
    if (mod != 0) it->second = mod_pos(it->second, mod);
    if (it->second == 0)
      it = out.terms.erase(it);
    else
      ++it;
  }
}

struct Reducer {
  const RingParams& p;
  ReduceStrategy strategy;
  RingElement out;

  explicit Reducer(const RingParams& params, ReduceStrategy s) : p(params), strategy(s) {
    out.params = params;
  }

  void check_indices(const FormalTerm& t) const {
    for (auto [i, j] : t.factors) {
      if (i == j) throw std::invalid_argument("omega index pair with i = j");
      if (i < 1 || j < 1 || i > p.k || j > p.k)
        throw std::invalid_argument("omega index out of range 1..k");
    }
  }

  void reduce_term(Int coeff, std::vector<std::pair<int, int>> f, int64_t a_exp, int64_t b_exp) {
    if (coeff == 0) return;

    // orient every factor as (i < j): w_ji = sign * w_ij + a
    for (size_t t = 0; t < f.size(); ++t) {
      if (f[t].first > f[t].second) {
        auto flipped = f;
        flipped[t] = {f[t].second, f[t].first};
        reduce_term(coeff * p.sign, flipped, a_exp, b_exp);
        auto dropped = f;
        dropped.erase(dropped.begin() + t);
        reduce_term(coeff, dropped, a_exp + 1, b_exp);
        return;
      }
    }

    // sort factors; transposing two omega classes costs -sign
    {
      int swaps = 0;
      for (size_t a = 0; a + 1 < f.size(); ++a)
        for (size_t b2 = 0; b2 + 1 < f.size() - a; ++b2)
          if (f[b2 + 1] < f[b2]) {
            std::swap(f[b2], f[b2 + 1]);
            ++swaps;
          }
      if (p.sign == 1 && swaps % 2 != 0) coeff = -coeff;  // swap sign is -sign
    }

    // repeated factor: w^2 = a w
    for (size_t t = 0; t + 1 < f.size(); ++t) {
      if (f[t] == f[t + 1]) {
        auto shorter = f;
        shorter.erase(shorter.begin() + t);
        reduce_term(coeff, shorter, a_exp + 1, b_exp);
        return;
      }
    }

    // repeated column: rewrite the pair sharing it
    {
      int col = 0;
      for (size_t t = 0; t + 1 < f.size(); ++t)
        for (size_t u = t + 1; u < f.size(); ++u)
          if (f[t].second == f[u].second) {
            if (col == 0 || (strategy == ReduceStrategy::LargestColumn ? f[t].second > col
                                                                       : f[t].second < col))
              col = f[t].second;
          }
      if (col != 0) {
        // locate the two latest factors with this column
        size_t t1 = f.size(), t2 = f.size();
        for (size_t t = 0; t < f.size(); ++t)
          if (f[t].second == col) {
            if (t1 == f.size())
              t1 = t;
            else if (t2 == f.size())
              t2 = t;
          }
        int i1 = f[t1].first, i2 = f[t2].first;  // i1 < i2 by sortedness
        std::vector<std::pair<int, int>> rest;
        for (size_t t = 0; t < f.size(); ++t)
          if (t != t1 && t != t2) rest.push_back(f[t]);
        // permutation sign for extracting the pair to the front
        int moved = static_cast<int>(t1 + t2 - 1);
        Int c = coeff;
        if (p.sign == 1 && moved % 2 != 0) c = -c;
        // w_{i1 col} w_{i2 col} = a w_{i2 col} - w_{i2 col} w_{i2 i1} - sign * w_{i2 i1} w_{i1 col}
        auto emit = [&](Int cc, std::vector<std::pair<int, int>> head, int64_t extra_a) {
          head.insert(head.end(), rest.begin(), rest.end());
          reduce_term(cc, std::move(head), a_exp + extra_a, b_exp);
        };
        emit(c, {{i2, col}}, 1);
        emit(-c, {{i2, col}, {i2, i1}}, 0);
        emit(-c * p.sign, {{i2, i1}, {i1, col}}, 0);
        return;
      }
    }

    add_term(out, OmegaMonomial{std::move(f), a_exp, b_exp}, coeff);
  }
};

}  // namespace

RingElement reduce(const RingParams& params, const FormalExpr& expr, ReduceStrategy strategy) {
  Reducer r(params, strategy);
  for (const auto& t : expr) {
    r.check_indices(t);
    r.reduce_term(t.coeff, t.factors, t.a_exp, t.b_exp);
  }
  cleanup(r.out);
  return r.out;
}

RingElement from_monomial(const RingParams& params, const OmegaMonomial& m, const Int& c) {
  FormalTerm t{c, m.factors, m.a_exp, m.b_exp};
  return reduce(params, {t});
}

RingElement add(const RingElement& x, const RingElement& y) {
  if (!(x.params == y.params)) throw std::invalid_argument("add: ring parameter mismatch");
  RingElement out = x;
  for (const auto& [m, c] : y.terms) add_term(out, m, c);
  cleanup(out);
  return out;
}

RingElement scale(const Int& c, const RingElement& x) {
  RingElement out = x;
  for (auto& [m, cc] : out.terms) cc *= c;
  cleanup(out);
  return out;
}

RingElement multiply(const RingElement& x, const RingElement& y, ReduceStrategy strategy) {
  if (!(x.params == y.params)) throw std::invalid_argument("multiply: ring parameter mismatch");
  FormalExpr words;
  for (const auto& [mx, cx] : x.terms)
    for (const auto& [my, cy] : y.terms) {
      FormalTerm t;
      t.coeff = cx * cy;
      t.factors = mx.factors;
      t.factors.insert(t.factors.end(), my.factors.begin(), my.factors.end());
      t.a_exp = mx.a_exp + my.a_exp;
      t.b_exp = mx.b_exp + my.b_exp;
      words.push_back(std::move(t));
    }
  return reduce(x.params, words, strategy);
}

bool equal(const RingElement& x, const RingElement& y) {
  return x.params == y.params && x.terms == y.terms;
}

std::string RingElement::to_string() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms) {
    if (!first) os << " + ";
    bool wrote = false;
    if (c != 1 || (m.factors.empty() && m.a_exp == 0 && m.b_exp == 0)) {
      os << c;
      wrote = true;
    }
    for (auto [i, j] : m.factors) {
      if (wrote) os << "*";
      os << "w(" << i << "," << j << ")";
      wrote = true;
    }
    if (m.a_exp > 0) {
      if (wrote) os << "*";
      os << "a";
      if (m.a_exp > 1) os << "^" << m.a_exp;
      wrote = true;
    }
    if (m.b_exp > 0) {
      if (wrote) os << "*";
      os << "b";
      if (m.b_exp > 1) os << "^" << m.b_exp;
    }
    first = false;
  }
  return os.str();
}

std::vector<OmegaMonomial> basis_enumerate(int k, int j) {
  if (j < 0 || j > k - 1) throw std::invalid_argument("basis_enumerate: need 0 <= j <= k-1");
  std::vector<OmegaMonomial> out;
  std::vector<std::pair<int, int>> current;
  // choose columns in increasing order; each column col admits rows 1..col-1
  auto rec = [&](auto&& self, int next_col, int remaining) -> void {
    if (remaining == 0) {
      OmegaMonomial m;
      m.factors = current;
      std::sort(m.factors.begin(), m.factors.end());
      out.push_back(std::move(m));
      return;
    }
    if (next_col > k) return;
    self(self, next_col + 1, remaining);  // skip this column
    for (int row = 1; row < next_col; ++row) {
      current.emplace_back(row, next_col);
      self(self, next_col + 1, remaining - 1);
      current.pop_back();
    }
  };
  rec(rec, 2, j);
  std::sort(out.begin(), out.end());
  return out;
}

RingElement forgetful_classical(const RingElement& x) {
  RingElement out;
  out.params = x.params;
  for (const auto& [m, c] : x.terms)
    if (m.a_exp == 0) out.terms.emplace(m, c);
  return out;
}

RingElement restrict_to_subrep(const RingElement& x, int w_dim_parity_sign, const Int& d_target,
                               const Int& d_w) {
  RingParams target = make_ring(x.params.k, x.params.sign * w_dim_parity_sign, d_target, d_w);
  FormalExpr words;
  for (const auto& [m, c] : x.terms) {
    FormalTerm t;
    t.coeff = c;
    t.factors = m.factors;
    t.a_exp = m.a_exp;
    t.b_exp = m.b_exp + m.a_exp + static_cast<int64_t>(m.factors.size());
    words.push_back(std::move(t));
  }
  return reduce(target, words);
}

FormalExpr relation_flip(const RingParams& p, int i, int j) {
  return {FormalTerm{1, {{i, j}}, 0, 0}, FormalTerm{-p.sign, {{j, i}}, 0, 0},
          FormalTerm{-1, {}, 1, 0}};
}

FormalExpr relation_square(const RingParams& p, int i, int j) {
  (void)p;
  return {FormalTerm{1, {{i, j}, {i, j}}, 0, 0}, FormalTerm{-1, {{i, j}}, 1, 0}};
}

FormalExpr relation_arnold(const RingParams& p, int i, int j, int k) {
  (void)p;
  return {FormalTerm{1, {{i, j}, {j, k}}, 0, 0},  FormalTerm{1, {{j, k}, {k, i}}, 0, 0},
          FormalTerm{1, {{k, i}, {i, j}}, 0, 0},  FormalTerm{-1, {{i, j}}, 1, 0},
          FormalTerm{-1, {{j, k}}, 1, 0},         FormalTerm{-1, {{k, i}}, 1, 0},
          FormalTerm{1, {}, 2, 0}};
}

namespace {

struct ExprParser {
  std::string s;
  size_t pos = 0;

  explicit ExprParser(const std::string& text) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("parse error in '" + s + "' at " + std::to_string(pos) + ": " + why);
  }

  bool eat(char c) {
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  int64_t number() {
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected number");
    return std::stoll(s.substr(start, pos - start));
  }

  // factor := number | 'a'['^'n] | 'b'['^'n] | 'w(' i ',' j ')'['^'n]
  void factor(FormalTerm& t) {
    if (pos >= s.size()) fail("expected factor");
    char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      t.coeff *= number();
      return;
    }
    if (c == 'a' || c == 'b') {
      ++pos;
      int64_t e = eat('^') ? number() : 1;
      (c == 'a' ? t.a_exp : t.b_exp) += e;
      return;
    }
    if (c == 'w') {
      ++pos;
      if (!eat('(')) fail("expected '(' after w");
      int i = static_cast<int>(number());
      if (!eat(',')) fail("expected ','");
      int j = static_cast<int>(number());
      if (!eat(')')) fail("expected ')'");
      int64_t e = eat('^') ? number() : 1;
      for (int64_t r = 0; r < e; ++r) t.factors.emplace_back(i, j);
      return;
    }
    fail("unexpected character");
  }

  FormalExpr parse() {
    FormalExpr expr;
    bool negate = eat('-');
    for (;;) {
      FormalTerm t;
      t.coeff = negate ? -1 : 1;
      factor(t);
      while (eat('*')) factor(t);
      expr.push_back(std::move(t));
      if (eat('+'))
        negate = false;
      else if (eat('-'))
        negate = true;
      else
        break;
    }
    if (pos != s.size()) fail("trailing input");
    return expr;
  }
};

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
  int blocks() {
    int n = 0;
    for (size_t i = 0; i < parent.size(); ++i)
      if (find(static_cast<int>(i)) == static_cast<int>(i)) ++n;
    return n;
  }
};

}  // namespace

FormalExpr parse_ring_expr(const std::string& text) { return ExprParser(text).parse(); }

bool diagonal_arrangement_check(int k, int r_max) {
  if (k > 7) throw std::invalid_argument("diagonal_arrangement_check: cap exceeded (k <= 7)");
  std::vector<std::pair<int, int>> diags;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) diags.emplace_back(i, j);
  int m = static_cast<int>(diags.size());
  // every subset of size <= r_max
  std::vector<int> idx;
  auto rec = [&](auto&& self, int start) -> bool {
    if (!idx.empty()) {
      UnionFind uf(k);
      for (int t : idx) uf.unite(diags[t].first, diags[t].second);
      if (uf.blocks() < k - static_cast<int>(idx.size())) return false;
    }
    if (static_cast<int>(idx.size()) == r_max) return true;
    for (int t = start; t < m; ++t) {
      idx.push_back(t);
      if (!self(self, t + 1)) return false;
      idx.pop_back();
    }
    return true;
  };
  return rec(rec, 0);
}

}  // namespace ocb
