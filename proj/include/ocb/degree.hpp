#pragma once

#include <string>
#include <vector>

#include "ocb/groups.hpp"

namespace ocb {

// An RO(G)-degree: integer coefficients over the group's ordered irreducible
// basis (position 0 is the trivial representation).
struct Degree {
  const GroupSpec* group = nullptr;
  std::vector<int64_t> c;

  Degree() = default;
  explicit Degree(const GroupSpec& g) : group(&g), c(g.irreps.size(), 0) {}
  Degree(const GroupSpec& g, std::vector<int64_t> coeffs) : group(&g), c(std::move(coeffs)) {}

  static Degree of(const Representation& v) {
    Degree d(*v.group);
    for (size_t i = 0; i < v.mult.size(); ++i) d.c[i] = v.mult[i];
    return d;
  }

  int64_t rank() const {
    int64_t r = 0;
    for (size_t i = 0; i < c.size(); ++i) r += c[i] * group->irreps[i].dim;
    return r;
  }

  // Weight of the non-trivial part, used by the motivic grid convention.
  int64_t nontrivial_weight() const {
    int64_t w = 0;
    for (size_t i = 1; i < c.size(); ++i) w += c[i] * group->irreps[i].dim;
    return w;
  }

  Degree operator+(const Degree& o) const {
    Degree r = *this;
    for (size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
    return r;
  }
  Degree operator-(const Degree& o) const {
    Degree r = *this;
    for (size_t i = 0; i < c.size(); ++i) r.c[i] -= o.c[i];
    return r;
  }
  Degree operator-() const {
    Degree r = *this;
    for (auto& x : r.c) x = -x;
    return r;
  }
  Degree operator*(int64_t m) const {
    Degree r = *this;
    for (auto& x : r.c) x *= m;
    return r;
  }
  Degree& shift_trivial(int64_t m) {
    c[0] += m;
    return *this;
  }

  bool operator==(const Degree& o) const { return group == o.group && c == o.c; }
  bool operator<(const Degree& o) const { return c < o.c; }

  bool is_zero() const {
    for (auto x : c)
      if (x != 0) return false;
    return true;
  }

  std::string to_string() const;
};

// Parse degrees like "2*sigma-1", "lambda(1)+3", "-2*lambda+sigma".
Degree parse_degree(const GroupSpec& g, const std::string& text);

inline std::string Degree::to_string() const {
  std::string s;
  bool first = true;
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (!first && c[i] > 0) s += "+";
    if (c[i] == -1 && i > 0)
      s += "-";
    else if (c[i] != 1 || i == 0)
      s += std::to_string(c[i]);
    if (i > 0) {
      if ((c[i] != 1 && c[i] != -1)) s += "*";
      s += group->irreps[i].label;
    }
    first = false;
  }
  if (first) s = "0";
  return s;
}

}  // namespace ocb
