#include "ocb/point.hpp"

#include <algorithm>
#include <sstream>

namespace ocb {

namespace {

bool is_prime(int64_t n) {
  if (n < 2) return false;
  for (int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// n = p^e for prime p, e >= 1; returns {p, e} or {0, 0}.
std::pair<int64_t, int64_t> prime_power(int64_t n) {
  for (int64_t p = 2; p <= n; ++p) {
    if (n % p != 0) continue;
    if (!is_prime(p)) return {0, 0};
    int64_t e = 0, m = n;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    return m == 1 ? std::make_pair(p, e) : std::make_pair(int64_t{0}, int64_t{0});
  }
  return {0, 0};
}

std::string pow_str(const std::string& base, int64_t e) {
  if (e == 1) return base;
  return base + "^" + std::to_string(e);
}

// "c * num / den" with omitted trivial pieces.
std::string fraction_label(const Int& coeff, const std::vector<std::pair<std::string, int64_t>>& factors) {
  std::string num, den;
  for (const auto& [name, e] : factors) {
    if (e > 0) {
      if (!num.empty()) num += " ";
      num += pow_str(name, e);
    } else if (e < 0) {
      if (!den.empty()) den += " ";
      den += pow_str(name, -e);
    }
  }
  std::string head = coeff == 1 ? "" : coeff.str();
  if (num.empty() && head.empty()) head = "1";
  std::string s = head;
  if (!num.empty()) {
    if (!s.empty()) s += " ";
    s += num;
  }
  if (!den.empty()) {
    bool paren = den.find(' ') != std::string::npos;
    s += "/";
    s += paren ? "(" + den + ")" : den;
  }
  return s;
}

}  // namespace

Degree normalize_degree(const GroupSpec& g, const Degree& alpha) {
  if (g.kind != GroupSpec::Kind::Cyclic)
    throw std::invalid_argument("normalize_degree: cyclic p-groups only");
  auto [p, e] = prime_power(g.n);
  if (p == 0) throw std::invalid_argument("normalize_degree: " + g.name + " is not a p-group");
  Degree out(g);
  out.c[0] = alpha.c[0];
  for (int64_t k = 1; k <= (g.n - 1) / 2; ++k) {
    int64_t v = padic_valuation(p, k);
    out.c[g.lambda_pos(ipow(p, v))] += alpha.c[g.lambda_pos(k)];
  }
  if (g.has_sigma()) out.c[g.irrep_pos("sigma")] = alpha.c[g.irrep_pos("sigma")];
  return out;
}

Representation normalize_representation(const Representation& v) {
  const GroupSpec& g = *v.group;
  if (g.kind != GroupSpec::Kind::Cyclic || prime_power(g.n).first == 0) return v;
  Degree d = Degree::of(v);
  Degree nd = normalize_degree(g, d);
  Representation out(g);
  for (size_t i = 0; i < out.mult.size(); ++i) out.mult[i] = nd.c[i];
  return out;
}

bool PointChart::has_chart(const GroupSpec& g) {
  if (g.kind == GroupSpec::Kind::Sigma3) return true;
  auto [p, e] = prime_power(g.n);
  if (p == 0) return false;
  if (g.n == 2 || g.n == 4) return true;
  return p != 2 && e <= 2;
}

PointChart::PointChart(const GroupSpec& g) : group_(&g) {
  if (!has_chart(g))
    throw ChartError("no chart data for group " + g.name);
  if (g.kind == GroupSpec::Kind::Sigma3) {
    kind_ = Kind::Sigma3;
  } else if (g.n == 2) {
    kind_ = Kind::C2;
    p_ = 2;
  } else if (g.n == 4) {
    kind_ = Kind::C4;
    p_ = 2;
  } else {
    auto [p, e] = prime_power(g.n);
    p_ = p;
    kind_ = (e == 1) ? Kind::CpOdd : Kind::Cp2;
  }
}

PointChart::Coord PointChart::coord_of(const Degree& alpha) const {
  Coord c;
  c.x = alpha.c[0];
  const GroupSpec& g = *group_;
  switch (kind_) {
    case Kind::C2:
      c.y = alpha.c[g.irrep_pos("sigma")];
      break;
    case Kind::CpOdd:
      for (int64_t k = 1; k <= (g.n - 1) / 2; ++k) c.y += alpha.c[g.lambda_pos(k)];
      break;
    case Kind::C4:
      c.y = alpha.c[g.lambda_pos(1)];
      c.z = alpha.c[g.irrep_pos("sigma")];
      break;
    case Kind::Cp2:
      for (int64_t k = 1; k <= (g.n - 1) / 2; ++k) {
        if (k % p_ == 0)
          c.z += alpha.c[g.lambda_pos(k)];
        else
          c.y += alpha.c[g.lambda_pos(k)];
      }
      break;
    case Kind::Sigma3:
      c.y = alpha.c[g.irrep_pos("lambda")];
      c.z = alpha.c[g.irrep_pos("sigma")];
      break;
  }
  return c;
}

Degree PointChart::degree_of_coord(const Coord& c) const {
  Degree d(*group_);
  d.c[0] = c.x;
  switch (kind_) {
    case Kind::C2:
      d.c[group_->irrep_pos("sigma")] = c.y;
      break;
    case Kind::CpOdd:
      d.c[group_->lambda_pos(1)] = c.y;
      break;
    case Kind::C4:
      d.c[group_->lambda_pos(1)] = c.y;
      d.c[group_->irrep_pos("sigma")] = c.z;
      break;
    case Kind::Cp2:
      d.c[group_->lambda_pos(1)] = c.y;
      d.c[group_->lambda_pos(p_)] = c.z;
      break;
    case Kind::Sigma3:
      d.c[group_->irrep_pos("lambda")] = c.y;
      d.c[group_->irrep_pos("sigma")] = c.z;
      break;
  }
  return d;
}

// ---------------------------------------------------------------------------
// Generators per degree

std::vector<PointGen> PointChart::gens_c2_like(const Coord& c) const {
  std::vector<PointGen> out;
  const bool sigma_chart = (kind_ == Kind::C2);
  if (c.y >= 0) {
    if (c.x > 0 || c.x % 2 != 0) return out;
    int64_t r = -c.x / 2;
    int64_t s = sigma_chart ? c.y - 2 * r : c.y - r;
    if (r >= 0 && s >= 0) out.push_back({PointGen::kMono, {r, s, 0, 0}});
  } else {
    if (c.x <= 0) return out;
    if (c.x % 2 == 0) {
      int64_t k = c.x / 2;
      int64_t expect = sigma_chart ? -2 * k : -k;
      if (c.y == expect && k >= 1) out.push_back({PointGen::kNegZ, {k, 0, 0, 0}});
    } else {
      int64_t k = (c.x - 1) / 2;
      int64_t l = sigma_chart ? -c.y - 2 * k : -c.y - k;
      if (k >= 1 && l >= 1) out.push_back({PointGen::kNegT1, {k, l, 0, 0}});
    }
  }
  return out;
}

std::vector<PointGen> PointChart::gens_c4(const Coord& c) const {
  std::vector<PointGen> out;
  if (c.y >= 0 && c.z >= 0) {
    if (c.x > 0 || c.x % 2 != 0) return out;
    int64_t n = -c.x / 2;
    int64_t s = c.z % 2;
    int64_t q = (c.z - s) / 2;
    int64_t r = n - q;
    int64_t t = c.y - r;
    if (r >= 0 && t >= 0) {
      out.push_back({PointGen::kMono, {q, r, s, t}});
    } else if (c.z - 2 * n >= 2) {
      out.push_back({PointGen::kMono, {n, 0, c.z - 2 * n, c.y}});
    }
  } else if (c.y <= 0 && c.z <= 0) {
    if (c.x <= 0) return out;
    if (c.x % 2 == 0) {
      if (c.z % 2 == 0) {
        int64_t r = -c.z / 2, s = -c.y;
        if (r + s >= 1 && c.x == 2 * (r + s)) out.push_back({PointGen::kNegZ, {r, s, 0, 0}});
      }
    } else {
      int64_t half = (c.x - 1) / 2;
      if (c.z % 2 == 0) {
        int64_t s = -c.z / 2;
        int64_t k = half - s;
        int64_t p = -c.y - k;
        if (k >= 1 && p >= 1) out.push_back({PointGen::kNegT1, {p, k, s, 0}});
      }
      {
        int64_t k = half;
        int64_t p = -c.y;
        int64_t q = -c.z - 2 * k;
        if (k >= 1 && q >= 0 && p + q >= 1) out.push_back({PointGen::kNegT2, {p, q, k, 0}});
        if (k >= 1 && -c.z == 2 * k - 1 && p >= 1) out.push_back({PointGen::kNegT3, {p, k, 0, 0}});
      }
    }
  } else {
    throw ChartError("degree not covered by chart data (C4, mixed lambda/sigma signs)");
  }
  return out;
}

std::vector<PointGen> PointChart::gens_cp2(const Coord& c) const {
  std::vector<PointGen> out;
  if (c.y >= 0 && c.z >= 0) {
    if (c.x > 0 || c.x % 2 != 0) return out;
    int64_t n = -c.x / 2;
    if (c.z <= n) {
      int64_t r = n - c.z, s = c.z, p = c.y - r;
      if (p >= 0) out.push_back({PointGen::kMono, {r, s, p, 0}});
    } else {
      out.push_back({PointGen::kMono, {0, n, c.y, c.z - n}});
    }
  } else if (c.y <= 0 && c.z <= 0) {
    if (c.x <= 0) return out;
    if (c.x % 2 == 0) {
      int64_t r = -c.y, s = -c.z;
      if (r >= 1 && c.x == 2 * (r + s))
        out.push_back({PointGen::kNegZ, {r, s, 0, 0}});
      else if (r == 0 && s >= 1 && c.x == 2 * s)
        out.push_back({PointGen::kNegZ, {0, s, 0, 0}});
    } else {
      int64_t half = (c.x - 1) / 2;
      {
        int64_t s = -c.z, r = half - s, t = -c.y - r;
        if (r >= 1 && t >= 1) out.push_back({PointGen::kNegT1, {t, r, s, 0}});
      }
      {
        int64_t l = half, q = -c.z - half, p = -c.y;
        if (l >= 1 && q >= 0 && p + q >= 1) out.push_back({PointGen::kNegT2, {p, q, l, 0}});
      }
    }
  } else {
    throw ChartError("degree not covered by chart data (" + group_->name +
                     ", outside the regular portion)");
  }
  return out;
}

std::vector<PointGen> PointChart::gens_sigma3(const Coord& c) const {
  std::vector<PointGen> out;
  auto even = [](int64_t v) { return ((v % 2) + 2) % 2 == 0; };
  auto div4 = [](int64_t v) { return ((v % 4) + 4) % 4 == 0; };
  // plane of infinite cyclic classes
  if (even(c.x + c.y)) {
    int64_t i = -(c.x + c.y) / 2, j = c.y;
    if (c.z == 2 * i - j) out.push_back({PointGen::kZGrid, {i, j, 0, 0}});
  }
  // a_lambda rays from rows j >= 0
  if (even(c.x + c.z) && div4(c.z - c.x)) {
    int64_t j = -(c.x + c.z) / 2, i = (c.z - c.x) / 4, t = c.y - j;
    if (j >= 0 && t >= 1) out.push_back({PointGen::kT1, {i, j, t, 0}});
  }
  // a_sigma rays from columns i >= 0
  if (even(c.x + c.y)) {
    int64_t i = -(c.x + c.y) / 2, j = c.y, s = c.x + 2 * c.y + c.z;
    if (i >= 0 && s >= 1) out.push_back({PointGen::kT2, {i, j, s, 0}});
  }
  // a_lambda-divided shifted classes
  if (!even(c.x + c.z) && div4(c.z - c.x + 1)) {
    int64_t j = (1 - c.x - c.z) / 2, i = (c.z - c.x + 1) / 4, t = j - c.y;
    if (j <= -1 && t >= 1) out.push_back({PointGen::kU1, {i, j, t, 0}});
  }
  // a_sigma-divided shifted classes
  if (even(1 - c.x - c.y)) {
    int64_t i = (1 - c.x - c.y) / 2, j = c.y, s = 1 - c.x - 2 * c.y - c.z;
    if (i <= -1 && s >= 1) out.push_back({PointGen::kU2, {i, j, s, 0}});
  }
  return out;
}

std::vector<PointGen> PointChart::gens_at(const Coord& c) const {
  switch (kind_) {
    case Kind::C2:
    case Kind::CpOdd:
      return gens_c2_like(c);
    case Kind::C4:
      return gens_c4(c);
    case Kind::Cp2:
      return gens_cp2(c);
    case Kind::Sigma3:
      return gens_sigma3(c);
  }
  return {};
}

std::vector<PointGen> PointChart::classes_at(const Degree& alpha) const {
  Degree a = (kind_ == Kind::Sigma3) ? alpha : normalize_degree(*group_, alpha);
  return gens_at(coord_of(a));
}

std::array<int64_t, 3> PointChart::chart_coordinates(const Degree& alpha) const {
  Degree a = (kind_ == Kind::Sigma3) ? alpha : normalize_degree(*group_, alpha);
  Coord c = coord_of(a);
  return {c.x, c.y, c.z};
}

Int PointChart::gen_order(const PointGen& g) const {
  switch (kind_) {
    case Kind::C2:
    case Kind::CpOdd:
      switch (g.fam) {
        case PointGen::kMono:
          return g.p[1] == 0 ? Int(0) : Int(p_);
        case PointGen::kNegZ:
          return 0;
        default:
          return p_;
      }
    case Kind::C4:
      switch (g.fam) {
        case PointGen::kMono:
          if (g.p[2] >= 1) return 2;
          return g.p[3] >= 1 ? Int(4) : Int(0);
        case PointGen::kNegZ:
          return 0;
        case PointGen::kNegT1:
          return 4;
        default:
          return 2;
      }
    case Kind::Cp2:
      switch (g.fam) {
        case PointGen::kMono:
          if (g.p[3] >= 1) return p_;
          return g.p[2] >= 1 ? Int(p_ * p_) : Int(0);
        case PointGen::kNegZ:
          return 0;
        case PointGen::kNegT1:
          return Int(p_ * p_);
        default:
          return p_;
      }
    case Kind::Sigma3:
      switch (g.fam) {
        case PointGen::kZGrid:
          return 0;
        case PointGen::kT1:
        case PointGen::kU1:
          return 3;
        default:
          return 2;
      }
  }
  return 0;
}

namespace {
// Coefficient of the infinite cyclic class at grid spot (i, j) for Sigma3.
int64_t sigma3_grid_coeff(int64_t i, int64_t j) {
  return (i < 0 ? 2 : 1) * (j < 0 ? 3 : 1);
}
}  // namespace

std::string PointChart::gen_label(const PointGen& g) const {
  using F = std::vector<std::pair<std::string, int64_t>>;
  switch (kind_) {
    case Kind::C2:
    case Kind::CpOdd: {
      std::string u = kind_ == Kind::C2 ? "u_{2sigma}" : "u_{lambda}";
      std::string a = kind_ == Kind::C2 ? "a_{sigma}" : "a_{lambda}";
      if (g.fam == PointGen::kMono) return fraction_label(1, F{{u, g.p[0]}, {a, g.p[1]}});
      if (g.fam == PointGen::kNegZ) return fraction_label(p_, F{{u, -g.p[0]}});
      return "S1(" + fraction_label(1, F{{u, -g.p[0]}, {a, -g.p[1]}}) + ")";
    }
    case Kind::C4: {
      if (g.fam == PointGen::kMono)
        return fraction_label(
            1, F{{"u_{2sigma}", g.p[0]}, {"u_{lambda}", g.p[1]}, {"a_{sigma}", g.p[2]}, {"a_{lambda}", g.p[3]}});
      if (g.fam == PointGen::kNegZ)
        return fraction_label(g.p[1] >= 1 ? 4 : 2, F{{"u_{2sigma}", -g.p[0]}, {"u_{lambda}", -g.p[1]}});
      if (g.fam == PointGen::kNegT1)
        return "S1(" + fraction_label(1, F{{"u_{lambda}", -g.p[1]}, {"u_{2sigma}", -g.p[2]}, {"a_{lambda}", -g.p[0]}}) + ")";
      if (g.fam == PointGen::kNegT2)
        return "S1(" + fraction_label(1, F{{"u_{2sigma}", -g.p[2]}, {"a_{lambda}", -g.p[0]}, {"a_{sigma}", -g.p[1]}}) + ")";
      return "a_{sigma} S1(" + fraction_label(1, F{{"u_{2sigma}", -g.p[1]}, {"a_{lambda}", -g.p[0]}}) + ")";
    }
    case Kind::Cp2: {
      if (g.fam == PointGen::kMono)
        return fraction_label(1, F{{"u_0", g.p[0]}, {"u_1", g.p[1]}, {"a_0", g.p[2]}, {"a_1", g.p[3]}});
      if (g.fam == PointGen::kNegZ)
        return fraction_label(g.p[0] >= 1 ? p_ * p_ : p_, F{{"u_0", -g.p[0]}, {"u_1", -g.p[1]}});
      if (g.fam == PointGen::kNegT1)
        return "S1(" + fraction_label(1, F{{"u_0", -g.p[1]}, {"u_1", -g.p[2]}, {"a_0", -g.p[0]}}) + ")";
      return "S1(" + fraction_label(1, F{{"u_1", -g.p[2]}, {"a_0", -g.p[0]}, {"a_1", -g.p[1]}}) + ")";
    }
    case Kind::Sigma3: {
      std::string u = "u_{2sigma}", v = "u_{lambda-sigma}";
      if (g.fam == PointGen::kZGrid)
        return fraction_label(sigma3_grid_coeff(g.p[0], g.p[1]), F{{u, g.p[0]}, {v, g.p[1]}});
      if (g.fam == PointGen::kT1)
        return fraction_label(sigma3_grid_coeff(g.p[0], g.p[1]),
                              F{{"a_{lambda}", g.p[2]}, {u, g.p[0]}, {v, g.p[1]}});
      if (g.fam == PointGen::kT2)
        return fraction_label(sigma3_grid_coeff(g.p[0], g.p[1]),
                              F{{"a_{sigma}", g.p[2]}, {u, g.p[0]}, {v, g.p[1]}});
      if (g.fam == PointGen::kU1)
        return "S1(" + fraction_label(1, F{{u, g.p[0]}, {v, g.p[1]}, {"a_{lambda}", -g.p[2]}}) + ")";
      return "S1(" + fraction_label(1, F{{u, g.p[0]}, {v, g.p[1]}, {"a_{sigma}", -g.p[2]}}) + ")";
    }
  }
  return "?";
}

GradedGroup PointChart::group_at(const Degree& alpha) const {
  GradedGroup g;
  for (const auto& gen : classes_at(alpha)) g.summands.push_back({gen_order(gen), gen_label(gen)});
  return g;
}

// ---------------------------------------------------------------------------
// Euler multiplication, one irreducible at a time

std::pair<Int, std::optional<PointGen>> PointChart::step_c2_like(const PointGen& g) const {
  switch (g.fam) {
    case PointGen::kMono:
      return {1, PointGen{PointGen::kMono, {g.p[0], g.p[1] + 1, 0, 0}}};
    case PointGen::kNegZ:
      return {0, std::nullopt};
    default:
      if (g.p[1] >= 2) return {1, PointGen{PointGen::kNegT1, {g.p[0], g.p[1] - 1, 0, 0}}};
      return {0, std::nullopt};
  }
}

std::pair<Int, std::optional<PointGen>> PointChart::step_c4(const PointGen& g, bool sigma) const {
  if (!sigma) {
    switch (g.fam) {
      case PointGen::kMono:
        return {1, PointGen{PointGen::kMono, {g.p[0], g.p[1], g.p[2], g.p[3] + 1}}};
      case PointGen::kNegZ:
        if (g.p[1] >= 1) return {0, std::nullopt};
        throw ChartError("a_lambda multiple of " + gen_label(g) + " lies outside the chart");
      case PointGen::kNegT1:
        if (g.p[0] >= 2) return {1, PointGen{PointGen::kNegT1, {g.p[0] - 1, g.p[1], g.p[2], 0}}};
        return {0, std::nullopt};
      case PointGen::kNegT2:
        if (g.p[0] >= 1) {
          if (g.p[0] - 1 + g.p[1] >= 1)
            return {1, PointGen{PointGen::kNegT2, {g.p[0] - 1, g.p[1], g.p[2], 0}}};
          return {0, std::nullopt};
        }
        throw ChartError("a_lambda multiple of " + gen_label(g) + " lies outside the chart");
      case PointGen::kNegT3:
        if (g.p[0] >= 2) return {1, PointGen{PointGen::kNegT3, {g.p[0] - 1, g.p[1], 0, 0}}};
        return {0, std::nullopt};
      default:
        break;
    }
  } else {
    switch (g.fam) {
      case PointGen::kMono:
        if (g.p[2] + 1 >= 2 && g.p[1] >= 1)
          return {2, PointGen{PointGen::kMono, {g.p[0] + 1, g.p[1] - 1, g.p[2] - 1, g.p[3] + 1}}};
        return {1, PointGen{PointGen::kMono, {g.p[0], g.p[1], g.p[2] + 1, g.p[3]}}};
      case PointGen::kNegZ:
      case PointGen::kNegT1:
        return {0, std::nullopt};
      case PointGen::kNegT2:
        if (g.p[1] >= 1) {
          if (g.p[0] + g.p[1] - 1 >= 1)
            return {1, PointGen{PointGen::kNegT2, {g.p[0], g.p[1] - 1, g.p[2], 0}}};
          return {0, std::nullopt};
        }
        return {1, PointGen{PointGen::kNegT3, {g.p[0], g.p[2], 0, 0}}};
      case PointGen::kNegT3:
        if (g.p[0] >= 2) return {2, PointGen{PointGen::kNegT1, {g.p[0] - 1, 1, g.p[1] - 1, 0}}};
        return {0, std::nullopt};
      default:
        break;
    }
  }
  throw std::logic_error("step_c4: unhandled family");
}

std::pair<Int, std::optional<PointGen>> PointChart::step_cp2(const PointGen& g, bool inner) const {
  const Int p(p_);
  if (!inner) {  // a_0, Euler class of the faithful plane
    switch (g.fam) {
      case PointGen::kMono:
        return {1, PointGen{PointGen::kMono, {g.p[0], g.p[1], g.p[2] + 1, g.p[3]}}};
      case PointGen::kNegZ:
        return {0, std::nullopt};
      case PointGen::kNegT1:
        if (g.p[0] >= 2) return {1, PointGen{PointGen::kNegT1, {g.p[0] - 1, g.p[1], g.p[2], 0}}};
        return {0, std::nullopt};
      case PointGen::kNegT2:
        if (g.p[0] >= 1) {
          if (g.p[0] - 1 + g.p[1] >= 1)
            return {1, PointGen{PointGen::kNegT2, {g.p[0] - 1, g.p[1], g.p[2], 0}}};
          return {0, std::nullopt};
        }
        throw ChartError("a_0 multiple of " + gen_label(g) + " lies outside the chart");
      default:
        break;
    }
  } else {  // a_1
    switch (g.fam) {
      case PointGen::kMono:
        if (g.p[0] == 0)
          return {1, PointGen{PointGen::kMono, {0, g.p[1], g.p[2], g.p[3] + 1}}};
        // a_1 u_0 = p a_0 u_1
        return {p, PointGen{PointGen::kMono, {g.p[0] - 1, g.p[1] + 1, g.p[2] + 1, 0}}};
      case PointGen::kNegZ:
        return {0, std::nullopt};
      case PointGen::kNegT1:
        if (g.p[0] >= 2 && g.p[2] >= 1)
          return {p, PointGen{PointGen::kNegT1, {g.p[0] - 1, g.p[1] + 1, g.p[2] - 1, 0}}};
        return {0, std::nullopt};
      case PointGen::kNegT2:
        if (g.p[1] >= 1) {
          if (g.p[0] + g.p[1] - 1 >= 1)
            return {1, PointGen{PointGen::kNegT2, {g.p[0], g.p[1] - 1, g.p[2], 0}}};
          return {0, std::nullopt};
        }
        if (g.p[0] >= 2)
          return {p, PointGen{PointGen::kNegT1, {g.p[0] - 1, 1, g.p[2] - 1, 0}}};
        return {0, std::nullopt};
      default:
        break;
    }
  }
  throw std::logic_error("step_cp2: unhandled family");
}

std::pair<Int, std::optional<PointGen>> PointChart::step_sigma3(const PointGen& g, bool sigma) const {
  if (!sigma) {  // a_lambda
    switch (g.fam) {
      case PointGen::kZGrid:
        if (g.p[1] >= 0) return {1, PointGen{PointGen::kT1, {g.p[0], g.p[1], 1, 0}}};
        return {0, std::nullopt};
      case PointGen::kT1:
        return {1, PointGen{PointGen::kT1, {g.p[0], g.p[1], g.p[2] + 1, 0}}};
      case PointGen::kU1:
        if (g.p[2] >= 2) return {1, PointGen{PointGen::kU1, {g.p[0], g.p[1], g.p[2] - 1, 0}}};
        return {0, std::nullopt};
      default:  // anything a_sigma-flavoured dies: a_lambda a_sigma = 0
        return {0, std::nullopt};
    }
  }
  switch (g.fam) {  // a_sigma
    case PointGen::kZGrid:
      if (g.p[0] >= 0) return {1, PointGen{PointGen::kT2, {g.p[0], g.p[1], 1, 0}}};
      return {0, std::nullopt};
    case PointGen::kT2:
      return {1, PointGen{PointGen::kT2, {g.p[0], g.p[1], g.p[2] + 1, 0}}};
    case PointGen::kU2:
      if (g.p[2] >= 2) return {1, PointGen{PointGen::kU2, {g.p[0], g.p[1], g.p[2] - 1, 0}}};
      return {0, std::nullopt};
    default:
      return {0, std::nullopt};
  }
}

std::pair<Int, std::optional<PointGen>> PointChart::mult_step(const PointGen& g, int irrep_pos) const {
  const GroupSpec& gr = *group_;
  if (irrep_pos == 0) return {0, std::nullopt};  // a_1 = 0 for the trivial line
  switch (kind_) {
    case Kind::C2:
    case Kind::CpOdd:
      return step_c2_like(g);
    case Kind::C4:
      return step_c4(g, gr.irreps[irrep_pos].label == "sigma");
    case Kind::Cp2: {
      const std::string& lab = gr.irreps[irrep_pos].label;
      int64_t k = std::stoll(lab.substr(7, lab.size() - 8));  // "lambda(k)"
      return step_cp2(g, k % p_ == 0);
    }
    case Kind::Sigma3:
      return step_sigma3(g, gr.irreps[irrep_pos].label == "sigma");
  }
  return {0, std::nullopt};
}

IntMat PointChart::euler_matrix(const Degree& alpha, const Representation& w) const {
  Representation wn = normalize_representation(w);
  Degree beta = alpha + Degree::of(w);
  std::vector<PointGen> src = classes_at(alpha);
  std::vector<PointGen> tgt = classes_at(beta);
  IntMat m = IntMat::Zero(static_cast<Index>(tgt.size()), static_cast<Index>(src.size()));

  if (wn.contains_trivial()) return m;  // a_W = 0 whenever W contains a trivial line

  std::vector<int> steps;
  for (size_t i = 1; i < wn.mult.size(); ++i)
    for (int64_t c = 0; c < wn.mult[i]; ++c) steps.push_back(static_cast<int>(i));

  for (size_t j = 0; j < src.size(); ++j) {
    auto walk = [&](const std::vector<int>& order) -> std::pair<Int, std::optional<PointGen>> {
      Int coeff = 1;
      std::optional<PointGen> cur = src[j];
      for (int pos : order) {
        auto [c2, next] = mult_step(*cur, pos);
        coeff *= c2;
        cur = next;
        if (coeff == 0 || !cur) return {0, std::nullopt};
      }
      return {coeff, cur};
    };
    Int coeff;
    std::optional<PointGen> img;
    try {
      std::tie(coeff, img) = walk(steps);
    } catch (const ChartError&) {
      std::vector<int> rev(steps.rbegin(), steps.rend());
      std::tie(coeff, img) = walk(rev);
    }
    if (coeff == 0 || !img) continue;
    bool placed = false;
    for (size_t i = 0; i < tgt.size(); ++i) {
      if (tgt[i] == *img) {
        Int ord = gen_order(tgt[i]);
        m(static_cast<Index>(i), static_cast<Index>(j)) = ord == 0 ? coeff : mod_pos(coeff, ord);
        placed = true;
        break;
      }
    }
    if (!placed) throw std::logic_error("euler_matrix: product left the family system");
  }
  return m;
}

// ---------------------------------------------------------------------------
// Class products

Int PointChart::psi_value(const PointGen& g) const {
  if (gen_order(g) != 0) return 0;
  switch (kind_) {
    case Kind::C2:
    case Kind::CpOdd:
      return g.fam == PointGen::kNegZ ? Int(p_) : Int(1);
    case Kind::C4:
      return g.fam == PointGen::kNegZ ? Int(g.p[1] >= 1 ? 4 : 2) : Int(1);
    case Kind::Cp2:
      return g.fam == PointGen::kNegZ ? Int(g.p[0] >= 1 ? p_ * p_ : p_) : Int(1);
    case Kind::Sigma3:
      return Int(sigma3_grid_coeff(g.p[0], g.p[1]));
  }
  return 0;
}

std::pair<Int, std::optional<PointGen>> PointChart::mult_class(const PointGen& a,
                                                               const PointGen& b) const {
  auto is_unit = [&](const PointGen& g) {
    if (kind_ == Kind::Sigma3) return g.fam == PointGen::kZGrid && g.p[0] == 0 && g.p[1] == 0;
    return g.fam == PointGen::kMono && g.p == std::array<int64_t, 4>{0, 0, 0, 0};
  };
  if (is_unit(a)) return {1, b};
  if (is_unit(b)) return {1, a};

  auto shifted = [&](const PointGen& g) {
    return g.fam == PointGen::kNegT1 || g.fam == PointGen::kNegT2 || g.fam == PointGen::kNegT3 ||
           g.fam == PointGen::kU1 || g.fam == PointGen::kU2;
  };
  if (shifted(a) && shifted(b)) return {0, std::nullopt};  // products of shifted classes vanish

  // Pure Euler monomials act through the step calculus.
  auto pure_a_steps = [&](const PointGen& g) -> std::optional<std::vector<int>> {
    std::vector<int> steps;
    if (kind_ == Kind::Sigma3) {
      if ((g.fam == PointGen::kT1 || g.fam == PointGen::kT2) && g.p[0] == 0 && g.p[1] == 0) {
        int pos = group_->irrep_pos(g.fam == PointGen::kT1 ? "lambda" : "sigma");
        for (int64_t i = 0; i < g.p[2]; ++i) steps.push_back(pos);
        return steps;
      }
      return std::nullopt;
    }
    if (g.fam != PointGen::kMono) return std::nullopt;
    switch (kind_) {
      case Kind::C2:
      case Kind::CpOdd:
        if (g.p[0] != 0) return std::nullopt;
        for (int64_t i = 0; i < g.p[1]; ++i) steps.push_back(1);
        return steps;
      case Kind::C4:
        if (g.p[0] != 0 || g.p[1] != 0) return std::nullopt;
        for (int64_t i = 0; i < g.p[2]; ++i) steps.push_back(group_->irrep_pos("sigma"));
        for (int64_t i = 0; i < g.p[3]; ++i) steps.push_back(group_->lambda_pos(1));
        return steps;
      case Kind::Cp2:
        if (g.p[0] != 0 || g.p[1] != 0) return std::nullopt;
        for (int64_t i = 0; i < g.p[2]; ++i) steps.push_back(group_->lambda_pos(1));
        for (int64_t i = 0; i < g.p[3]; ++i) steps.push_back(group_->lambda_pos(p_));
        return steps;
      default:
        return std::nullopt;
    }
  };
  auto run_steps = [&](const std::vector<int>& steps, const PointGen& g)
      -> std::pair<Int, std::optional<PointGen>> {
    Int coeff = 1;
    std::optional<PointGen> cur = g;
    for (int pos : steps) {
      auto [c, next] = mult_step(*cur, pos);
      coeff *= c;
      cur = next;
      if (coeff == 0 || !cur) return {0, std::nullopt};
    }
    Int ord = gen_order(*cur);
    if (ord != 0) {
      coeff = mod_pos(coeff, ord);
      if (coeff == 0) return {0, std::nullopt};
    }
    return {coeff, cur};
  };
  if (auto st = pure_a_steps(a)) return run_steps(*st, b);
  if (auto st = pure_a_steps(b)) return run_steps(*st, a);

  if (kind_ == Kind::C2 || kind_ == Kind::CpOdd) {
    if (a.fam == PointGen::kMono && b.fam == PointGen::kMono)
      return {1, PointGen{PointGen::kMono, {a.p[0] + b.p[0], a.p[1] + b.p[1], 0, 0}}};
    // u^R against e(V)/u_V classes
    auto mono_negz = [&](const PointGen& mono, const PointGen& nz)
        -> std::pair<Int, std::optional<PointGen>> {
      int64_t r = mono.p[0], s = mono.p[1], k = nz.p[0];
      if (s >= 1) return {0, std::nullopt};
      if (r >= k) return {Int(p_), PointGen{PointGen::kMono, {r - k, 0, 0, 0}}};
      return {1, PointGen{PointGen::kNegZ, {k - r, 0, 0, 0}}};
    };
    if (a.fam == PointGen::kMono && b.fam == PointGen::kNegZ) return mono_negz(a, b);
    if (b.fam == PointGen::kMono && a.fam == PointGen::kNegZ) return mono_negz(b, a);
  }

  if (kind_ == Kind::Sigma3) {
    auto gridlike = [&](const PointGen& g) {
      return g.fam == PointGen::kZGrid || g.fam == PointGen::kT1 || g.fam == PointGen::kT2;
    };
    if (gridlike(a) && gridlike(b)) {
      bool la = a.fam == PointGen::kT1 || b.fam == PointGen::kT1;
      bool sa = a.fam == PointGen::kT2 || b.fam == PointGen::kT2;
      if (la && sa) return {0, std::nullopt};  // a_lambda a_sigma = 0
      int64_t i = a.p[0] + b.p[0], j = a.p[1] + b.p[1];
      int64_t texp = (a.fam != PointGen::kZGrid ? a.p[2] : 0) + (b.fam != PointGen::kZGrid ? b.p[2] : 0);
      Int coeff = Int(sigma3_grid_coeff(a.p[0], a.p[1])) * sigma3_grid_coeff(b.p[0], b.p[1]) /
                  sigma3_grid_coeff(i, j);
      if (!la && !sa) return {coeff, PointGen{PointGen::kZGrid, {i, j, 0, 0}}};
      if (la) {
        if (j < 0) return {0, std::nullopt};
        coeff = mod_pos(coeff, 3);
        if (coeff == 0) return {0, std::nullopt};
        return {coeff, PointGen{PointGen::kT1, {i, j, texp, 0}}};
      }
      if (i < 0) return {0, std::nullopt};
      coeff = mod_pos(coeff, 2);
      if (coeff == 0) return {0, std::nullopt};
      return {coeff, PointGen{PointGen::kT2, {i, j, texp, 0}}};
    }
  }

  if ((kind_ == Kind::C4 || kind_ == Kind::Cp2) && a.fam == PointGen::kMono &&
      b.fam == PointGen::kMono) {
    std::array<int64_t, 4> e{a.p[0] + b.p[0], a.p[1] + b.p[1], a.p[2] + b.p[2], a.p[3] + b.p[3]};
    Int coeff = 1;
    if (kind_ == Kind::C4) {
      while (e[2] >= 2 && e[1] >= 1) {  // a_sigma^2 u_lambda = 2 u_{2sigma} a_lambda
        e[2] -= 2;
        e[1] -= 1;
        e[0] += 1;
        e[3] += 1;
        coeff *= 2;
      }
    } else {
      while (e[3] >= 1 && e[0] >= 1) {  // a_1 u_0 = p a_0 u_1
        e[3] -= 1;
        e[0] -= 1;
        e[1] += 1;
        e[2] += 1;
        coeff *= p_;
      }
    }
    PointGen out{PointGen::kMono, e};
    Int ord = gen_order(out);
    if (ord != 0) {
      coeff = mod_pos(coeff, ord);
      if (coeff == 0) return {0, std::nullopt};
    }
    return {coeff, out};
  }

  throw ChartError("class product not supported: " + gen_label(a) + " * " + gen_label(b));
}

}  // namespace ocb
