#include "ocb/groups.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ocb {

namespace {

std::vector<int64_t> divisors(int64_t n) {
  std::vector<int64_t> d;
  for (int64_t m = 1; m <= n; ++m)
    if (n % m == 0) d.push_back(m);
  return d;
}

GroupSpec make_cyclic(int64_t n) {
  if (n < 2) throw std::invalid_argument("cyclic_group: n must be >= 2");
  GroupSpec g;
  g.kind = GroupSpec::Kind::Cyclic;
  g.n = n;
  g.name = "C" + std::to_string(n);
  for (int64_t m : divisors(n)) g.subgroups.push_back({"C" + std::to_string(m), m, n / m});

  // trivial rep
  IrrepRec triv{"1", 1, {}, {1}};
  triv.fixed_dim.assign(g.subgroups.size(), 1);
  g.irreps.push_back(triv);

  // lambda(k): R^2 rotated by 2*pi*k/n; fixed at C_m iff m | k
  for (int64_t k = 1; k <= (n - 1) / 2; ++k) {
    IrrepRec lam{"lambda(" + std::to_string(k) + ")", 2, {}, {1}};
    for (const auto& sub : g.subgroups) lam.fixed_dim.push_back(k % sub.order == 0 ? 2 : 0);
    g.irreps.push_back(lam);
  }

  // sigma for even n: generator acts by -1; fixed at C_m iff n/m is even
  if (n % 2 == 0) {
    IrrepRec sig{"sigma", 1, {}, {-1}};
    for (const auto& sub : g.subgroups) sig.fixed_dim.push_back((n / sub.order) % 2 == 0 ? 1 : 0);
    g.irreps.push_back(sig);
  }

  // sanity on the stated invariants
  for (const auto& sub : g.subgroups)
    if (sub.order * sub.index != n) throw std::logic_error("bad subgroup record");
  return g;
}

GroupSpec make_sigma3() {
  GroupSpec g;
  g.kind = GroupSpec::Kind::Sigma3;
  g.name = "Sigma3";
  g.subgroups = {{"e", 1, 6}, {"C2", 2, 3}, {"C3", 3, 2}, {"Sigma3", 6, 1}};
  // generators: r (3-cycle), s (transposition)
  g.irreps = {
      {"1", 1, {1, 1, 1, 1}, {1, 1}},
      {"sigma", 1, {1, 0, 1, 0}, {1, -1}},
      {"lambda", 2, {2, 1, 0, 0}, {1, -1}},
  };
  return g;
}

}  // namespace

int GroupSpec::subgroup_index_of(const std::string& label) const {
  for (size_t i = 0; i < subgroups.size(); ++i)
    if (subgroups[i].label == label) return static_cast<int>(i);
  throw std::invalid_argument("no such subgroup: " + label + " in " + name);
}

int GroupSpec::irrep_pos(const std::string& label) const {
  for (size_t i = 0; i < irreps.size(); ++i)
    if (irreps[i].label == label) return static_cast<int>(i);
  throw std::invalid_argument("no such irreducible: " + label + " in " + name);
}

bool GroupSpec::has_sigma() const {
  return (kind == Kind::Sigma3) || (kind == Kind::Cyclic && n % 2 == 0);
}

int GroupSpec::lambda_pos(int64_t k) const {
  if (kind != Kind::Cyclic) throw std::invalid_argument("lambda(k) labels are cyclic-only");
  if (k < 1 || k > (n - 1) / 2) throw std::invalid_argument("lambda index out of basis range");
  return static_cast<int>(k);  // irreps: [1, lambda(1), ..., lambda(floor((n-1)/2)), sigma?]
}

const GroupSpec& cyclic_group(int64_t n) {
  static std::mutex mu;
  static std::map<int64_t, std::unique_ptr<GroupSpec>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end())
    it = cache.emplace(n, std::make_unique<GroupSpec>(make_cyclic(n))).first;
  return *it->second;
}

const GroupSpec& sigma3_group() {
  static GroupSpec g = make_sigma3();
  return g;
}

const GroupSpec& group_by_name(const std::string& name) {
  if (name == "Sigma3" || name == "S3" || name == "sigma3") return sigma3_group();
  if (name.size() >= 2 && (name[0] == 'C' || name[0] == 'c')) {
    int64_t n = std::stoll(name.substr(1));
    return cyclic_group(n);
  }
  throw std::invalid_argument("unknown group (catalog is closed): " + name);
}

int64_t Representation::dim() const {
  int64_t d = 0;
  for (size_t i = 0; i < mult.size(); ++i) d += mult[i] * group->irreps[i].dim;
  return d;
}

Representation& Representation::add(const std::string& label, int64_t count) {
  mult[group->irrep_pos(label)] += count;
  return *this;
}

Representation Representation::operator+(const Representation& other) const {
  if (group != other.group) throw std::invalid_argument("representation sum: group mismatch");
  Representation r = *this;
  for (size_t i = 0; i < mult.size(); ++i) r.mult[i] += other.mult[i];
  return r;
}

std::string Representation::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < mult.size(); ++i) {
    if (mult[i] == 0) continue;
    if (!first) os << "+";
    if (mult[i] != 1) os << mult[i] << "*";
    os << group->irreps[i].label;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

int64_t fixed_subrep_dim(const Representation& v, const std::string& subgroup_label) {
  const GroupSpec& g = *v.group;
  int h = g.subgroup_index_of(subgroup_label);
  int64_t d = 0;
  for (size_t i = 0; i < v.mult.size(); ++i) d += v.mult[i] * g.irreps[i].fixed_dim[h];
  return d;
}

DInvariant d_invariant(const Representation& v) {
  if (v.is_zero()) throw std::invalid_argument("d undefined for V = 0");
  const GroupSpec& g = *v.group;
  DInvariant out;
  for (const auto& sub : g.subgroups)
    if (fixed_subrep_dim(v, sub.label) > 0) out.D.insert(sub.index);
  int64_t d = 0;
  for (int64_t idx : out.D) d = std::gcd(d, idx);
  out.d = d;
  return out;
}

int64_t e_invariant(const Representation& v) {
  const GroupSpec& g = *v.group;
  int64_t dim = v.dim();
  int64_t best_order = 0;
  for (const auto& sub : g.subgroups)
    if (fixed_subrep_dim(v, sub.label) == dim) best_order = std::max(best_order, sub.order);
  return g.order() / best_order;
}

bool is_orientable(const Representation& v) {
  const GroupSpec& g = *v.group;
  for (int gen = 0; gen < g.num_generators(); ++gen) {
    int det = 1;
    for (size_t i = 0; i < v.mult.size(); ++i)
      if (v.mult[i] % 2 != 0 && g.irreps[i].gen_det[gen] < 0) det = -det;
    if (det < 0) return false;
  }
  return true;
}

namespace {

struct RepParser {
  const GroupSpec& g;
  std::string s;
  size_t pos = 0;

  explicit RepParser(const GroupSpec& gg, const std::string& text) : g(gg) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("cannot parse representation '" + s + "': " + why);
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
    if (pos == start) fail("expected a number");
    return std::stoll(s.substr(start, pos - start));
  }

  void add_lambda(Representation& r, int64_t k, int64_t count) {
    if (g.kind != GroupSpec::Kind::Cyclic) {
      r.mult[g.irrep_pos("lambda")] += count;
      return;
    }
    int64_t n = g.n;
    k = ((k % n) + n) % n;
    if (k == 0) {
      r.mult[0] += 2 * count;  // lambda(0) = 2 copies of the trivial line
    } else if (n % 2 == 0 && k == n / 2) {
      r.mult[g.irrep_pos("sigma")] += 2 * count;  // rotation by pi = sigma + sigma
    } else {
      r.mult[g.lambda_pos(std::min(k, n - k))] += count;
    }
  }

  Representation parse() {
    Representation r(g);
    if (s == "0" || s.empty()) return r;
    bool more = true;
    while (more) {
      int64_t count = 1;
      if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        size_t save = pos;
        int64_t num = number();
        if (eat('*')) {
          count = num;
        } else {
          // a bare "1" term means the trivial representation
          if (num == 1 && (pos >= s.size() || s[pos] == '+')) {
            r.mult[0] += 1;
            more = eat('+');
            continue;
          }
          pos = save;
          fail("number must be followed by '*'");
        }
      }
      if (pos >= s.size()) fail("dangling term");
      char c = s[pos];
      if (c == '1') {
        ++pos;
        r.mult[0] += count;
      } else if (c == 's' || c == 'S') {
        if (s.compare(pos, 5, "sigma") == 0)
          pos += 5;
        else
          ++pos;
        if (!g.has_sigma()) fail("this group has no sign representation");
        r.mult[g.irrep_pos("sigma")] += count;
      } else if (c == 'l' || c == 'L') {
        if (s.compare(pos, 6, "lambda") == 0)
          pos += 6;
        else
          ++pos;
        int64_t k = 1;
        if (eat('(')) {
          k = number();
          if (!eat(')')) fail("expected ')'");
        }
        add_lambda(r, k, count);
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      more = eat('+');
    }
    if (pos != s.size()) fail("trailing input");
    return r;
  }
};

}  // namespace

Representation parse_representation(const GroupSpec& g, const std::string& text) {
  return RepParser(g, text).parse();
}

}  // namespace ocb
