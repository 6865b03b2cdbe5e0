#include "ocb/degree.hpp"

#include <cctype>
#include <stdexcept>

namespace ocb {

namespace {

struct DegreeParser {
  const GroupSpec& g;
  std::string s;
  size_t pos = 0;

  DegreeParser(const GroupSpec& gg, const std::string& text) : g(gg) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("cannot parse degree '" + s + "': " + why);
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

  Degree parse() {
    Degree d(g);
    bool negative = eat('-');
    if (s.empty() || s == "0") return d;
    for (;;) {
      int64_t count = 1;
      bool saw_number = false;
      if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        count = number();
        saw_number = true;
        if (!eat('*')) {
          // a bare integer is a multiple of the trivial line
          d.c[0] += negative ? -count : count;
          if (eat('+')) {
            negative = false;
            continue;
          }
          if (eat('-')) {
            negative = true;
            continue;
          }
          break;
        }
      }
      if (pos >= s.size()) fail("dangling term");
      (void)saw_number;
      int64_t signed_count = negative ? -count : count;
      char c = s[pos];
      if (c == '1') {
        ++pos;
        d.c[0] += signed_count;
      } else if (c == 's' || c == 'S') {
        pos += (s.compare(pos, 5, "sigma") == 0) ? 5 : 1;
        d.c[g.irrep_pos("sigma")] += signed_count;
      } else if (c == 'l' || c == 'L') {
        pos += (s.compare(pos, 6, "lambda") == 0) ? 6 : 1;
        int64_t k = 1;
        if (eat('(')) {
          k = number();
          if (!eat(')')) fail("expected ')'");
        }
        if (g.kind == GroupSpec::Kind::Sigma3) {
          d.c[g.irrep_pos("lambda")] += signed_count;
        } else {
          int64_t n = g.n;
          k = ((k % n) + n) % n;
          if (k == 0)
            d.c[0] += 2 * signed_count;
          else if (n % 2 == 0 && k == n / 2)
            d.c[g.irrep_pos("sigma")] += 2 * signed_count;
          else
            d.c[g.lambda_pos(std::min(k, n - k))] += signed_count;
        }
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      if (eat('+'))
        negative = false;
      else if (eat('-'))
        negative = true;
      else
        break;
    }
    if (pos != s.size()) fail("trailing input");
    return d;
  }
};

}  // namespace

Degree parse_degree(const GroupSpec& g, const std::string& text) {
  return DegreeParser(g, text).parse();
}

}  // namespace ocb
