#include "ocb/stirling.hpp"

#include <mutex>
#include <stdexcept>

namespace ocb {

namespace {
std::mutex table_mutex;
}

StirlingTable& StirlingTable::instance() {
  static StirlingTable t;
  return t;
}

void StirlingTable::grow(int64_t a) {
  while (static_cast<int64_t>(rows_.size()) <= a) {
    int64_t r = static_cast<int64_t>(rows_.size());
    std::vector<Int> row(r + 1, Int(0));
    if (r == 0) {
      row[0] = 1;
    } else {
      const auto& prev = rows_[r - 1];
      for (int64_t b = 0; b <= r; ++b) {
        // c(a+1,b) = a*c(a,b) + c(a,b-1)
        Int val = 0;
        if (b <= r - 1) val += Int(r - 1) * prev[b];
        if (b >= 1 && b - 1 <= r - 1) val += prev[b - 1];
        row[b] = val;
      }
    }
    rows_.push_back(std::move(row));
  }
}

const Int& StirlingTable::c(int64_t a, int64_t b) {
  if (a < 0 || b < 0 || b > a) return zero_;
  if (static_cast<int64_t>(rows_.size()) <= a) grow(a);
  return rows_[a][b];
}

Int stirling_c(int64_t a, int64_t b) {
  std::lock_guard<std::mutex> lock(table_mutex);
  return StirlingTable::instance().c(a, b);
}

Int a_multiplicity(int64_t k, int64_t j) {
  if (k < 1 || j < 0 || j > k - 1)
    throw std::invalid_argument("a_multiplicity: need 0 <= j <= k-1");
  Int sum = 0;
  int sign = 1;
  for (int64_t i = 0; i <= j; ++i) {
    sum += sign * stirling_c(k, k - (j - i));
    sign = -sign;
  }
  return sum;
}

namespace {
// Choose positions column by column: in column c (1-based, c >= 2) either skip
// or pick one of the c-1 rows above the diagonal.
Int count_selections(int64_t a, int64_t remaining, int64_t col) {
  if (remaining == 0) return 1;
  if (col > a) return 0;
  Int total = count_selections(a, remaining, col + 1);
  for (int64_t row = 1; row < col; ++row)
    total += count_selections(a, remaining - 1, col + 1);
  return total;
}
}  // namespace

Int stirling_oracle(int64_t a, int64_t b) {
  if (a > 9) throw std::invalid_argument("oracle cap exceeded (a <= 9)");
  if (a < 0 || b < 0 || b > a) return 0;
  return count_selections(a, a - b, 2);
}

Int falling_factorial_coeff(int64_t a, int64_t b) {
  // x(x-1)...(x-a+1) as coefficient vector
  std::vector<Int> poly{Int(1)};
  for (int64_t i = 0; i < a; ++i) {
    std::vector<Int> next(poly.size() + 1, Int(0));
    for (size_t j = 0; j < poly.size(); ++j) {
      next[j + 1] += poly[j];
      next[j] -= Int(i) * poly[j];
    }
    poly = std::move(next);
  }
  // the product above is (x)(x-1)...(x-a+1) with an extra leading x for a=0
  // handled implicitly; for a = 0 the polynomial is 1
  if (b < 0 || b >= static_cast<int64_t>(poly.size())) return 0;
  return abs_int(poly[b]);
}

}  // namespace ocb
