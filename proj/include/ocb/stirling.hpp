#pragma once

#include <vector>

#include "ocb/int.hpp"

namespace ocb {

// Unsigned Stirling numbers of the first kind, memoized triangle.
// c(a,b) counts permutations of a letters with b cycles.
class StirlingTable {
 public:
  const Int& c(int64_t a, int64_t b);
  static StirlingTable& instance();

 private:
  void grow(int64_t a);
  std::vector<std::vector<Int>> rows_;  // rows_[a][b], 0 <= b <= a
  Int zero_ = 0;
};

Int stirling_c(int64_t a, int64_t b);

// a(k,j) = sum_{i=0..j} (-1)^i c(k, k-(j-i)); defined for 0 <= j <= k-1.
Int a_multiplicity(int64_t k, int64_t j);

// Independent oracle: counts sets of a-b strictly-upper-triangular positions
// of an a x a matrix with pairwise distinct columns, by direct enumeration.
// Capped at a <= 9.
Int stirling_oracle(int64_t a, int64_t b);

// |coefficient of x^b| in x(x-1)(x-2)...(x-a+1).
Int falling_factorial_coeff(int64_t a, int64_t b);

}  // namespace ocb
