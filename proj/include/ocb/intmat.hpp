#pragma once

#include <Eigen/Dense>

#include <optional>
#include <vector>

#include "ocb/int.hpp"

namespace ocb {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMat = DenseMatrix<Int>;
using IntVec = DenseVector<Int>;
using Index = Eigen::Index;

// Plain matrix product. Eigen's operator* is not usable with cpp_int because
// overload resolution instantiates boost's byte-container trait, which is not
// SFINAE-friendly on this toolchain.
template <typename Scalar>
DenseMatrix<Scalar> mul(const DenseMatrix<Scalar>& a, const DenseMatrix<Scalar>& b) {
  DenseMatrix<Scalar> c = DenseMatrix<Scalar>::Zero(a.rows(), b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (Index j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

template <typename Scalar>
DenseVector<Scalar> mul(const DenseMatrix<Scalar>& a, const DenseVector<Scalar>& v) {
  DenseVector<Scalar> r = DenseVector<Scalar>::Zero(a.rows());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0) r(i) += a(i, j) * v(j);
  return r;
}

template <typename Scalar>
bool mat_equal(const DenseMatrix<Scalar>& a, const DenseMatrix<Scalar>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

template <typename Scalar>
DenseMatrix<Scalar> identity(Index n) {
  DenseMatrix<Scalar> m = DenseMatrix<Scalar>::Zero(n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

// Column echelon form by unimodular column operations: A_in * V = H.
// Pivots walk down the rows; columns right of a pivot are cleared in its row.
template <typename Scalar>
struct ColEchelon {
  DenseMatrix<Scalar> h;                    // echelon form
  DenseMatrix<Scalar> v;                    // unimodular transform
  std::vector<std::pair<Index, Index>> pivots;  // (row, col) of each pivot
};

template <typename Scalar>
ColEchelon<Scalar> col_echelon(DenseMatrix<Scalar> a) {
  const Index rows = a.rows(), cols = a.cols();
  DenseMatrix<Scalar> v = identity<Scalar>(cols);
  std::vector<std::pair<Index, Index>> pivots;
  Index pc = 0;
  for (Index r = 0; r < rows && pc < cols; ++r) {
    // Euclid across columns >= pc until row r has a single nonzero entry at pc.
    for (;;) {
      Index best = -1;
      for (Index c = pc; c < cols; ++c)
        if (a(r, c) != 0 && (best < 0 || abs_int(a(r, c)) < abs_int(a(r, best)))) best = c;
      if (best < 0) break;
      if (best != pc) {
        a.col(best).swap(a.col(pc));
        v.col(best).swap(v.col(pc));
      }
      bool clean = true;
      for (Index c = pc + 1; c < cols; ++c) {
        if (a(r, c) == 0) continue;
        Scalar q = a(r, c) / a(r, pc);
        if (q != 0) {
          a.col(c) -= a.col(pc) * q;
          v.col(c) -= v.col(pc) * q;
        }
        if (a(r, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (a(r, pc) != 0) {
      if (a(r, pc) < 0) {
        a.col(pc) = -a.col(pc);
        v.col(pc) = -v.col(pc);
      }
      pivots.emplace_back(r, pc);
      ++pc;
    }
  }
  return {std::move(a), std::move(v), std::move(pivots)};
}

// Basis of the integer kernel of A, returned as matrix columns.
template <typename Scalar>
DenseMatrix<Scalar> kernel_basis(const DenseMatrix<Scalar>& a) {
  auto ech = col_echelon(a);
  Index rank = static_cast<Index>(ech.pivots.size());
  DenseMatrix<Scalar> k(a.cols(), a.cols() - rank);
  for (Index c = rank; c < a.cols(); ++c) k.col(c - rank) = ech.v.col(c);
  return k;
}

// Solve A x = b over the integers; nullopt if no integral solution.
template <typename Scalar>
std::optional<DenseVector<Scalar>> solve_integer(const DenseMatrix<Scalar>& a,
                                                 const DenseVector<Scalar>& b) {
  auto ech = col_echelon(a);
  DenseVector<Scalar> residual = b;
  DenseVector<Scalar> y = DenseVector<Scalar>::Zero(a.cols());
  for (auto [r, c] : ech.pivots) {
    if (residual(r) % ech.h(r, c) != 0) return std::nullopt;
    Scalar q = residual(r) / ech.h(r, c);
    y(c) = q;
    if (q != 0) residual -= ech.h.col(c) * q;
  }
  for (Index i = 0; i < residual.size(); ++i)
    if (residual(i) != 0) return std::nullopt;
  return mul(ech.v, y);
}

// Invariant factors d_1 | d_2 | ... of A viewed as a map of free modules,
// i.e. the diagonal of the Smith normal form (positive entries only).
template <typename Scalar>
std::vector<Scalar> smith_invariants(DenseMatrix<Scalar> a) {
  std::vector<Scalar> inv;
  Index top = 0;
  const Index rows = a.rows(), cols = a.cols();
  while (top < rows && top < cols) {
    // locate minimal nonzero entry in the trailing block
    Index pr = -1, pc = -1;
    for (Index i = top; i < rows; ++i)
      for (Index j = top; j < cols; ++j)
        if (a(i, j) != 0 &&
            (pr < 0 || abs_int(a(i, j)) < abs_int(a(pr, pc)))) {
          pr = i;
          pc = j;
        }
    if (pr < 0) break;
    a.row(pr).swap(a.row(top));
    a.col(pc).swap(a.col(top));
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (Index i = top + 1; i < rows; ++i) {
        if (a(i, top) == 0) continue;
        Scalar q = a(i, top) / a(top, top);
        if (q != 0) a.row(i) -= a.row(top) * q;
        if (a(i, top) != 0) {
          a.row(i).swap(a.row(top));
          dirty = true;
        }
      }
      for (Index j = top + 1; j < cols; ++j) {
        if (a(top, j) == 0) continue;
        Scalar q = a(top, j) / a(top, top);
        if (q != 0) a.col(j) -= a.col(top) * q;
        if (a(top, j) != 0) {
          a.col(j).swap(a.col(top));
          dirty = true;
        }
      }
      if (!dirty) {
        // enforce divisibility of the remaining block by the pivot
        bool fixed = false;
        for (Index i = top + 1; i < rows && !fixed; ++i)
          for (Index j = top + 1; j < cols && !fixed; ++j)
            if (a(i, j) % a(top, top) != 0) {
              a.row(top) += a.row(i);
              fixed = true;
              dirty = true;
            }
      }
    }
    inv.push_back(abs_int(a(top, top)));
    ++top;
  }
  return inv;
}

// Determinant by fraction-free Gaussian elimination (Bareiss).
template <typename Scalar>
Scalar determinant(DenseMatrix<Scalar> a) {
  const Index n = a.rows();
  if (n == 0) return Scalar(1);
  Scalar prev(1);
  int sign = 1;
  for (Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Index swap_row = -1;
      for (Index i = k + 1; i < n; ++i)
        if (a(i, k) != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return Scalar(0);
      a.row(k).swap(a.row(swap_row));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i)
      for (Index j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : Scalar(-a(n - 1, n - 1));
}

}  // namespace ocb
