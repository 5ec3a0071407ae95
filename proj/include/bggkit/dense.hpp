#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "bggkit/rational.hpp"

namespace bggkit {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatrixQ = DenseMatrix<Rational>;
using VectorQ = DenseVector<Rational>;
using MatrixZ = DenseMatrix<Integer>;

// Pivot preference for fraction-free elimination: smaller is better.
inline std::size_t pivot_cost(const Integer& x) {
  return x == 0 ? 0 : boost::multiprecision::msb(boost::multiprecision::abs(x));
}
inline std::size_t pivot_cost(const Rational& x) {
  return pivot_cost(boost::multiprecision::numerator(x)) +
         pivot_cost(boost::multiprecision::denominator(x));
}

template <typename Scalar>
struct EliminationResult {
  Eigen::Index rank = 0;
  Scalar last_pivot = Scalar(1);
  int row_swap_sign = 1;
};

/// Fraction-free (Bareiss) row echelon reduction in place over an integral
/// domain. `Scalar` must provide exact `/` whenever the quotient lies in the
/// domain. Columns without a pivot are skipped, so the routine also serves for
/// rank. After return, every entry below a pivot is zero and the k-th pivot is
/// the leading k x k minor of the permuted pivot rows/columns.
template <typename Scalar>
EliminationResult<Scalar> bareiss_eliminate(DenseMatrix<Scalar>& m) {
  EliminationResult<Scalar> out;
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  const Scalar zero(0);
  Scalar previous(1);
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index best = -1;
    std::size_t best_cost = 0;
    for (Eigen::Index i = r; i < rows; ++i) {
      if (m(i, c) == zero) continue;
      std::size_t cost = pivot_cost(m(i, c));
      if (best < 0 || cost < best_cost) {
        best = i;
        best_cost = cost;
      }
    }
    if (best < 0) continue;
    if (best != r) {
      m.row(best).swap(m.row(r));
      out.row_swap_sign = -out.row_swap_sign;
    }
    const Scalar pivot = m(r, c);
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      const Scalar factor = m(i, c);
      for (Eigen::Index j = c + 1; j < cols; ++j) {
        m(i, j) = (pivot * m(i, j) - factor * m(r, j)) / previous;
      }
      m(i, c) = zero;
    }
    previous = pivot;
    ++r;
  }
  out.rank = r;
  out.last_pivot = previous;
  return out;
}

/// Rank over the fraction field of Scalar.
template <typename Scalar>
Eigen::Index domain_rank(DenseMatrix<Scalar> m) {
  return bareiss_eliminate(m).rank;
}

/// Determinant of a square matrix over an integral domain.
template <typename Scalar>
Scalar determinant(DenseMatrix<Scalar> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (m.rows() == 0) return Scalar(1);
  auto result = bareiss_eliminate(m);
  if (result.rank < m.rows()) return Scalar(0);
  return result.row_swap_sign > 0 ? result.last_pivot : Scalar(-result.last_pivot);
}

/// Scales every row by the lcm of its denominators.
MatrixZ clear_denominators(const MatrixQ& m);

/// Exact rank over Q (fraction-free elimination on the denominator-cleared matrix).
Eigen::Index rank(const MatrixQ& m);

struct Entry {
  std::int64_t row;
  std::int64_t col;
  Rational value;
};

/// Rank of a sparse rows x cols matrix given by coordinate entries (duplicates
/// are summed). The matrix is split into the connected components of its
/// row/column incidence graph and each block is eliminated densely.
std::int64_t block_rank(std::int64_t rows, std::int64_t cols, std::span<const Entry> entries);

/// Dense materialization of a coordinate list.
MatrixQ to_dense(std::int64_t rows, std::int64_t cols, std::span<const Entry> entries);

}  // namespace bggkit
