#ifndef GBSP_LINEAR_HPP
#define GBSP_LINEAR_HPP

#include "gbsp/rational.hpp"

#include <stdexcept>
#include <vector>

namespace gbsp {

// In-place fraction-free-enough Gauss-Jordan on an augmented matrix; the
// first `cols` columns are the coefficient block, the rest carry along.
// Returns the rank of the coefficient block; afterwards each pivot column
// has a single 1 and pivot rows come first.
inline int row_reduce(RationalMatrix& aug, int cols) {
  int rows = static_cast<int>(aug.rows());
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (sgn(aug(r, col)) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank) aug.row(pivot).swap(aug.row(rank));
    Rational inv = 1 / aug(rank, col);
    for (int c = col; c < static_cast<int>(aug.cols()); ++c) aug(rank, c) *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || sgn(aug(r, col)) == 0) continue;
      Rational f = aug(r, col);
      for (int c = col; c < static_cast<int>(aug.cols()); ++c) aug(r, c) -= f * aug(rank, c);
    }
    ++rank;
  }
  return rank;
}

struct LinearSolution {
  RationalVector solution;  // a particular solution; free variables set to 0
  int rank;
  bool unique;
};

// Exact solve of a square rational system. Inconsistent systems throw;
// rank-deficient consistent ones return a particular solution with
// unique=false.
inline LinearSolution solve_linear_exact(const RationalMatrix& a, const RationalVector& b) {
  if (a.rows() != a.cols()) throw std::invalid_argument("coefficient matrix must be square");
  if (a.rows() != b.rows()) throw std::invalid_argument("right-hand side has wrong length");
  int n = static_cast<int>(a.rows());
  RationalMatrix aug(n, n + 1);
  aug.block(0, 0, n, n) = a;
  aug.col(n) = b;
  int rank = row_reduce(aug, n);
  for (int r = rank; r < n; ++r)
    if (sgn(aug(r, n)) != 0) throw std::invalid_argument("inconsistent linear system");
  LinearSolution out;
  out.solution = RationalVector::Zero(n);
  out.rank = rank;
  out.unique = (rank == n);
  // After Gauss-Jordan each of the first `rank` rows leads with a 1 in its
  // pivot column; assigning the row's right-hand side to that variable (and
  // 0 to free variables) is a particular solution.
  for (int row = 0; row < rank; ++row)
    for (int col = 0; col < n; ++col)
      if (sgn(aug(row, col)) != 0) {
        out.solution(col) = aug(row, n);
        break;
      }
  return out;
}

// First order+1 coefficients (in w) of prod_j (1 - c^2 lambda_j^2 w^2)^{-1/2}.
// Each factor contributes (2x choose x) (c lambda / 2)^{2x} at w^{2x}; odd
// coefficients vanish. Empty product -> [1, 0, 0, ...].
inline std::vector<double> truncated_inverse_sqrt_product(const std::vector<double>& lambdas,
                                                          double c, int order) {
  if (order < 0) throw std::invalid_argument("order must be nonnegative");
  std::vector<double> acc(order + 1, 0.0);
  acc[0] = 1.0;
  for (double lambda : lambdas) {
    double t = (c * lambda / 2.0) * (c * lambda / 2.0);
    std::vector<double> factor(order + 1, 0.0);
    double coeff = 1.0;  // (2x choose x) t^x at x = 0
    for (int x = 0; 2 * x <= order; ++x) {
      factor[2 * x] = coeff;
      coeff *= t * (2.0 * x + 1.0) * (2.0 * x + 2.0) / ((x + 1.0) * (x + 1.0));
    }
    std::vector<double> next(order + 1, 0.0);
    for (int i = 0; i <= order; ++i) {
      if (acc[i] == 0.0) continue;
      for (int j = 0; i + j <= order; j += 2) next[i + j] += acc[i] * factor[j];
    }
    acc.swap(next);
  }
  return acc;
}

}  // namespace gbsp

#endif  // GBSP_LINEAR_HPP
