#include "stf/tetris.hpp"

#include <algorithm>
#include <stdexcept>

namespace stf {

namespace {

bool is_permutation_of(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.size() != b.size()) return false;
  std::vector<Rational> sa = a, sb = b;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  return sa == sb;
}

}  // namespace

TetrisResult spectral_tetris(const EigenvalueSpec& spec, const std::vector<Rational>& ordering) {
  if (!is_permutation_of(ordering, spec.lambdas))
    throw std::invalid_argument("ordering is not a permutation of the spectrum");

  const int n = spec.n;
  const Rational one(1);
  const Rational two(2);

  SynthesisMatrix matrix(n, static_cast<int>(spec.N));
  CursorTrace trace;
  std::vector<Rational> weight = ordering;  // remaining squared weight per row

  int col = 0;
  for (int row = 0; row < n; ++row) {
    do {
      if (weight[row] <= Rational(0))
        throw std::logic_error("row weight must be positive when the cursor enters a step");
      if (weight[row] < one) {
        // 2x2 block across this row and the next; finishes this row and
        // debits the next by 2 - weight.
        if (row + 1 >= n)
          throw std::logic_error("2x2 block would leave the matrix; spectrum is invalid");
        trace.push_back({row, col, StepKind::kBlock, weight[row]});
        Rational half = weight[row] / two;
        SignedRoot top = SignedRoot::sqrt_of(half);
        SignedRoot bottom = SignedRoot::sqrt_of(one - half);
        matrix.set(row, col, top);
        matrix.set(row, col + 1, top);
        matrix.set(row + 1, col, bottom);
        matrix.set(row + 1, col + 1, -bottom);
        weight[row + 1] -= two - weight[row];
        weight[row] = Rational(0);
        col += 2;
      } else {
        Rational before = weight[row];
        weight[row] -= one;
        trace.push_back({row, col,
                         weight[row].is_zero() ? StepKind::kFinalOne : StepKind::kOne, before});
        matrix.set(row, col, SignedRoot::one());
        col += 1;
      }
    } while (!weight[row].is_zero());
  }

  if (col != spec.N)
    throw std::logic_error("construction did not consume exactly N columns");
  return {std::move(matrix), std::move(trace)};
}

ConstructionResult construct_optimal(const EigenvalueSpec& spec, int limit) {
  BlockStructure blocks = maximal_block_number(spec, limit);
  TetrisResult r = spectral_tetris(spec, blocks.ordering);
  return {std::move(r.matrix), std::move(blocks), std::move(r.trace)};
}

DenseFrame apply_basis_change(const SynthesisMatrix& m, const Eigen::MatrixXd& basis,
                              const std::string& label) {
  if (basis.rows() != m.rows() || basis.cols() != m.rows())
    throw std::invalid_argument("basis must be an n x n matrix");
  Eigen::MatrixXd gram = basis.transpose() * basis;
  double defect = (gram - Eigen::MatrixXd::Identity(basis.rows(), basis.cols()))
                      .cwiseAbs()
                      .maxCoeff();
  if (defect > 1e-10)
    throw std::invalid_argument("basis is not orthonormal (defect " + std::to_string(defect) + ")");
  return {basis * to_dense(m), label};
}

}  // namespace stf
