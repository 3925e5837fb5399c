// Spectral Tetris construction of unit-norm frames with a prescribed
// frame-operator spectrum.
//
// A cursor walks the matrix row by row, keeping for the current row the exact
// amount of squared weight the row still needs. While the remaining weight is
// at least 1 it drops single unit entries, one column each; when it falls
// strictly below 1 it drops one 2x2 block
//
//     [  sqrt(l/2)    sqrt(l/2)  ]
//     [  sqrt(1-l/2) -sqrt(1-l/2)]
//
// across the current and next row, which finishes this row exactly and debits
// the next one by 2 - l. Rows with integer remaining weight terminate on a
// plain unit entry instead. All comparisons are exact rational comparisons.
#pragma once

#include <Eigen/Core>

#include <string>

#include "stf/blocks.hpp"
#include "stf/synthesis.hpp"

namespace stf {

struct TetrisResult {
  SynthesisMatrix matrix;
  CursorTrace trace;
};

// Runs the construction with the eigenvalues in exactly the given order.
// `ordering` must be a permutation of spec.lambdas; the choice of order
// decides how sparse the result is (blockwise orderings attain the optimum,
// others may not). Throws std::invalid_argument on a bad ordering.
TetrisResult spectral_tetris(const EigenvalueSpec& spec, const std::vector<Rational>& ordering);

struct ConstructionResult {
  SynthesisMatrix matrix;
  BlockStructure blocks;
  CursorTrace trace;
};

// Blockwise ordering via maximal_block_number, then spectral_tetris on it.
// The result has exactly N + 2(n - mu) nonzero entries, which is the minimum
// over all unit-norm frames with this spectrum.
ConstructionResult construct_optimal(const EigenvalueSpec& spec, int limit = 16);

// A frame together with the orthonormal basis its sparsity refers to.
struct DenseFrame {
  Eigen::MatrixXd matrix;
  std::string basis_label;
};

// Rewrites the frame over another orthonormal basis: column j of the result
// is basis * phi_j. The basis must be orthonormal within 1e-10 (checked);
// the output frame is sparse with respect to it by construction.
DenseFrame apply_basis_change(const SynthesisMatrix& m, const Eigen::MatrixXd& basis,
                              const std::string& label);

}  // namespace stf
