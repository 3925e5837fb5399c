// Sparse synthesis matrices with exact signed-radical entries.
#pragma once

#include <Eigen/Core>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "stf/radical.hpp"

namespace stf {

// n x N synthesis matrix [phi_1 | ... | phi_N] with the frame vectors as
// columns, stored sparsely as (row, col) -> SignedRoot with only nonzero
// entries present. Indices are 0-based.
//
// Matrices restored from float formats carry exact binary rationals of the
// stored doubles and are flagged inexact; exact verification refuses them.
class SynthesisMatrix {
 public:
  SynthesisMatrix(int rows, int cols, std::string basis_label = "standard", bool exact = true);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_exact() const { return exact_; }
  const std::string& basis_label() const { return basis_label_; }

  // Zero when the position holds no entry.
  SignedRoot entry(int row, int col) const;
  // Setting an exact zero erases the entry.
  void set(int row, int col, const SignedRoot& value);

  std::size_t nonzero_count() const { return entries_.size(); }
  const std::map<std::pair<int, int>, SignedRoot>& entries() const { return entries_; }

  friend bool operator==(const SynthesisMatrix& a, const SynthesisMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.exact_ == b.exact_ &&
           a.basis_label_ == b.basis_label_ && a.entries_ == b.entries_;
  }

 private:
  int rows_;
  int cols_;
  bool exact_;
  std::string basis_label_;
  std::map<std::pair<int, int>, SignedRoot> entries_;  // (row, col), row-major
};

// Nearest-double rendering of every entry; for export and floating-point
// verification only, never for exact decisions.
Eigen::MatrixXd to_dense(const SynthesisMatrix& m);

// Step log of the cursor-driven construction.
enum class StepKind {
  kOne,       // entry 1 placed, row budget stays positive
  kBlock,     // 2x2 block over rows (row, row+1) and columns (col, col+1)
  kFinalOne,  // entry 1 placed and the row budget hits zero
};

struct CursorStep {
  int row = 0;  // 0-based
  int col = 0;  // 0-based
  StepKind kind = StepKind::kOne;
  Rational lambda_before;  // working eigenvalue of the row before the step
};

using CursorTrace = std::vector<CursorStep>;

}  // namespace stf
