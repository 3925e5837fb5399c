#include "stf/synthesis.hpp"

#include <stdexcept>

namespace stf {

SynthesisMatrix::SynthesisMatrix(int rows, int cols, std::string basis_label, bool exact)
    : rows_(rows), cols_(cols), exact_(exact), basis_label_(std::move(basis_label)) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("matrix dimensions must be positive");
}

SignedRoot SynthesisMatrix::entry(int row, int col) const {
  auto it = entries_.find({row, col});
  return it == entries_.end() ? SignedRoot() : it->second;
}

void SynthesisMatrix::set(int row, int col, const SignedRoot& value) {
  if (row < 0 || row >= rows_ || col < 0 || col >= cols_)
    throw std::out_of_range("matrix index out of range");
  if (value.is_zero())
    entries_.erase({row, col});
  else
    entries_[{row, col}] = value;
}

Eigen::MatrixXd to_dense(const SynthesisMatrix& m) {
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(m.rows(), m.cols());
  for (const auto& [pos, value] : m.entries())
    out(pos.first, pos.second) = value.to_double();
  return out;
}

}  // namespace stf
