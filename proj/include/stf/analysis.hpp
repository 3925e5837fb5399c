// Frame-theoretic verification and operators.
//
// Structural claims about constructed frames (unit norms, row orthogonality,
// spectrum, sparsity versus the attainable bound) are certified with exact
// arithmetic and no tolerance. Spectral quantities of arbitrary real frames
// (frame bounds, reconstruction) are computed in floating point to 1e-10.
#pragma once

#include <Eigen/Core>

#include <vector>

#include "stf/blocks.hpp"
#include "stf/synthesis.hpp"

namespace stf {

// Outcome of the exact checks on one matrix against one spectrum. Failures
// are report fields, never exceptions.
struct VerificationReport {
  bool unit_norm_ok = false;        // every column square-sums to exactly 1
  bool rows_orthogonal_ok = false;  // all row pairs have exact inner product 0
  std::vector<Rational> row_sums;   // exact squared row sums, in row order
  bool spectrum_matches = false;    // row_sums equals the spectrum as a multiset
  std::size_t sparsity = 0;         // stored nonzero entries
  std::size_t sparsity_bound = 0;   // N + 2(n - mu)
  bool optimal = false;             // sparsity == sparsity_bound
  int block_order = 0;              // support block decomposition order (0 if undefined)
  int mu = 0;                       // maximal block number of the spectrum

  bool all_passed() const {
    return unit_norm_ok && rows_orthogonal_ok && spectrum_matches && optimal;
  }
};

// Optimal constants 0 < A <= B with A|x|^2 <= sum |<x, phi_i>|^2 <= B|x|^2.
struct FrameBounds {
  double lower = 0.0;
  double upper = 0.0;
};

// Total number of nonzero entries; the sparsity of the frame with respect to
// the basis the matrix is written in.
std::size_t sparsity(const SynthesisMatrix& m);

// Minimum sparsity attainable by any unit-norm frame with this spectrum:
// N + 2(n - mu). Propagates LimitError from the mu computation.
std::size_t sparsity_bound(const EigenvalueSpec& spec, int limit = 16);

// Maximal partition of the columns into groups with pairwise disjoint
// supports: connected components of the graph joining columns that share a
// support row. Partition sets are sorted ascending and listed by smallest
// member. Throws std::invalid_argument if a zero column is present.
struct BlockDecomposition {
  int order = 0;
  std::vector<std::vector<int>> column_partition;
};
BlockDecomposition block_decomposition(const SynthesisMatrix& m);

// Exact frame operator S = T*T: S[a][b] is the exact inner product of rows a
// and b of the synthesis matrix. Diagonal holds the squared row sums.
struct ExactOperator {
  int dim = 0;
  std::vector<RadicalSum> data;  // row-major dim x dim

  const RadicalSum& at(int r, int c) const { return data[static_cast<std::size_t>(r) * dim + c]; }
  RadicalSum& at(int r, int c) { return data[static_cast<std::size_t>(r) * dim + c]; }
};
ExactOperator frame_operator_exact(const SynthesisMatrix& m);

// Extreme eigenvalues of T*T via a symmetric eigensolve. Throws
// NotAFrameError when the matrix is rank-deficient (lower bound 0).
FrameBounds frame_bounds_float(const Eigen::MatrixXd& m);

// Frame coefficients (<x, phi_i>)_i.
Eigen::VectorXd analyze_signal(const Eigen::MatrixXd& m, const Eigen::VectorXd& x);

// Canonical dual reconstruction: solves S y = x and returns sum <y, phi_i> phi_i,
// which equals x up to numerical error for any frame.
Eigen::VectorXd reconstruct(const Eigen::MatrixXd& m, const Eigen::VectorXd& x);

// All exact checks in one pass. Requires an exact matrix (InexactMatrixError
// otherwise) with dimensions matching the spectrum.
VerificationReport verify(const SynthesisMatrix& m, const EigenvalueSpec& spec, int limit = 16);

// Toleranced counterpart for matrices restored from float formats. Supports
// and the sparsity count still come from the stored nonzero pattern.
struct FloatVerificationReport {
  bool unit_norm_ok = false;
  bool rows_orthogonal_ok = false;
  std::vector<double> row_sums;
  bool spectrum_matches = false;
  std::size_t sparsity = 0;
  std::size_t sparsity_bound = 0;
  bool optimal = false;
  int block_order = 0;
  int mu = 0;

  bool all_passed() const {
    return unit_norm_ok && rows_orthogonal_ok && spectrum_matches && optimal;
  }
};
FloatVerificationReport verify_float(const SynthesisMatrix& m, const EigenvalueSpec& spec,
                                     double tol = 1e-10, int limit = 16);

}  // namespace stf
