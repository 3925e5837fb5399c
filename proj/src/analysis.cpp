#include "stf/analysis.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "stf/errors.hpp"

namespace stf {

namespace {

// Per-row views of the sparse entries, sorted by column.
std::vector<std::vector<std::pair<int, SignedRoot>>> rows_of(const SynthesisMatrix& m) {
  std::vector<std::vector<std::pair<int, SignedRoot>>> rows(static_cast<std::size_t>(m.rows()));
  for (const auto& [pos, value] : m.entries())
    rows[static_cast<std::size_t>(pos.first)].emplace_back(pos.second, value);
  return rows;
}

RadicalSum row_inner_product(const std::vector<std::pair<int, SignedRoot>>& a,
                             const std::vector<std::pair<int, SignedRoot>>& b) {
  RadicalSum acc;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      acc += ia->second * ib->second;
      ++ia;
      ++ib;
    }
  }
  return acc;
}

// Disjoint-set union over column indices.
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] =
          parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent_[static_cast<std::size_t>(find(a))] = find(b); }

 private:
  std::vector<int> parent_;
};

bool multiset_equal(std::vector<Rational> a, std::vector<Rational> b) {
  if (a.size() != b.size()) return false;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace

std::size_t sparsity(const SynthesisMatrix& m) {
  return m.nonzero_count();
}

std::size_t sparsity_bound(const EigenvalueSpec& spec, int limit) {
  BlockStructure blocks = maximal_block_number(spec, limit);
  return static_cast<std::size_t>(spec.N) +
         2 * static_cast<std::size_t>(spec.n - blocks.mu);
}

BlockDecomposition block_decomposition(const SynthesisMatrix& m) {
  std::vector<std::vector<int>> row_support(static_cast<std::size_t>(m.rows()));
  std::vector<char> column_used(static_cast<std::size_t>(m.cols()), 0);
  for (const auto& [pos, value] : m.entries()) {
    row_support[static_cast<std::size_t>(pos.first)].push_back(pos.second);
    column_used[static_cast<std::size_t>(pos.second)] = 1;
  }
  for (int c = 0; c < m.cols(); ++c)
    if (!column_used[static_cast<std::size_t>(c)])
      throw std::invalid_argument("zero column present: column " + std::to_string(c));

  // Columns sharing a support row belong to the same group.
  UnionFind uf(m.cols());
  for (const auto& support : row_support)
    for (std::size_t i = 1; i < support.size(); ++i) uf.unite(support[0], support[i]);

  std::vector<std::vector<int>> by_root(static_cast<std::size_t>(m.cols()));
  for (int c = 0; c < m.cols(); ++c) by_root[static_cast<std::size_t>(uf.find(c))].push_back(c);

  BlockDecomposition out;
  for (auto& group : by_root) {
    if (group.empty()) continue;
    out.column_partition.push_back(std::move(group));  // already ascending
  }
  // deterministic listing: groups ordered by their smallest column
  std::sort(out.column_partition.begin(), out.column_partition.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  out.order = static_cast<int>(out.column_partition.size());
  return out;
}

ExactOperator frame_operator_exact(const SynthesisMatrix& m) {
  auto rows = rows_of(m);
  ExactOperator op;
  op.dim = m.rows();
  op.data.assign(static_cast<std::size_t>(m.rows()) * m.rows(), RadicalSum());
  for (int a = 0; a < m.rows(); ++a) {
    for (int b = a; b < m.rows(); ++b) {
      RadicalSum ip = row_inner_product(rows[static_cast<std::size_t>(a)],
                                        rows[static_cast<std::size_t>(b)]);
      op.at(a, b) = ip;
      op.at(b, a) = ip;
    }
  }
  return op;
}

FrameBounds frame_bounds_float(const Eigen::MatrixXd& m) {
  Eigen::MatrixXd s = m * m.transpose();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(s);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("symmetric eigensolve failed");
  double lower = solver.eigenvalues().minCoeff();
  double upper = solver.eigenvalues().maxCoeff();
  if (!(upper > 0.0) || lower <= upper * 1e-12)
    throw NotAFrameError("matrix is rank-deficient: lower frame bound is 0");
  return {lower, upper};
}

Eigen::VectorXd analyze_signal(const Eigen::MatrixXd& m, const Eigen::VectorXd& x) {
  if (x.size() != m.rows())
    throw std::invalid_argument("signal length does not match the dimension");
  return m.transpose() * x;
}

Eigen::VectorXd reconstruct(const Eigen::MatrixXd& m, const Eigen::VectorXd& x) {
  if (x.size() != m.rows())
    throw std::invalid_argument("signal length does not match the dimension");
  frame_bounds_float(m);  // rank check; throws NotAFrameError when deficient
  Eigen::MatrixXd s = m * m.transpose();
  Eigen::VectorXd dual = s.llt().solve(x);
  return m * (m.transpose() * dual);
}

VerificationReport verify(const SynthesisMatrix& m, const EigenvalueSpec& spec, int limit) {
  if (!m.is_exact())
    throw InexactMatrixError("exact verification requires exact entries; "
                             "this matrix was restored from a float format");
  if (m.rows() != spec.n || m.cols() != spec.N)
    throw std::invalid_argument("matrix dimensions do not match the spectrum");

  VerificationReport report;

  std::vector<Rational> col_sums(static_cast<std::size_t>(m.cols()), Rational(0));
  std::vector<Rational> row_sums(static_cast<std::size_t>(m.rows()), Rational(0));
  for (const auto& [pos, value] : m.entries()) {
    Rational sq = value.square();
    row_sums[static_cast<std::size_t>(pos.first)] += sq;
    col_sums[static_cast<std::size_t>(pos.second)] += sq;
  }
  report.unit_norm_ok =
      std::all_of(col_sums.begin(), col_sums.end(), [](const Rational& s) { return s == Rational(1); });
  report.row_sums = row_sums;
  report.spectrum_matches = multiset_equal(row_sums, spec.lambdas);

  auto rows = rows_of(m);
  report.rows_orthogonal_ok = true;
  for (int a = 0; a < m.rows() && report.rows_orthogonal_ok; ++a)
    for (int b = a + 1; b < m.rows(); ++b)
      if (!row_inner_product(rows[static_cast<std::size_t>(a)],
                             rows[static_cast<std::size_t>(b)]).is_zero()) {
        report.rows_orthogonal_ok = false;
        break;
      }

  BlockStructure blocks = maximal_block_number(spec, limit);
  report.mu = blocks.mu;
  report.sparsity = m.nonzero_count();
  report.sparsity_bound = static_cast<std::size_t>(spec.N) +
                          2 * static_cast<std::size_t>(spec.n - blocks.mu);
  report.optimal = report.sparsity == report.sparsity_bound;

  try {
    report.block_order = block_decomposition(m).order;
  } catch (const std::invalid_argument&) {
    report.block_order = 0;  // zero column: decomposition undefined
  }
  return report;
}

FloatVerificationReport verify_float(const SynthesisMatrix& m, const EigenvalueSpec& spec,
                                     double tol, int limit) {
  if (m.rows() != spec.n || m.cols() != spec.N)
    throw std::invalid_argument("matrix dimensions do not match the spectrum");

  FloatVerificationReport report;
  Eigen::MatrixXd dense = to_dense(m);

  report.unit_norm_ok = true;
  for (int c = 0; c < dense.cols(); ++c)
    if (std::abs(dense.col(c).squaredNorm() - 1.0) > tol) report.unit_norm_ok = false;

  report.rows_orthogonal_ok = true;
  for (int a = 0; a < dense.rows(); ++a)
    for (int b = a + 1; b < dense.rows(); ++b)
      if (std::abs(dense.row(a).dot(dense.row(b))) > tol) report.rows_orthogonal_ok = false;

  std::vector<double> row_sums(static_cast<std::size_t>(dense.rows()));
  for (int r = 0; r < dense.rows(); ++r)
    row_sums[static_cast<std::size_t>(r)] = dense.row(r).squaredNorm();
  report.row_sums = row_sums;

  std::vector<double> expected;
  expected.reserve(spec.lambdas.size());
  for (const auto& l : spec.lambdas) expected.push_back(l.to_double());
  std::sort(expected.begin(), expected.end());
  std::sort(row_sums.begin(), row_sums.end());
  report.spectrum_matches = true;
  for (std::size_t i = 0; i < row_sums.size(); ++i)
    if (std::abs(row_sums[i] - expected[i]) > tol) report.spectrum_matches = false;

  BlockStructure blocks = maximal_block_number(spec, limit);
  report.mu = blocks.mu;
  report.sparsity = m.nonzero_count();
  report.sparsity_bound = static_cast<std::size_t>(spec.N) +
                          2 * static_cast<std::size_t>(spec.n - blocks.mu);
  report.optimal = report.sparsity == report.sparsity_bound;
  try {
    report.block_order = block_decomposition(m).order;
  } catch (const std::invalid_argument&) {
    report.block_order = 0;
  }
  return report;
}

}  // namespace stf
