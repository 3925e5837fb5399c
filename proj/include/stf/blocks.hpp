// Maximal block number of an eigenvalue multiset and blockwise orderings.
//
// A sequence of eigenvalues is "ordered blockwise" when no permutation of it
// has more integer partial sums. The count of integer partial sums achieved
// by such an ordering is the maximal block number mu; it controls the best
// attainable sparsity N + 2(n - mu) of a unit-norm frame with that spectrum.
#pragma once

#include <vector>

#include "stf/rational.hpp"

namespace stf {

// The prescribed frame-operator spectrum: n eigenvalues, all >= 2, summing
// exactly to the frame count N.
struct EigenvalueSpec {
  std::vector<Rational> lambdas;
  int n = 0;
  long long N = 0;

  // Validates and fills n and N. Throws std::invalid_argument naming the
  // violated condition (empty list, lambda < 2, non-integer total).
  static EigenvalueSpec create(std::vector<Rational> lambdas);

  // The tight spectrum N/n repeated n times; requires N >= 2n >= 2.
  static EigenvalueSpec tight(int n, long long N);
};

// mu, an ordering of the eigenvalues attaining it, and the block boundaries:
// row_bounds k_0=0 < ... < k_mu = n and column_bounds m_0=0 < ... < m_mu = N
// with m_i = sum of the first k_i ordered eigenvalues, an integer.
struct BlockStructure {
  int mu = 0;
  std::vector<Rational> ordering;
  std::vector<int> row_bounds;
  std::vector<long long> column_bounds;

  friend bool operator==(const BlockStructure&, const BlockStructure&) = default;
};

// Number of positions s with lambda_1 + ... + lambda_s an integer.
int count_integer_prefix_sums(const std::vector<Rational>& lambdas);

// Computes mu and a canonical blockwise ordering.
//
// Integer eigenvalues always form singleton blocks. The non-integer ones are
// partitioned into the largest possible number of integer-sum groups by a
// dynamic program over subsets of their fractional parts, O(3^m) in the count
// m of non-integer eigenvalues; m > limit throws LimitError (retry with a
// higher limit if the spectrum warrants the wait).
//
// The result is canonical in the input multiset: blocks are sorted by
// descending size, ties broken lexicographically ascending on their sorted
// eigenvalue lists, and eigenvalues inside a block are sorted descending.
BlockStructure maximal_block_number(const EigenvalueSpec& spec, int limit = 16);

// Testing oracle: max of count_integer_prefix_sums over all n! permutations.
// Throws std::invalid_argument for n > 8.
int mu_bruteforce(const std::vector<Rational>& lambdas);

// Maximal block number of the tight spectrum {N/n, ..., N/n}: gcd(N, n).
// Requires N >= 2n >= 2.
long long mu_tight(long long N, int n);

}  // namespace stf
