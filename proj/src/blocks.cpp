#include "stf/blocks.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

#include "stf/errors.hpp"

namespace stf {

namespace {

long long to_long_long(const mpz_class& z, const char* what) {
  if (!z.fits_slong_p()) throw std::invalid_argument(std::string(what) + " out of range");
  return static_cast<long long>(z.get_si());
}

// One block of the eventual ordering, eigenvalues sorted descending.
struct Block {
  std::vector<Rational> values;
};

bool block_before(const Block& a, const Block& b) {
  if (a.values.size() != b.values.size()) return a.values.size() > b.values.size();
  return std::lexicographical_compare(a.values.begin(), a.values.end(),
                                      b.values.begin(), b.values.end());
}

// Maximum-cardinality partition of the fractional parts into integer-sum
// groups, as index sets. `fracs` must be non-integer entries only; their
// total must be an integer (guaranteed when the full spectrum sums to N).
std::vector<std::vector<int>> partition_fractional(const std::vector<Rational>& fracs) {
  const int m = static_cast<int>(fracs.size());
  if (m == 0) return {};

  // Scale all fractional parts to a common denominator so that subset sums
  // are plain integers; a subset has integer sum iff its scaled sum is a
  // multiple of D.
  mpz_class common_den = 1;
  for (const auto& f : fracs) common_den = lcm(common_den, f.denominator());
  std::vector<mpz_class> scaled(m);
  for (int i = 0; i < m; ++i)
    scaled[i] = fracs[i].numerator() * (common_den / fracs[i].denominator());

  const std::size_t full = std::size_t{1} << m;
  std::vector<mpz_class> subset_sum(full);
  std::vector<char> integral(full, 0);
  integral[0] = 1;
  for (std::size_t s = 1; s < full; ++s) {
    int low = std::countr_zero(s);
    subset_sum[s] = subset_sum[s & (s - 1)] + scaled[low];
    integral[s] = mpz_divisible_p(subset_sum[s].get_mpz_t(), common_den.get_mpz_t()) != 0;
  }

  // best[s] = max number of integer-sum groups partitioning subset s; only
  // integer-sum subsets matter, and each candidate first group must contain
  // the lowest element of s, so the search is a submask walk over the rest.
  std::vector<int> best(full, -1);
  best[0] = 0;
  for (std::size_t s = 1; s < full; ++s) {
    if (!integral[s]) continue;
    const std::size_t low = s & (~s + 1);
    const std::size_t rest = s ^ low;
    int b = -1;
    std::size_t sub = rest;
    while (true) {
      std::size_t group = sub | low;
      if (integral[group] && best[s ^ group] >= 0)
        b = std::max(b, best[s ^ group] + 1);
      if (sub == 0) break;
      sub = (sub - 1) & rest;
    }
    best[s] = b;
  }

  // Reconstruct one optimal partition deterministically: at each step take
  // the first optimal group (in the same submask order) containing the
  // lowest remaining element.
  std::vector<std::vector<int>> groups;
  std::size_t s = full - 1;
  while (s != 0) {
    const std::size_t low = s & (~s + 1);
    const std::size_t rest = s ^ low;
    std::size_t chosen = 0;
    std::size_t sub = rest;
    while (true) {
      std::size_t group = sub | low;
      if (integral[group] && best[s ^ group] >= 0 && best[s ^ group] + 1 == best[s]) {
        chosen = group;
        break;
      }
      if (sub == 0) break;
      sub = (sub - 1) & rest;
    }
    if (chosen == 0) throw std::logic_error("partition reconstruction found no group");
    std::vector<int> members;
    for (int i = 0; i < m; ++i)
      if (chosen & (std::size_t{1} << i)) members.push_back(i);
    groups.push_back(std::move(members));
    s ^= chosen;
  }
  return groups;
}

}  // namespace

EigenvalueSpec EigenvalueSpec::create(std::vector<Rational> lambdas) {
  if (lambdas.empty()) throw std::invalid_argument("eigenvalue list is empty");
  Rational total(0);
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    if (lambdas[i] < Rational(2))
      throw std::invalid_argument("eigenvalue " + std::to_string(i + 1) + " is less than 2: " +
                                  lambdas[i].to_string());
    total += lambdas[i];
  }
  if (!total.is_integer())
    throw std::invalid_argument("eigenvalues must sum to an integer, got " + total.to_string());
  EigenvalueSpec spec;
  spec.n = static_cast<int>(lambdas.size());
  spec.N = to_long_long(total.numerator(), "frame count N");
  spec.lambdas = std::move(lambdas);
  return spec;
}

EigenvalueSpec EigenvalueSpec::tight(int n, long long N) {
  if (n < 1) throw std::invalid_argument("dimension n must be positive");
  if (N < 2 * static_cast<long long>(n))
    throw std::invalid_argument("tight spectrum requires N >= 2n (eigenvalue N/n >= 2)");
  std::vector<Rational> lambdas(static_cast<std::size_t>(n), Rational(N, n));
  return create(std::move(lambdas));
}

int count_integer_prefix_sums(const std::vector<Rational>& lambdas) {
  if (lambdas.empty()) throw std::invalid_argument("empty eigenvalue list");
  Rational sum(0);
  int count = 0;
  for (const auto& l : lambdas) {
    sum += l;
    if (sum.is_integer()) ++count;
  }
  return count;
}

BlockStructure maximal_block_number(const EigenvalueSpec& spec, int limit) {
  std::vector<Rational> integers;
  std::vector<Rational> fractionals;
  for (const auto& l : spec.lambdas)
    (l.is_integer() ? integers : fractionals).push_back(l);

  const int m = static_cast<int>(fractionals.size());
  if (m > limit)
    throw LimitError("exact search limit exceeded: " + std::to_string(m) +
                     " non-integer eigenvalues > limit " + std::to_string(limit));

  // Canonical element order before masking, so the chosen partition depends
  // only on the input multiset.
  std::sort(fractionals.begin(), fractionals.end(), std::greater<>());
  std::vector<Rational> frac_parts;
  frac_parts.reserve(fractionals.size());
  for (const auto& l : fractionals) frac_parts.push_back(l.frac());

  std::vector<Block> blocks;
  for (const auto& l : integers) blocks.push_back(Block{{l}});
  for (const auto& group : partition_fractional(frac_parts)) {
    Block b;
    for (int idx : group) b.values.push_back(fractionals[static_cast<std::size_t>(idx)]);
    std::sort(b.values.begin(), b.values.end(), std::greater<>());
    blocks.push_back(std::move(b));
  }
  std::sort(blocks.begin(), blocks.end(), block_before);

  BlockStructure out;
  out.mu = static_cast<int>(blocks.size());
  out.row_bounds.push_back(0);
  out.column_bounds.push_back(0);
  Rational running(0);
  int rows = 0;
  for (const auto& b : blocks) {
    for (const auto& l : b.values) {
      out.ordering.push_back(l);
      running += l;
      ++rows;
    }
    out.row_bounds.push_back(rows);
    if (!running.is_integer())
      throw std::logic_error("block boundary sum is not an integer");
    out.column_bounds.push_back(to_long_long(running.numerator(), "block column bound"));
  }
  return out;
}

int mu_bruteforce(const std::vector<Rational>& lambdas) {
  if (lambdas.size() > 8)
    throw std::invalid_argument("brute-force search is limited to n <= 8");
  std::vector<Rational> perm = lambdas;
  std::sort(perm.begin(), perm.end());
  int best = 0;
  do {
    best = std::max(best, count_integer_prefix_sums(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

long long mu_tight(long long N, int n) {
  if (n < 1 || N < 2 * static_cast<long long>(n))
    throw std::invalid_argument("mu_tight requires N >= 2n >= 2");
  return std::gcd(N, static_cast<long long>(n));
}

}  // namespace stf
