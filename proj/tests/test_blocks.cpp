#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "stf/blocks.hpp"
#include "stf/errors.hpp"
#include "support.hpp"

using stf::count_integer_prefix_sums;
using stf::EigenvalueSpec;
using stf::maximal_block_number;
using stf::mu_bruteforce;
using stf::mu_tight;
using stf::Rational;

namespace {

std::vector<Rational> rationals(std::initializer_list<std::pair<long, long>> values) {
  std::vector<Rational> out;
  for (auto [num, den] : values) out.emplace_back(num, den);
  return out;
}

}  // namespace

TEST_CASE("spec validation names the violated condition") {
  auto spec = EigenvalueSpec::create(rationals({{8, 3}, {8, 3}, {8, 3}, {2, 1}}));
  CHECK(spec.n == 4);
  CHECK(spec.N == 10);

  CHECK_THROWS_WITH_AS(EigenvalueSpec::create({}), "eigenvalue list is empty",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(EigenvalueSpec::create(rationals({{1, 1}, {2, 1}, {2, 1}})),
                       "eigenvalue 1 is less than 2: 1", std::invalid_argument);
  CHECK_THROWS_WITH_AS(EigenvalueSpec::create(rationals({{5, 2}, {2, 1}})),
                       "eigenvalues must sum to an integer, got 9/2", std::invalid_argument);
}

TEST_CASE("tight spectra") {
  auto spec = EigenvalueSpec::tight(4, 9);
  CHECK(spec.n == 4);
  CHECK(spec.N == 9);
  CHECK(spec.lambdas == rationals({{9, 4}, {9, 4}, {9, 4}, {9, 4}}));

  CHECK_THROWS_AS(EigenvalueSpec::tight(4, 7), std::invalid_argument);
  CHECK_THROWS_AS(EigenvalueSpec::tight(0, 4), std::invalid_argument);
  CHECK(EigenvalueSpec::tight(1, 2).lambdas == rationals({{2, 1}}));
}

TEST_CASE("integer prefix sums are counted exactly") {
  CHECK(count_integer_prefix_sums(rationals({{8, 3}, {8, 3}, {8, 3}, {2, 1}})) == 2);
  CHECK(count_integer_prefix_sums(rationals({{2, 1}, {2, 1}})) == 2);
  CHECK(count_integer_prefix_sums(rationals({{9, 4}, {9, 4}, {9, 4}, {9, 4}})) == 1);
  CHECK_THROWS_AS(count_integer_prefix_sums({}), std::invalid_argument);
}

TEST_CASE("maximal block number of the worked example") {
  auto spec = EigenvalueSpec::create(rationals({{8, 3}, {8, 3}, {8, 3}, {2, 1}}));
  auto blocks = maximal_block_number(spec);
  CHECK(blocks.mu == 2);
  CHECK(blocks.ordering == rationals({{8, 3}, {8, 3}, {8, 3}, {2, 1}}));
  CHECK(blocks.row_bounds == std::vector<int>{0, 3, 4});
  CHECK(blocks.column_bounds == std::vector<long long>{0, 8, 10});
}

TEST_CASE("maximal block number of tight and integer spectra") {
  CHECK(maximal_block_number(EigenvalueSpec::tight(4, 9)).mu == 1);

  auto blocks = maximal_block_number(EigenvalueSpec::create(rationals({{2, 1}, {2, 1}})));
  CHECK(blocks.mu == 2);  // integer eigenvalues are singleton blocks
  CHECK(blocks.row_bounds == std::vector<int>{0, 1, 2});
  CHECK(blocks.column_bounds == std::vector<long long>{0, 2, 4});
}

TEST_CASE("canonical ordering sorts blocks by size then content") {
  auto spec = EigenvalueSpec::create(rationals({{2, 1}, {5, 2}, {2, 1}, {5, 2}}));
  auto blocks = maximal_block_number(spec);
  CHECK(blocks.mu == 3);
  // one pair block first (larger), then the two integer singletons
  CHECK(blocks.ordering == rationals({{5, 2}, {5, 2}, {2, 1}, {2, 1}}));
  CHECK(blocks.row_bounds == std::vector<int>{0, 2, 3, 4});
  CHECK(blocks.column_bounds == std::vector<long long>{0, 5, 7, 9});
}

TEST_CASE("brute-force oracle on small inputs") {
  CHECK(mu_bruteforce(rationals({{8, 3}, {8, 3}, {8, 3}, {2, 1}})) == 2);
  CHECK(mu_bruteforce(rationals({{5, 2}, {5, 2}})) == 1);
  CHECK(mu_bruteforce(rationals({{3, 1}})) == 1);
  CHECK_THROWS_AS(mu_bruteforce(std::vector<Rational>(9, Rational(2))), std::invalid_argument);
}

TEST_CASE("tight-spectrum block number is the gcd") {
  CHECK(mu_tight(9, 4) == 1);
  CHECK(mu_tight(8, 4) == 4);
  CHECK(mu_tight(10, 4) == 2);
  CHECK(maximal_block_number(EigenvalueSpec::tight(4, 10)).mu == 2);
  CHECK_THROWS_AS(mu_tight(7, 4), std::invalid_argument);
  CHECK_THROWS_AS(mu_tight(4, 0), std::invalid_argument);
}

TEST_CASE("subset search agrees with the brute-force oracle (randomized)") {
  std::mt19937 rng(20260815);
  for (int i = 0; i < 80; ++i) {
    auto spec = stf_test::random_spec(rng, 7, 12);
    CAPTURE(i);
    CHECK(maximal_block_number(spec).mu == mu_bruteforce(spec.lambdas));
  }
}

TEST_CASE("returned orderings attain mu and have minimal blocks (randomized)") {
  std::mt19937 rng(31415);
  for (int i = 0; i < 80; ++i) {
    auto spec = stf_test::random_spec(rng, 8, 12);
    auto blocks = maximal_block_number(spec);
    CAPTURE(i);
    CHECK(count_integer_prefix_sums(blocks.ordering) == blocks.mu);
    CHECK(blocks.row_bounds.front() == 0);
    CHECK(blocks.row_bounds.back() == spec.n);
    CHECK(blocks.column_bounds.front() == 0);
    CHECK(blocks.column_bounds.back() == spec.N);
    CHECK(static_cast<int>(blocks.row_bounds.size()) == blocks.mu + 1);

    // no strict prefix of a block may reach an integer sum
    for (std::size_t b = 0; b + 1 < blocks.row_bounds.size(); ++b) {
      Rational sum(0);
      for (int r = blocks.row_bounds[b]; r < blocks.row_bounds[b + 1]; ++r) {
        sum += blocks.ordering[static_cast<std::size_t>(r)];
        bool last = r + 1 == blocks.row_bounds[b + 1];
        CHECK(sum.is_integer() == last);
      }
    }
  }
}

TEST_CASE("result depends only on the input multiset (randomized)") {
  std::mt19937 rng(2718);
  for (int i = 0; i < 40; ++i) {
    auto spec = stf_test::random_spec(rng, 8, 10);
    auto reference = maximal_block_number(spec);
    auto shuffled = spec.lambdas;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    auto permuted = EigenvalueSpec::create(shuffled);
    CAPTURE(i);
    CHECK(maximal_block_number(permuted) == reference);
  }
}

TEST_CASE("exact-search limit is enforced and adjustable") {
  // 17 non-integer eigenvalues: 15 x 5/2 and 2 x 9/4 sum to 42
  std::vector<Rational> lambdas(15, Rational(5, 2));
  lambdas.emplace_back(9, 4);
  lambdas.emplace_back(9, 4);
  auto spec = EigenvalueSpec::create(lambdas);
  CHECK(spec.N == 42);

  CHECK_THROWS_AS(maximal_block_number(spec), stf::LimitError);
  auto blocks = maximal_block_number(spec, 17);
  CHECK(blocks.mu == 8);  // 7 pairs of 1/2 plus one {1/2, 1/4, 1/4} group
  CHECK(count_integer_prefix_sums(blocks.ordering) == 8);
}
