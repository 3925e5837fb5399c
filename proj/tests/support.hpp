// Shared helpers for the test binaries: frozen reference matrices, a random
// spectrum generator, and a readable matrix comparer. Doctest-free so the
// acceptance binary can use it too.
#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "stf/blocks.hpp"
#include "stf/radical.hpp"
#include "stf/synthesis.hpp"

namespace stf_test {

inline stf::SignedRoot rt(long num, long den, int sign = +1) {
  return stf::SignedRoot::sqrt_of(stf::Rational(num, den), sign);
}

// 4x10 synthesis matrix of the spectrum {8/3, 8/3, 8/3, 2}, 14 nonzeros.
inline stf::SynthesisMatrix golden_example_4x10() {
  stf::SynthesisMatrix m(4, 10);
  m.set(0, 0, rt(1, 1));
  m.set(0, 1, rt(1, 1));
  m.set(0, 2, rt(1, 3));
  m.set(0, 3, rt(1, 3));
  m.set(1, 2, rt(2, 3));
  m.set(1, 3, rt(2, 3, -1));
  m.set(1, 4, rt(1, 1));
  m.set(1, 5, rt(1, 6));
  m.set(1, 6, rt(1, 6));
  m.set(2, 5, rt(5, 6));
  m.set(2, 6, rt(5, 6, -1));
  m.set(2, 7, rt(1, 1));
  m.set(3, 8, rt(1, 1));
  m.set(3, 9, rt(1, 1));
  return m;
}

// 4x9 tight synthesis matrix of the spectrum {9/4 x4}, 15 nonzeros; the one
// the cursor construction produces.
inline stf::SynthesisMatrix golden_tight_4x9() {
  stf::SynthesisMatrix m(4, 9);
  m.set(0, 0, rt(1, 1));
  m.set(0, 1, rt(1, 1));
  m.set(0, 2, rt(1, 8));
  m.set(0, 3, rt(1, 8));
  m.set(1, 2, rt(7, 8));
  m.set(1, 3, rt(7, 8, -1));
  m.set(1, 4, rt(1, 4));
  m.set(1, 5, rt(1, 4));
  m.set(2, 4, rt(3, 4));
  m.set(2, 5, rt(3, 4, -1));
  m.set(2, 6, rt(3, 8));
  m.set(2, 7, rt(3, 8));
  m.set(3, 6, rt(5, 8));
  m.set(3, 7, rt(5, 8, -1));
  m.set(3, 8, rt(1, 1));
  return m;
}

// A different optimally sparse 4x9 tight frame for {9/4 x4}, 15 nonzeros,
// which the cursor construction does NOT produce: optimal frames are not
// unique. Also stored as tests/fixtures/nonst_tight_9_4.json.
inline stf::SynthesisMatrix golden_nonst_4x9() {
  stf::SynthesisMatrix m(4, 9);
  m.set(0, 0, rt(1, 1));
  m.set(0, 1, rt(5, 8));
  m.set(0, 2, rt(5, 8));
  m.set(1, 1, rt(3, 8));
  m.set(1, 2, rt(3, 8, -1));
  m.set(1, 3, rt(3, 8));
  m.set(1, 4, rt(3, 8));
  m.set(1, 5, rt(3, 8));
  m.set(1, 6, rt(3, 8));
  m.set(2, 3, rt(5, 8));
  m.set(2, 4, rt(5, 8, -1));
  m.set(2, 7, rt(1, 1));
  m.set(3, 5, rt(5, 8));
  m.set(3, 6, rt(5, 8, -1));
  m.set(3, 8, rt(1, 1));
  return m;
}

// Empty string when equal; otherwise a one-line description of the first
// difference, for readable assertion messages.
inline std::string matrix_diff(const stf::SynthesisMatrix& got, const stf::SynthesisMatrix& want) {
  if (got.rows() != want.rows() || got.cols() != want.cols())
    return "dimensions " + std::to_string(got.rows()) + "x" + std::to_string(got.cols()) +
           " != " + std::to_string(want.rows()) + "x" + std::to_string(want.cols());
  for (int r = 0; r < want.rows(); ++r)
    for (int c = 0; c < want.cols(); ++c)
      if (!(got.entry(r, c) == want.entry(r, c)))
        return "entry (" + std::to_string(r) + ", " + std::to_string(c) + "): got " +
               got.entry(r, c).to_string() + ", want " + want.entry(r, c).to_string();
  if (got.nonzero_count() != want.nonzero_count())
    return "nonzero counts differ";  // unreachable if entries all matched
  return "";
}

// Random valid spectrum: n in [1, max_n], each eigenvalue 2 + k/d with
// denominator d <= max_den (about a third of them integers), and the last
// eigenvalue bumped so the total is an integer.
inline stf::EigenvalueSpec random_spec(std::mt19937& rng, int max_n, int max_den) {
  std::uniform_int_distribution<int> n_dist(1, max_n);
  std::uniform_int_distribution<int> den_dist(1, max_den);
  std::uniform_int_distribution<int> kind(0, 2);
  const int n = n_dist(rng);
  std::vector<stf::Rational> lambdas;
  lambdas.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    if (kind(rng) == 0) {
      std::uniform_int_distribution<long> int_dist(2, 5);
      lambdas.emplace_back(int_dist(rng));
    } else {
      const int den = den_dist(rng);
      std::uniform_int_distribution<long> num_dist(0, 2L * den);
      lambdas.push_back(stf::Rational(2) + stf::Rational(num_dist(rng), den));
    }
  }
  stf::Rational f = [&] {
    stf::Rational total(0);
    for (const auto& l : lambdas) total += l;
    return total.frac();
  }();
  if (!f.is_zero()) lambdas.back() += stf::Rational(1) - f;
  return stf::EigenvalueSpec::create(std::move(lambdas));
}

inline std::string fixture_path(const std::string& name) {
  return std::string(STF_FIXTURE_DIR) + "/" + name;
}

}  // namespace stf_test
