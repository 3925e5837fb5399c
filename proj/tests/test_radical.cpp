#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <random>
#include <stdexcept>
#include <vector>

#include "stf/errors.hpp"
#include "stf/radical.hpp"

using stf::extract_square_part;
using stf::Rational;
using stf::RadicalSum;
using stf::SignedRoot;

TEST_CASE("extract_square_part factors out the largest square") {
  auto check = [](long n, long s, long d) {
    auto [sq, rad] = extract_square_part(mpz_class(n));
    CHECK(sq == s);
    CHECK(rad == d);
  };
  check(1, 1, 1);
  check(2, 1, 2);
  check(18, 3, 2);
  check(12, 2, 3);
  check(49, 7, 1);
  check(720, 12, 5);  // 720 = 144 * 5
  check(1024, 32, 1);
}

TEST_CASE("sqrt_of produces the canonical signed root") {
  SignedRoot a = SignedRoot::sqrt_of(Rational(1, 3));
  CHECK(a.coefficient() == Rational(1, 3));
  CHECK(a.radicand() == 3);

  SignedRoot b = SignedRoot::sqrt_of(Rational(1));
  CHECK(b.coefficient() == Rational(1));
  CHECK(b.radicand() == 1);
  CHECK(b.is_rational());

  SignedRoot c = SignedRoot::sqrt_of(Rational(5, 6), -1);
  CHECK(c.coefficient() == Rational(-1, 6));
  CHECK(c.radicand() == 30);

  CHECK(SignedRoot::sqrt_of(Rational(0)).is_zero());
  CHECK_THROWS_AS(SignedRoot::sqrt_of(Rational(-1, 2)), std::domain_error);
}

TEST_CASE("square inverts sqrt_of exactly") {
  for (auto [num, den] : std::vector<std::pair<long, long>>{
           {1, 3}, {2, 3}, {1, 6}, {5, 6}, {7, 8}, {1, 1}, {0, 1}, {9, 4}}) {
    Rational v(num, den);
    CHECK(SignedRoot::sqrt_of(v).square() == v);
    CHECK(SignedRoot::sqrt_of(v, -1).square() == v);
  }
}

TEST_CASE("multiplication stays canonical") {
  SignedRoot third_rt3 = SignedRoot::sqrt_of(Rational(1, 3));   // (1/3)sqrt(3)
  SignedRoot third_rt6 = SignedRoot::sqrt_of(Rational(2, 3));   // (1/3)sqrt(6)
  SignedRoot prod = third_rt3 * third_rt6;
  CHECK(prod.coefficient() == Rational(1, 3));
  CHECK(prod.radicand() == 2);
  CHECK(prod.square() == Rational(2, 9));

  CHECK((third_rt3 * SignedRoot()).is_zero());

  SignedRoot sq = third_rt3 * third_rt3;
  CHECK(sq.coefficient() == Rational(1, 3));
  CHECK(sq.radicand() == 1);
  CHECK(sq.is_rational());
}

TEST_CASE("negation flips only the sign") {
  SignedRoot r = SignedRoot::sqrt_of(Rational(2, 3));
  CHECK((-r).coefficient() == -r.coefficient());
  CHECK((-r).radicand() == r.radicand());
  CHECK((-r).square() == r.square());
}

TEST_CASE("radical sums merge by radicand and drop zeros") {
  RadicalSum s;
  CHECK(s.is_zero());
  CHECK(s.to_string() == "0");

  s += SignedRoot(Rational(1, 3), 2);
  s += SignedRoot(Rational(-1, 3), 2);
  CHECK(s.is_zero());  // exact cancellation

  RadicalSum t;
  t += SignedRoot(Rational(1, 2), 5);
  CHECK(t.term_count() == 1);
  CHECK(t.coefficient_of(5) == Rational(1, 2));
  CHECK(t.coefficient_of(2) == Rational(0));

  RadicalSum u;
  u += SignedRoot(Rational(1, 3), 2);
  u += SignedRoot(Rational(1, 3), 3);
  CHECK(u.term_count() == 2);
  CHECK(u.coefficient_of(2) == Rational(1, 3));
  CHECK(u.coefficient_of(3) == Rational(1, 3));
}

TEST_CASE("floating rendering is only an approximation layer") {
  CHECK(Rational(8, 3).to_double() == doctest::Approx(2.6666666666666666).epsilon(1e-15));
  CHECK(SignedRoot::sqrt_of(Rational(1, 3)).to_double() ==
        doctest::Approx(0.5773502691896258).epsilon(1e-15));
  CHECK(RadicalSum().to_double() == 0.0);
}

TEST_CASE("rendering round-trips through parse") {
  for (const SignedRoot& r :
       {SignedRoot::sqrt_of(Rational(5, 6), -1), SignedRoot::sqrt_of(Rational(1, 3)),
        SignedRoot::one(), SignedRoot(), SignedRoot(Rational(-7, 2), 10)}) {
    CHECK(SignedRoot::parse(r.to_string()) == r);
  }
  CHECK(SignedRoot::parse("1/3*sqrt(3)") == SignedRoot::sqrt_of(Rational(1, 3)));
  CHECK_THROWS_AS(SignedRoot::parse("sqrt(3)"), stf::ParseError);
  CHECK_THROWS_AS(SignedRoot::parse("1/3*sqrt(x)"), stf::ParseError);
  CHECK_THROWS_AS(SignedRoot::parse(""), stf::ParseError);
}

namespace {

// Random canonical root with small coefficient and squarefree-after-
// canonicalization radicand.
stf::SignedRoot random_root(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-6, 6);
  std::uniform_int_distribution<long> den(1, 6);
  std::uniform_int_distribution<long> rad(1, 30);
  return stf::SignedRoot(Rational(num(rng), den(rng)), mpz_class(rad(rng)));
}

}  // namespace

TEST_CASE("multiplication is commutative and associative (exact, randomized)") {
  std::mt19937 rng(20260815);
  for (int i = 0; i < 500; ++i) {
    SignedRoot a = random_root(rng), b = random_root(rng), c = random_root(rng);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("canonicalization is idempotent (randomized)") {
  std::mt19937 rng(42);
  for (int i = 0; i < 500; ++i) {
    SignedRoot a = random_root(rng);
    SignedRoot again(a.coefficient(), a.radicand());
    CHECK(again == a);
  }
}

TEST_CASE("square round-trips for random rationals") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> num(0, 40);
  std::uniform_int_distribution<long> den(1, 24);
  for (int i = 0; i < 500; ++i) {
    Rational v(num(rng), den(rng));
    int sign = (i % 2 == 0) ? +1 : -1;
    SignedRoot r = SignedRoot::sqrt_of(v, sign);
    CHECK(r.square() == v);
    if (!v.is_zero()) CHECK(r.coefficient().is_negative() == (sign < 0));
  }
}

TEST_CASE("exact zero test agrees with floating evaluation (randomized sanity)") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> len(1, 6);
  std::uniform_int_distribution<int> cancel(0, 1);
  for (int i = 0; i < 300; ++i) {
    RadicalSum s;
    std::vector<SignedRoot> placed;
    for (int k = len(rng); k > 0; --k) {
      SignedRoot r = random_root(rng);
      s += r;
      placed.push_back(r);
    }
    if (cancel(rng)) {
      for (const auto& r : placed) s += -r;  // force exact zero
      CHECK(s.is_zero());
    }
    if (s.is_zero())
      CHECK(std::abs(s.to_double()) <= 1e-9);
    else if (std::abs(s.to_double()) > 1e-9)
      CHECK_FALSE(s.is_zero());
  }
}
