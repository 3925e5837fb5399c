// Exact arithmetic on signed square roots of rationals and finite sums thereof.
//
// Every entry of a Spectral Tetris synthesis matrix is of the form
// +/- sqrt(p/q) for a rational p/q, so entries are kept as a SignedRoot:
// a rational coefficient times the square root of a squarefree positive
// integer. In that canonical form equality is structural, squaring is exact,
// and sums of roots (RadicalSum) decide zero exactly: square roots of
// distinct squarefree integers are linearly independent over the rationals,
// so a sum is zero iff every collected coefficient is zero. That last fact is
// what certifies row orthogonality of constructed frames with no tolerance.
#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>

#include "stf/rational.hpp"

namespace stf {

// Returns (s, d) with n == s^2 * d and d squarefree, by trial division.
// Radicands here are small products of eigenvalue numerators/denominators,
// so no general factoring machinery is warranted.
std::pair<mpz_class, mpz_class> extract_square_part(const mpz_class& n);

// coefficient * sqrt(radicand), canonical: radicand squarefree and positive.
// Zero is coefficient 0 with radicand 1.
class SignedRoot {
 public:
  SignedRoot() : coefficient_(0), radicand_(1) {}

  // Canonicalizes coefficient * sqrt(radicand); radicand must be >= 1.
  SignedRoot(const Rational& coefficient, const mpz_class& radicand);

  // +/- sqrt(value) for a rational value >= 0: sqrt(p/q) is rewritten as
  // (1/q) * sqrt(p*q), then square factors move into the coefficient.
  // sign < 0 selects the negative root. Throws std::domain_error if value < 0.
  static SignedRoot sqrt_of(const Rational& value, int sign = +1);

  static SignedRoot of_rational(const Rational& r) { return SignedRoot(r, 1); }
  static SignedRoot one() { return of_rational(Rational(1)); }

  const Rational& coefficient() const { return coefficient_; }
  const mpz_class& radicand() const { return radicand_; }

  bool is_zero() const { return coefficient_.is_zero(); }
  // True when the value is plain rational (radicand 1).
  bool is_rational() const { return radicand_ == 1; }

  // Exact square: coefficient^2 * radicand.
  Rational square() const;

  double to_double() const;

  SignedRoot operator-() const { return SignedRoot(-coefficient_, radicand_); }
  // sqrt(d1)*sqrt(d2) = g*sqrt((d1/g)*(d2/g)) with g = gcd(d1,d2); the product
  // of two coprime squarefree integers is squarefree, so this is canonical.
  friend SignedRoot operator*(const SignedRoot& a, const SignedRoot& b);

  friend bool operator==(const SignedRoot& a, const SignedRoot& b) {
    return a.coefficient_ == b.coefficient_ && a.radicand_ == b.radicand_;
  }

  // "c*sqrt(d)" with c rendered as a lowest-terms rational. Round-trips
  // through parse() bit-exactly for canonical values.
  std::string to_string() const;
  static SignedRoot parse(std::string_view text);

 private:
  Rational coefficient_;
  mpz_class radicand_;
};

std::ostream& operator<<(std::ostream& os, const SignedRoot& r);

// Finite sum sum_i c_i * sqrt(d_i) with distinct squarefree d_i, kept as a
// map radicand -> coefficient with no zero coefficients stored. Empty map
// means zero, and that test is exact.
class RadicalSum {
 public:
  RadicalSum() = default;

  RadicalSum& operator+=(const SignedRoot& t);
  RadicalSum& operator+=(const RadicalSum& o);
  friend RadicalSum operator+(RadicalSum a, const SignedRoot& t) { return a += t; }
  friend RadicalSum operator+(RadicalSum a, const RadicalSum& b) { return a += b; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<mpz_class, Rational>& terms() const { return terms_; }

  // Zero if no term with that radicand is present.
  Rational coefficient_of(const mpz_class& radicand) const;

  double to_double() const;

  friend bool operator==(const RadicalSum& a, const RadicalSum& b) {
    return a.terms_ == b.terms_;
  }

  // "c1*sqrt(d1) + c2*sqrt(d2) + ...", or "0" when empty.
  std::string to_string() const;

 private:
  std::map<mpz_class, Rational> terms_;
};

std::ostream& operator<<(std::ostream& os, const RadicalSum& s);

}  // namespace stf
