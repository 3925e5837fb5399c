// Exact rational numbers on top of GMP.
//
// All eigenvalue bookkeeping in this project runs on exact rationals: the
// branch conditions of the construction and the integrality of partial sums
// are destroyed by floating-point rounding, so no operation here ever rounds.
#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace stf {

// Arbitrary-precision rational, always in lowest terms with positive
// denominator. Value semantics; safe to copy and share across threads.
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpq_class& q);

  // Accepts "int", "int/int", or a terminating decimal such as "2.25".
  // Throws ParseError on malformed text or a zero denominator.
  static Rational parse(std::string_view text);

  // Exact binary value of a double (every finite double is rational).
  static Rational from_double_exact(double x);

  const mpz_class& numerator() const { return value_.get_num(); }
  const mpz_class& denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_negative() const { return sgn(value_) < 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  // Largest integer <= value.
  mpz_class floor() const;
  // value - floor(value), in [0, 1).
  Rational frac() const;

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  double to_double() const { return value_.get_d(); }

  // "p/q", or just "p" when the denominator is 1. Round-trips through parse().
  std::string to_string() const;

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace stf
