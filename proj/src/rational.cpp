#include "stf/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "stf/errors.hpp"

namespace stf {

namespace {

bool is_decimal_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw ParseError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(const mpq_class& q) : value_(q) {
  value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty rational literal");

  std::string_view body = s;
  bool negative = false;
  if (body.front() == '+' || body.front() == '-') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (body.empty()) throw ParseError("malformed rational literal: \"" + s + "\"");

  mpz_class num, den;
  auto slash = body.find('/');
  auto dot = body.find('.');
  if (slash != std::string_view::npos) {
    if (dot != std::string_view::npos)
      throw ParseError("malformed rational literal: \"" + s + "\"");
    std::string_view ns = body.substr(0, slash);
    std::string_view ds = body.substr(slash + 1);
    if (!is_decimal_digits(ns) || !is_decimal_digits(ds))
      throw ParseError("malformed rational literal: \"" + s + "\"");
    num = mpz_class(std::string(ns));
    den = mpz_class(std::string(ds));
    if (den == 0) throw ParseError("rational with zero denominator: \"" + s + "\"");
  } else if (dot != std::string_view::npos) {
    std::string_view whole = body.substr(0, dot);
    std::string_view fractional = body.substr(dot + 1);
    if (!is_decimal_digits(whole) || !is_decimal_digits(fractional))
      throw ParseError("malformed rational literal: \"" + s + "\"");
    // d.f == (d * 10^len(f) + f) / 10^len(f), exactly.
    num = mpz_class(std::string(whole));
    den = 1;
    for (std::size_t i = 0; i < fractional.size(); ++i) den *= 10;
    num = num * den + mpz_class(std::string(fractional));
  } else {
    if (!is_decimal_digits(body))
      throw ParseError("malformed rational literal: \"" + s + "\"");
    num = mpz_class(std::string(body));
    den = 1;
  }
  if (negative) num = -num;
  return Rational(num, den);
}

Rational Rational::from_double_exact(double x) {
  if (!std::isfinite(x)) throw std::domain_error("non-finite double");
  mpq_class q;
  mpq_set_d(q.get_mpq_t(), x);
  return Rational(q);
}

mpz_class Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), numerator().get_mpz_t(), denominator().get_mpz_t());
  return q;
}

Rational Rational::frac() const {
  return *this - Rational(floor(), mpz_class(1));
}

std::string Rational::to_string() const {
  if (is_integer()) return numerator().get_str();
  return numerator().get_str() + "/" + denominator().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

}  // namespace stf
