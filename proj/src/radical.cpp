#include "stf/radical.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "stf/errors.hpp"

namespace stf {

std::pair<mpz_class, mpz_class> extract_square_part(const mpz_class& n) {
  if (n < 1) throw std::domain_error("extract_square_part: argument must be positive");
  mpz_class d = n;
  mpz_class s = 1;
  mpz_class i = 2;
  while (i * i <= d) {
    mpz_class sq = i * i;
    if (d % sq == 0) {
      d /= sq;
      s *= i;
      // keep the same i: higher powers of it may remain
    } else {
      ++i;
    }
  }
  return {s, d};
}

SignedRoot::SignedRoot(const Rational& coefficient, const mpz_class& radicand) {
  if (radicand < 1) throw std::domain_error("radicand must be a positive integer");
  if (coefficient.is_zero()) {
    coefficient_ = Rational(0);
    radicand_ = 1;
    return;
  }
  auto [s, d] = extract_square_part(radicand);
  coefficient_ = coefficient * Rational(s, mpz_class(1));
  radicand_ = d;
}

SignedRoot SignedRoot::sqrt_of(const Rational& value, int sign) {
  if (value.is_negative()) throw std::domain_error("sqrt of a negative rational");
  if (value.is_zero()) return SignedRoot();
  // sqrt(p/q) = sqrt(p*q)/q
  mpz_class pq = value.numerator() * value.denominator();
  Rational coef(sign < 0 ? mpz_class(-1) : mpz_class(1), value.denominator());
  return SignedRoot(coef, pq);
}

Rational SignedRoot::square() const {
  return coefficient_ * coefficient_ * Rational(radicand_, mpz_class(1));
}

double SignedRoot::to_double() const {
  return coefficient_.to_double() * std::sqrt(mpz_class(radicand_).get_d());
}

SignedRoot operator*(const SignedRoot& a, const SignedRoot& b) {
  if (a.is_zero() || b.is_zero()) return SignedRoot();
  mpz_class g = gcd(a.radicand_, b.radicand_);
  mpz_class rad = (a.radicand_ / g) * (b.radicand_ / g);
  Rational coef = a.coefficient_ * b.coefficient_ * Rational(g, mpz_class(1));
  return SignedRoot(coef, rad);
}

std::string SignedRoot::to_string() const {
  return coefficient_.to_string() + "*sqrt(" + radicand_.get_str() + ")";
}

SignedRoot SignedRoot::parse(std::string_view text) {
  auto star = text.find("*sqrt(");
  if (star == std::string_view::npos || text.empty() || text.back() != ')')
    throw ParseError("malformed root literal: \"" + std::string(text) + "\"");
  Rational coef = Rational::parse(text.substr(0, star));
  std::string_view rad_text = text.substr(star + 6, text.size() - star - 7);
  std::string rad_str(rad_text);
  if (rad_str.empty() || rad_str.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("malformed root literal: \"" + std::string(text) + "\"");
  mpz_class rad(rad_str);
  if (rad < 1) throw ParseError("radicand must be positive: \"" + std::string(text) + "\"");
  return SignedRoot(coef, rad);
}

std::ostream& operator<<(std::ostream& os, const SignedRoot& r) {
  return os << r.to_string();
}

RadicalSum& RadicalSum::operator+=(const SignedRoot& t) {
  if (t.is_zero()) return *this;
  auto it = terms_.find(t.radicand());
  if (it == terms_.end()) {
    terms_.emplace(t.radicand(), t.coefficient());
  } else {
    it->second += t.coefficient();
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

RadicalSum& RadicalSum::operator+=(const RadicalSum& o) {
  for (const auto& [rad, coef] : o.terms_) *this += SignedRoot(coef, rad);
  return *this;
}

Rational RadicalSum::coefficient_of(const mpz_class& radicand) const {
  auto it = terms_.find(radicand);
  return it == terms_.end() ? Rational(0) : it->second;
}

double RadicalSum::to_double() const {
  double acc = 0.0;
  for (const auto& [rad, coef] : terms_)
    acc += coef.to_double() * std::sqrt(rad.get_d());
  return acc;
}

std::string RadicalSum::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [rad, coef] : terms_) {
    if (!out.empty()) out += " + ";
    out += SignedRoot(coef, rad).to_string();
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const RadicalSum& s) {
  return os << s.to_string();
}

}  // namespace stf
