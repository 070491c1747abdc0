#pragma once

// Exact coefficient arithmetic: arbitrary-precision rationals, univariate
// polynomials over them, and a tagged Scalar that is one or the other.

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qcalc/errors.hpp"

namespace qcalc {

/// Canonical fraction p/q with q > 0 and gcd(|p|, q) = 1.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT: implicit by design of literals
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(mpq_class value);

  /// Parses "p", "-p" or "p/q". Throws std::invalid_argument.
  static Rational parse(std::string_view text);

  mpz_class num() const { return value_.get_num(); }
  mpz_class den() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

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
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// "p/q", or "p" for integers.
  std::string to_string() const;

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Univariate polynomial with rational coefficients, lowest degree first.
/// The zero polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;
  Poly(std::string indeterminate, std::vector<Rational> coefficients);

  static Poly variable(std::string indeterminate);
  static Poly constant(std::string indeterminate, Rational value);

  const std::string& indeterminate() const { return var_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational coefficient(int power) const;
  Rational leading() const;

  Rational evaluate(const Rational& value) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& c, const Poly& p);

  friend bool operator==(const Poly& a, const Poly& b) = default;

  /// Integer coefficients with content 1 and positive leading coefficient;
  /// same roots as *this.
  std::vector<mpz_class> primitive_integer_form() const;

  /// "3*mu^2+4*mu+1".
  std::string to_string() const;

 private:
  void trim();

  std::string var_;
  std::vector<Rational> coeffs_;
};

/// Distinct rational roots in increasing order. Throws ZeroPolynomial.
std::vector<Rational> rational_roots(const Poly& p);

/// Solves a*x + b = 0. Throws Inconsistent (a=0, b!=0) or Underdetermined.
Rational solve_linear(const Rational& a, const Rational& b);

/// Rational, or polynomial in a single named indeterminate. Polynomials of
/// degree <= 0 are always stored as Rational.
class Scalar {
 public:
  Scalar() : value_(Rational{}) {}
  Scalar(long value) : value_(Rational(value)) {}  // NOLINT
  Scalar(Rational value) : value_(std::move(value)) {}  // NOLINT
  Scalar(Poly value);  // NOLINT

  static Scalar variable(std::string name) { return Scalar(Poly::variable(std::move(name))); }

  bool is_rational() const { return std::holds_alternative<Rational>(value_); }
  bool is_zero() const;
  /// Throws ParametricNotSupported when the value is polynomial.
  const Rational& rational() const;
  const Poly* poly() const { return std::get_if<Poly>(&value_); }
  std::optional<std::string> indeterminate() const;

  /// Treats a rational value as a constant polynomial in `name`.
  Poly as_poly(const std::string& name) const;
  Rational substitute(const Rational& value) const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Rational& b);
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  friend bool operator==(const Scalar& a, const Scalar& b) = default;

  std::string to_string() const;

 private:
  std::variant<Rational, Poly> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Common indeterminate of two optional names; throws IndeterminateMismatch.
std::optional<std::string> merge_indeterminate(const std::optional<std::string>& a,
                                               const std::optional<std::string>& b);

}  // namespace qcalc
