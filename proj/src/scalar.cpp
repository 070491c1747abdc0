#include "qcalc/scalar.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qcalc {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  std::string num(text.substr(0, slash));
  std::string den = slash == std::string_view::npos ? "1" : std::string(text.substr(slash + 1));
  auto valid = [](const std::string& s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i >= s.size()) return false;
    return std::all_of(s.begin() + static_cast<long>(i), s.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  if (!valid(num, true) || !valid(den, false)) {
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  }
  if (num[0] == '+') num.erase(0, 1);
  mpz_class d(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(mpz_class(num), d);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

// ---------------------------------------------------------------------------

Poly::Poly(std::string indeterminate, std::vector<Rational> coefficients)
    : var_(std::move(indeterminate)), coeffs_(std::move(coefficients)) {
  trim();
}

Poly Poly::variable(std::string indeterminate) {
  return Poly(std::move(indeterminate), {Rational(0), Rational(1)});
}

Poly Poly::constant(std::string indeterminate, Rational value) {
  return Poly(std::move(indeterminate), {std::move(value)});
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Poly::coefficient(int power) const {
  if (power < 0 || power >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<std::size_t>(power)];
}

Rational Poly::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational Poly::evaluate(const Rational& value) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * value + *it;
  return acc;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

namespace {

const std::string& common_var(const Poly& a, const Poly& b) {
  if (a.indeterminate().empty()) return b.indeterminate();
  if (b.indeterminate().empty() || a.indeterminate() == b.indeterminate()) return a.indeterminate();
  throw IndeterminateMismatch("cannot combine polynomials in '" + a.indeterminate() + "' and '" +
                              b.indeterminate() + "'");
}

}  // namespace

Poly operator+(const Poly& a, const Poly& b) {
  const std::string& var = common_var(a, b);
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = a.coefficient(static_cast<int>(i)) + b.coefficient(static_cast<int>(i));
  }
  return Poly(var, std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  const std::string& var = common_var(a, b);
  if (a.is_zero() || b.is_zero()) return Poly(var, {});
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(var, std::move(c));
}

Poly operator*(const Rational& k, const Poly& p) {
  Poly r = p;
  for (auto& c : r.coeffs_) c *= k;
  r.trim();
  return r;
}

std::vector<mpz_class> Poly::primitive_integer_form() const {
  if (is_zero()) return {};
  mpz_class lcm_den = 1;
  for (const auto& c : coeffs_) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.den().get_mpz_t());
  std::vector<mpz_class> ints;
  ints.reserve(coeffs_.size());
  for (const auto& c : coeffs_) ints.push_back(c.num() * (lcm_den / c.den()));
  mpz_class content = 0;
  for (const auto& v : ints) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
  if (ints.back() < 0) content = -content;
  for (auto& v : ints) v /= content;
  return ints;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    Rational c = coefficient(k);
    if (c.is_zero()) continue;
    bool negative = c.sign() < 0;
    Rational mag = negative ? -c : c;
    if (negative) os << '-';
    else if (!first) os << '+';
    first = false;
    bool unit = mag == Rational(1);
    if (k == 0) {
      os << mag;
      continue;
    }
    if (!unit) os << mag << '*';
    os << var_;
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

// ---------------------------------------------------------------------------

namespace {

std::vector<mpz_class> positive_divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// Exact test of p/q as a root of the integer polynomial: sum a_i p^i q^(n-i).
bool is_root(const std::vector<mpz_class>& a, const mpz_class& p, const mpz_class& q) {
  // Homogenized Horner: acc_k = acc_{k+1} * p + a_k * q^(n-k).
  mpz_class acc = 0;
  mpz_class qpow = 1;
  std::vector<mpz_class> qpows(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    qpows[a.size() - 1 - i] = qpow;
    qpow *= q;
  }
  for (std::size_t i = a.size(); i-- > 0;) acc = acc * p + a[i] * qpows[i];
  return acc == 0;
}

// Synthetic division of the integer polynomial by (q x - p); exact when p/q is a root.
std::vector<mpz_class> deflate(const std::vector<mpz_class>& a, const mpz_class& p,
                               const mpz_class& q) {
  std::size_t n = a.size() - 1;
  std::vector<Rational> quotient(n);
  Rational r(p, q);
  Rational carry;
  for (std::size_t i = n; i >= 1; --i) {
    carry = carry * r + Rational(a[i], 1);
    quotient[i - 1] = carry;
  }
  Poly qp("x", quotient);
  return qp.primitive_integer_form();
}

}  // namespace

std::vector<Rational> rational_roots(const Poly& poly) {
  if (poly.is_zero()) throw ZeroPolynomial("rational_roots of the zero polynomial");
  std::vector<mpz_class> a = poly.primitive_integer_form();
  std::vector<Rational> roots;
  // Factor out x^k.
  std::size_t shift = 0;
  while (shift < a.size() && a[shift] == 0) ++shift;
  if (shift > 0) {
    roots.emplace_back(0);
    a.erase(a.begin(), a.begin() + static_cast<long>(shift));
  }
  bool progress = true;
  while (a.size() > 1 && progress) {
    progress = false;
    auto ps = positive_divisors(a.front());
    auto qs = positive_divisors(a.back());
    for (const auto& q : qs) {
      for (const auto& p : ps) {
        for (int s : {1, -1}) {
          mpz_class ps_ = p * s;
          mpz_class g;
          mpz_gcd(g.get_mpz_t(), ps_.get_mpz_t(), q.get_mpz_t());
          if (g != 1) continue;
          if (is_root(a, ps_, q)) {
            roots.emplace_back(ps_, q);
            a = deflate(a, ps_, q);
            progress = true;
            break;
          }
        }
        if (progress) break;
      }
      if (progress) break;
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

Rational solve_linear(const Rational& a, const Rational& b) {
  if (a.is_zero()) {
    if (b.is_zero()) throw Underdetermined("0*x + 0 = 0 holds for every x");
    throw Inconsistent("0*x + " + b.to_string() + " = 0 has no solution");
  }
  return -b / a;
}

// ---------------------------------------------------------------------------

Scalar::Scalar(Poly value) {
  if (value.degree() <= 0) value_ = value.coefficient(0);
  else value_ = std::move(value);
}

bool Scalar::is_zero() const { return is_rational() && std::get<Rational>(value_).is_zero(); }

const Rational& Scalar::rational() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return *r;
  throw ParametricNotSupported("expected a rational value, got polynomial " + to_string());
}

std::optional<std::string> Scalar::indeterminate() const {
  if (const auto* p = poly()) return p->indeterminate();
  return std::nullopt;
}

Poly Scalar::as_poly(const std::string& name) const {
  if (const auto* p = poly()) {
    if (p->indeterminate() != name) {
      throw IndeterminateMismatch("expected indeterminate '" + name + "', got '" +
                                  p->indeterminate() + "'");
    }
    return *p;
  }
  return Poly::constant(name, std::get<Rational>(value_));
}

Rational Scalar::substitute(const Rational& value) const {
  if (const auto* p = poly()) return p->evaluate(value);
  return std::get<Rational>(value_);
}

std::optional<std::string> merge_indeterminate(const std::optional<std::string>& a,
                                               const std::optional<std::string>& b) {
  if (!a) return b;
  if (!b || *a == *b) return a;
  throw IndeterminateMismatch("mixed indeterminates '" + *a + "' and '" + *b + "'");
}

namespace {

template <typename PolyOp, typename RatOp>
Scalar combine(const Scalar& a, const Scalar& b, PolyOp poly_op, RatOp rat_op) {
  auto var = merge_indeterminate(a.indeterminate(), b.indeterminate());
  if (!var) return Scalar(rat_op(a.rational(), b.rational()));
  return Scalar(poly_op(a.as_poly(*var), b.as_poly(*var)));
}

}  // namespace

Scalar Scalar::operator-() const {
  if (const auto* p = poly()) return Scalar(-*p);
  return Scalar(-std::get<Rational>(value_));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  return combine(a, b, [](const Poly& x, const Poly& y) { return x + y; },
                 [](const Rational& x, const Rational& y) { return x + y; });
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  return combine(a, b, [](const Poly& x, const Poly& y) { return x - y; },
                 [](const Rational& x, const Rational& y) { return x - y; });
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  return combine(a, b, [](const Poly& x, const Poly& y) { return x * y; },
                 [](const Rational& x, const Rational& y) { return x * y; });
}

Scalar operator/(const Scalar& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  Rational inv = Rational(1) / b;
  if (const auto* p = a.poly()) return Scalar(inv * *p);
  return Scalar(a.rational() * inv);
}

std::string Scalar::to_string() const {
  if (const auto* p = poly()) return p->to_string();
  return std::get<Rational>(value_).to_string();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace qcalc
