#pragma once

// Exterior algebra of the dual of a Lie algebra given by structure
// equations d e^k = sum c e^{ij}, and the Chevalley-Eilenberg differential.
//
// Basis indices are 1-based throughout (e^1 .. e^n, e_1 .. e_n), matching
// the notation of structure equations. Convention: for left-invariant
// 1-forms d alpha(X, Y) = -alpha([X, Y]), and e^{ij}(e_i, e_j) = 1.

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qcalc/linalg.hpp"
#include "qcalc/scalar.hpp"

namespace qcalc {

inline constexpr int kMaxDim = 9;

/// Strictly increasing index tuple, stored as a bitmask (bit i-1 <-> e^i).
/// Orders lexicographically as a tuple among sets of equal size.
class IndexSet {
 public:
  constexpr IndexSet() = default;
  constexpr explicit IndexSet(std::uint16_t bits) : bits_(bits) {}
  static IndexSet of(std::initializer_list<int> indices);
  static IndexSet range(int first, int last);

  std::uint16_t bits() const { return bits_; }
  int size() const { return __builtin_popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  bool contains(int i) const { return (bits_ >> (i - 1)) & 1U; }
  bool intersects(IndexSet o) const { return (bits_ & o.bits_) != 0; }
  std::vector<int> indices() const;
  int max_index() const { return bits_ == 0 ? 0 : 32 - __builtin_clz(bits_); }

  IndexSet with(int i) const { return IndexSet(static_cast<std::uint16_t>(bits_ | (1U << (i - 1)))); }
  IndexSet without(int i) const {
    return IndexSet(static_cast<std::uint16_t>(bits_ & ~(1U << (i - 1))));
  }
  friend IndexSet operator|(IndexSet a, IndexSet b) {
    return IndexSet(static_cast<std::uint16_t>(a.bits_ | b.bits_));
  }

  friend bool operator==(IndexSet a, IndexSet b) = default;
  friend bool operator<(IndexSet a, IndexSet b);

  /// "e125" style digit string (without the leading e): "125".
  std::string digits() const;

 private:
  std::uint16_t bits_ = 0;
};

/// Sign of the shuffle that sorts the concatenation a ++ b, or 0 if they overlap.
int shuffle_sign(IndexSet a, IndexSet b);

/// Homogeneous exterior form with sparse exact coefficients. Zero
/// coefficients are never stored.
class Form {
 public:
  using Terms = std::map<IndexSet, Scalar>;

  explicit Form(int degree = 0) : degree_(degree) {}

  /// e^i.
  static Form basis(int i);
  /// c * e^{i1} ^ ... ^ e^{ik} for indices in any order (sign applied).
  static Form monomial(const std::vector<int>& indices, const Scalar& coefficient = Scalar(1));
  static Form constant(const Scalar& c);

  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(IndexSet key) const;
  /// Adds c to the coefficient of `key` (key size must equal degree).
  void add(IndexSet key, const Scalar& c);
  std::optional<std::string> indeterminate() const;
  /// Largest index appearing in any term (0 for zero/constant forms).
  int max_index() const;

  /// Drops every term that touches one of `indices`.
  Form without_indices(IndexSet indices) const;
  Form substitute(const Rational& value) const;

  Form operator-() const;
  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(const Scalar& c, const Form& f);
  friend Form operator*(const Form& f, const Scalar& c) { return c * f; }
  friend Form operator/(const Form& f, const Rational& c);

  friend bool operator==(const Form& a, const Form& b);

  /// "2 e12 + 2 e34 - e46"; "0" for the zero form. Parseable by the DSL.
  std::string to_string() const;

 private:
  int degree_;
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const Form& f);

/// Graded-anticommutative product.
Form wedge(const Form& a, const Form& b);
/// f ^ f ^ ... (k factors); k = 0 gives the constant 1.
Form wedge_power(const Form& f, int k);

/// Tangent vector sum c_i e_i.
class Vector {
 public:
  Vector() = default;
  explicit Vector(int dim) : components_(static_cast<std::size_t>(dim)) {}
  explicit Vector(std::vector<Scalar> components) : components_(std::move(components)) {}
  static Vector basis(int dim, int i);

  int dim() const { return static_cast<int>(components_.size()); }
  /// 1-based component.
  const Scalar& operator()(int i) const { return components_[static_cast<std::size_t>(i - 1)]; }
  Scalar& operator()(int i) { return components_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<Scalar>& components() const { return components_; }
  bool is_zero() const;

  friend Vector operator+(const Vector& a, const Vector& b);
  friend Vector operator-(const Vector& a, const Vector& b);
  friend Vector operator*(const Scalar& c, const Vector& v);
  friend bool operator==(const Vector& a, const Vector& b) = default;

  /// Requires rational components (ParametricNotSupported otherwise).
  linalg::Row to_row() const;
  static Vector from_row(const linalg::Row& row);

  std::string to_string() const;

 private:
  std::vector<Scalar> components_;
};

/// Alternating multilinear evaluation f(v_1, ..., v_k).
Scalar evaluate(const Form& f, std::span<const Vector> vectors);
Scalar evaluate(const Form& f, std::initializer_list<Vector> vectors);
/// (v _| f)(X_1..X_{p-1}) = f(v, X_1..X_{p-1}).
Form interior(const Vector& v, const Form& f);

/// Structure equations: the differentials of the dual basis covectors.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  /// Throws InvalidAlgebra unless every differential is a 2-form over 1..dim
  /// and dim <= kMaxDim.
  LieAlgebra(int dim, std::vector<Form> differentials);

  int dim() const { return dim_; }
  /// d e^k, 1-based.
  const Form& differential(int k) const { return differentials_[static_cast<std::size_t>(k - 1)]; }
  const std::vector<Form>& differentials() const { return differentials_; }
  std::optional<std::string> indeterminate() const;

  /// c with [e_i, e_j] = sum_k c_ij^k e_k, i.e. -(d e^k)(e_i, e_j).
  Scalar structure_constant(int i, int j, int k) const;

  LieAlgebra substitute(const Rational& value) const;
  /// Algebra in the coframe f^j = factors[j-1] * e^j.
  LieAlgebra rescaled(std::span<const Rational> factors) const;
  /// Algebra in the coframe f^i = sum_j change[i][j] e^j (change invertible).
  LieAlgebra transformed(const linalg::Matrix& change) const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) = default;

 private:
  int dim_ = 0;
  std::vector<Form> differentials_;
};

/// Chevalley-Eilenberg differential (the antiderivation extending d e^k).
Form d(const LieAlgebra& g, const Form& f);

struct JacobiViolation {
  int index;   ///< k with d(d e^k) != 0
  Form value;  ///< d(d e^k)
};

std::vector<JacobiViolation> jacobi_check(const LieAlgebra& g);

Vector bracket(const LieAlgebra& g, int i, int j);
Vector bracket(const LieAlgebra& g, const Vector& x, const Vector& y);

}  // namespace qcalc
