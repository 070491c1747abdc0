#pragma once

// Quaternionic contact frames on 7-dimensional Lie algebras.
//
// A frame splits the basis into 4 horizontal and 3 vertical indices, takes
// eta_r = e^{v_r}, xi_r = e_{v_r}, fixes the metric to the identity in that
// basis, and declares three Kaehler 2-forms omega_r on H. `scale` is the
// constant lambda with d eta_r|_H = lambda * omega_r.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qcalc/exterior.hpp"

namespace qcalc {

/// 4x4 rational matrix over horizontal positions 0..3 (frame order).
class HMatrix {
 public:
  HMatrix() = default;
  static HMatrix identity();

  const Rational& operator()(int row, int col) const { return m_[index(row, col)]; }
  Rational& operator()(int row, int col) { return m_[index(row, col)]; }

  HMatrix transpose() const;
  Rational trace() const;
  bool is_zero() const;
  bool is_symmetric() const { return *this == transpose(); }

  friend HMatrix operator*(const HMatrix& a, const HMatrix& b);
  friend HMatrix operator+(const HMatrix& a, const HMatrix& b);
  friend HMatrix operator-(const HMatrix& a, const HMatrix& b);
  friend HMatrix operator*(const Rational& c, const HMatrix& a);
  HMatrix operator-() const { return Rational(-1) * *this; }
  friend bool operator==(const HMatrix& a, const HMatrix& b) = default;

 private:
  static std::size_t index(int r, int c) { return static_cast<std::size_t>(r * 4 + c); }
  std::array<Rational, 16> m_{};
};

struct QCFrame {
  std::array<int, 4> horizontal{1, 2, 3, 4};
  std::array<int, 3> vertical{5, 6, 7};
  std::array<Form, 3> omega;
  Rational scale{2};

  /// omega_1 = e12+e34, omega_2 = e13+e42, omega_3 = e14+e23 on 1..4 | 5,6,7.
  static QCFrame standard(Rational scale = Rational(2));

  /// eta_r and xi_r, r in 1..3.
  Form eta(int r) const { return Form::basis(vertical[static_cast<std::size_t>(r - 1)]); }
  Vector xi(int r) const { return Vector::basis(7, vertical[static_cast<std::size_t>(r - 1)]); }
  Vector h(int a) const { return Vector::basis(7, horizontal[static_cast<std::size_t>(a)]); }
  int v_index(int r) const { return vertical[static_cast<std::size_t>(r - 1)]; }
  int h_index(int a) const { return horizontal[static_cast<std::size_t>(a)]; }
  const Form& omega_r(int r) const { return omega[static_cast<std::size_t>(r - 1)]; }

  IndexSet horizontal_set() const;
  IndexSet vertical_set() const;
  /// Restriction |_H: delete every term containing a vertical covector.
  Form restrict_to_h(const Form& f) const { return f.without_indices(vertical_set()); }

  /// Throws InvalidFrame unless the indices partition 1..7 and each omega_r
  /// is a horizontal 2-form.
  void validate() const;
};

/// (r, s, t) cyclic successor helpers: next(1)=2, next(2)=3, next(3)=1.
inline int cyc_next(int r) { return r % 3 + 1; }
inline int cyc_prev(int r) { return (r + 1) % 3 + 1; }

/// I_r with g(I_r X, Y) = omega_r(X, Y); column b is I_r e_{h_b}.
struct ComplexTriple {
  std::array<HMatrix, 3> I;
  const HMatrix& operator[](int r) const { return I[static_cast<std::size_t>(r - 1)]; }
};

/// Matrix omega_r(e_{h_a}, e_{h_b}).
HMatrix form_matrix(const QCFrame& frame, const Form& two_form);

/// Throws NotQuaternionic unless I_r^2 = -1, I_1 I_2 = -I_2 I_1 = I_3 and
/// each I_r is orthogonal.
ComplexTriple derive_complex_structures(const QCFrame& frame);

/// d eta_r|_H == scale * omega_r for r = 1..3.
bool check_compatibility(const LieAlgebra& g, const QCFrame& frame);

struct Bi1Result {
  bool ok = true;
  std::vector<std::string> violations;
};

/// eta_s(xi_k) = delta_sk, (xi_s _| d eta_s)|_H = 0,
/// (xi_s _| d eta_k)|_H = -(xi_k _| d eta_s)|_H.
Bi1Result check_bi1(const LieAlgebra& g, const QCFrame& frame);

/// Horizontal 1-forms f_1, f_2, f_3 with
///   d eta_i = scale * omega_i + f_j ^ eta_k - f_k ^ eta_j   (i, j, k cyclic)
/// modulo vertical 2-forms. The mixed terms are read in the given coframe,
/// which for scale 2 is the eta -> eta/2 rescaling of the scale-1 pattern.
struct AdaptedShape {
  std::array<Form, 3> f;
};

/// nullopt when the structure equations do not have the adapted pattern.
std::optional<AdaptedShape> adapted_shape(const LieAlgebra& g, const QCFrame& frame);

/// Omega = sum_r omega_r ^ omega_r.
Form fundamental_form(const QCFrame& frame);
Form d_fundamental_form(const LieAlgebra& g, const QCFrame& frame);

/// [xi_i, xi_j] has no horizontal component for all i < j.
bool vertical_integrable(const LieAlgebra& g, const QCFrame& frame);

}  // namespace qcalc
