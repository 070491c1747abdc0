#pragma once

// Biquard connection of a left-invariant integrable qc structure on a
// 7-dimensional Lie algebra, computed from the structure equations.
//
// Pipeline: sp(1)-connection forms with the scalar curvature S kept as a
// polynomial indeterminate -> qc Ricci 2-forms on H -> S from the trace
// identity -> T^0 and the torsion endomorphisms -> full torsion -> Christoffel
// symbols (Levi-Civita plus torsion correction) -> curvature -> audit.
//
// All functions below assume the normalization d eta_r|_H = 2 omega_r
// (frame.scale == 2); `normalize_scale` converts other frames.

#include <array>
#include <string>
#include <vector>

#include "qcalc/qc.hpp"

namespace qcalc {

inline const std::string kScalarCurvature = "S";

using Coords = std::vector<Rational>;

/// sp(1)-connection forms alpha_1..3; vertical coefficients may be affine in S.
struct SP1Forms {
  std::array<Form, 3> alpha;
  const Form& operator[](int r) const { return alpha[static_cast<std::size_t>(r - 1)]; }
};

/// Restrictions of the qc Ricci 2-forms rho_1..3 to H (affine in S).
struct RicciForms {
  std::array<Form, 3> rho;
  const Form& operator[](int r) const { return rho[static_cast<std::size_t>(r - 1)]; }
};

/// Bilinear form on H, indices are horizontal positions 0..3.
using Tensor2H = HMatrix;

/// Vector-valued antisymmetric 2-tensor: T(e_a, e_b), 1-based.
class TorsionTensor {
 public:
  explicit TorsionTensor(int dim = 7);
  int dim() const { return dim_; }
  const Coords& operator()(int a, int b) const { return slots_[index(a, b)]; }
  /// Sets T(a, b) = v and T(b, a) = -v.
  void set(int a, int b, const Coords& v);
  friend bool operator==(const TorsionTensor& x, const TorsionTensor& y) = default;

 private:
  std::size_t index(int a, int b) const { return static_cast<std::size_t>((a - 1) * dim_ + (b - 1)); }
  int dim_;
  std::vector<Coords> slots_;
};

/// Christoffel symbols: (a, b) -> nabla_{e_a} e_b, 1-based.
class Connection {
 public:
  explicit Connection(int dim = 7);
  int dim() const { return dim_; }
  const Coords& operator()(int a, int b) const { return gamma_[index(a, b)]; }
  Coords& operator()(int a, int b) { return gamma_[index(a, b)]; }
  /// nabla_{e_a} v for a constant-coefficient vector v.
  Coords covariant(int a, const Coords& v) const;

 private:
  std::size_t index(int a, int b) const { return static_cast<std::size_t>((a - 1) * dim_ + (b - 1)); }
  int dim_;
  std::vector<Coords> gamma_;
};

/// (0,4) tensor R(a, b, c, d) = g(R(e_a, e_b) e_c, e_d), 1-based.
class Tensor4 {
 public:
  explicit Tensor4(int dim = 7);
  int dim() const { return dim_; }
  const Rational& operator()(int a, int b, int c, int d) const { return v_[index(a, b, c, d)]; }
  Rational& operator()(int a, int b, int c, int d) { return v_[index(a, b, c, d)]; }
  bool is_zero() const;

 private:
  std::size_t index(int a, int b, int c, int d) const {
    return static_cast<std::size_t>((((a - 1) * dim_ + (b - 1)) * dim_ + (c - 1)) * dim_ + (d - 1));
  }
  int dim_;
  std::vector<Rational> v_;
};

/// Coframe change f^v = (2/scale) e^v on vertical covectors so that the frame
/// has scale 2. Identity for frames that already have scale 2.
struct NormalizedStructure {
  LieAlgebra algebra;
  QCFrame frame;
};
NormalizedStructure normalize_scale(const LieAlgebra& g, const QCFrame& frame);

/// alpha_i(X) = d eta_k(xi_j, X) on H and
/// alpha_i(xi_s) = d eta_s(xi_j, xi_k) - delta_is (S/2 + (1/2) sum_r d eta_r(xi_{r+1}, xi_{r+2})).
/// Throws NotIntegrable when bi1 fails.
SP1Forms sp1_connection_forms(const LieAlgebra& g, const QCFrame& frame);

/// 2 rho_k = d alpha_k + alpha_i ^ alpha_j, restricted to H when `horizontal`.
RicciForms ricci_forms(const LieAlgebra& g, const QCFrame& frame, const SP1Forms& alpha,
                       bool horizontal = true);

/// a*S + b = 0 from sum_a rho_r(e_a, I_r e_a) = -4S, one per r.
struct LinearEquation {
  Rational a;
  Rational b;
};
std::array<LinearEquation, 3> scalar_curvature_equations(const QCFrame& frame,
                                                         const ComplexTriple& complex,
                                                         const RicciForms& rho);

/// Common solution of the three trace equations. Throws InconsistentCurvature
/// or Underdetermined.
Rational solve_qc_scalar_curvature(const QCFrame& frame, const ComplexTriple& complex,
                                   const RicciForms& rho);

/// T^0(X, Y) = sum_r rho_r(X, -I_r Y) - 3 S g(X, Y). Throws InconsistentTorsion
/// unless the result is symmetric and trace-free.
Tensor2H t0_tensor(const QCFrame& frame, const ComplexTriple& complex, const RicciForms& rho,
                   const Rational& s);

/// T_{xi_r} with g(T_{xi_r} Z, Y) = (1/4)[T^0(-I_r Z, Y) - T^0(Z, I_r Y)];
/// entry (y, z) is g(T_{xi_r} e_z, e_y).
std::array<HMatrix, 3> torsion_endomorphisms(const ComplexTriple& complex, const Tensor2H& t0);

/// H x H: -[X,Y]_V; V x H: T_{xi_r} X; V x V: -S xi_k - [xi_i, xi_j]_H.
TorsionTensor assemble_torsion(const LieAlgebra& g, const QCFrame& frame,
                               const std::array<HMatrix, 3>& endomorphisms, const Rational& s);

/// Koszul formula for the left-invariant metric that is the identity in the basis.
Connection levi_civita(const LieAlgebra& g);

/// g(nabla_A B, C) = g(nabla^g_A B, C) + (1/2)[g(T(A,B),C) - g(T(B,C),A) + g(T(C,A),B)].
Connection biquard_connection(const LieAlgebra& g, const Connection& levi_civita,
                              const TorsionTensor& torsion);

/// T(e_a, e_b) = nabla_a e_b - nabla_b e_a - [e_a, e_b].
TorsionTensor torsion_of(const LieAlgebra& g, const Connection& connection);

/// R(e_a, e_b) e_c = nabla_a nabla_b e_c - nabla_b nabla_a e_c - nabla_{[e_a, e_b]} e_c, lowered.
Tensor4 curvature(const LieAlgebra& g, const Connection& connection);

struct AuditCheck {
  std::string name;
  bool passed = false;
  std::string detail;
  /// Informational checks do not affect validity.
  bool diagnostic = false;
};

/// Everything the pipeline produces, in the normalized (scale 2) coframe.
struct BiquardAnalysis {
  LieAlgebra algebra;
  QCFrame frame;
  ComplexTriple complex;
  SP1Forms alpha_symbolic;
  RicciForms rho_symbolic;
  Rational s;
  SP1Forms alpha;  ///< S substituted
  RicciForms rho;  ///< S substituted
  Tensor2H t0;
  std::array<HMatrix, 3> torsion_endos;
  TorsionTensor torsion;
  Connection levi_civita;
  Connection connection;
  Tensor4 curvature;
  std::vector<AuditCheck> audit;

  bool audit_passed() const;
};

/// Structural properties of the connection plus internal consistency identities.
std::vector<AuditCheck> audit(const BiquardAnalysis& analysis);

/// Runs the full pipeline, normalizing the scale first.
BiquardAnalysis analyze_biquard(const LieAlgebra& g, const QCFrame& frame);

}  // namespace qcalc
