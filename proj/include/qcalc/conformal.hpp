#pragma once

// Kulkarni-Nomizu products and the qc conformal curvature tensor of a
// 7-dimensional qc structure, evaluated on horizontal vectors only.

#include <array>

#include "qcalc/biquard.hpp"

namespace qcalc {

/// (0,4) tensor on H indexed by horizontal positions 0..3.
class HTensor4 {
 public:
  const Rational& operator()(int x, int y, int z, int v) const { return v_[index(x, y, z, v)]; }
  Rational& operator()(int x, int y, int z, int v) { return v_[index(x, y, z, v)]; }
  bool is_zero() const;

  friend HTensor4 operator+(const HTensor4& a, const HTensor4& b);
  friend HTensor4 operator*(const Rational& c, const HTensor4& a);
  friend bool operator==(const HTensor4& a, const HTensor4& b) = default;

 private:
  static std::size_t index(int x, int y, int z, int v) {
    return static_cast<std::size_t>(((x * 4 + y) * 4 + z) * 4 + v);
  }
  std::array<Rational, 256> v_{};
};

/// (mu ⊼ nu)(X,Y,Z,V) = mu(X,Z)nu(Y,V) + mu(Y,V)nu(X,Z) - mu(Y,Z)nu(X,V) - mu(X,V)nu(Y,Z).
HTensor4 kulkarni_nomizu(const Tensor2H& mu, const Tensor2H& nu);

/// mu(X,Y) nu(Z,V).
HTensor4 tensor_product(const Tensor2H& mu, const Tensor2H& nu);

/// R restricted to horizontal 4-tuples of `frame`.
HTensor4 horizontal_part(const Tensor4& r, const QCFrame& frame);

/// The five groups of W^qc, kept apart so that each can be inspected:
///   curvature     R
///   g_l0          g ⊼ L0,                  L0 = T0 / 2
///   omega_l0      sum_s omega_s ⊼ I_s L0,  I_s L0(X,Y) = -L0(X, I_s Y)
///   torsion       -1/2 sum_s [omega_s(X,Y){T0(Z,I_s V) - T0(I_s Z,V)}
///                             + omega_s(Z,V){T0(X,I_s Y) - T0(I_s X,Y)}]
///   scalar        S/4 [g ⊼ g + sum_s (omega_s ⊼ omega_s + 4 omega_s ⊗ omega_s)]
struct WqcTerms {
  HTensor4 curvature;
  HTensor4 g_l0;
  HTensor4 omega_l0;
  HTensor4 torsion;
  HTensor4 scalar;

  HTensor4 total() const { return curvature + g_l0 + omega_l0 + torsion + scalar; }
};

WqcTerms wqc_terms(const Tensor4& r, const Tensor2H& t0, const Rational& s, const QCFrame& frame,
                   const ComplexTriple& complex);

HTensor4 wqc_tensor(const Tensor4& r, const Tensor2H& t0, const Rational& s, const QCFrame& frame,
                    const ComplexTriple& complex);

HTensor4 wqc_tensor(const BiquardAnalysis& analysis);

/// Every component vanishes exactly.
bool is_qc_conformally_flat(const HTensor4& w);

}  // namespace qcalc
