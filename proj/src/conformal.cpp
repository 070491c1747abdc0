#include "qcalc/conformal.hpp"

#include <algorithm>

namespace qcalc {

bool HTensor4::is_zero() const {
  return std::all_of(v_.begin(), v_.end(), [](const Rational& x) { return x.is_zero(); });
}

HTensor4 operator+(const HTensor4& a, const HTensor4& b) {
  HTensor4 c;
  for (std::size_t i = 0; i < c.v_.size(); ++i) c.v_[i] = a.v_[i] + b.v_[i];
  return c;
}

HTensor4 operator*(const Rational& k, const HTensor4& a) {
  HTensor4 c;
  for (std::size_t i = 0; i < c.v_.size(); ++i) c.v_[i] = k * a.v_[i];
  return c;
}

namespace {

template <typename F>
HTensor4 build(F&& f) {
  HTensor4 t;
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      for (int z = 0; z < 4; ++z)
        for (int v = 0; v < 4; ++v) t(x, y, z, v) = f(x, y, z, v);
  return t;
}

// B(X, I Y) for a bilinear form B, as a matrix.
HMatrix compose_right(const HMatrix& b, const HMatrix& I) { return b * I; }
// B(I X, Y).
HMatrix compose_left(const HMatrix& b, const HMatrix& I) { return I.transpose() * b; }

}  // namespace

HTensor4 kulkarni_nomizu(const Tensor2H& mu, const Tensor2H& nu) {
  return build([&](int x, int y, int z, int v) {
    return mu(x, z) * nu(y, v) + mu(y, v) * nu(x, z) - mu(y, z) * nu(x, v) - mu(x, v) * nu(y, z);
  });
}

HTensor4 tensor_product(const Tensor2H& mu, const Tensor2H& nu) {
  return build([&](int x, int y, int z, int v) { return mu(x, y) * nu(z, v); });
}

HTensor4 horizontal_part(const Tensor4& r, const QCFrame& frame) {
  return build([&](int x, int y, int z, int v) {
    return r(frame.h_index(x), frame.h_index(y), frame.h_index(z), frame.h_index(v));
  });
}

WqcTerms wqc_terms(const Tensor4& r, const Tensor2H& t0, const Rational& s, const QCFrame& frame,
                   const ComplexTriple& complex) {
  const Rational half(mpz_class(1), mpz_class(2));
  const HMatrix g = HMatrix::identity();
  const HMatrix l0 = half * t0;

  WqcTerms w;
  w.curvature = horizontal_part(r, frame);
  w.g_l0 = kulkarni_nomizu(g, l0);

  HTensor4 gg = kulkarni_nomizu(g, g);
  for (int sidx = 1; sidx <= 3; ++sidx) {
    const HMatrix& I = complex[sidx];
    const HMatrix omega = form_matrix(frame, frame.omega_r(sidx));
    w.omega_l0 = w.omega_l0 + kulkarni_nomizu(omega, -compose_right(l0, I));

    const HMatrix skew = compose_right(t0, I) - compose_left(t0, I);
    w.torsion = w.torsion + -half * (tensor_product(omega, skew) + tensor_product(skew, omega));

    gg = gg + kulkarni_nomizu(omega, omega) + Rational(4) * tensor_product(omega, omega);
  }
  w.scalar = (s / Rational(4)) * gg;
  return w;
}

HTensor4 wqc_tensor(const Tensor4& r, const Tensor2H& t0, const Rational& s, const QCFrame& frame,
                    const ComplexTriple& complex) {
  return wqc_terms(r, t0, s, frame, complex).total();
}

HTensor4 wqc_tensor(const BiquardAnalysis& an) {
  return wqc_tensor(an.curvature, an.t0, an.s, an.frame, an.complex);
}

bool is_qc_conformally_flat(const HTensor4& w) { return w.is_zero(); }

}  // namespace qcalc
