#include "qcalc/qc.hpp"

#include <algorithm>

namespace qcalc {

HMatrix HMatrix::identity() {
  HMatrix m;
  for (int i = 0; i < 4; ++i) m(i, i) = Rational(1);
  return m;
}

HMatrix HMatrix::transpose() const {
  HMatrix t;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) t(i, j) = (*this)(j, i);
  return t;
}

Rational HMatrix::trace() const {
  Rational t;
  for (int i = 0; i < 4; ++i) t += (*this)(i, i);
  return t;
}

bool HMatrix::is_zero() const {
  return std::all_of(m_.begin(), m_.end(), [](const Rational& x) { return x.is_zero(); });
}

HMatrix operator*(const HMatrix& a, const HMatrix& b) {
  HMatrix c;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) c(i, j) += a(i, k) * b(k, j);
  return c;
}

HMatrix operator+(const HMatrix& a, const HMatrix& b) {
  HMatrix c;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

HMatrix operator-(const HMatrix& a, const HMatrix& b) { return a + (-b); }

HMatrix operator*(const Rational& s, const HMatrix& a) {
  HMatrix c;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) c(i, j) = s * a(i, j);
  return c;
}

// ---------------------------------------------------------------------------

QCFrame QCFrame::standard(Rational scale) {
  QCFrame f;
  f.omega = {Form::monomial({1, 2}) + Form::monomial({3, 4}),
             Form::monomial({1, 3}) + Form::monomial({4, 2}),
             Form::monomial({1, 4}) + Form::monomial({2, 3})};
  f.scale = std::move(scale);
  return f;
}

IndexSet QCFrame::horizontal_set() const {
  IndexSet s;
  for (int i : horizontal) s = s.with(i);
  return s;
}

IndexSet QCFrame::vertical_set() const {
  IndexSet s;
  for (int i : vertical) s = s.with(i);
  return s;
}

void QCFrame::validate() const {
  IndexSet all;
  for (int i : horizontal) {
    if (i < 1 || i > 7 || all.contains(i)) throw InvalidFrame("bad horizontal index " + std::to_string(i));
    all = all.with(i);
  }
  for (int i : vertical) {
    if (i < 1 || i > 7 || all.contains(i)) throw InvalidFrame("bad vertical index " + std::to_string(i));
    all = all.with(i);
  }
  for (int r = 1; r <= 3; ++r) {
    const Form& w = omega_r(r);
    if (!w.is_zero() && w.degree() != 2) throw InvalidFrame("omega" + std::to_string(r) + " is not a 2-form");
    if (!(restrict_to_h(w) == w)) {
      throw InvalidFrame("omega" + std::to_string(r) + " has vertical terms");
    }
    if (w.indeterminate()) throw InvalidFrame("omega" + std::to_string(r) + " must be rational");
  }
  if (scale.is_zero()) throw InvalidFrame("scale must be nonzero");
}

HMatrix form_matrix(const QCFrame& frame, const Form& two_form) {
  HMatrix m;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      int i = frame.h_index(a), j = frame.h_index(b);
      if (i == j) continue;
      Scalar c = two_form.coefficient(IndexSet::of({i, j}));
      m(a, b) = i < j ? c.rational() : -c.rational();
    }
  return m;
}

ComplexTriple derive_complex_structures(const QCFrame& frame) {
  frame.validate();
  ComplexTriple t;
  for (int r = 1; r <= 3; ++r) {
    // g(I e_b, e_a) = omega(e_b, e_a), so I(a, b) = omega(b, a).
    t.I[static_cast<std::size_t>(r - 1)] = form_matrix(frame, frame.omega_r(r)).transpose();
  }
  const HMatrix id = HMatrix::identity();
  for (int r = 1; r <= 3; ++r) {
    const HMatrix& m = t[r];
    if (!(m * m == -id)) throw NotQuaternionic("I" + std::to_string(r) + "^2 != -id");
    if (!(m.transpose() * m == id)) throw NotQuaternionic("I" + std::to_string(r) + " is not orthogonal");
  }
  if (!(t[1] * t[2] == t[3])) throw NotQuaternionic("I1 I2 != I3");
  if (!(t[2] * t[1] == -t[3])) throw NotQuaternionic("I2 I1 != -I3");
  return t;
}

namespace {

void require_dim7(const LieAlgebra& g) {
  if (g.dim() != 7) throw InvalidFrame("qc frames need a 7-dimensional algebra");
}

}  // namespace

bool check_compatibility(const LieAlgebra& g, const QCFrame& frame) {
  require_dim7(g);
  frame.validate();
  for (int r = 1; r <= 3; ++r) {
    Form dh = frame.restrict_to_h(g.differential(frame.v_index(r)));
    if (!(dh == Scalar(frame.scale) * frame.omega_r(r))) return false;
  }
  return true;
}

Bi1Result check_bi1(const LieAlgebra& g, const QCFrame& frame) {
  require_dim7(g);
  frame.validate();
  Bi1Result result;
  auto fail = [&](std::string message) {
    result.ok = false;
    result.violations.push_back(std::move(message));
  };
  for (int s = 1; s <= 3; ++s)
    for (int k = 1; k <= 3; ++k) {
      Scalar pairing = evaluate(frame.eta(s), {frame.xi(k)});
      if (!(pairing == Scalar(s == k ? 1 : 0))) {
        fail("eta" + std::to_string(s) + "(xi" + std::to_string(k) + ") != delta");
      }
    }
  auto contracted = [&](int s, int k) {
    return frame.restrict_to_h(interior(frame.xi(s), g.differential(frame.v_index(k))));
  };
  for (int s = 1; s <= 3; ++s) {
    Form self = contracted(s, s);
    if (!self.is_zero()) {
      fail("(xi" + std::to_string(s) + " _| d eta" + std::to_string(s) + ")|_H = " + self.to_string());
    }
  }
  for (int s = 1; s <= 3; ++s)
    for (int k = s + 1; k <= 3; ++k) {
      Form lhs = contracted(s, k);
      Form rhs = -contracted(k, s);
      if (!(lhs == rhs)) {
        fail("(xi" + std::to_string(s) + " _| d eta" + std::to_string(k) + ")|_H = " + lhs.to_string() +
             " but -(xi" + std::to_string(k) + " _| d eta" + std::to_string(s) + ")|_H = " + rhs.to_string());
      }
    }
  return result;
}

std::optional<AdaptedShape> adapted_shape(const LieAlgebra& g, const QCFrame& frame) {
  require_dim7(g);
  frame.validate();
  if (!check_compatibility(g, frame)) return std::nullopt;
  const IndexSet hset = frame.horizontal_set();
  const IndexSet vset = frame.vertical_set();
  std::array<std::optional<Form>, 3> f;
  auto record = [&](int which, Form value) {
    auto& slot = f[static_cast<std::size_t>(which - 1)];
    if (slot && !(*slot == value)) return false;
    slot = std::move(value);
    return true;
  };
  std::array<Form, 3> mixed;
  for (int i = 1; i <= 3; ++i) {
    const Form& de = g.differential(frame.v_index(i));
    Form m(2);
    for (const auto& [key, c] : de.terms())
      if (key.intersects(hset) && key.intersects(vset)) m.add(key, c);
    const int j = cyc_next(i), k = cyc_prev(i);
    if (!interior(frame.xi(i), m).is_zero()) return std::nullopt;
    if (!record(j, -interior(frame.xi(k), m))) return std::nullopt;
    if (!record(k, interior(frame.xi(j), m))) return std::nullopt;
    mixed[static_cast<std::size_t>(i - 1)] = std::move(m);
  }
  AdaptedShape shape;
  for (int r = 1; r <= 3; ++r) {
    Form fr = f[static_cast<std::size_t>(r - 1)].value_or(Form(1));
    if (fr.is_zero()) fr = Form(1);
    if (fr.indeterminate() || !(frame.restrict_to_h(fr) == fr)) return std::nullopt;
    shape.f[static_cast<std::size_t>(r - 1)] = std::move(fr);
  }
  for (int i = 1; i <= 3; ++i) {
    const int j = cyc_next(i), k = cyc_prev(i);
    Form expected = wedge(shape.f[static_cast<std::size_t>(j - 1)], frame.eta(k)) -
                    wedge(shape.f[static_cast<std::size_t>(k - 1)], frame.eta(j));
    if (!(expected == mixed[static_cast<std::size_t>(i - 1)])) return std::nullopt;
  }
  return shape;
}

Form fundamental_form(const QCFrame& frame) {
  Form omega(4);
  for (int r = 1; r <= 3; ++r) omega += wedge(frame.omega_r(r), frame.omega_r(r));
  return omega;
}

Form d_fundamental_form(const LieAlgebra& g, const QCFrame& frame) {
  require_dim7(g);
  return d(g, fundamental_form(frame));
}

bool vertical_integrable(const LieAlgebra& g, const QCFrame& frame) {
  require_dim7(g);
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j) {
      Vector b = bracket(g, frame.v_index(i), frame.v_index(j));
      for (int h : frame.horizontal)
        if (!b(h).is_zero()) return false;
    }
  return true;
}

}  // namespace qcalc
