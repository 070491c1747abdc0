#pragma once

// Reference algebras built directly from structure constants, independent of
// the text format.

#include <initializer_list>
#include <tuple>
#include <vector>

#include "qcalc/exterior.hpp"
#include "qcalc/scalar.hpp"

namespace fixtures {

using qcalc::Form;
using qcalc::LieAlgebra;
using qcalc::Rational;
using qcalc::Scalar;

struct Term {
  int i;
  int j;
  Scalar c;
};

inline Rational q(long p, long d = 1) { return Rational(mpz_class(p), mpz_class(d)); }

inline Form two_form(std::initializer_list<Term> terms) {
  Form f(2);
  for (const auto& t : terms) f += Form::monomial({t.i, t.j}, t.c);
  return f;
}

inline LieAlgebra make(int dim, std::vector<Form> ds) { return LieAlgebra(dim, std::move(ds)); }

/// Quaternionic Heisenberg algebra, d eta|_H = omega (scale 1).
inline LieAlgebra heisenberg() {
  return make(7, {Form(2), Form(2), Form(2), Form(2),
                  two_form({{1, 2, q(1)}, {3, 4, q(1)}}),
                  two_form({{1, 3, q(1)}, {2, 4, q(-1)}}),
                  two_form({{1, 4, q(1)}, {2, 3, q(1)}})});
}

inline LieAlgebra g1() {
  return make(7, {Form(2),
                  two_form({{1, 5, q(1, 2)}, {3, 4, q(-1)}, {4, 6, q(1, 2)}}),
                  two_form({{1, 6, q(1, 2)}, {2, 4, q(1)}, {4, 5, q(-1, 2)}}),
                  two_form({{1, 4, q(-2)}}),
                  two_form({{1, 2, q(2)}, {3, 4, q(2)}, {4, 6, q(-1)}}),
                  two_form({{1, 3, q(2)}, {2, 4, q(-2)}, {4, 5, q(1)}}),
                  two_form({{1, 4, q(2)}, {2, 3, q(2)}, {5, 6, q(-1, 2)}})});
}

inline LieAlgebra g2() {
  return make(7, {Form(2),
                  two_form({{1, 2, q(2, 3)}, {1, 5, q(1, 6)}, {3, 4, q(-1, 3)}, {4, 6, q(1, 6)}}),
                  two_form({{1, 3, q(-2, 3)}, {1, 6, q(1, 6)}, {2, 4, q(-1)}, {4, 5, q(-1, 6)}}),
                  two_form({{1, 4, q(-2, 3)}}),
                  two_form({{1, 2, q(2)}, {3, 4, q(2)}, {4, 6, q(-1)}}),
                  two_form({{1, 3, q(2)}, {2, 4, q(-2)}, {4, 5, q(1)}}),
                  two_form({{1, 4, q(2)}, {2, 3, q(2)}, {5, 6, q(-1, 6)}})});
}

}  // namespace fixtures
