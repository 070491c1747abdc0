#include <doctest.h>

#include "fixtures.hpp"
#include "qcalc/qc.hpp"

using namespace qcalc;
using fixtures::q;

TEST_SUITE("qc") {
  TEST_CASE("complex structures of the standard frame") {
    ComplexTriple t = derive_complex_structures(QCFrame::standard());
    const HMatrix id = HMatrix::identity();
    for (int r = 1; r <= 3; ++r) {
      CHECK(t[r] * t[r] == -id);
      CHECK(t[r].transpose() == -t[r]);
    }
    CHECK(t[1] * t[2] == t[3]);
    // g(I_r X, Y) = omega_r(X, Y): I_3 e_1 = e_4 since omega_3(e_1, e_4) = 1.
    CHECK(t[3](3, 0) == q(1));
    CHECK(t[1](1, 0) == q(1));
  }

  TEST_CASE("non-quaternionic triples are rejected") {
    QCFrame f = QCFrame::standard();
    f.omega[1] = Form::monomial({1, 3}) + Form::monomial({2, 4});  // wrong orientation
    CHECK_THROWS_AS(derive_complex_structures(f), NotQuaternionic);
    QCFrame g = QCFrame::standard();
    g.omega[0] = Scalar(2) * g.omega[0];
    CHECK_THROWS_AS(derive_complex_structures(g), NotQuaternionic);
  }

  TEST_CASE("frame validation") {
    QCFrame f = QCFrame::standard();
    f.vertical = {5, 6, 4};
    CHECK_THROWS_AS(f.validate(), InvalidFrame);
    QCFrame g = QCFrame::standard();
    g.omega[0] = Form::monomial({1, 5});
    CHECK_THROWS_AS(g.validate(), InvalidFrame);
  }

  TEST_CASE("compatibility and bi1 on the examples") {
    CHECK(check_compatibility(fixtures::g1(), QCFrame::standard(q(2))));
    CHECK(check_compatibility(fixtures::g2(), QCFrame::standard(q(2))));
    CHECK(check_compatibility(fixtures::heisenberg(), QCFrame::standard(q(1))));
    CHECK_FALSE(check_compatibility(fixtures::heisenberg(), QCFrame::standard(q(2))));
    CHECK(check_bi1(fixtures::g1(), QCFrame::standard()).ok);
    CHECK(check_bi1(fixtures::g2(), QCFrame::standard()).ok);
    CHECK(check_bi1(fixtures::heisenberg(), QCFrame::standard(q(1))).ok);
  }

  TEST_CASE("bi1 detects an asymmetric mixed term") {
    using fixtures::two_form;
    // d e5 gains e^{46} alone, without the matching e^{45} in d e6.
    LieAlgebra g = fixtures::make(7, {Form(2), Form(2), Form(2), Form(2),
                                      two_form({{1, 2, q(1)}, {3, 4, q(1)}, {4, 6, q(1)}}),
                                      two_form({{1, 3, q(1)}, {2, 4, q(-1)}}),
                                      two_form({{1, 4, q(1)}, {2, 3, q(1)}})});
    Bi1Result r = check_bi1(g, QCFrame::standard(q(1)));
    CHECK_FALSE(r.ok);
    CHECK_FALSE(r.violations.empty());
  }

  TEST_CASE("adapted shape of g1") {
    auto shape = adapted_shape(fixtures::g1(), QCFrame::standard());
    REQUIRE(shape.has_value());
    CHECK(shape->f[0].is_zero());
    CHECK(shape->f[1].is_zero());
    CHECK(shape->f[2] == Form::basis(4));
    CHECK_FALSE(adapted_shape(fixtures::g1(), QCFrame::standard(q(1))).has_value());
  }

  TEST_CASE("fundamental form and vertical integrability") {
    for (const auto& [g, s] : {std::pair{fixtures::g1(), q(2)}, {fixtures::g2(), q(2)}, {fixtures::heisenberg(), q(1)}}) {
      QCFrame f = QCFrame::standard(s);
      CHECK(d_fundamental_form(g, f).is_zero());
      CHECK(vertical_integrable(g, f));
    }
    Form omega = fundamental_form(QCFrame::standard());
    // omega_r ^ omega_r = 2 e^{1234} for each r.
    CHECK(omega == Scalar(6) * Form::monomial({1, 2, 3, 4}));
  }
}
