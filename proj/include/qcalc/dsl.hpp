#pragma once

// Text format for structure equations (`.alg` files).
//
//   # comment
//   algebra g1 dim 7 [param mu]
//   d e2 = (1/2) e15 - e34 + (1/2)e4^e6
//   qc horizontal 1 2 3 4 vertical 5 6 7 scale 2
//   omega1 = e12 + e34
//   flag = e1 | e1, e4 | ...
//
// Expressions: + - * / ^, parentheses, juxtaposition as multiplication,
// integers, the parameter name, and basis monomials e<digits> where every
// digit is an index (e42 = -e24). `^` is the wedge product between forms and
// an integer power on scalars. Each flag level lists its full basis.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcalc/lie_invariants.hpp"
#include "qcalc/qc.hpp"

namespace qcalc {

struct QCBlock {
  std::array<int, 4> horizontal{1, 2, 3, 4};
  std::array<int, 3> vertical{5, 6, 7};
  Rational scale{2};
  std::array<Form, 3> omega{Form(2), Form(2), Form(2)};
  friend bool operator==(const QCBlock&, const QCBlock&) = default;
};

struct AlgebraDocument {
  std::string name;
  int dim = 0;
  std::optional<std::string> parameter;
  /// d e^k at position k-1; absent lines are zero.
  std::vector<Form> differentials;
  std::optional<QCBlock> qc;
  /// levels[i-1] spans V^i, each entry a 1-form.
  std::optional<std::vector<std::vector<Form>>> flag;
  friend bool operator==(const AlgebraDocument&, const AlgebraDocument&) = default;
};

/// Throws ParseError with 1-based line and column.
AlgebraDocument parse_document(std::string_view text);

/// Canonical text; parse_document(print_document(d)) == d.
std::string print_document(const AlgebraDocument& doc);

/// Replaces the parameter by `value` everywhere and drops the declaration.
AlgebraDocument substitute_parameter(const AlgebraDocument& doc, const Rational& value);

/// Throws InvalidAlgebra on structural problems (not on d^2 != 0).
LieAlgebra to_algebra(const AlgebraDocument& doc);
/// Throws InvalidFrame if the document has no qc block.
QCFrame to_frame(const AlgebraDocument& doc);
/// Throws InvalidFlag if the document has no flag block.
Flag to_flag(const AlgebraDocument& doc);

}  // namespace qcalc
