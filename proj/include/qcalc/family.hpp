#pragma once

// One-parameter families of structure equations: the polynomial conditions
// imposed by d^2 = 0, their common rational roots, and specialization.

#include <string>
#include <vector>

#include "qcalc/lie_invariants.hpp"

namespace qcalc {

/// Structure constants may be polynomials in the single indeterminate `parameter`.
struct ParametricAlgebra {
  LieAlgebra algebra;
  std::string parameter;
};

/// Coefficients of every d(d e^k), normalized to primitive integer form with
/// positive leading coefficient and deduplicated. A nonzero constant
/// coefficient shows up as the constant polynomial 1.
std::vector<Poly> jacobi_constraints(const ParametricAlgebra& family);

struct FamilySolution {
  /// No constraints at all: every value gives a Lie algebra.
  bool all_values = false;
  /// Common rational roots, increasing; meaningful when !all_values.
  std::vector<Rational> roots;
};

FamilySolution solve_family(const ParametricAlgebra& family);

/// Substitutes the parameter and requires d^2 = 0. Throws NotALieAlgebra.
LieAlgebra specialize(const ParametricAlgebra& family, const Rational& value);

struct Fingerprint {
  std::vector<int> betti;
  bool nilpotent = false;
  bool solvable = false;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const LieAlgebra& g);

}  // namespace qcalc
