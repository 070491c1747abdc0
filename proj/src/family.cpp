#include "qcalc/family.hpp"

#include <algorithm>

namespace qcalc {

namespace {

Poly normalized(const Poly& p, const std::string& var) {
  std::vector<Rational> coeffs;
  for (const auto& c : p.primitive_integer_form()) coeffs.emplace_back(c, mpz_class(1));
  return Poly(var, std::move(coeffs));
}

bool poly_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coefficients().rbegin(), a.coefficients().rend(),
                                      b.coefficients().rbegin(), b.coefficients().rend());
}

}  // namespace

std::vector<Poly> jacobi_constraints(const ParametricAlgebra& family) {
  std::vector<Poly> out;
  for (const auto& violation : jacobi_check(family.algebra)) {
    for (const auto& [key, c] : violation.value.terms()) {
      Poly p = normalized(c.as_poly(family.parameter), family.parameter);
      if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
    }
  }
  std::sort(out.begin(), out.end(), poly_less);
  return out;
}

FamilySolution solve_family(const ParametricAlgebra& family) {
  FamilySolution solution;
  auto constraints = jacobi_constraints(family);
  if (constraints.empty()) {
    solution.all_values = true;
    return solution;
  }
  std::vector<Rational> common = rational_roots(constraints.front());
  for (std::size_t i = 1; i < constraints.size() && !common.empty(); ++i) {
    std::erase_if(common, [&](const Rational& r) { return !constraints[i].evaluate(r).is_zero(); });
  }
  solution.roots = std::move(common);
  return solution;
}

LieAlgebra specialize(const ParametricAlgebra& family, const Rational& value) {
  LieAlgebra g = family.algebra.substitute(value);
  auto violations = jacobi_check(g);
  if (!violations.empty()) {
    const auto& v = violations.front();
    throw NotALieAlgebra(family.parameter + " = " + value.to_string() + ": d(d e" +
                         std::to_string(v.index) + ") = " + v.value.to_string());
  }
  return g;
}

Fingerprint fingerprint(const LieAlgebra& g) {
  SeriesInfo series = derived_and_central_series(g);
  return {betti_numbers(g), series.is_nilpotent, series.is_solvable};
}

}  // namespace qcalc
