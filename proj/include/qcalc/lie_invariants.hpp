#pragma once

// Invariants of a (rational) Lie algebra: derived and lower central series,
// Chevalley-Eilenberg cohomology dimensions, and normal ascending flags
// V^1 < ... < V^n of the dual with d V^i contained in Lambda^2 V^i.

#include <optional>
#include <string>
#include <vector>

#include "qcalc/exterior.hpp"

namespace qcalc {

struct SeriesInfo {
  std::vector<int> derived;        ///< dims of g, [g,g], ... until stable
  std::vector<int> lower_central;  ///< dims of g, [g,g], [g,[g,g]], ... until stable
  bool is_solvable = false;
  bool is_nilpotent = false;
};

SeriesInfo derived_and_central_series(const LieAlgebra& g);

/// dim H^k of the Chevalley-Eilenberg complex. Throws ParametricNotSupported.
int cohomology_dim(const LieAlgebra& g, int k);
/// dim H^0 .. dim H^n.
std::vector<int> betti_numbers(const LieAlgebra& g);

/// All index sets of size k over 1..dim in lexicographic order.
std::vector<IndexSet> exterior_basis(int dim, int k);
/// Coordinates of a rational k-form in `exterior_basis(dim, k)`.
linalg::Row form_coordinates(const Form& f, int dim);

/// Covector flag: levels[i-1] is a basis of V^i, coordinates over e^1..e^n.
struct Flag {
  std::vector<std::vector<Vector>> levels;
};

struct FlagViolation {
  int level;        ///< i with d alpha not in Lambda^2 V^i
  Vector covector;  ///< the offending basis covector alpha
  Form d_covector;  ///< d alpha
};

struct FlagCheck {
  bool ok = true;
  std::optional<FlagViolation> first_violation;
};

/// Covector coordinates as a 1-form.
Form covector_form(const Vector& alpha);

/// Throws InvalidFlag for wrong level dimensions or non-nested levels.
FlagCheck verify_flag(const LieAlgebra& g, const Flag& flag);

/// For alpha in V^i: (d alpha)^k = 0 when i = 2k-1, alpha ^ (d alpha)^k = 0
/// when i = 2k. Necessary conditions for a normal flag.
bool satisfies_flag_corollary(const LieAlgebra& g, const Vector& alpha, int level);

/// Checks `satisfies_flag_corollary` on every basis covector of every level
/// and on the sum of each level's basis. Returns failing levels.
std::vector<int> flag_corollary_violations(const LieAlgebra& g, const Flag& flag);

/// Best-effort search for a normal flag realizable over the rationals: picks
/// one-dimensional ideals of successive quotients spanned by common rational
/// eigenvectors of the adjoint maps, with backtracking over eigenvalue
/// choices. nullopt does not prove that no flag exists.
std::optional<Flag> search_flag(const LieAlgebra& g);

}  // namespace qcalc
