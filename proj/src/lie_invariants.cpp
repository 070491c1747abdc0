#include "qcalc/lie_invariants.hpp"

#include <algorithm>
#include <functional>

namespace qcalc {

namespace {

using linalg::Matrix;
using linalg::Row;

void require_rational(const LieAlgebra& g, const char* what) {
  if (auto var = g.indeterminate()) {
    throw ParametricNotSupported(std::string(what) + " needs rational structure constants; '" +
                                 *var + "' is still free");
  }
}

Row bracket_rows(const LieAlgebra& g, const Row& x, const Row& y) {
  return bracket(g, Vector::from_row(x), Vector::from_row(y)).to_row();
}

Matrix bracket_span(const LieAlgebra& g, const Matrix& a, const Matrix& b) {
  Matrix rows;
  for (const auto& x : a)
    for (const auto& y : b) rows.push_back(bracket_rows(g, x, y));
  return linalg::row_reduce(rows);
}

template <typename Next>
std::vector<int> series(const LieAlgebra& g, Next next) {
  Matrix current = linalg::identity(static_cast<std::size_t>(g.dim()));
  std::vector<int> dims{g.dim()};
  while (!current.empty()) {
    Matrix following = next(current);
    if (following.size() == current.size()) break;
    dims.push_back(static_cast<int>(following.size()));
    current = std::move(following);
  }
  return dims;
}

}  // namespace

SeriesInfo derived_and_central_series(const LieAlgebra& g) {
  require_rational(g, "series");
  const Matrix whole = linalg::identity(static_cast<std::size_t>(g.dim()));
  SeriesInfo info;
  info.derived = series(g, [&](const Matrix& m) { return bracket_span(g, m, m); });
  info.lower_central = series(g, [&](const Matrix& m) { return bracket_span(g, whole, m); });
  info.is_solvable = info.derived.back() == 0;
  info.is_nilpotent = info.lower_central.back() == 0;
  return info;
}

std::vector<IndexSet> exterior_basis(int dim, int k) {
  std::vector<IndexSet> out;
  for (unsigned bits = 0; bits < (1U << dim); ++bits)
    if (__builtin_popcount(bits) == k) out.emplace_back(static_cast<std::uint16_t>(bits));
  std::sort(out.begin(), out.end());
  return out;
}

linalg::Row form_coordinates(const Form& f, int dim) {
  auto basis = exterior_basis(dim, f.degree());
  Row row(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) row[i] = f.coefficient(basis[i]).rational();
  return row;
}

namespace {

// Matrix of d : Lambda^k -> Lambda^{k+1}, one column per source basis element.
Matrix differential_matrix(const LieAlgebra& g, int k) {
  auto source = exterior_basis(g.dim(), k);
  auto target = exterior_basis(g.dim(), k + 1);
  Matrix m = linalg::zeros(target.size(), source.size());
  for (std::size_t c = 0; c < source.size(); ++c) {
    Form e(k);
    e.add(source[c], Scalar(1));
    Form de = d(g, e);
    for (std::size_t r = 0; r < target.size(); ++r) m[r][c] = de.coefficient(target[r]).rational();
  }
  return m;
}

int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<int>(r);
}

}  // namespace

int cohomology_dim(const LieAlgebra& g, int k) {
  require_rational(g, "cohomology");
  if (k < 0 || k > g.dim()) return 0;
  int rank_out = k < g.dim() ? static_cast<int>(linalg::rank(differential_matrix(g, k))) : 0;
  int rank_in = k > 0 ? static_cast<int>(linalg::rank(differential_matrix(g, k - 1))) : 0;
  return binomial(g.dim(), k) - rank_out - rank_in;
}

std::vector<int> betti_numbers(const LieAlgebra& g) {
  require_rational(g, "cohomology");
  std::vector<int> ranks;  // ranks[k] = rank of d on Lambda^k
  for (int k = 0; k < g.dim(); ++k) {
    ranks.push_back(static_cast<int>(linalg::rank(differential_matrix(g, k))));
  }
  ranks.push_back(0);
  std::vector<int> out;
  for (int k = 0; k <= g.dim(); ++k) {
    out.push_back(binomial(g.dim(), k) - ranks[static_cast<std::size_t>(k)] -
                  (k > 0 ? ranks[static_cast<std::size_t>(k - 1)] : 0));
  }
  return out;
}

// ---------------------------------------------------------------------------

Form covector_form(const Vector& alpha) {
  Form f(1);
  for (int i = 1; i <= alpha.dim(); ++i) f.add(IndexSet::of({i}), alpha(i));
  return f;
}

namespace {

Matrix rows_of(const std::vector<Vector>& level) {
  Matrix m;
  for (const auto& v : level) m.push_back(v.to_row());
  return m;
}

void validate_flag(const LieAlgebra& g, const Flag& flag) {
  const int n = g.dim();
  if (static_cast<int>(flag.levels.size()) != n) {
    throw InvalidFlag("flag must have " + std::to_string(n) + " levels, got " +
                      std::to_string(flag.levels.size()));
  }
  Matrix previous;
  for (int i = 1; i <= n; ++i) {
    const auto& level = flag.levels[static_cast<std::size_t>(i - 1)];
    for (const auto& v : level) {
      if (v.dim() != n) throw InvalidFlag("covector of wrong length in level " + std::to_string(i));
    }
    Matrix rows = rows_of(level);
    if (static_cast<int>(linalg::rank(rows)) != i) {
      throw InvalidFlag("level " + std::to_string(i) + " does not have dimension " +
                        std::to_string(i));
    }
    Matrix joined = rows;
    joined.insert(joined.end(), previous.begin(), previous.end());
    if (static_cast<int>(linalg::rank(joined)) != i) {
      throw InvalidFlag("level " + std::to_string(i - 1) + " is not contained in level " +
                        std::to_string(i));
    }
    previous = std::move(rows);
  }
}

}  // namespace

FlagCheck verify_flag(const LieAlgebra& g, const Flag& flag) {
  require_rational(g, "flag verification");
  validate_flag(g, flag);
  const int n = g.dim();
  for (int i = 1; i <= n; ++i) {
    const auto& level = flag.levels[static_cast<std::size_t>(i - 1)];
    std::vector<Row> lambda2;
    for (std::size_t a = 0; a < level.size(); ++a)
      for (std::size_t b = a + 1; b < level.size(); ++b)
        lambda2.push_back(form_coordinates(wedge(covector_form(level[a]), covector_form(level[b])), n));
    for (const auto& alpha : level) {
      Form dalpha = d(g, covector_form(alpha));
      if (!linalg::in_row_space(lambda2, form_coordinates(dalpha, n))) {
        return FlagCheck{false, FlagViolation{i, alpha, dalpha}};
      }
    }
  }
  return FlagCheck{};
}

bool satisfies_flag_corollary(const LieAlgebra& g, const Vector& alpha, int level) {
  Form a = covector_form(alpha);
  Form da = d(g, a);
  if (level % 2 == 1) return wedge_power(da, (level + 1) / 2).is_zero();
  return wedge(a, wedge_power(da, level / 2)).is_zero();
}

std::vector<int> flag_corollary_violations(const LieAlgebra& g, const Flag& flag) {
  std::vector<int> bad;
  for (std::size_t i = 0; i < flag.levels.size(); ++i) {
    const int level = static_cast<int>(i) + 1;
    const auto& basis = flag.levels[i];
    bool ok = true;
    Vector sum(g.dim());
    for (const auto& v : basis) {
      ok = ok && satisfies_flag_corollary(g, v, level);
      sum = sum + v;
    }
    ok = ok && satisfies_flag_corollary(g, sum, level);
    if (!ok) bad.push_back(level);
  }
  return bad;
}

// ---------------------------------------------------------------------------

namespace {

// Quotient g / W with W spanned by `ideal`; the complement is a set of
// standard basis vectors, so quotient coordinates are read off after
// expressing a vector in the basis [ideal ; complement].
struct Quotient {
  std::vector<int> complement;  // 0-based standard basis indices
  Matrix to_basis;              // inverse of the stacked basis (row-vector convention)
  std::size_t ideal_dim = 0;

  Row coordinates(const Row& v) const {
    const std::size_t n = v.size();
    Row all(n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) all[j] += v[i] * to_basis[i][j];
    return Row(all.begin() + static_cast<long>(ideal_dim), all.end());
  }

  Row lift(const Row& q) const {
    Row v(to_basis.size());
    for (std::size_t j = 0; j < complement.size(); ++j) v[static_cast<std::size_t>(complement[j])] = q[j];
    return v;
  }
};

Quotient make_quotient(const Matrix& ideal, std::size_t n) {
  Quotient q;
  q.ideal_dim = ideal.size();
  Matrix stacked = ideal;
  for (std::size_t i = 0; i < n; ++i) {
    Row e(n);
    e[i] = Rational(1);
    Matrix trial = stacked;
    trial.push_back(e);
    if (linalg::rank(trial) == trial.size()) {
      stacked = std::move(trial);
      q.complement.push_back(static_cast<int>(i));
    }
  }
  q.to_basis = *linalg::inverse(stacked);
  return q;
}

// Rational vectors v with A_x v = lambda_x v for every x, one candidate per
// admissible eigenvalue tuple.
std::vector<Row> common_eigenvectors(const std::vector<Matrix>& ads, std::size_t qdim) {
  std::vector<std::vector<Rational>> eigenvalues;
  for (const auto& a : ads) {
    Poly chi("x", linalg::characteristic_polynomial(a));
    eigenvalues.push_back(rational_roots(chi));
  }
  std::vector<Row> found;
  std::function<void(std::size_t, Matrix)> descend = [&](std::size_t t, Matrix space) {
    if (t == ads.size()) {
      found.push_back(linalg::row_reduce(space).back());
      return;
    }
    for (const auto& lambda : eigenvalues[t]) {
      // Coefficients c with (A - lambda) sum_i c_i space_i = 0.
      Matrix shifted = ads[t];
      for (std::size_t i = 0; i < qdim; ++i) shifted[i][i] -= lambda;
      Matrix columns = linalg::zeros(qdim, space.size());
      for (std::size_t s = 0; s < space.size(); ++s) {
        Row image = linalg::apply(shifted, space[s]);
        for (std::size_t i = 0; i < qdim; ++i) columns[i][s] = image[i];
      }
      auto coeffs = linalg::kernel(columns, space.size());
      if (coeffs.empty()) continue;
      Matrix next;
      for (const auto& c : coeffs) {
        Row v(qdim);
        for (std::size_t s = 0; s < space.size(); ++s)
          for (std::size_t i = 0; i < qdim; ++i) v[i] += c[s] * space[s][i];
        next.push_back(std::move(v));
      }
      descend(t + 1, std::move(next));
    }
  };
  descend(0, linalg::identity(qdim));
  return found;
}

bool extend_chain(const LieAlgebra& g, std::vector<Matrix>& chain) {
  const std::size_t n = static_cast<std::size_t>(g.dim());
  const Matrix& ideal = chain.back();
  if (ideal.size() == n) return true;
  Quotient q = make_quotient(ideal, n);
  const std::size_t qdim = q.complement.size();
  std::vector<Matrix> ads;
  for (std::size_t x = 0; x < n; ++x) {
    Row ex(n);
    ex[x] = Rational(1);
    Matrix a = linalg::zeros(qdim, qdim);
    for (std::size_t j = 0; j < qdim; ++j) {
      Row unit(qdim);
      unit[j] = Rational(1);
      Row image = q.coordinates(bracket_rows(g, ex, q.lift(unit)));
      for (std::size_t i = 0; i < qdim; ++i) a[i][j] = image[i];
    }
    ads.push_back(std::move(a));
  }
  for (const auto& v : common_eigenvectors(ads, qdim)) {
    Matrix bigger = ideal;
    bigger.push_back(q.lift(v));
    chain.push_back(std::move(bigger));
    if (extend_chain(g, chain)) return true;
    chain.pop_back();
  }
  return false;
}

}  // namespace

std::optional<Flag> search_flag(const LieAlgebra& g) {
  require_rational(g, "flag search");
  const std::size_t n = static_cast<std::size_t>(g.dim());
  std::vector<Matrix> chain{Matrix{}};  // chain[k] spans a k-dimensional ideal
  if (!extend_chain(g, chain)) return std::nullopt;

  Flag flag;
  std::vector<Vector> current;
  Matrix current_rows;
  for (std::size_t i = 1; i <= n; ++i) {
    // V^i is the annihilator of the (n - i)-dimensional ideal.
    auto annihilator = linalg::kernel(chain[n - i], n);
    for (const auto& alpha : annihilator) {
      if (!linalg::in_row_space(current_rows, alpha)) {
        current_rows.push_back(alpha);
        current.push_back(Vector::from_row(alpha));
        break;
      }
    }
    flag.levels.push_back(current);
  }
  if (!verify_flag(g, flag).ok) throw InternalError("search_flag produced an invalid flag");
  return flag;
}

}  // namespace qcalc
