#include "qcalc/linalg.hpp"

#include <utility>

namespace qcalc::linalg {

Matrix zeros(std::size_t rows, std::size_t cols) { return Matrix(rows, Row(cols)); }

Matrix identity(std::size_t n) {
  Matrix m = zeros(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Rational(1);
  return m;
}

std::size_t rank(const Matrix& m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  // Clear denominators row by row; rank is unchanged.
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class l = 1;
    for (const auto& x : m[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m[i][j].num() * (l / m[i][j].den());
  }
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

Matrix row_reduce(Matrix m) {
  if (m.empty()) return m;
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.size() && m[pivot][c].is_zero()) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[r]);
    Rational inv = Rational(1) / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Rational f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  m.resize(r);
  return m;
}

std::vector<Row> kernel(const Matrix& m, std::size_t cols) {
  Matrix rref = row_reduce(m);
  std::vector<std::size_t> pivots;
  std::vector<bool> is_pivot(cols, false);
  for (const auto& row : rref) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (!row[j].is_zero()) {
        pivots.push_back(j);
        is_pivot[j] = true;
        break;
      }
    }
  }
  std::vector<Row> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Row v(cols);
    v[free] = Rational(1);
    for (std::size_t i = 0; i < rref.size(); ++i) v[pivots[i]] = -rref[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

bool in_row_space(const std::vector<Row>& rows, const Row& v) {
  bool zero = true;
  for (const auto& x : v) zero = zero && x.is_zero();
  if (zero) return true;
  if (rows.empty()) return false;
  Matrix with = rows;
  with.push_back(v);
  return rank(with) == rank(rows);
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.empty()) return {};
  const std::size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b.front().size();
  Matrix c = zeros(n, p);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (std::size_t j = 0; j < p; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

Row apply(const Matrix& m, const Row& v) {
  Row out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

std::vector<Rational> characteristic_polynomial(const Matrix& m) {
  const std::size_t n = m.size();
  // c[n] = 1; M_k = A M_{k-1} + c_{n-k+1} I; c_{n-k} = -tr(A M_k)/k.
  std::vector<Rational> c(n + 1);
  c[n] = Rational(1);
  Matrix mk = zeros(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix next = multiply(m, mk);
    for (std::size_t i = 0; i < n; ++i) next[i][i] += c[n - k + 1];
    mk = std::move(next);
    Matrix am = multiply(m, mk);
    Rational trace;
    for (std::size_t i = 0; i < n; ++i) trace += am[i][i];
    c[n - k] = -trace / Rational(static_cast<long>(k));
  }
  return c;
}

std::optional<Matrix> inverse(const Matrix& m) {
  const std::size_t n = m.size();
  Matrix aug = zeros(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = Rational(1);
  }
  Matrix rref = row_reduce(aug);
  if (rref.size() < n) return std::nullopt;
  Matrix inv = zeros(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(rref[i][i] == Rational(1))) return std::nullopt;
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = rref[i][n + j];
  }
  return inv;
}

}  // namespace qcalc::linalg
