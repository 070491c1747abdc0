#include "qcalc/exterior.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qcalc {

IndexSet IndexSet::of(std::initializer_list<int> indices) {
  IndexSet s;
  for (int i : indices) s = s.with(i);
  return s;
}

IndexSet IndexSet::range(int first, int last) {
  IndexSet s;
  for (int i = first; i <= last; ++i) s = s.with(i);
  return s;
}

std::vector<int> IndexSet::indices() const {
  std::vector<int> out;
  for (int i = 1; i <= 16; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

bool operator<(IndexSet a, IndexSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  unsigned diff = static_cast<unsigned>(a.bits_ ^ b.bits_);
  if (diff == 0) return false;
  unsigned lowest = diff & (~diff + 1U);
  return (a.bits_ & lowest) != 0;
}

std::string IndexSet::digits() const {
  std::string s;
  for (int i : indices()) s += std::to_string(i);
  return s;
}

int shuffle_sign(IndexSet a, IndexSet b) {
  if (a.intersects(b)) return 0;
  int inversions = 0;
  for (int y : b.indices()) {
    unsigned above = static_cast<unsigned>(a.bits()) & ~((1U << y) - 1U);
    inversions += __builtin_popcount(above);
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

// ---------------------------------------------------------------------------

Form Form::basis(int i) { return monomial({i}); }

Form Form::monomial(const std::vector<int>& indices, const Scalar& coefficient) {
  Form f(static_cast<int>(indices.size()));
  std::vector<int> sorted = indices;
  int sign = 1;
  // Bubble sort keeps track of parity; tuples are tiny.
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (std::size_t j = 0; j + 1 < sorted.size() - i; ++j)
      if (sorted[j] > sorted[j + 1]) {
        std::swap(sorted[j], sorted[j + 1]);
        sign = -sign;
      }
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return f;
  IndexSet key;
  for (int i : sorted) key = key.with(i);
  f.add(key, sign > 0 ? coefficient : -coefficient);
  return f;
}

Form Form::constant(const Scalar& c) {
  Form f(0);
  f.add(IndexSet{}, c);
  return f;
}

Scalar Form::coefficient(IndexSet key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void Form::add(IndexSet key, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::optional<std::string> Form::indeterminate() const {
  std::optional<std::string> var;
  for (const auto& [k, c] : terms_) var = merge_indeterminate(var, c.indeterminate());
  return var;
}

int Form::max_index() const {
  int m = 0;
  for (const auto& [k, c] : terms_) m = std::max(m, k.max_index());
  return m;
}

Form Form::without_indices(IndexSet indices) const {
  Form out(degree_);
  for (const auto& [k, c] : terms_)
    if (!k.intersects(indices)) out.terms_.emplace(k, c);
  return out;
}

Form Form::substitute(const Rational& value) const {
  Form out(degree_);
  for (const auto& [k, c] : terms_) out.add(k, c.substitute(value));
  return out;
}

Form Form::operator-() const {
  Form out(degree_);
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
  return out;
}

Form& Form::operator+=(const Form& o) {
  if (is_zero() && degree_ != o.degree_) degree_ = o.degree_;
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

Form& Form::operator-=(const Form& o) { return *this += -o; }

Form operator*(const Scalar& c, const Form& f) {
  Form out(f.degree_);
  if (c.is_zero()) return out;
  for (const auto& [k, v] : f.terms_) out.add(k, c * v);
  return out;
}

Form operator/(const Form& f, const Rational& c) {
  Form out(f.degree_);
  for (const auto& [k, v] : f.terms_) out.add(k, v / c);
  return out;
}

bool operator==(const Form& a, const Form& b) {
  if (a.is_zero() && b.is_zero()) return true;
  return a.degree_ == b.degree_ && a.terms_ == b.terms_;
}

namespace {

// Appends " + c e12" style text for one term.
void append_term(std::ostringstream& os, bool first, const Scalar& c, const std::string& monomial) {
  bool negative = false;
  std::string body;
  bool unit = false;
  if (c.is_rational()) {
    Rational r = c.rational();
    negative = r.sign() < 0;
    Rational mag = negative ? -r : r;
    unit = mag == Rational(1);
    body = mag.is_integer() ? mag.to_string() : "(" + mag.to_string() + ")";
  } else {
    Poly p = *c.poly();
    negative = p.leading().sign() < 0;
    body = "(" + (negative ? -p : p).to_string() + ")";
  }
  if (first) os << (negative ? "-" : "");
  else os << (negative ? " - " : " + ");
  if (monomial.empty()) {
    os << (unit ? "1" : body);
    return;
  }
  if (!unit) os << body << ' ';
  os << monomial;
}

}  // namespace

std::string Form::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    append_term(os, first, c, k.empty() ? "" : "e" + k.digits());
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Form& f) { return os << f.to_string(); }

Form wedge(const Form& a, const Form& b) {
  Form out(a.degree() + b.degree());
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      int s = shuffle_sign(ka, kb);
      if (s == 0) continue;
      Scalar c = ca * cb;
      out.add(ka | kb, s > 0 ? c : -c);
    }
  }
  return out;
}

Form wedge_power(const Form& f, int k) {
  Form out = Form::constant(Scalar(1));
  for (int i = 0; i < k; ++i) out = wedge(out, f);
  return out;
}

// ---------------------------------------------------------------------------

Vector Vector::basis(int dim, int i) {
  Vector v(dim);
  v(i) = Scalar(1);
  return v;
}

bool Vector::is_zero() const {
  return std::all_of(components_.begin(), components_.end(),
                     [](const Scalar& s) { return s.is_zero(); });
}

Vector operator+(const Vector& a, const Vector& b) {
  Vector out(a.dim());
  for (int i = 1; i <= a.dim(); ++i) out(i) = a(i) + b(i);
  return out;
}

Vector operator-(const Vector& a, const Vector& b) {
  Vector out(a.dim());
  for (int i = 1; i <= a.dim(); ++i) out(i) = a(i) - b(i);
  return out;
}

Vector operator*(const Scalar& c, const Vector& v) {
  Vector out(v.dim());
  for (int i = 1; i <= v.dim(); ++i) out(i) = c * v(i);
  return out;
}

linalg::Row Vector::to_row() const {
  linalg::Row row;
  row.reserve(components_.size());
  for (const auto& c : components_) row.push_back(c.rational());
  return row;
}

Vector Vector::from_row(const linalg::Row& row) {
  std::vector<Scalar> c(row.begin(), row.end());
  return Vector(std::move(c));
}

std::string Vector::to_string() const {
  Form as_covector(1);
  for (int i = 1; i <= dim(); ++i) as_covector.add(IndexSet::of({i}), (*this)(i));
  return as_covector.to_string();
}

namespace {

// det of the k x k matrix m[row][col] by Laplace expansion along row 0.
Scalar determinant(const std::vector<std::vector<Scalar>>& m) {
  const std::size_t k = m.size();
  if (k == 0) return Scalar(1);
  if (k == 1) return m[0][0];
  if (k == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  Scalar det;
  for (std::size_t col = 0; col < k; ++col) {
    if (m[0][col].is_zero()) continue;
    std::vector<std::vector<Scalar>> minor;
    for (std::size_t r = 1; r < k; ++r) {
      std::vector<Scalar> row;
      for (std::size_t c = 0; c < k; ++c)
        if (c != col) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    Scalar term = m[0][col] * determinant(minor);
    det = (col % 2 == 0) ? det + term : det - term;
  }
  return det;
}

}  // namespace

Scalar evaluate(const Form& f, std::span<const Vector> vectors) {
  if (static_cast<int>(vectors.size()) != f.degree()) {
    throw std::invalid_argument("evaluate: expected " + std::to_string(f.degree()) +
                                " vectors, got " + std::to_string(vectors.size()));
  }
  Scalar total;
  for (const auto& [key, c] : f.terms()) {
    auto idx = key.indices();
    std::vector<std::vector<Scalar>> m(idx.size(), std::vector<Scalar>(idx.size()));
    for (std::size_t r = 0; r < idx.size(); ++r)
      for (std::size_t col = 0; col < vectors.size(); ++col) {
        const Vector& v = vectors[col];
        m[r][col] = idx[r] <= v.dim() ? v(idx[r]) : Scalar(0);
      }
    total += c * determinant(m);
  }
  return total;
}

Scalar evaluate(const Form& f, std::initializer_list<Vector> vectors) {
  return evaluate(f, std::span<const Vector>(vectors.begin(), vectors.size()));
}

Form interior(const Vector& v, const Form& f) {
  Form out(std::max(f.degree() - 1, 0));
  for (const auto& [key, c] : f.terms()) {
    int position = 0;
    for (int i : key.indices()) {
      if (i <= v.dim() && !v(i).is_zero()) {
        Scalar term = c * v(i);
        out.add(key.without(i), position % 2 == 0 ? term : -term);
      }
      ++position;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

LieAlgebra::LieAlgebra(int dim, std::vector<Form> differentials)
    : dim_(dim), differentials_(std::move(differentials)) {
  if (dim < 1 || dim > kMaxDim) {
    throw InvalidAlgebra("dimension must be in 1.." + std::to_string(kMaxDim) + ", got " +
                         std::to_string(dim));
  }
  if (static_cast<int>(differentials_.size()) != dim) {
    throw InvalidAlgebra("expected " + std::to_string(dim) + " differentials, got " +
                         std::to_string(differentials_.size()));
  }
  std::optional<std::string> var;
  for (std::size_t k = 0; k < differentials_.size(); ++k) {
    Form& f = differentials_[k];
    if (f.is_zero()) f = Form(2);
    if (f.degree() != 2) {
      throw InvalidAlgebra("d e" + std::to_string(k + 1) + " must be a 2-form");
    }
    if (f.max_index() > dim) {
      throw InvalidAlgebra("d e" + std::to_string(k + 1) + " uses an index above " +
                           std::to_string(dim));
    }
    var = merge_indeterminate(var, f.indeterminate());
  }
}

std::optional<std::string> LieAlgebra::indeterminate() const {
  std::optional<std::string> var;
  for (const auto& f : differentials_) var = merge_indeterminate(var, f.indeterminate());
  return var;
}

Scalar LieAlgebra::structure_constant(int i, int j, int k) const {
  if (i == j) return Scalar(0);
  const Form& dk = differential(k);
  Scalar c = dk.coefficient(IndexSet::of({i, j}));
  return i < j ? -c : c;
}

LieAlgebra LieAlgebra::substitute(const Rational& value) const {
  std::vector<Form> out;
  out.reserve(differentials_.size());
  for (const auto& f : differentials_) out.push_back(f.substitute(value));
  return LieAlgebra(dim_, std::move(out));
}

LieAlgebra LieAlgebra::rescaled(std::span<const Rational> factors) const {
  if (static_cast<int>(factors.size()) != dim_) throw InvalidAlgebra("rescale: wrong factor count");
  std::vector<Form> out;
  for (int j = 1; j <= dim_; ++j) {
    Form f(2);
    for (const auto& [key, c] : differential(j).terms()) {
      auto idx = key.indices();
      Rational k = factors[static_cast<std::size_t>(j - 1)] /
                   (factors[static_cast<std::size_t>(idx[0] - 1)] *
                    factors[static_cast<std::size_t>(idx[1] - 1)]);
      f.add(key, Scalar(k) * c);
    }
    out.push_back(std::move(f));
  }
  return LieAlgebra(dim_, std::move(out));
}

LieAlgebra LieAlgebra::transformed(const linalg::Matrix& change) const {
  auto inv = linalg::inverse(change);
  if (!inv) throw InvalidAlgebra("change of basis is singular");
  // Old covector e^p in the new coframe: sum_k inv[p][k] f^k.
  std::vector<Form> old_in_new;
  for (int p = 1; p <= dim_; ++p) {
    Form e(1);
    for (int k = 1; k <= dim_; ++k)
      e.add(IndexSet::of({k}), Scalar((*inv)[static_cast<std::size_t>(p - 1)][static_cast<std::size_t>(k - 1)]));
    old_in_new.push_back(std::move(e));
  }
  std::vector<Form> old_d;
  for (int p = 1; p <= dim_; ++p) {
    Form f(2);
    for (const auto& [key, c] : differential(p).terms()) {
      auto idx = key.indices();
      f += c * wedge(old_in_new[static_cast<std::size_t>(idx[0] - 1)],
                     old_in_new[static_cast<std::size_t>(idx[1] - 1)]);
    }
    old_d.push_back(std::move(f));
  }
  std::vector<Form> out;
  for (int i = 1; i <= dim_; ++i) {
    Form f(2);
    for (int j = 1; j <= dim_; ++j) {
      const Rational& pij = change[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
      if (!pij.is_zero()) f += Scalar(pij) * old_d[static_cast<std::size_t>(j - 1)];
    }
    out.push_back(std::move(f));
  }
  return LieAlgebra(dim_, std::move(out));
}

Form d(const LieAlgebra& g, const Form& f) {
  Form out(f.degree() + 1);
  for (const auto& [key, c] : f.terms()) {
    auto idx = key.indices();
    for (std::size_t m = 0; m < idx.size(); ++m) {
      const Form& dm = g.differential(idx[m]);
      if (dm.is_zero()) continue;
      IndexSet before, after;
      for (std::size_t t = 0; t < m; ++t) before = before.with(idx[t]);
      for (std::size_t t = m + 1; t < idx.size(); ++t) after = after.with(idx[t]);
      Form prefix(static_cast<int>(m));
      prefix.add(before, (m % 2 == 0) ? c : -c);
      Form suffix(static_cast<int>(idx.size() - m - 1));
      suffix.add(after, Scalar(1));
      out += wedge(wedge(prefix, dm), suffix);
    }
  }
  if (out.is_zero()) return Form(f.degree() + 1);
  return out;
}

std::vector<JacobiViolation> jacobi_check(const LieAlgebra& g) {
  std::vector<JacobiViolation> out;
  for (int k = 1; k <= g.dim(); ++k) {
    Form dd = d(g, g.differential(k));
    if (!dd.is_zero()) out.push_back({k, std::move(dd)});
  }
  return out;
}

Vector bracket(const LieAlgebra& g, int i, int j) {
  Vector v(g.dim());
  for (int k = 1; k <= g.dim(); ++k) v(k) = g.structure_constant(i, j, k);
  return v;
}

Vector bracket(const LieAlgebra& g, const Vector& x, const Vector& y) {
  Vector v(g.dim());
  for (int i = 1; i <= g.dim(); ++i) {
    if (x(i).is_zero()) continue;
    for (int j = 1; j <= g.dim(); ++j) {
      if (y(j).is_zero() || i == j) continue;
      Scalar xy = x(i) * y(j);
      for (int k = 1; k <= g.dim(); ++k) {
        Scalar c = g.structure_constant(i, j, k);
        if (!c.is_zero()) v(k) += xy * c;
      }
    }
  }
  return v;
}

}  // namespace qcalc
