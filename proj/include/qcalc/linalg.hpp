#pragma once

// Dense exact linear algebra over the rationals. Ranks use fraction-free
// (Bareiss) elimination on an integer scaling of the input.

#include <optional>
#include <vector>

#include "qcalc/scalar.hpp"

namespace qcalc::linalg {

using Row = std::vector<Rational>;
using Matrix = std::vector<Row>;

Matrix zeros(std::size_t rows, std::size_t cols);
Matrix identity(std::size_t n);

std::size_t rank(const Matrix& m);

/// Basis of {x : m x = 0}. `cols` is needed when m has no rows.
std::vector<Row> kernel(const Matrix& m, std::size_t cols);

/// True when `v` lies in the row space of `rows`.
bool in_row_space(const std::vector<Row>& rows, const Row& v);

/// Reduced row echelon form, zero rows dropped.
Matrix row_reduce(Matrix m);

/// Coefficients of det(x I - m), lowest degree first (Faddeev-LeVerrier).
std::vector<Rational> characteristic_polynomial(const Matrix& m);

std::optional<Matrix> inverse(const Matrix& m);

Matrix multiply(const Matrix& a, const Matrix& b);
Row apply(const Matrix& m, const Row& v);

}  // namespace qcalc::linalg
