#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dialg/rational.hpp"

namespace dialg {

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>; // row-major

namespace linalg {

Matrix identity(std::size_t n);
Matrix zeros(std::size_t rows, std::size_t cols);
Vector unit(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);

Matrix multiply(const Matrix& a, const Matrix& b);
/// Row vector times matrix: v^T M.
Vector row_times(const Vector& v, const Matrix& m);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const Rational& c, const Vector& v);

/// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m);
std::size_t rank(Matrix m);
/// Throws std::domain_error when singular.
Matrix inverse(const Matrix& m);
/// Basis of {x : M x = 0} for an r x n matrix M.
std::vector<Vector> nullspace(const Matrix& m);

struct AffineSolution {
    Vector particular;
    std::vector<Vector> directions;
};

/// Solves M x = rhs; nullopt when inconsistent.
std::optional<AffineSolution> solve(const Matrix& m, const Vector& rhs);

/// Row-space basis (in reduced echelon form) of the given vectors.
std::vector<Vector> span_basis(const std::vector<Vector>& vectors);
/// True if v lies in the span of the rows of `basis`.
bool in_span(const std::vector<Vector>& basis, const Vector& v);

} // namespace linalg
} // namespace dialg
