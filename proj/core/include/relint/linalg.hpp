#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "relint/rational.hpp"

namespace relint {

using Vector = std::vector<Rat>;
/// Row-major dense matrix. A matrix with no rows carries its column count
/// separately wherever it matters.
using Matrix = std::vector<Vector>;

Vector zeros(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
Matrix identity(std::size_t n);

Rat dot(const Vector& a, const Vector& b);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const Rat& s, const Vector& v);
Vector negate(const Vector& v);
/// (1 - t) a + t b
Vector lerp(const Vector& a, const Vector& b, const Rat& t);
bool is_zero(const Vector& v);

Vector mat_vec(const Matrix& m, const Vector& v);
Matrix transpose(const Matrix& m, std::size_t cols);
/// Columns of the result are the given vectors.
Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows);

/// Positive rescaling to a primitive integer vector (coprime entries).
Vector primitive(const Vector& v);
/// Positive rescaling so the first nonzero entry has absolute value one.
Vector normalize_leading(const Vector& v);

struct RowEchelon {
  Matrix reduced;                    ///< reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;   ///< pivot column of each row
};

RowEchelon rref(Matrix m, std::size_t cols);
std::size_t rank(const Matrix& m, std::size_t cols);

/// Basis of {x : m x = 0}. One vector per free column, with a 1 in that column.
/// Empty iff m has full column rank.
std::vector<Vector> nullspace(const Matrix& m, std::size_t cols);

/// A solution of m x = rhs with every free variable set to zero, or nullopt
/// when the system is inconsistent.
std::optional<Vector> solve_particular(const Matrix& m, const Vector& rhs,
                                       std::size_t cols);

/// Parses "1/2,1/2" (commas and/or whitespace as separators).
Vector parse_vector(std::string_view text);
std::string to_string(const Vector& v);

}  // namespace relint
