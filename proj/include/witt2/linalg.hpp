#pragma once

// Dense vectors and matrices over a described field, with exact Gaussian
// elimination. Matrices are row-major.

#include <witt2/fields.hpp>

#include <optional>
#include <vector>

namespace witt2 {

using Vec = std::vector<FieldValue>;
using Matrix = std::vector<Vec>;

Vec zero_vec(FieldRef f, std::size_t n);
Vec unit_vec(FieldRef f, std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator*(const FieldValue& c, const Vec& v);

Matrix zero_matrix(FieldRef f, std::size_t rows, std::size_t cols);
Matrix identity(FieldRef f, std::size_t n);
Matrix operator*(const Matrix& a, const Matrix& b);
Vec operator*(const Matrix& a, const Vec& v);
Matrix transpose(const Matrix& m);

std::size_t rank(Matrix m);
FieldValue determinant(Matrix m);
// Basis of { v : m v = 0 }.
std::vector<Vec> kernel(const Matrix& m, FieldRef f);
// Some x with m x = rhs, or nothing.
std::optional<Vec> solve(const Matrix& m, const Vec& rhs, FieldRef f);
std::optional<Matrix> inverse(const Matrix& m);

Vec read_into(const Vec& v, FieldRef target);
Matrix read_into(const Matrix& m, FieldRef target);

}  // namespace witt2
