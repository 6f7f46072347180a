#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "gelfand/field.hpp"
#include "gelfand/polynomial.hpp"

namespace gelfand {

// Dense matrix over a finite field, row-major. Most of the library works with
// square matrices; column vectors are rows x 1 matrices.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field field, std::size_t rows, std::size_t cols);
  Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Code> entries);

  static Matrix zero(const Field& field, std::size_t n) { return Matrix(field, n, n); }
  static Matrix identity(const Field& field, std::size_t n);
  static Matrix scalar(const FieldElement& c, std::size_t n);
  // Integer entries reduced into the prime subfield.
  static Matrix from_ints(const Field& field, std::initializer_list<std::initializer_list<long long>> rows);
  static Matrix diagonal(const Field& field, std::initializer_list<long long> diag);
  static Matrix column(const Field& field, std::vector<Code> entries);
  // Companion matrix of a monic polynomial: subdiagonal ones, last column -coeffs.
  static Matrix companion(const Polynomial& f);
  static Matrix block_diagonal(const Matrix& a, const Matrix& b);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return rows_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  const std::vector<Code>& entries() const noexcept { return entries_; }

  Code operator()(std::size_t i, std::size_t j) const noexcept { return entries_[i * cols_ + j]; }
  Code& operator()(std::size_t i, std::size_t j) noexcept { return entries_[i * cols_ + j]; }
  FieldElement at(std::size_t i, std::size_t j) const { return FieldElement(field_, (*this)(i, j)); }

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator-() const;
  Matrix scaled(Code c) const;
  Matrix transpose() const;
  Matrix pow(std::uint64_t e) const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  Matrix column_at(std::size_t j) const;

  bool is_zero() const;
  bool is_identity() const;

  bool operator==(const Matrix& o) const;
  // Lexicographic on row-major entry codes (same shape and field assumed).
  std::strong_ordering operator<=>(const Matrix& o) const;

  std::string to_string() const;

 private:
  void check_same_field(const Matrix& o) const;

  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Code> entries_;
};

// Reduced row echelon form and the pivot columns.
struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};
RowEchelon row_echelon(const Matrix& m);

std::size_t rank(const Matrix& m);
Code determinant(const Matrix& m);
bool is_invertible(const Matrix& m);
// Throws SingularInput for non-invertible input.
Matrix inverse(const Matrix& m);
// Columns form the canonical null space basis: one vector per free column of
// the reduced row echelon form, carrying a 1 in that position and 0 in every
// other free position.
std::vector<Matrix> kernel(const Matrix& m);
// Solve a x = b; nullopt if inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);
// Matrix whose columns are the given column vectors.
Matrix hstack(const std::vector<Matrix>& columns);

// f(M) for a polynomial over the matrix field.
Matrix evaluate(const Polynomial& f, const Matrix& m);
// f(M) v without forming f(M).
Matrix evaluate_on(const Polynomial& f, const Matrix& m, const Matrix& v);

Polynomial characteristic_polynomial(const Matrix& m);
// Least-degree monic polynomial annihilating v under m.
Polynomial local_minimal_polynomial(const Matrix& m, const Matrix& v);
Polynomial minimal_polynomial(const Matrix& m);
bool is_semisimple(const Matrix& m);

}  // namespace gelfand
