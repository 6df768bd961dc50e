#pragma once

// Exact rational linear algebra.
//
// Conventions used throughout the library: vectors are columns, a Matrix
// acts on the left, and `f * g` is the composite "apply g, then f".

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace wrep {

using Rational = mpq_class;
using Vector = std::vector<Rational>;

/// Parses "p" or "p/q" (q > 0 after normalization). Throws ParseError.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static Matrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);
  /// Columns must all have length `rows`; `rows` is needed when there are no columns.
  static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows);
  static Matrix column(const Vector& v);
  /// [a | b]
  static Matrix hstack(const Matrix& a, const Matrix& b);
  /// [a ; b]
  static Matrix vstack(const Matrix& a, const Matrix& b);
  /// [[a, 0], [0, b]]
  static Matrix block_diagonal(const Matrix& a, const Matrix& b);
  /// [[a, b], [c, d]]
  static Matrix blocks(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d) {
    return vstack(hstack(a, b), hstack(c, d));
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<Rational>& entries() const { return entries_; }

  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  Vector column_vector(std::size_t j) const;
  Vector apply(const Vector& v) const;
  Matrix transpose() const;
  /// Rows [r0, r0+nr) and columns [c0, c0+nc).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  Matrix rows_range(std::size_t r0, std::size_t nr) const { return block(r0, 0, nr, cols_); }
  Matrix cols_range(std::size_t c0, std::size_t nc) const { return block(0, c0, rows_, nc); }

  bool is_zero() const;
  bool is_identity() const;
  bool same_shape(const Matrix& other) const { return rows_ == other.rows_ && cols_ == other.cols_; }

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(const Matrix& a);
  friend Matrix operator*(const Matrix& f, const Matrix& g);
  friend Matrix operator*(const Rational& c, const Matrix& a);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);
std::string to_string(const Matrix& m);
std::string to_string(const Vector& v);

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Rational& c, const Vector& v);
bool is_zero(const Vector& v);

/// f ∘ g. Throws DimensionError when f.cols() != g.rows().
Matrix compose(const Matrix& f, const Matrix& g);

struct RowReduction {
  Matrix reduced;                    // reduced row echelon form of the input
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
  Matrix transform;                  // invertible E with E * input == reduced
};

/// Gauss-Jordan elimination; the pivot is the leftmost nonzero column, taken
/// from the earliest available row.
RowReduction row_reduce(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Basis of ker f. The basis vectors, stacked as rows, form a matrix in
/// reduced row echelon form (each vector has leading entry 1 and the other
/// vectors vanish at that coordinate).
std::vector<Vector> kernel_basis(const Matrix& f);
/// kernel_basis as the columns of a cols(f) x dim(ker f) matrix.
Matrix kernel_matrix(const Matrix& f);

/// A prescribed partial section: the columns of `domain` (a subspace of the
/// codomain of f) must be sent to the corresponding columns of `images`.
struct Pinning {
  Matrix domain;
  Matrix images;
};

/// Returns g with f ∘ g = id. Without pinning, g(e_i) is the solution of
/// f x = e_i whose non-pivot coordinates are zero. With pinning, g agrees
/// with the pinned images and uses that rule on the standard basis vectors
/// added to complete the pinned subspace.
/// Throws NotSurjectiveError, PinningError.
Matrix right_inverse_on_image(const Matrix& f, const std::optional<Pinning>& pinned = std::nullopt);

/// h with h ∘ f = id, for f of full column rank. Throws NotInvertibleError otherwise.
Matrix left_inverse(const Matrix& f);

/// Some x with f x = b (free coordinates zero), or nullopt.
std::optional<Vector> solve(const Matrix& f, const Vector& b);

/// Throws NotInvertibleError for singular or non-square input.
Matrix inverse(const Matrix& f);
bool is_invertible(const Matrix& f);

}  // namespace wrep
