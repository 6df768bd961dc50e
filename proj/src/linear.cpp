#include "wrep/linear.hpp"

#include <sstream>
#include <utility>

#include "wrep/errors.hpp"

namespace wrep {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty rational");
  Rational q;
  if (q.set_str(s, 10) != 0) throw ParseError("malformed rational: '" + s + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw DimensionError("matrix " + std::to_string(rows) + "x" + std::to_string(cols) + " given " +
                         std::to_string(entries_.size()) + " entries");
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return {};
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw DimensionError("ragged matrix rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw DimensionError("column of wrong length");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

Matrix Matrix::column(const Vector& v) { return from_columns({v}, v.size()); }

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_) throw DimensionError("hstack: row counts differ");
  Matrix m(a.rows_, a.cols_ + b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < a.cols_; ++j) m(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols_; ++j) m(i, a.cols_ + j) = b(i, j);
  }
  return m;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.cols_) throw DimensionError("vstack: column counts differ");
  Matrix m(a.rows_ + b.rows_, a.cols_);
  std::copy(a.entries_.begin(), a.entries_.end(), m.entries_.begin());
  std::copy(b.entries_.begin(), b.entries_.end(), m.entries_.begin() + static_cast<std::ptrdiff_t>(a.entries_.size()));
  return m;
}

Matrix Matrix::block_diagonal(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows_ + b.rows_, a.cols_ + b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) m(a.rows_ + i, a.cols_ + j) = b(i, j);
  return m;
}

Vector Matrix::column_vector(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw DimensionError("apply: vector length " + std::to_string(v.size()) +
                                              " vs " + std::to_string(cols_) + " columns");
  Vector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (sgn(v[j]) != 0) out[i] += (*this)(i, j) * v[j];
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionError("block out of range");
  Matrix m(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& e : entries_)
    if (sgn(e) != 0) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (!same_shape(other)) throw DimensionError("matrix sum of different shapes");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  if (!same_shape(other)) throw DimensionError("matrix difference of different shapes");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

Matrix operator-(const Matrix& a) {
  Matrix m = a;
  for (auto& e : m.entries_) e = -e;
  return m;
}

Matrix operator*(const Matrix& f, const Matrix& g) {
  if (f.cols_ != g.rows_) {
    throw DimensionError("compose: " + std::to_string(f.rows_) + "x" + std::to_string(f.cols_) + " after " +
                         std::to_string(g.rows_) + "x" + std::to_string(g.cols_));
  }
  Matrix m(f.rows_, g.cols_);
  for (std::size_t i = 0; i < f.rows_; ++i)
    for (std::size_t k = 0; k < f.cols_; ++k) {
      const Rational& a = f(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < g.cols_; ++j)
        if (sgn(g(k, j)) != 0) m(i, j) += a * g(k, j);
    }
  return m;
}

Matrix operator*(const Rational& c, const Matrix& a) {
  Matrix m = a;
  for (auto& e : m.entries_) e *= c;
  return m;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j).get_str();
    os << ']';
  }
  return os << ']' << (m.rows() == 0 ? "(0x" + std::to_string(m.cols()) + ")" : "");
}

std::string to_string(const Matrix& m) {
  std::ostringstream os;
  os << m;
  return os.str();
}

std::string to_string(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("vector sum of different lengths");
  Vector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("vector difference of different lengths");
  Vector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

Vector operator*(const Rational& c, const Vector& v) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
  return out;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

Matrix compose(const Matrix& f, const Matrix& g) { return f * g; }

RowReduction row_reduce(const Matrix& m) {
  Matrix r = m;
  Matrix e = Matrix::identity(m.rows());
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
    std::size_t p = row;
    while (p < r.rows() && sgn(r(p, col)) == 0) ++p;
    if (p == r.rows()) continue;
    if (p != row) {
      for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r(p, j), r(row, j));
      for (std::size_t j = 0; j < e.cols(); ++j) std::swap(e(p, j), e(row, j));
    }
    const Rational inv = 1 / r(row, col);
    for (std::size_t j = 0; j < r.cols(); ++j) r(row, j) *= inv;
    for (std::size_t j = 0; j < e.cols(); ++j) e(row, j) *= inv;
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == row || sgn(r(i, col)) == 0) continue;
      const Rational factor = r(i, col);
      for (std::size_t j = 0; j < r.cols(); ++j) r(i, j) -= factor * r(row, j);
      for (std::size_t j = 0; j < e.cols(); ++j) e(i, j) -= factor * e(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(r), std::move(pivots), std::move(e)};
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

std::vector<Vector> kernel_basis(const Matrix& f) {
  const RowReduction rr = row_reduce(f);
  std::vector<bool> is_pivot(f.cols(), false);
  for (auto p : rr.pivots) is_pivot[p] = true;

  std::vector<Vector> basis;
  for (std::size_t free = 0; free < f.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(f.cols());
    v[free] = 1;
    for (std::size_t k = 0; k < rr.pivots.size(); ++k) v[rr.pivots[k]] = -rr.reduced(k, free);
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return basis;

  // Normalize: the basis vectors as rows, brought to reduced row echelon form.
  Matrix rows(basis.size(), f.cols());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < f.cols(); ++j) rows(i, j) = basis[i][j];
  const Matrix reduced = row_reduce(rows).reduced;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < f.cols(); ++j) basis[i][j] = reduced(i, j);
  return basis;
}

Matrix kernel_matrix(const Matrix& f) { return Matrix::from_columns(kernel_basis(f), f.cols()); }

namespace {

// Pivot-rule section of a surjective f: zero on non-pivot coordinates.
Matrix pivot_section(const Matrix& f, const RowReduction& rr) {
  Matrix g(f.cols(), f.rows());
  for (std::size_t k = 0; k < rr.pivots.size(); ++k)
    for (std::size_t i = 0; i < f.rows(); ++i) g(rr.pivots[k], i) = rr.transform(k, i);
  return g;
}

}  // namespace

Matrix right_inverse_on_image(const Matrix& f, const std::optional<Pinning>& pinned) {
  const RowReduction rr = row_reduce(f);
  if (rr.pivots.size() != f.rows()) {
    throw NotSurjectiveError("map of rank " + std::to_string(rr.pivots.size()) + " onto dimension " +
                             std::to_string(f.rows()) + " has no right inverse");
  }
  const Matrix section = pivot_section(f, rr);
  if (!pinned) return section;

  const Matrix& domain = pinned->domain;
  const Matrix& images = pinned->images;
  if (domain.rows() != f.rows() || images.rows() != f.cols() || domain.cols() != images.cols())
    throw PinningError("pinning shapes do not match the map");
  if (!(f * images == domain)) throw PinningError("pinned images are not preimages of the pinned vectors");

  // Keep a maximal independent set of pinned columns; dependent ones must agree.
  std::vector<Vector> basis_cols;
  std::vector<Vector> image_cols;
  for (std::size_t j = 0; j < domain.cols(); ++j) {
    auto candidate = basis_cols;
    candidate.push_back(domain.column_vector(j));
    if (rank(Matrix::from_columns(candidate, f.rows())) == candidate.size()) {
      basis_cols = std::move(candidate);
      image_cols.push_back(images.column_vector(j));
    } else {
      const Matrix b = Matrix::from_columns(basis_cols, f.rows());
      const auto coeffs = solve(b, domain.column_vector(j));
      const Vector expected = Matrix::from_columns(image_cols, f.cols()).apply(*coeffs);
      if (expected != images.column_vector(j)) throw PinningError("pinning is not linear on the pinned subspace");
    }
  }
  // Complete with standard basis vectors, leftmost first.
  for (std::size_t i = 0; i < f.rows() && basis_cols.size() < f.rows(); ++i) {
    Vector e(f.rows());
    e[i] = 1;
    auto candidate = basis_cols;
    candidate.push_back(e);
    if (rank(Matrix::from_columns(candidate, f.rows())) == candidate.size()) {
      basis_cols = std::move(candidate);
      image_cols.push_back(section.column_vector(i));
    }
  }
  const Matrix b = Matrix::from_columns(basis_cols, f.rows());
  const Matrix y = Matrix::from_columns(image_cols, f.cols());
  return y * inverse(b);
}

Matrix left_inverse(const Matrix& f) {
  try {
    return right_inverse_on_image(f.transpose()).transpose();
  } catch (const NotSurjectiveError&) {
    throw NotInvertibleError("map without full column rank has no left inverse");
  }
}

std::optional<Vector> solve(const Matrix& f, const Vector& b) {
  if (b.size() != f.rows()) throw DimensionError("solve: right-hand side of wrong length");
  const RowReduction rr = row_reduce(f);
  const Vector eb = rr.transform.apply(b);
  for (std::size_t i = rr.pivots.size(); i < eb.size(); ++i)
    if (sgn(eb[i]) != 0) return std::nullopt;
  Vector x(f.cols());
  for (std::size_t k = 0; k < rr.pivots.size(); ++k) x[rr.pivots[k]] = eb[k];
  return x;
}

Matrix inverse(const Matrix& f) {
  if (f.rows() != f.cols()) throw NotInvertibleError("non-square matrix is not invertible");
  const RowReduction rr = row_reduce(f);
  if (rr.pivots.size() != f.rows()) throw NotInvertibleError("singular matrix");
  return rr.transform;
}

bool is_invertible(const Matrix& f) { return f.rows() == f.cols() && rank(f) == f.rows(); }

}  // namespace wrep
