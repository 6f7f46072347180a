#include "gelfand/matrix.hpp"

#include <sstream>

namespace gelfand {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Code> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) fail(ErrorCode::DimensionMismatch, "entry count does not match shape");
  for (Code c : entries_) {
    if (c >= field_.size()) fail(ErrorCode::InvalidInput, "matrix entry out of field range");
  }
}

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::scalar(const FieldElement& c, std::size_t n) {
  Matrix m(c.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = c.code();
  return m;
}

Matrix Matrix::from_ints(const Field& field, std::initializer_list<std::initializer_list<long long>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.begin()->size() : 0;
  Matrix m(field, r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) fail(ErrorCode::DimensionMismatch, "ragged matrix literal");
    std::size_t j = 0;
    for (long long v : row) m(i, j++) = field.from_int(v);
    ++i;
  }
  return m;
}

Matrix Matrix::diagonal(const Field& field, std::initializer_list<long long> diag) {
  Matrix m(field, diag.size(), diag.size());
  std::size_t i = 0;
  for (long long v : diag) {
    m(i, i) = field.from_int(v);
    ++i;
  }
  return m;
}

Matrix Matrix::column(const Field& field, std::vector<Code> entries) {
  const std::size_t n = entries.size();
  return Matrix(field, n, 1, std::move(entries));
}

Matrix Matrix::companion(const Polynomial& f) {
  if (!f.is_monic() || f.degree() < 1) fail(ErrorCode::NotMonic, "companion matrix needs a monic polynomial");
  const auto d = static_cast<std::size_t>(f.degree());
  const Field& field = f.field();
  Matrix m(field, d, d);
  for (std::size_t i = 1; i < d; ++i) m(i, i - 1) = 1;
  for (std::size_t i = 0; i < d; ++i) m(i, d - 1) = field.neg(f.coeff(i));
  return m;
}

Matrix Matrix::block_diagonal(const Matrix& a, const Matrix& b) {
  a.check_same_field(b);
  Matrix m(a.field_, a.rows_ + b.rows_, a.cols_ + b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) m(a.rows_ + i, a.cols_ + j) = b(i, j);
  return m;
}

void Matrix::check_same_field(const Matrix& o) const {
  if (!(field_ == o.field_)) fail(ErrorCode::FieldMismatch, "matrices over different fields");
}

Matrix Matrix::operator+(const Matrix& o) const {
  check_same_field(o);
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorCode::DimensionMismatch, "matrix sum shape mismatch");
  Matrix out(field_, rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = field_.add(entries_[k], o.entries_[k]);
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  check_same_field(o);
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorCode::DimensionMismatch, "matrix difference shape mismatch");
  Matrix out(field_, rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = field_.sub(entries_[k], o.entries_[k]);
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  check_same_field(o);
  if (cols_ != o.rows_) fail(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  Matrix out(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Code a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        out(i, j) = field_.add(out(i, j), field_.mul(a, o(k, j)));
      }
    }
  }
  return out;
}

Matrix Matrix::operator-() const { return scaled(field_.neg(1)); }

Matrix Matrix::scaled(Code c) const {
  Matrix out(*this);
  for (auto& e : out.entries_) e = field_.mul(e, c);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

Matrix Matrix::pow(std::uint64_t e) const {
  Matrix result = identity(field_, rows_);
  Matrix base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    base = base * base;
    e >>= 1u;
  }
  return result;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  Matrix out(field_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
  return out;
}

Matrix Matrix::column_at(std::size_t j) const { return block(0, j, rows_, 1); }

bool Matrix::is_zero() const {
  for (Code c : entries_)
    if (c != 0) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1u : 0u)) return false;
  return true;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_ && field_ == o.field_;
}

std::strong_ordering Matrix::operator<=>(const Matrix& o) const {
  if (auto c = rows_ <=> o.rows_; c != 0) return c;
  if (auto c = cols_ <=> o.cols_; c != 0) return c;
  return entries_ <=> o.entries_;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ", ";
    os << "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ", ";
      os << field_.format((*this)(i, j));
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

RowEchelon row_echelon(const Matrix& m) {
  const Field& f = m.field();
  Matrix r = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
    std::size_t p = row;
    while (p < r.rows() && r(p, col) == 0) ++p;
    if (p == r.rows()) continue;
    if (p != row) {
      for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r(p, j), r(row, j));
    }
    const Code inv = f.inv(r(row, col));
    for (std::size_t j = 0; j < r.cols(); ++j) r(row, j) = f.mul(r(row, j), inv);
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == row || r(i, col) == 0) continue;
      const Code factor = r(i, col);
      for (std::size_t j = 0; j < r.cols(); ++j) r(i, j) = f.sub(r(i, j), f.mul(factor, r(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(r), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return row_echelon(m).pivots.size(); }

Code determinant(const Matrix& m) {
  if (!m.is_square()) fail(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  const Field& f = m.field();
  Matrix r = m;
  const std::size_t n = r.rows();
  Code det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && r(p, col) == 0) ++p;
    if (p == n) return 0;
    if (p != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(r(p, j), r(col, j));
      det = f.neg(det);
    }
    det = f.mul(det, r(col, col));
    const Code inv = f.inv(r(col, col));
    for (std::size_t i = col + 1; i < n; ++i) {
      if (r(i, col) == 0) continue;
      const Code factor = f.mul(r(i, col), inv);
      for (std::size_t j = col; j < n; ++j) r(i, j) = f.sub(r(i, j), f.mul(factor, r(col, j)));
    }
  }
  return det;
}

bool is_invertible(const Matrix& m) { return m.is_square() && determinant(m) != 0; }

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) fail(ErrorCode::DimensionMismatch, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto [r, pivots] = row_echelon(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) fail(ErrorCode::SingularInput, "matrix is not invertible");
  return r.block(0, n, n, n);
}

std::vector<Matrix> kernel(const Matrix& m) {
  auto [r, pivots] = row_echelon(m);
  const Field& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Matrix> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Code> v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t row = 0; row < pivots.size(); ++row) v[pivots[row]] = f.neg(r(row, free));
    basis.push_back(Matrix::column(f, std::move(v)));
  }
  return basis;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) fail(ErrorCode::DimensionMismatch, "solve: row count mismatch");
  const std::size_t n = a.cols();
  const std::size_t k = b.cols();
  Matrix aug(a.field(), a.rows(), n + k);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    for (std::size_t j = 0; j < k; ++j) aug(i, n + j) = b(i, j);
  }
  auto [r, pivots] = row_echelon(aug);
  if (!pivots.empty() && pivots.back() >= n) return std::nullopt;
  Matrix x(a.field(), n, k);
  for (std::size_t row = 0; row < pivots.size(); ++row) {
    for (std::size_t j = 0; j < k; ++j) x(pivots[row], j) = r(row, n + j);
  }
  return x;
}

Matrix hstack(const std::vector<Matrix>& columns) {
  if (columns.empty()) fail(ErrorCode::DimensionMismatch, "hstack of nothing");
  const std::size_t n = columns.front().rows();
  std::size_t total = 0;
  for (const auto& c : columns) {
    if (c.rows() != n) fail(ErrorCode::DimensionMismatch, "hstack: row count mismatch");
    total += c.cols();
  }
  Matrix out(columns.front().field(), n, total);
  std::size_t off = 0;
  for (const auto& c : columns) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < c.cols(); ++j) out(i, off + j) = c(i, j);
    off += c.cols();
  }
  return out;
}

Matrix evaluate(const Polynomial& f, const Matrix& m) {
  if (!(f.field() == m.field())) fail(ErrorCode::FieldMismatch, "polynomial and matrix fields differ");
  Matrix acc = Matrix::zero(m.field(), m.rows());
  const Matrix id = Matrix::identity(m.field(), m.rows());
  for (std::size_t i = f.coeffs().size(); i-- > 0;) acc = acc * m + id.scaled(f.coeffs()[i]);
  return acc;
}

Matrix evaluate_on(const Polynomial& f, const Matrix& m, const Matrix& v) {
  if (!(f.field() == m.field())) fail(ErrorCode::FieldMismatch, "polynomial and matrix fields differ");
  Matrix acc(m.field(), v.rows(), v.cols());
  for (std::size_t i = f.coeffs().size(); i-- > 0;) acc = m * acc + v.scaled(f.coeffs()[i]);
  return acc;
}

Polynomial characteristic_polynomial(const Matrix& m) {
  if (!m.is_square()) fail(ErrorCode::DimensionMismatch, "characteristic polynomial of a non-square matrix");
  const Field& f = m.field();
  const std::size_t n = m.rows();
  Matrix h = m;
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t p = j + 1;
    while (p < n && h(p, j) == 0) ++p;
    if (p == n) continue;
    if (p != j + 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(h(p, c), h(j + 1, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, p), h(r, j + 1));
    }
    const Code inv = f.inv(h(j + 1, j));
    for (std::size_t i = j + 2; i < n; ++i) {
      if (h(i, j) == 0) continue;
      const Code u = f.mul(h(i, j), inv);
      for (std::size_t c = 0; c < n; ++c) h(i, c) = f.sub(h(i, c), f.mul(u, h(j + 1, c)));
      for (std::size_t r = 0; r < n; ++r) h(r, j + 1) = f.add(h(r, j + 1), f.mul(u, h(r, i)));
    }
  }
  std::vector<Polynomial> p;
  p.push_back(Polynomial::one(f));
  const Polynomial t = Polynomial::monomial(f, 1, 1);
  for (std::size_t k = 1; k <= n; ++k) {
    Polynomial pk = (t - Polynomial(f, {h(k - 1, k - 1)})) * p[k - 1];
    Code prod = 1;
    for (std::size_t i = 1; i < k; ++i) {
      prod = f.mul(prod, h(k - i, k - i - 1));
      const Code c = f.mul(h(k - i - 1, k - 1), prod);
      pk = pk - p[k - i - 1].scaled(c);
    }
    p.push_back(std::move(pk));
  }
  return p[n];
}

Polynomial local_minimal_polynomial(const Matrix& m, const Matrix& v) {
  const Field& f = m.field();
  const std::size_t n = m.rows();
  // Echelon basis of the Krylov space, each row tracking its expression in
  // powers of m applied to v.
  std::vector<std::vector<Code>> rows;
  std::vector<std::vector<Code>> combos;
  std::vector<std::size_t> pivot_of;
  Matrix w = v;
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<Code> vec(w.entries());
    std::vector<Code> combo(n + 1, 0);
    combo[k] = 1;
    for (std::size_t b = 0; b < rows.size(); ++b) {
      const Code c = vec[pivot_of[b]];
      if (c == 0) continue;
      for (std::size_t i = 0; i < n; ++i) vec[i] = f.sub(vec[i], f.mul(c, rows[b][i]));
      for (std::size_t i = 0; i <= n; ++i) combo[i] = f.sub(combo[i], f.mul(c, combos[b][i]));
    }
    std::size_t piv = 0;
    while (piv < n && vec[piv] == 0) ++piv;
    if (piv == n) return Polynomial(f, std::move(combo)).monic();
    const Code inv = f.inv(vec[piv]);
    for (auto& x : vec) x = f.mul(x, inv);
    for (auto& x : combo) x = f.mul(x, inv);
    rows.push_back(std::move(vec));
    combos.push_back(std::move(combo));
    pivot_of.push_back(piv);
    w = m * w;
  }
  fail(ErrorCode::InvariantViolation, "Krylov sequence did not terminate");
}

Polynomial minimal_polynomial(const Matrix& m) {
  if (!m.is_square()) fail(ErrorCode::DimensionMismatch, "minimal polynomial of a non-square matrix");
  const Field& f = m.field();
  Polynomial acc = Polynomial::one(f);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<Code> e(m.rows(), 0);
    e[i] = 1;
    acc = lcm(acc, local_minimal_polynomial(m, Matrix::column(f, std::move(e))));
  }
  return acc;
}

bool is_semisimple(const Matrix& m) { return is_squarefree(minimal_polynomial(m)); }

}  // namespace gelfand
