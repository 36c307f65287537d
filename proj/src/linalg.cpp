#include "octqft/linalg.hpp"

#include <sstream>

#include "octqft/errors.hpp"

namespace octqft {

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar(field)) {}

Matrix Matrix::identity(FieldSpec f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_ints(FieldSpec f, const std::vector<std::vector<long>>& rows) {
  const std::size_t r = rows.size(), c = rows.empty() ? 0 : rows.front().size();
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw input_error("DimensionMismatch", "ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Scalar(f, rows[i][j]);
  }
  return m;
}

Matrix Matrix::from_columns(FieldSpec f, std::size_t rows, const std::vector<Vector>& cols) {
  Matrix m(f, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
  return m;
}

Vector Matrix::column(std::size_t j) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

void Matrix::set_column(std::size_t j, const Vector& v) {
  if (v.size() != rows_) throw input_error("DimensionMismatch", "column length");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix r(*this);
  for (auto& x : r.data_) x *= s;
  return r;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw input_error("DimensionMismatch", "matrix-vector product");
  Vector out = zero_vector(field_, rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < rows_; ++i) out[i].add_product((*this)(i, j), v[j]);
  }
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

std::size_t Matrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& x : data_) n += !x.is_zero();
  return n;
}

namespace {

void multiply_row(const Matrix& a, const Matrix& b, std::size_t i, Matrix& out) {
  for (std::size_t k = 0; k < a.cols(); ++k) {
    const Scalar& aik = a(i, k);
    if (aik.is_zero()) continue;
    for (std::size_t j = 0; j < b.cols(); ++j) {
      const Scalar& bkj = b(k, j);
      if (!bkj.is_zero()) out(i, j).add_product(aik, bkj);
    }
  }
}

void check_product(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows())
    throw input_error("DimensionMismatch", "product of " + std::to_string(a.rows()) + "x" +
                                               std::to_string(a.cols()) + " and " + std::to_string(b.rows()) +
                                               "x" + std::to_string(b.cols()));
  if (a.field() != b.field()) throw input_error("FieldMismatch", "matrix product");
}

}  // namespace

Matrix Matrix::operator*(const Matrix& o) const {
  check_product(*this, o);
  Matrix out(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) multiply_row(*this, o, i, out);
  return out;
}

Matrix multiply_parallel(const Matrix& a, const Matrix& b) {
  check_product(a, b);
  Matrix out(a.field(), a.rows(), b.cols());
  const auto n = static_cast<long>(a.rows());
#pragma omp parallel for schedule(dynamic, 4)
  for (long i = 0; i < n; ++i) multiply_row(a, b, static_cast<std::size_t>(i), out);
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw input_error("DimensionMismatch", "matrix sum");
  Matrix r(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw input_error("DimensionMismatch", "matrix difference");
  Matrix r(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    os << "]\n";
  }
  return os.str();
}

Matrix kron(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field()) throw input_error("FieldMismatch", "kron");
  Matrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& aij = a(i, j);
      if (aij.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (!b(k, l).is_zero()) out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

RowEchelon rref(const Matrix& m) {
  RowEchelon r{m, {}, 0};
  Matrix& a = r.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = row;
    while (piv < a.rows() && a(piv, col).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(row, j));
    const Scalar inv = a(row, col).inverse();
    for (std::size_t j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col).is_zero()) continue;
      const Scalar factor = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j)
        if (!a(row, j).is_zero()) a(i, j).add_product(-factor, a(row, j));
    }
    r.pivots.push_back(col);
    ++row;
  }
  r.rank = r.pivots.size();
  return r;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw input_error("DimensionMismatch", "solve: right-hand side length");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  const RowEchelon e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vector x = zero_vector(m.field(), m.cols());
  for (std::size_t r = 0; r < e.rank; ++r) x[e.pivots[r]] = e.reduced(r, m.cols());
  return x;
}

Matrix invert_matrix(const Matrix& m) {
  if (!m.is_square()) throw input_error("DimensionMismatch", "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Scalar::one(m.field());
  }
  const RowEchelon e = rref(aug);
  if (e.rank < n || e.pivots[n - 1] != n - 1)
    throw math_error("SingularMatrix", "matrix of size " + std::to_string(n) + " is singular");
  Matrix inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

std::vector<Vector> kernel_basis(const Matrix& m) {
  const RowEchelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(m.field(), m.cols());
    v[free] = Scalar::one(m.field());
    for (std::size_t r = 0; r < e.rank; ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix left_inverse(const Matrix& m) {
  // Rows of m where the transpose has pivots form an invertible square block.
  const RowEchelon e = rref(m.transpose());
  if (e.rank != m.cols())
    throw math_error("SingularMatrix", "left inverse requires full column rank");
  const std::size_t d = m.cols();
  Matrix block(m.field(), d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) block(r, c) = m(e.pivots[r], c);
  const Matrix binv = invert_matrix(block);
  Matrix out(m.field(), d, m.rows());
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t r = 0; r < d; ++r) out(i, e.pivots[r]) = binv(i, r);
  return out;
}

}  // namespace octqft
