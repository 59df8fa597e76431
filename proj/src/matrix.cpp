#include "rankforge/matrix.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include "rankforge/errors.hpp"

namespace rankforge {

Matrix Matrix::identity(FieldModulus mod, std::size_t n) {
  Matrix m(mod, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
  return m;
}

Matrix Matrix::unit(FieldModulus mod, std::size_t rows, std::size_t cols, std::size_t i,
                    std::size_t j) {
  Matrix m(mod, rows, cols);
  m.data_.at(i * cols + j) = 1;
  return m;
}

Matrix Matrix::from_rows(FieldModulus mod, const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(mod, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

Matrix Matrix::from_vectors(FieldModulus mod, std::size_t cols, std::span<const Vector> vectors) {
  Matrix m(mod, vectors.size(), cols);
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    if (vectors[r].size() != cols) throw DimensionMismatch("vector length does not match ambient");
    std::copy(vectors[r].begin(), vectors[r].end(), m.row_mut(r).begin());
  }
  return m;
}

Matrix Matrix::from_columns(FieldModulus mod, std::size_t rows, std::span<const Vector> columns) {
  Matrix m(mod, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw DimensionMismatch("column length does not match rows");
    for (std::size_t r = 0; r < rows; ++r) m.data_[r * columns.size() + c] = columns[c][r];
  }
  return m;
}

Matrix Matrix::outer(FieldModulus mod, const Vector& a, const Vector& b) {
  Matrix m(mod, a.size(), b.size());
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < b.size(); ++c) m.data_[r * b.size() + c] = mod.mul(a[r], b[c]);
  return m;
}

bool Matrix::is_zero() const noexcept { return is_zero_vector(data_); }

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = data_[r * cols_ + c];
  return v;
}

Matrix Matrix::transposed() const {
  Matrix t(mod_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = data_[r * cols_ + c];
  return t;
}

Matrix Matrix::scaled(std::uint32_t factor) const {
  Matrix m = *this;
  for (auto& x : m.data_) x = mod_.mul(x, factor);
  return m;
}

Vector Matrix::apply(std::span<const std::uint32_t> v) const {
  if (v.size() != cols_) throw DimensionMismatch("matrix-vector product: length mismatch");
  Vector out(rows_, 0);
  const std::uint64_t p = mod_.value();
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    const std::uint32_t* row = data_.data() + r * cols_;
    for (std::size_t c = 0; c < cols_; ++c) acc = (acc + static_cast<std::uint64_t>(row[c]) * v[c]) % p;
    out[r] = static_cast<std::uint32_t>(acc);
  }
  return out;
}

Matrix Matrix::padded(std::size_t rows, std::size_t cols) const {
  if (rows < rows_ || cols < cols_) throw DimensionMismatch("padding cannot shrink a matrix");
  Matrix m(mod_, rows, cols);
  for (std::size_t r = 0; r < rows_; ++r)
    std::copy(row(r).begin(), row(r).end(), m.row_mut(r).begin());
  return m;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const {
  if (r0 + rows > rows_ || c0 + cols > cols_) throw DimensionMismatch("block out of range");
  Matrix m(mod_, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.data_[r * cols + c] = data_[(r0 + r) * cols_ + c0 + c];
  return m;
}

void Matrix::check_same_shape(const Matrix& o) const {
  if (!(mod_ == o.mod_)) throw ModulusMismatch();
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix shapes differ");
}

Matrix& Matrix::operator+=(const Matrix& o) {
  check_same_shape(o);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] = mod_.add(data_[i], o.data_[i]);
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  check_same_shape(o);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] = mod_.sub(data_[i], o.data_[i]);
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (!(a.mod_ == b.mod_)) throw ModulusMismatch();
  if (a.cols_ != b.rows_) {
    throw DimensionMismatch("matrix product: " + std::to_string(a.rows_) + "x" +
                            std::to_string(a.cols_) + " times " + std::to_string(b.rows_) + "x" +
                            std::to_string(b.cols_));
  }
  Matrix out(a.mod_, a.rows_, b.cols_);
  const std::uint64_t p = a.mod_.value();
  std::vector<std::uint64_t> acc(b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const std::uint64_t x = a.data_[r * a.cols_ + k];
      if (x == 0) continue;
      const std::uint32_t* brow = b.data_.data() + k * b.cols_;
      for (std::size_t c = 0; c < b.cols_; ++c) acc[c] = (acc[c] + x * brow[c]) % p;
    }
    for (std::size_t c = 0; c < b.cols_; ++c) out.data_[r * b.cols_ + c] = static_cast<std::uint32_t>(acc[c]);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ' ';
      os << m(r, c);
    }
    os << '\n';
  }
  return os;
}

bool is_zero_vector(std::span<const std::uint32_t> v) noexcept {
  return std::all_of(v.begin(), v.end(), [](std::uint32_t x) { return x == 0; });
}

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n, 0);
  v.at(i) = 1;
  return v;
}

Vector add_vectors(const FieldModulus& mod, const Vector& a, const Vector& b) {
  return axpy(mod, a, 1, b);
}

Vector axpy(const FieldModulus& mod, const Vector& a, std::uint32_t factor, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector lengths differ");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = mod.fma(a[i], factor, b[i]);
  return out;
}

}  // namespace rankforge
