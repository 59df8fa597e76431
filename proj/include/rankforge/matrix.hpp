#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "rankforge/field.hpp"

namespace rankforge {

// Column vectors are plain residue sequences; the field is implied by the
// matrix or module they are used with. Entries must be canonical (< p).
using Vector = std::vector<std::uint32_t>;

// Dense row-major matrix over GF(p).
class Matrix {
 public:
  Matrix(FieldModulus mod, std::size_t rows, std::size_t cols)
      : mod_(mod), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Matrix identity(FieldModulus mod, std::size_t n);
  // E_{ij}: a single 1 at (i, j).
  static Matrix unit(FieldModulus mod, std::size_t rows, std::size_t cols, std::size_t i,
                     std::size_t j);
  // Entries are reduced into [0, p).
  static Matrix from_rows(FieldModulus mod, const std::vector<std::vector<std::int64_t>>& rows);
  // Rows of the result are the given vectors; all must have length `cols`.
  static Matrix from_vectors(FieldModulus mod, std::size_t cols, std::span<const Vector> vectors);
  static Matrix from_columns(FieldModulus mod, std::size_t rows, std::span<const Vector> columns);
  // Outer product a * b^T.
  static Matrix outer(FieldModulus mod, const Vector& a, const Vector& b);

  const FieldModulus& modulus() const noexcept { return mod_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_zero() const noexcept;

  std::uint32_t operator()(std::size_t r, std::size_t c) const noexcept {
    return data_[r * cols_ + c];
  }
  void set(std::size_t r, std::size_t c, std::int64_t value) {
    data_[r * cols_ + c] = mod_.reduce(value);
  }

  std::span<const std::uint32_t> row(std::size_t r) const noexcept {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<std::uint32_t> row_mut(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
  Vector row_vector(std::size_t r) const { return Vector(row(r).begin(), row(r).end()); }
  Vector column(std::size_t c) const;
  // Row-major flattening, used to treat matrices as vectors of length rows*cols.
  const std::vector<std::uint32_t>& entries() const noexcept { return data_; }

  Matrix transposed() const;
  Matrix scaled(std::uint32_t factor) const;
  Vector apply(std::span<const std::uint32_t> v) const;

  // Zero-padded copy of size rows x cols (rows >= rows(), cols >= cols()).
  Matrix padded(std::size_t rows, std::size_t cols) const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  void check_same_shape(const Matrix& o) const;

  FieldModulus mod_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint32_t> data_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

bool is_zero_vector(std::span<const std::uint32_t> v) noexcept;
Vector unit_vector(std::size_t n, std::size_t i);
Vector add_vectors(const FieldModulus& mod, const Vector& a, const Vector& b);
// a + factor * b
Vector axpy(const FieldModulus& mod, const Vector& a, std::uint32_t factor, const Vector& b);

}  // namespace rankforge
