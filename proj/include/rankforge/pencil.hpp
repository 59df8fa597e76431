#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rankforge/matrix.hpp"

namespace rankforge {

/// Linear matrix B0 + x1 B1 + ... + xn Bn. coefficient(0) is the constant term.
class Pencil {
 public:
  /// Throws DimensionMismatch unless all matrices share one shape and field;
  /// at least the constant term is required.
  explicit Pencil(std::vector<Matrix> coefficients);

  const FieldModulus& modulus() const noexcept { return coeffs_.front().modulus(); }
  std::size_t rows() const noexcept { return coeffs_.front().rows(); }
  std::size_t cols() const noexcept { return coeffs_.front().cols(); }
  std::size_t num_vars() const noexcept { return coeffs_.size() - 1; }
  const Matrix& coefficient(std::size_t i) const { return coeffs_.at(i); }
  const std::vector<Matrix>& coefficients() const noexcept { return coeffs_; }

  /// B0 + sum x_i B_i. Throws DimensionMismatch if |x| != num_vars().
  Matrix evaluate(std::span<const std::uint32_t> x) const;
  /// sum c_i B_i over all n+1 coefficients (no constant pinned).
  Matrix combine(std::span<const std::uint32_t> c) const;

  friend bool operator==(const Pencil&, const Pencil&) = default;

 private:
  std::vector<Matrix> coeffs_;
};

/// A matrix of the pencil's span carried together with its coefficient
/// vector (c0, ..., cn). Elements of the completion coset have c0 == 1.
class CosetElement {
 public:
  /// Evaluates the combination; coeffs must have num_vars()+1 entries.
  CosetElement(const Pencil& pencil, Vector coeffs);
  /// Checks matrix == sum coeffs_i B_i and throws PreconditionFailed otherwise.
  CosetElement(const Pencil& pencil, Vector coeffs, Matrix matrix);

  static CosetElement constant_term(const Pencil& pencil);

  const Vector& coeffs() const noexcept { return coeffs_; }
  const Matrix& matrix() const noexcept { return matrix_; }
  /// (c1, ..., cn), the variable assignment when c0 == 1.
  Vector assignment() const { return Vector(coeffs_.begin() + 1, coeffs_.end()); }

 private:
  Vector coeffs_;
  Matrix matrix_;
};

struct RankOneReport {
  std::vector<std::size_t> violations;  // indices i >= 1 with rank(B_i) > 1
  std::vector<std::size_t> zero_rank;   // indices i >= 1 with B_i == 0 (warning only)

  bool ok() const noexcept { return violations.empty(); }
};

RankOneReport validate_rank_one(const Pencil& pencil);

struct PaddingEmbedding {
  std::size_t original_rows;
  std::size_t original_cols;
  std::size_t size;  // k = max(rows, cols)

  bool is_identity() const noexcept { return original_rows == size && original_cols == size; }
};

struct PaddedPencil {
  Pencil pencil;
  PaddingEmbedding embedding;
};

/// Pads every coefficient with zero rows/cols to k x k; ranks are unchanged.
PaddedPencil pad_to_square(const Pencil& pencil);

}  // namespace rankforge
