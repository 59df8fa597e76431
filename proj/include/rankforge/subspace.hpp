#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "rankforge/matrix.hpp"

namespace rankforge {

/// Linear subspace of F^n stored by its canonical reduced row echelon basis.
///
/// Two subspaces are equal iff their bases are identical grids, so fixed
/// points of closure iterations can be tested with ==.
class Subspace {
 public:
  static Subspace zero(FieldModulus mod, std::size_t ambient_dim);
  static Subspace whole(FieldModulus mod, std::size_t ambient_dim);
  static Subspace span(FieldModulus mod, std::size_t ambient_dim, std::span<const Vector> vectors);
  static Subspace row_space(const Matrix& m);

  const FieldModulus& modulus() const noexcept { return basis_.modulus(); }
  std::size_t ambient_dim() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  bool is_zero() const noexcept { return dim() == 0; }
  bool is_whole() const noexcept { return dim() == ambient_dim(); }

  const Matrix& basis() const noexcept { return basis_; }
  std::vector<Vector> basis_vectors() const;
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// Clears the pivot coordinates of v by subtracting basis rows; zero iff v is in the span.
  Vector reduce(const Vector& v) const;
  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  /// Coefficients of v in the basis rows, or nullopt when v is outside.
  std::optional<Vector> coordinates(const Vector& v) const;

  /// Span of the standard basis vectors at the non-pivot positions.
  Subspace complement() const;
  /// a * this, a subspace of F^{a.rows()}.
  Subspace image_under(const Matrix& a) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  explicit Subspace(Matrix basis, std::vector<std::size_t> pivots)
      : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
// Sum of a_i * s over the given maps.
Subspace image_sum(std::span<const Matrix> maps, const Subspace& s);

}  // namespace rankforge
