#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rankforge/matrix.hpp"

namespace rankforge {

class Subspace;

struct RrefResult {
  Matrix reduced;    // R, reduced row echelon form of the input
  Matrix transform;  // T, nonsingular, T * input == R
  std::vector<std::size_t> pivots;
};

RrefResult rref(const Matrix& m);

// In-place Gauss-Jordan elimination without the transform. Returns the pivot
// columns; rows past pivots.size() are zero afterwards.
std::vector<std::size_t> row_reduce(Matrix& m);

std::size_t rank(const Matrix& m);

// {x : m x = 0} as a subspace of F^cols.
Subspace kernel_basis(const Matrix& m);
// Column space of m as a subspace of F^rows.
Subspace image_basis(const Matrix& m);

// Particular solution of a x = b with free variables set to 0, or nullopt
// when the system is inconsistent.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

// Nonsingular g with (g h)^2 = g h for square h, assembled from the
// elimination transform of h followed by the permutation that moves the
// k-th pivot row to row pivots[k].
Matrix idempotentizer(const Matrix& h);

// Inverse of a nonsingular square matrix; throws PreconditionFailed if singular.
Matrix inverse(const Matrix& m);

// Incrementally maintained linearly independent set, kept reduced against its
// own pivot columns.
class EchelonBasis {
 public:
  EchelonBasis(FieldModulus mod, std::size_t ambient_dim) : mod_(mod), n_(ambient_dim) {}

  std::size_t ambient_dim() const noexcept { return n_; }
  std::size_t size() const noexcept { return rows_.size(); }
  const FieldModulus& modulus() const noexcept { return mod_; }

  // v minus its projection onto the span along the pivot coordinates.
  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const;
  // Returns true iff v was independent of the current span (and was added).
  bool insert(const Vector& v);

  Subspace to_subspace() const;

 private:
  FieldModulus mod_;
  std::size_t n_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace rankforge
