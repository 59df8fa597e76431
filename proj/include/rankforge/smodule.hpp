#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rankforge/matrix.hpp"
#include "rankforge/subspace.hpp"

namespace rankforge {

/// Finite-dimensional module over a finite index set S, given by one square
/// action matrix per element of S. Actions multiply column vectors.
class SModule {
 public:
  SModule(FieldModulus mod, std::size_t dim, std::vector<Matrix> actions);

  const FieldModulus& modulus() const noexcept { return mod_; }
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<Matrix>& actions() const noexcept { return actions_; }
  std::size_t num_actions() const noexcept { return actions_.size(); }

  friend bool operator==(const SModule&, const SModule&) = default;

 private:
  FieldModulus mod_;
  std::size_t dim_;
  std::vector<Matrix> actions_;
};

bool is_invariant(const SModule& m, const Subspace& space);

/// An action-invariant subspace. Construction checks invariance.
class Submodule {
 public:
  Submodule(const SModule& parent, Subspace space);

  const Subspace& space() const noexcept { return space_; }
  std::size_t dim() const noexcept { return space_.dim(); }
  bool is_whole() const noexcept { return space_.is_whole(); }

  friend bool operator==(const Submodule&, const Submodule&) = default;

 private:
  Subspace space_;
};

/// Smallest invariant subspace containing the vectors (identity included, so
/// span(T) is always inside the result).
Submodule submodule_closure(const SModule& m, std::span<const Vector> vectors);
Submodule submodule_closure(const SModule& m, const Subspace& seed);

/// Linearly independent spanning set of Env(actions + I), closed under products.
struct AlgebraBasis {
  std::vector<Matrix> elements;

  std::size_t dim() const noexcept { return elements.size(); }
};

AlgebraBasis enveloping_algebra_basis(const SModule& m);
/// Independent subset of the given matrices (first occurrences kept).
AlgebraBasis independent_subset(FieldModulus mod, std::size_t n, std::span<const Matrix> elements);

/// Basis of {c : (sum_k c_k alg_k) u = 0}.
std::vector<Vector> annihilator(const SModule& m, const AlgebraBasis& alg, const Vector& u);
/// The algebra elements sum_k c_k alg_k for the given coefficient vectors.
std::vector<Matrix> combine_elements(const AlgebraBasis& alg, std::span<const Vector> coeffs, FieldModulus mod,
                                     std::size_t n);

/// V/W in the coordinates of the non-pivot positions of W's canonical basis.
struct QuotientModule {
  SModule module;
  Matrix project;  // (n - dim W) x n
  Matrix lift;     // n x (n - dim W), coordinate embedding; project * lift == I
};

/// Throws PreconditionFailed if W is not invariant.
QuotientModule quotient_module(const SModule& m, const Subspace& W);

/// Basis of {phi : phi * nu_U(s) == nu_V(s) * phi for all s}; each phi is dim V x dim U.
std::vector<Matrix> hom_basis(const SModule& U, const SModule& V);

/// Action by transposes: the dual module in the dual basis.
SModule dualize(const SModule& m);

/// Module on W1 (+) W2 where each r in R (a W2 x W1 map) acts as (w1, w2) -> (0, r w1).
SModule build_bipartite(FieldModulus mod, std::size_t w1_dim, std::size_t w2_dim, std::span<const Matrix> R);

/// Bipartite module on L (+) V with one action per u in U_basis, (h, v) -> (0, h u).
/// The closure of (h, v) has dimension 1 + rank(h) for nonzero h.
struct CyclicReduction {
  SModule module;
  std::vector<Matrix> L_basis;  // independent; W1 coordinates refer to it
  std::size_t l_dim = 0;
  std::size_t v_dim = 0;

  Vector encode(const Matrix& h, const Vector& v) const;
  Matrix decode_map(const Vector& w) const;
};

/// L_basis must be non-empty (it fixes shape and field); dependent entries are dropped.
CyclicReduction reduce_completion_to_cyclic(std::span<const Matrix> L_basis, std::span<const Vector> U_basis);

/// Cyclic module with basis b0..b_ell where action i sends b0 to b_i and kills the rest.
SModule build_w0(FieldModulus mod, std::size_t ell);

/// A pair of modules whose injective (resp. surjective) homomorphisms decode to
/// injective elements of L.
struct HomReduction {
  SModule source;
  SModule target;
  CyclicReduction cyclic;
  bool dual = false;

  /// Element h of L read off a homomorphism source -> target.
  Matrix decode(const Matrix& hom) const;
};

HomReduction reduce_nonsingular_to_injective_hom(std::span<const Matrix> L_basis, std::span<const Vector> U_basis);
HomReduction reduce_to_surjective_hom(std::span<const Matrix> L_basis, std::span<const Vector> U_basis);

}  // namespace rankforge
