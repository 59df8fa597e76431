#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "rankforge/field.hpp"
#include "rankforge/matrix.hpp"
#include "rankforge/pencil.hpp"
#include "rankforge/subspace.hpp"

namespace rankforge {

/// Certificate that rank(h) is maximal in span(L): a subspace W of the domain
/// with rank_h = dim_U - (dim_W - dim_LW). Every element of L has rank at most
/// dim_U - (dim W' - dim LW') for every W'.
struct WitnessReport {
  Subspace W = Subspace::zero(FieldModulus(2), 0);
  std::size_t dim_U = 0;
  std::size_t rank_h = 0;
  std::size_t dim_W = 0;
  std::size_t dim_LW = 0;

  bool identity_holds() const noexcept { return rank_h + dim_W == dim_U + dim_LW; }
};

/// Word of generators carrying a kernel vector of the idempotent out of its
/// image: chain_vectors[k] = generators[generator_indices[k-1]] * chain_vectors[k-1].
struct EscapeChain {
  std::vector<std::size_t> generator_indices;
  std::vector<Vector> chain_vectors;  // v0 ... vs, v0 in ker e, vs outside e*V

  const Vector& start() const { return chain_vectors.front(); }
  std::size_t length() const noexcept { return generator_indices.size(); }
};

/// Smallest X with X >= sum_i gen_i * seed and gen_i * X <= X for all i. The
/// seed itself is not included unless some product lands back in it.
Subspace env_image_closure(std::span<const Matrix> generators, const Subspace& seed);

struct Certified {
  WitnessReport witness;
};
/// The chain indexes into the L basis that was checked and lives in the padded
/// square domain when the input was rectangular.
struct NotCertified {
  EscapeChain chain;
};
using MaxRankVerdict = std::variant<Certified, NotCertified>;

/// Decides whether Env(gL) ker(gh) stays inside gh*U. Certified is sound for
/// any L; NotCertified proves non-maximality only when L is spanned by h and
/// rank-one maps. Throws PreconditionFailed if h is not in span(L_basis).
MaxRankVerdict check_max_rank(std::span<const Matrix> L_basis, const Matrix& h);

/// Breadth-first search for a shortest escape chain. Generators are tried in
/// ascending index order and frontier vectors in discovery order; a vector
/// enters the frontier only if it is new modulo everything discovered so far.
/// Returns nullopt iff env_image_closure(generators, ker e) <= e*V.
std::optional<EscapeChain> find_escape_chain(std::span<const Matrix> generators, const Matrix& e);

/// h + sum_k B_{i_k} where chain.generator_indices are pencil coefficient
/// indices (>= 1) and the chain was found for e = g * h.matrix() over the
/// generators g * B_i. Throws RankDidNotIncrease if the rank fails to grow.
CosetElement augment_rank(const Pencil& pencil, const CosetElement& h, const EscapeChain& chain,
                          const Matrix& g);

struct GenericIncrement {
  FieldScalar alpha;
  Matrix result;
};

/// First alpha in 0, 1, ..., min(p, rank h + 2) - 1 with rank(h + alpha h'')
/// > rank(h). Requires h'' ker(h) not inside h U (PreconditionFailed);
/// throws FieldTooSmall if no trial value works, which needs p < rank h + 2.
GenericIncrement generic_increment(const Matrix& h, const Matrix& h_dd);

/// dim U - (dim W - dim LW) with LW = sum_i L_i W.
std::size_t fact_bound(std::span<const Matrix> L_basis, const Subspace& W);

struct CompletionResult {
  Vector assignment;             // x_1 .. x_n
  std::size_t rank = 0;
  WitnessReport witness;         // in the original (unpadded) domain F^cols
  PaddingEmbedding embedding;
  std::vector<std::size_t> rank_trace;  // rank before each augmentation, then the final rank
  std::vector<EscapeChain> chains;      // one per augmentation, pencil indices
  std::vector<std::size_t> dropped_zero_generators;
};

/// Maximum-rank completion of a pencil whose B_1..B_n have rank <= 1.
/// Throws PreconditionFailed listing the offending indices otherwise.
CompletionResult complete_max_rank(const Pencil& pencil);

/// Restricts a witness found in the padded k x k space back to F^cols and
/// recomputes the dimensions against the original L basis.
WitnessReport restrict_witness(std::span<const Matrix> L_basis, const Matrix& h,
                               const Subspace& padded_W);

}  // namespace rankforge
