#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "rankforge/field.hpp"
#include "rankforge/smodule.hpp"

namespace rankforge {

// ---------------------------------------------------------------------------
// Cyclic and multi-generator local improvement (semisimple modules).
// ---------------------------------------------------------------------------

struct MaxCertified {};
struct Improved {
  Vector u;
};
using CyclicStep = std::variant<MaxCertified, Improved>;

/// MaxCertified iff Ann(u) V <= A u. Otherwise u + (I - pi) w for the first
/// witness w (ambient basis order), where pi is an A-equivariant projection
/// onto A u. Throws NoComplement if no such projection exists (M not
/// semisimple) and InvariantBreach if the closure does not grow.
CyclicStep cyclic_increment(const SModule& m, const AlgebraBasis& alg, const Vector& u);

struct GeneratorTuple {
  std::vector<Vector> vectors;
  Submodule generated;

  static GeneratorTuple make(const SModule& m, std::vector<Vector> vectors);
};

struct OptimalCertified {};
struct ImprovedAt {
  std::size_t index;  // 0-based position in the tuple
  Vector u;
};
using MultiStep = std::variant<OptimalCertified, ImprovedAt>;

/// Runs cyclic_increment on u_i + W_i in V / W_i, W_i the submodule generated
/// by the other entries, for i = 0, 1, ...; returns the first improvement.
MultiStep multi_gen_optimize(const SModule& m, const AlgebraBasis& alg, std::span<const Vector> tuple);

// ---------------------------------------------------------------------------
// Generator minimization loop.
// ---------------------------------------------------------------------------

enum class FieldPolicy {
  // |F| > 2 dim V required; FieldTooSmall otherwise. Insufficient is a proof.
  kStrict,
  // Below the bound, perturbations run over every field element. A found
  // generating set is still exact; "insufficient" is no longer a proof.
  kExhaustive,
};

struct CikFound {
  std::size_t index;        // tuple position replaced
  std::size_t basis_index;  // ambient basis vector added
  FieldScalar lambda;
  std::vector<Vector> tuple;
  Submodule generated;
};
struct Insufficient {};
using CikStep = std::variant<CikFound, Insufficient>;

/// First (i, j, lambda) in ascending order such that U' = A{.., u_i + lambda e_j, ..}
/// satisfies U' + W = V and (U' + W') meet W > W'. Lambda ranges over the
/// first 2n+1 field elements.
CikStep cik_step(const SModule& m, std::span<const Vector> tuple, const Subspace& W, const Subspace& W_prime,
                 FieldPolicy policy = FieldPolicy::kStrict);

/// Left-to-right greedy removal; throws PreconditionFailed if gens do not generate.
std::vector<Vector> irredundant_generating_set(const SModule& m, std::span<const Vector> gens);

struct LoopEvent {
  enum class Kind { kInner, kOuter };
  Kind kind;
  std::size_t dim_W;        // after the event
  std::size_t dim_W_prime;  // after the event; for kOuter, U meet the new W
};

struct BudgetResult {
  bool found = false;
  std::vector<Vector> generators;
  std::size_t iterations = 0;  // executions of the perturbation step
  std::vector<LoopEvent> trace;
  // False only under FieldPolicy::kExhaustive below the field bound.
  bool insufficiency_certified = true;
};

/// At most ell generators of V, or found == false when ell do not suffice.
BudgetResult generators_with_budget(const SModule& m, std::size_t ell, FieldPolicy policy = FieldPolicy::kStrict);

struct MinGeneratorsResult {
  std::size_t count = 0;
  std::vector<Vector> generators;
  std::vector<BudgetResult> probes;  // one per budget tried, ascending
};

MinGeneratorsResult minimize_generators(const SModule& m, FieldPolicy policy = FieldPolicy::kStrict);

/// 2 dim V: the field must have more elements than this for kStrict.
std::size_t genmin_field_bound(const SModule& m);

}  // namespace rankforge
