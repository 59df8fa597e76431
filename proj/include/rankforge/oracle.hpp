#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "rankforge/matrix.hpp"
#include "rankforge/pencil.hpp"
#include "rankforge/smodule.hpp"

namespace rankforge {

// Brute-force references. They share only the dense elimination primitives
// with the algorithms they check; closures are recomputed here.

struct EnumerationCap {
  std::uint64_t max_states = std::uint64_t{1} << 24;
};

struct SemisimpleBlock {
  std::size_t simple_dim = 1;    // d
  std::size_t multiplicity = 0;  // s
};

struct SemisimpleSpec {
  std::vector<SemisimpleBlock> blocks;

  std::size_t total_dim() const noexcept;
};

struct RankArgmax {
  std::size_t rank = 0;
  Vector argmax;
};

struct CyclicArgmax {
  std::size_t dim = 0;
  Vector argmax;
};

/// Max rank over all p^n assignments, first argmax in lexicographic order
/// (x_1 most significant). Throws CapExceeded if p^n > cap.
RankArgmax oracle_max_completion_rank(const Pencil& pencil, EnumerationCap cap = {});

/// Max dimension of a cyclic submodule over all p^dim vectors, first argmax
/// in lexicographic order. Throws CapExceeded if p^dim > cap.
CyclicArgmax oracle_max_cyclic_dim(const SModule& m, EnumerationCap cap = {});

/// Breadth-first search over sums of cyclic submodules; level l holds every
/// submodule generated by l vectors. Throws CapExceeded once the number of
/// closure evaluations passes cap.
std::size_t oracle_min_generators(const SModule& m, EnumerationCap cap = {});

/// sum_i d_i min(s_i, ell d_i). Throws PreconditionFailed for ell == 0.
std::size_t max_dim_formula(const SemisimpleSpec& spec, std::size_t ell);

/// max_i ceil(s_i / d_i) over blocks with s_i > 0.
std::size_t min_generators_formula(const SemisimpleSpec& spec);

/// (F^d_1)^s_1 (+) ... with two generators of M_d per block (cyclic shift and
/// E11; the single generator [1] when d == 1) acting on every copy.
SModule build_semisimple_family(const SemisimpleSpec& spec, FieldModulus mod);

/// Dimension of the smallest invariant subspace containing the vectors.
std::size_t oracle_closure_dim(const SModule& m, const std::vector<Vector>& vectors);

}  // namespace rankforge
