#include "rankforge/genmin.hpp"

#include <algorithm>
#include <string>

#include "rankforge/errors.hpp"
#include "rankforge/linalg.hpp"

namespace rankforge {

namespace {

Subspace closure_of(const SModule& m, std::span<const Vector> vectors) {
  return submodule_closure(m, vectors).space();
}

// Linear system for an A-equivariant projection pi onto C:
//   pi a - a pi = 0 for every action a,
//   pi c = c for every basis vector c of C,
//   y pi = 0 for every y with y . C = 0 (image inside C).
// Unknown pi[r][c] sits at index r*n + c.
std::optional<Matrix> equivariant_projection(const SModule& m, const Subspace& C) {
  const FieldModulus& mod = m.modulus();
  const std::size_t n = m.dim();
  const std::size_t unknowns = n * n;
  const auto c_basis = C.basis_vectors();
  const auto annihilating_rows = kernel_basis(C.basis()).basis_vectors();
  const std::size_t eqs = m.num_actions() * unknowns + (c_basis.size() + annihilating_rows.size()) * n;
  Matrix sys(mod, eqs, unknowns);
  Vector rhs(eqs, 0);
  std::size_t row = 0;
  for (const auto& a : m.actions()) {
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c, ++row) {
        // (pi a)[r][c] = sum_k pi[r][k] a[k][c];  (a pi)[r][c] = sum_k a[r][k] pi[k][c]
        for (std::size_t k = 0; k < n; ++k) {
          sys.set(row, r * n + k, mod.add(sys(row, r * n + k), a(k, c)));
          sys.set(row, k * n + c, mod.sub(sys(row, k * n + c), a(r, k)));
        }
      }
    }
  }
  for (const auto& cv : c_basis) {
    for (std::size_t r = 0; r < n; ++r, ++row) {
      for (std::size_t k = 0; k < n; ++k) sys.set(row, r * n + k, cv[k]);
      rhs[row] = cv[r];
    }
  }
  for (const auto& y : annihilating_rows) {
    for (std::size_t c = 0; c < n; ++c, ++row) {
      for (std::size_t k = 0; k < n; ++k) sys.set(row, k * n + c, y[k]);
    }
  }
  auto sol = solve(sys, rhs);
  if (!sol) return std::nullopt;
  Matrix pi(mod, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) pi.set(r, c, (*sol)[r * n + c]);
  return pi;
}

std::vector<Vector> without(std::span<const Vector> tuple, std::size_t i) {
  std::vector<Vector> rest;
  rest.reserve(tuple.size());
  for (std::size_t k = 0; k < tuple.size(); ++k) {
    if (k != i) rest.push_back(tuple[k]);
  }
  return rest;
}

void check_field(const SModule& m, FieldPolicy policy) {
  const std::size_t bound = genmin_field_bound(m);
  if (policy == FieldPolicy::kStrict && m.modulus().value() <= bound) {
    throw FieldTooSmall("generator minimization needs |F| > 2 dim V = " + std::to_string(bound) +
                            "; the small-field method based on radical computation is not implemented",
                        bound);
  }
}

}  // namespace

std::size_t genmin_field_bound(const SModule& m) { return 2 * m.dim(); }

CyclicStep cyclic_increment(const SModule& m, const AlgebraBasis& alg, const Vector& u) {
  const std::size_t n = m.dim();
  const Subspace C = closure_of(m, std::span<const Vector>(&u, 1));
  const auto ann = annihilator(m, alg, u);
  const auto bs = combine_elements(alg, ann, m.modulus(), n);
  std::optional<std::size_t> witness;
  for (const auto& b : bs) {
    for (std::size_t j = 0; j < n && !witness; ++j) {
      if (!C.contains(b.column(j))) witness = j;
    }
    if (witness) break;
  }
  if (!witness) return MaxCertified{};

  auto pi = equivariant_projection(m, C);
  if (!pi) throw NoComplement("the cyclic submodule has no invariant complement; module is not semisimple");
  const Vector w = unit_vector(n, *witness);
  // u' = u + (I - pi) w
  Vector u_next = add_vectors(m.modulus(), u, w);
  const Vector pw = pi->apply(w);
  for (std::size_t i = 0; i < n; ++i) u_next[i] = m.modulus().sub(u_next[i], pw[i]);
  const Subspace C_next = closure_of(m, std::span<const Vector>(&u_next, 1));
  if (C_next.dim() <= C.dim()) throw InvariantBreach("cyclic increment did not enlarge the cyclic submodule");
  return Improved{std::move(u_next)};
}

GeneratorTuple GeneratorTuple::make(const SModule& m, std::vector<Vector> vectors) {
  Submodule gen = submodule_closure(m, vectors);
  return {std::move(vectors), std::move(gen)};
}

MultiStep multi_gen_optimize(const SModule& m, const AlgebraBasis& alg, std::span<const Vector> tuple) {
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    const auto rest = without(tuple, i);
    const Subspace Wi = closure_of(m, rest);
    const QuotientModule q = quotient_module(m, Wi);
    std::vector<Matrix> projected;
    projected.reserve(alg.dim());
    for (const auto& a : alg.elements) projected.push_back(q.project * a * q.lift);
    const AlgebraBasis q_alg = independent_subset(m.modulus(), q.module.dim(), projected);
    const CyclicStep step = cyclic_increment(q.module, q_alg, q.project.apply(tuple[i]));
    if (const auto* imp = std::get_if<Improved>(&step)) return ImprovedAt{i, q.lift.apply(imp->u)};
  }
  return OptimalCertified{};
}

CikStep cik_step(const SModule& m, std::span<const Vector> tuple, const Subspace& W, const Subspace& W_prime,
                 FieldPolicy policy) {
  check_field(m, policy);
  const std::size_t n = m.dim();
  const std::size_t trials = std::min<std::size_t>(m.modulus().value(), 2 * n + 1);
  const auto lambdas = enumerate(m.modulus(), trials);
  std::vector<Vector> cand(tuple.begin(), tuple.end());
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& lambda : lambdas) {
        cand[i] = tuple[i];
        cand[i][j] = m.modulus().add(cand[i][j], lambda.value());
        Submodule U_next = submodule_closure(m, cand);
        if (!subspace_sum(U_next.space(), W).is_whole()) continue;
        const Subspace grown = subspace_intersect(subspace_sum(U_next.space(), W_prime), W);
        if (grown.dim() <= W_prime.dim()) continue;
        return CikFound{i, j, lambda, cand, std::move(U_next)};
      }
      cand[i] = tuple[i];
    }
  }
  return Insufficient{};
}

std::vector<Vector> irredundant_generating_set(const SModule& m, std::span<const Vector> gens) {
  if (!closure_of(m, gens).is_whole()) throw PreconditionFailed("the given vectors do not generate the module");
  std::vector<Vector> kept(gens.begin(), gens.end());
  std::size_t i = 0;
  while (i < kept.size()) {
    const auto rest = without(kept, i);
    if (closure_of(m, rest).is_whole()) {
      kept = rest;
    } else {
      ++i;
    }
  }
  return kept;
}

BudgetResult generators_with_budget(const SModule& m, std::size_t ell, FieldPolicy policy) {
  check_field(m, policy);
  const std::size_t n = m.dim();
  BudgetResult res;
  res.insufficiency_certified = m.modulus().value() > genmin_field_bound(m);
  if (n == 0) {
    res.found = true;
    return res;
  }
  std::vector<Vector> basis;
  for (std::size_t j = 0; j < n; ++j) basis.push_back(unit_vector(n, j));
  std::vector<Vector> irred = irredundant_generating_set(m, basis);
  if (irred.size() <= ell) {
    res.found = true;
    res.generators = std::move(irred);
    return res;
  }
  if (ell == 0) return res;

  std::vector<Vector> u(irred.begin(), irred.begin() + static_cast<std::ptrdiff_t>(ell));
  const std::vector<Vector> rest(irred.begin() + static_cast<std::ptrdiff_t>(ell), irred.end());
  Subspace U = closure_of(m, u);
  Subspace W = closure_of(m, rest);
  const std::size_t budget = n * n;

  Subspace Wp = subspace_intersect(U, W);
  for (;;) {
    if (Wp == W) {
      if (!closure_of(m, u).is_whole()) throw InvariantBreach("loop exited without generating the module");
      res.found = true;
      res.generators = std::move(u);
      return res;
    }
    if (++res.iterations > budget) throw InvariantBreach("generator loop exceeded (dim V)^2 iterations");
    CikStep step = cik_step(m, u, W, Wp, policy);
    auto* found = std::get_if<CikFound>(&step);
    if (!found) return res;
    u = std::move(found->tuple);
    U = found->generated.space();
    const Subspace S = subspace_sum(U, Wp);
    if (!S.contains(W)) {
      Subspace next = subspace_intersect(S, W);
      if (next.dim() <= Wp.dim()) throw InvariantBreach("inner loop did not enlarge W'");
      Wp = std::move(next);
      res.trace.push_back({LoopEvent::Kind::kInner, W.dim(), Wp.dim()});
      continue;
    }
    if (Wp.dim() >= W.dim()) throw InvariantBreach("outer loop did not shrink W");
    W = Wp;
    Wp = subspace_intersect(U, W);
    res.trace.push_back({LoopEvent::Kind::kOuter, W.dim(), Wp.dim()});
  }
}

MinGeneratorsResult minimize_generators(const SModule& m, FieldPolicy policy) {
  check_field(m, policy);
  MinGeneratorsResult out;
  if (m.dim() == 0) return out;
  for (std::size_t ell = 1; ell <= m.dim(); ++ell) {
    BudgetResult r = generators_with_budget(m, ell, policy);
    const bool found = r.found;
    out.probes.push_back(r);
    if (found) {
      out.count = r.generators.size();
      out.generators = std::move(r.generators);
      return out;
    }
  }
  throw InvariantBreach("no budget up to dim V produced a generating set");
}

}  // namespace rankforge
