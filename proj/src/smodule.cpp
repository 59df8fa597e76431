#include "rankforge/smodule.hpp"

#include <deque>
#include <string>

#include "rankforge/errors.hpp"
#include "rankforge/linalg.hpp"

namespace rankforge {

SModule::SModule(FieldModulus mod, std::size_t dim, std::vector<Matrix> actions)
    : mod_(mod), dim_(dim), actions_(std::move(actions)) {
  for (const auto& a : actions_) {
    if (!(a.modulus() == mod_)) throw ModulusMismatch();
    if (a.rows() != dim_ || a.cols() != dim_) {
      throw DimensionMismatch("module action must be " + std::to_string(dim_) + "x" + std::to_string(dim_));
    }
  }
}

bool is_invariant(const SModule& m, const Subspace& space) {
  if (space.ambient_dim() != m.dim()) throw DimensionMismatch("subspace ambient differs from module dimension");
  for (const auto& a : m.actions()) {
    if (!space.contains(space.image_under(a))) return false;
  }
  return true;
}

Submodule::Submodule(const SModule& parent, Subspace space) : space_(std::move(space)) {
  if (!is_invariant(parent, space_)) throw PreconditionFailed("subspace is not invariant under the actions");
}

Submodule submodule_closure(const SModule& m, std::span<const Vector> vectors) {
  EchelonBasis acc(m.modulus(), m.dim());
  std::deque<Vector> work;
  for (const auto& v : vectors) {
    if (acc.insert(v)) work.push_back(v);
  }
  while (!work.empty()) {
    const Vector x = std::move(work.front());
    work.pop_front();
    for (const auto& a : m.actions()) {
      Vector y = a.apply(x);
      if (acc.insert(y)) work.push_back(std::move(y));
    }
  }
  return Submodule(m, acc.to_subspace());
}

Submodule submodule_closure(const SModule& m, const Subspace& seed) {
  const auto vecs = seed.basis_vectors();
  return submodule_closure(m, std::span<const Vector>(vecs));
}

AlgebraBasis independent_subset(FieldModulus mod, std::size_t n, std::span<const Matrix> elements) {
  EchelonBasis flat(mod, n * n);
  AlgebraBasis out;
  for (const auto& e : elements) {
    if (flat.insert(e.entries())) out.elements.push_back(e);
  }
  return out;
}

AlgebraBasis enveloping_algebra_basis(const SModule& m) {
  const std::size_t n = m.dim();
  EchelonBasis flat(m.modulus(), n * n);
  AlgebraBasis alg;
  auto offer = [&](Matrix x) {
    if (flat.insert(x.entries())) alg.elements.push_back(std::move(x));
  };
  offer(Matrix::identity(m.modulus(), n));
  for (const auto& a : m.actions()) offer(a);
  for (std::size_t i = 0; i < alg.elements.size() && alg.elements.size() < n * n; ++i) {
    for (const auto& a : m.actions()) offer(alg.elements[i] * a);
  }
  return alg;
}

std::vector<Vector> annihilator(const SModule& m, const AlgebraBasis& alg, const Vector& u) {
  if (u.size() != m.dim()) throw DimensionMismatch("vector length differs from module dimension");
  std::vector<Vector> cols;
  cols.reserve(alg.dim());
  for (const auto& b : alg.elements) cols.push_back(b.apply(u));
  return kernel_basis(Matrix::from_columns(m.modulus(), m.dim(), cols)).basis_vectors();
}

std::vector<Matrix> combine_elements(const AlgebraBasis& alg, std::span<const Vector> coeffs, FieldModulus mod,
                                     std::size_t n) {
  std::vector<Matrix> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) {
    if (c.size() != alg.dim()) throw DimensionMismatch("coefficient vector length differs from algebra dimension");
    Matrix b(mod, n, n);
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k] != 0) b += alg.elements[k].scaled(c[k]);
    }
    out.push_back(std::move(b));
  }
  return out;
}

QuotientModule quotient_module(const SModule& m, const Subspace& W) {
  if (!is_invariant(m, W)) throw PreconditionFailed("cannot form a quotient by a non-invariant subspace");
  const std::size_t n = m.dim();
  std::vector<bool> is_pivot(n, false);
  for (auto p : W.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> coords;
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_pivot[i]) coords.push_back(i);
  }
  const std::size_t q = coords.size();
  Matrix project(m.modulus(), q, n);
  for (std::size_t j = 0; j < n; ++j) {
    const Vector r = W.reduce(unit_vector(n, j));
    for (std::size_t t = 0; t < q; ++t) project.set(t, j, r[coords[t]]);
  }
  Matrix lift(m.modulus(), n, q);
  for (std::size_t t = 0; t < q; ++t) lift.set(coords[t], t, 1);

  std::vector<Matrix> induced;
  induced.reserve(m.num_actions());
  for (const auto& a : m.actions()) {
    Matrix bar = project * a * lift;
    if (!(project * a == bar * project)) throw InvariantBreach("induced quotient action does not commute with projection");
    induced.push_back(std::move(bar));
  }
  return {SModule(m.modulus(), q, std::move(induced)), std::move(project), std::move(lift)};
}

std::vector<Matrix> hom_basis(const SModule& U, const SModule& V) {
  if (!(U.modulus() == V.modulus())) throw ModulusMismatch();
  if (U.num_actions() != V.num_actions()) throw DimensionMismatch("modules are over index sets of different size");
  const FieldModulus& mod = U.modulus();
  const std::size_t du = U.dim(), dv = V.dim();
  const std::size_t unknowns = du * dv;
  // phi[i][j] is unknown i*du + j; one equation per (s, i, j) of phi A_s - B_s phi.
  Matrix sys(mod, U.num_actions() * unknowns, unknowns);
  std::size_t row = 0;
  for (std::size_t s = 0; s < U.num_actions(); ++s) {
    const Matrix& A = U.actions()[s];
    const Matrix& B = V.actions()[s];
    for (std::size_t i = 0; i < dv; ++i) {
      for (std::size_t j = 0; j < du; ++j, ++row) {
        for (std::size_t k = 0; k < du; ++k) {
          const std::size_t col = i * du + k;
          sys.set(row, col, mod.add(sys(row, col), A(k, j)));
        }
        for (std::size_t k = 0; k < dv; ++k) {
          const std::size_t col = k * du + j;
          sys.set(row, col, mod.sub(sys(row, col), B(i, k)));
        }
      }
    }
  }
  std::vector<Matrix> out;
  const Subspace ker = U.num_actions() == 0 ? Subspace::whole(mod, unknowns) : kernel_basis(sys);
  for (const auto& v : ker.basis_vectors()) {
    Matrix phi(mod, dv, du);
    for (std::size_t i = 0; i < dv; ++i)
      for (std::size_t j = 0; j < du; ++j) phi.set(i, j, v[i * du + j]);
    out.push_back(std::move(phi));
  }
  return out;
}

SModule dualize(const SModule& m) {
  std::vector<Matrix> t;
  t.reserve(m.num_actions());
  for (const auto& a : m.actions()) t.push_back(a.transposed());
  return SModule(m.modulus(), m.dim(), std::move(t));
}

SModule build_bipartite(FieldModulus mod, std::size_t w1_dim, std::size_t w2_dim, std::span<const Matrix> R) {
  const std::size_t n = w1_dim + w2_dim;
  std::vector<Matrix> actions;
  actions.reserve(R.size());
  for (const auto& r : R) {
    if (r.rows() != w2_dim || r.cols() != w1_dim) throw DimensionMismatch("bipartite map must be W2 x W1");
    Matrix a(mod, n, n);
    for (std::size_t i = 0; i < w2_dim; ++i)
      for (std::size_t j = 0; j < w1_dim; ++j) a.set(w1_dim + i, j, r(i, j));
    actions.push_back(std::move(a));
  }
  return SModule(mod, n, std::move(actions));
}

Vector CyclicReduction::encode(const Matrix& h, const Vector& v) const {
  if (v.size() != v_dim) throw DimensionMismatch("V component has the wrong length");
  Vector out(l_dim + v_dim, 0);
  if (l_dim > 0) {
    std::vector<Vector> cols;
    for (const auto& b : L_basis) cols.push_back(b.entries());
    auto coords = solve(Matrix::from_columns(module.modulus(), h.rows() * h.cols(), cols), h.entries());
    if (!coords) throw PreconditionFailed("matrix is not an element of L");
    std::copy(coords->begin(), coords->end(), out.begin());
  } else if (!h.is_zero()) {
    throw PreconditionFailed("matrix is not an element of L = {0}");
  }
  std::copy(v.begin(), v.end(), out.begin() + static_cast<std::ptrdiff_t>(l_dim));
  return out;
}

Matrix CyclicReduction::decode_map(const Vector& w) const {
  if (w.size() != l_dim + v_dim) throw DimensionMismatch("bipartite vector has the wrong length");
  Matrix h(module.modulus(), v_dim, L_basis.empty() ? 0 : L_basis.front().cols());
  for (std::size_t t = 0; t < l_dim; ++t) {
    if (w[t] != 0) h += L_basis[t].scaled(w[t]);
  }
  return h;
}

CyclicReduction reduce_completion_to_cyclic(std::span<const Matrix> L_basis, std::span<const Vector> U_basis) {
  if (L_basis.empty()) throw PreconditionFailed("L basis must contain at least one matrix");
  const FieldModulus mod = L_basis.front().modulus();
  const std::size_t m = L_basis.front().rows(), k = L_basis.front().cols();
  EchelonBasis flat(mod, m * k);
  CyclicReduction red{SModule(mod, 0, {}), {}, 0, m};
  for (const auto& b : L_basis) {
    if (b.rows() != m || b.cols() != k) throw DimensionMismatch("L basis matrices differ in shape");
    if (flat.insert(b.entries())) red.L_basis.push_back(b);
  }
  red.l_dim = red.L_basis.size();
  std::vector<Matrix> mus;
  for (const auto& u : U_basis) {
    if (u.size() != k) throw DimensionMismatch("U basis vector length differs from the domain dimension");
    std::vector<Vector> cols;
    for (const auto& b : red.L_basis) cols.push_back(b.apply(u));
    mus.push_back(Matrix::from_columns(mod, m, cols));
  }
  red.module = build_bipartite(mod, red.l_dim, m, mus);
  return red;
}

SModule build_w0(FieldModulus mod, std::size_t ell) {
  if (ell == 0) throw PreconditionFailed("W0 needs at least one action");
  std::vector<Matrix> actions;
  for (std::size_t i = 1; i <= ell; ++i) actions.push_back(Matrix::unit(mod, ell + 1, ell + 1, i, 0));
  return SModule(mod, ell + 1, std::move(actions));
}

Matrix HomReduction::decode(const Matrix& hom) const {
  const Matrix psi = dual ? hom.transposed() : hom;
  if (psi.rows() != cyclic.module.dim() || psi.cols() == 0) {
    throw DimensionMismatch("homomorphism matrix does not match the reduction's modules");
  }
  return cyclic.decode_map(psi.column(0));
}

HomReduction reduce_nonsingular_to_injective_hom(std::span<const Matrix> L_basis, std::span<const Vector> U_basis) {
  CyclicReduction cyc = reduce_completion_to_cyclic(L_basis, U_basis);
  SModule w0 = build_w0(cyc.module.modulus(), U_basis.size());
  SModule w = cyc.module;
  return {std::move(w0), std::move(w), std::move(cyc), false};
}

HomReduction reduce_to_surjective_hom(std::span<const Matrix> L_basis, std::span<const Vector> U_basis) {
  HomReduction inj = reduce_nonsingular_to_injective_hom(L_basis, U_basis);
  return {dualize(inj.target), dualize(inj.source), std::move(inj.cyclic), true};
}

}  // namespace rankforge
