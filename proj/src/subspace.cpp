#include "rankforge/subspace.hpp"

#include "rankforge/errors.hpp"
#include "rankforge/linalg.hpp"

namespace rankforge {

namespace {

void check_compatible(const Subspace& a, const Subspace& b) {
  if (!(a.modulus() == b.modulus())) throw ModulusMismatch();
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("subspaces live in different ambient spaces");
}

}  // namespace

Subspace Subspace::zero(FieldModulus mod, std::size_t ambient_dim) {
  return Subspace(Matrix(mod, 0, ambient_dim), {});
}

Subspace Subspace::whole(FieldModulus mod, std::size_t ambient_dim) {
  std::vector<std::size_t> pivots(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) pivots[i] = i;
  return Subspace(Matrix::identity(mod, ambient_dim), std::move(pivots));
}

Subspace Subspace::span(FieldModulus mod, std::size_t ambient_dim, std::span<const Vector> vectors) {
  return row_space(Matrix::from_vectors(mod, ambient_dim, vectors));
}

Subspace Subspace::row_space(const Matrix& m) {
  Matrix r = m;
  auto pivots = row_reduce(r);
  Matrix basis = r.block(0, 0, pivots.size(), r.cols());
  return Subspace(std::move(basis), std::move(pivots));
}

std::vector<Vector> Subspace::basis_vectors() const {
  std::vector<Vector> out;
  out.reserve(dim());
  for (std::size_t r = 0; r < dim(); ++r) out.push_back(basis_.row_vector(r));
  return out;
}

Vector Subspace::reduce(const Vector& v) const {
  if (v.size() != ambient_dim()) throw DimensionMismatch("vector length does not match ambient dimension");
  const FieldModulus& mod = modulus();
  Vector out = v;
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    const std::uint32_t f = out[pivots_[k]];
    if (f == 0) continue;
    const std::uint32_t nf = mod.neg(f);
    auto row = basis_.row(k);
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (row[i] != 0) out[i] = mod.fma(out[i], nf, row[i]);
    }
  }
  return out;
}

bool Subspace::contains(const Vector& v) const { return is_zero_vector(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  check_compatible(*this, other);
  for (std::size_t r = 0; r < other.dim(); ++r) {
    if (!contains(other.basis_.row_vector(r))) return false;
  }
  return true;
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) return std::nullopt;
  Vector c(dim());
  for (std::size_t k = 0; k < pivots_.size(); ++k) c[k] = v[pivots_[k]];
  return c;
}

Subspace Subspace::complement() const {
  std::vector<bool> is_pivot(ambient_dim(), false);
  for (auto p : pivots_) is_pivot[p] = true;
  std::vector<Vector> vecs;
  for (std::size_t i = 0; i < ambient_dim(); ++i) {
    if (!is_pivot[i]) vecs.push_back(unit_vector(ambient_dim(), i));
  }
  return span(modulus(), ambient_dim(), vecs);
}

Subspace Subspace::image_under(const Matrix& a) const {
  if (a.cols() != ambient_dim()) throw DimensionMismatch("image_under: map domain mismatch");
  // Rows of basis * a^T are the images a*b of the basis rows b.
  return row_space(basis_ * a.transposed());
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  check_compatible(a, b);
  Matrix stacked(a.modulus(), a.dim() + b.dim(), a.ambient_dim());
  for (std::size_t r = 0; r < a.dim(); ++r) {
    auto src = a.basis().row(r);
    std::copy(src.begin(), src.end(), stacked.row_mut(r).begin());
  }
  for (std::size_t r = 0; r < b.dim(); ++r) {
    auto src = b.basis().row(r);
    std::copy(src.begin(), src.end(), stacked.row_mut(a.dim() + r).begin());
  }
  return Subspace::row_space(stacked);
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  check_compatible(a, b);
  const FieldModulus& mod = a.modulus();
  const std::size_t n = a.ambient_dim();
  // Columns: a-basis then -(b-basis). A kernel vector (alpha, beta) gives the
  // common vector sum alpha_i a_i.
  Matrix sys(mod, n, a.dim() + b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t r = 0; r < n; ++r) sys.set(r, i, a.basis()(i, r));
  for (std::size_t j = 0; j < b.dim(); ++j)
    for (std::size_t r = 0; r < n; ++r) sys.set(r, a.dim() + j, mod.neg(b.basis()(j, r)));
  const Subspace ker = kernel_basis(sys);
  std::vector<Vector> vecs;
  vecs.reserve(ker.dim());
  for (std::size_t k = 0; k < ker.dim(); ++k) {
    Vector v(n, 0);
    for (std::size_t i = 0; i < a.dim(); ++i) {
      const std::uint32_t c = ker.basis()(k, i);
      if (c == 0) continue;
      auto row = a.basis().row(i);
      for (std::size_t t = 0; t < n; ++t) v[t] = mod.fma(v[t], c, row[t]);
    }
    vecs.push_back(std::move(v));
  }
  return Subspace::span(mod, n, vecs);
}

Subspace image_sum(std::span<const Matrix> maps, const Subspace& s) {
  if (maps.empty()) throw DimensionMismatch("image_sum needs at least one map to fix the codomain");
  Subspace acc = Subspace::zero(s.modulus(), maps.front().rows());
  for (const auto& a : maps) acc = subspace_sum(acc, s.image_under(a));
  return acc;
}

}  // namespace rankforge
