#include "rankforge/linalg.hpp"

#include <algorithm>
#include <utility>

#include "rankforge/errors.hpp"
#include "rankforge/subspace.hpp"

namespace rankforge {

namespace {

// Gauss-Jordan on the first `pivot_cols` columns; remaining columns ride along.
std::vector<std::size_t> gauss_jordan(Matrix& m, std::size_t pivot_cols) {
  const FieldModulus& mod = m.modulus();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < m.rows(); ++c) {
    std::size_t sel = r;
    while (sel < m.rows() && m(sel, c) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != r) {
      auto a = m.row_mut(sel);
      auto b = m.row_mut(r);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    auto prow = m.row_mut(r);
    const std::uint32_t scale = mod.inv(prow[c]);
    for (auto& x : prow) x = mod.mul(x, scale);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      auto row = m.row_mut(i);
      const std::uint32_t f = row[c];
      if (f == 0) continue;
      const std::uint32_t nf = mod.neg(f);
      for (std::size_t k = c; k < row.size(); ++k) {
        if (prow[k] != 0) row[k] = mod.fma(row[k], nf, prow[k]);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::vector<std::size_t> row_reduce(Matrix& m) { return gauss_jordan(m, m.cols()); }

RrefResult rref(const Matrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  Matrix aug(m.modulus(), rows, cols + rows);
  for (std::size_t r = 0; r < rows; ++r) {
    auto dst = aug.row_mut(r);
    std::copy(m.row(r).begin(), m.row(r).end(), dst.begin());
    dst[cols + r] = 1;
  }
  auto pivots = gauss_jordan(aug, cols);
  return {aug.block(0, 0, rows, cols), aug.block(0, cols, rows, rows), std::move(pivots)};
}

std::size_t rank(const Matrix& m) {
  Matrix copy = m;
  return row_reduce(copy).size();
}

Subspace kernel_basis(const Matrix& m) {
  Matrix r = m;
  const auto pivots = row_reduce(r);
  const FieldModulus& mod = m.modulus();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> vecs;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector x(m.cols(), 0);
    x[f] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = mod.neg(r(k, f));
    vecs.push_back(std::move(x));
  }
  return Subspace::span(mod, m.cols(), vecs);
}

Subspace image_basis(const Matrix& m) { return Subspace::row_space(m.transposed()); }

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows()) throw DimensionMismatch("solve: right-hand side length mismatch");
  const std::size_t cols = a.cols();
  Matrix aug(a.modulus(), a.rows(), cols + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    auto dst = aug.row_mut(r);
    std::copy(a.row(r).begin(), a.row(r).end(), dst.begin());
    dst[cols] = b[r];
  }
  const auto pivots = gauss_jordan(aug, cols);
  for (std::size_t r = pivots.size(); r < aug.rows(); ++r) {
    if (aug(r, cols) != 0) return std::nullopt;
  }
  Vector x(cols, 0);
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug(k, cols);
  return x;
}

Matrix idempotentizer(const Matrix& h) {
  if (!h.is_square()) throw DimensionMismatch("idempotentizer needs a square matrix");
  const std::size_t n = h.rows();
  RrefResult red = rref(h);
  // Row k of T*h carries pivot pivots[k]; send it to row pivots[k]. The zero
  // rows fill the remaining (non-pivot) row slots in order.
  std::vector<std::size_t> target(n);
  std::vector<bool> used(n, false);
  for (std::size_t k = 0; k < red.pivots.size(); ++k) {
    target[k] = red.pivots[k];
    used[red.pivots[k]] = true;
  }
  std::size_t next = 0;
  for (std::size_t k = red.pivots.size(); k < n; ++k) {
    while (used[next]) ++next;
    target[k] = next;
    used[next] = true;
  }
  Matrix g(h.modulus(), n, n);
  for (std::size_t k = 0; k < n; ++k) {
    auto src = red.transform.row(k);
    std::copy(src.begin(), src.end(), g.row_mut(target[k]).begin());
  }
  const Matrix e = g * h;
  if (!(e * e == e)) throw InvariantBreach("idempotentizer produced a non-idempotent g*h");
  return g;
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw DimensionMismatch("inverse of a non-square matrix");
  RrefResult red = rref(m);
  if (red.pivots.size() != m.rows()) throw PreconditionFailed("matrix is singular");
  return red.transform;
}

Vector EchelonBasis::reduce(Vector v) const {
  if (v.size() != n_) throw DimensionMismatch("echelon basis: vector length mismatch");
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::uint32_t f = v[pivots_[k]];
    if (f == 0) continue;
    const std::uint32_t nf = mod_.neg(f);
    const Vector& row = rows_[k];
    for (std::size_t i = 0; i < n_; ++i) {
      if (row[i] != 0) v[i] = mod_.fma(v[i], nf, row[i]);
    }
  }
  return v;
}

bool EchelonBasis::contains(const Vector& v) const { return is_zero_vector(reduce(v)); }

bool EchelonBasis::insert(const Vector& v) {
  Vector r = reduce(v);
  auto it = std::find_if(r.begin(), r.end(), [](std::uint32_t x) { return x != 0; });
  if (it == r.end()) return false;
  const std::size_t piv = static_cast<std::size_t>(it - r.begin());
  const std::uint32_t scale = mod_.inv(*it);
  for (auto& x : r) x = mod_.mul(x, scale);
  // Keep existing rows clear of the new pivot column.
  for (auto& row : rows_) {
    const std::uint32_t f = row[piv];
    if (f == 0) continue;
    const std::uint32_t nf = mod_.neg(f);
    for (std::size_t i = 0; i < n_; ++i) {
      if (r[i] != 0) row[i] = mod_.fma(row[i], nf, r[i]);
    }
  }
  rows_.push_back(std::move(r));
  pivots_.push_back(piv);
  return true;
}

Subspace EchelonBasis::to_subspace() const { return Subspace::span(mod_, n_, rows_); }

}  // namespace rankforge
