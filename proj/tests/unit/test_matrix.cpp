#include <doctest.h>

#include "brute.hpp"
#include "rankforge/errors.hpp"
#include "rankforge/linalg.hpp"
#include "rankforge/subspace.hpp"

using namespace rankforge;
using rftest::Rng;

namespace {

Vector vec(std::initializer_list<std::uint32_t> xs) { return Vector(xs); }

bool is_rref(const Matrix& r, const std::vector<std::size_t>& pivots) {
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    if (k > 0 && pivots[k] <= pivots[k - 1]) return false;
    for (std::size_t c = 0; c < pivots[k]; ++c)
      if (r(k, c) != 0) return false;
    for (std::size_t i = 0; i < r.rows(); ++i)
      if (r(i, pivots[k]) != (i == k ? 1u : 0u)) return false;
  }
  for (std::size_t i = pivots.size(); i < r.rows(); ++i)
    if (!is_zero_vector(r.row(i))) return false;
  return true;
}

}  // namespace

TEST_CASE("matrix basics") {
  const FieldModulus p5(5);
  const Matrix a = Matrix::from_rows(p5, {{1, 2}, {3, 4}});
  const Matrix b = Matrix::from_rows(p5, {{0, 1}, {1, 0}});
  CHECK(a * b == Matrix::from_rows(p5, {{2, 1}, {4, 3}}));
  CHECK(a + b == Matrix::from_rows(p5, {{1, 3}, {4, 4}}));
  CHECK(a - a == Matrix(p5, 2, 2));
  CHECK(a.transposed() == Matrix::from_rows(p5, {{1, 3}, {2, 4}}));
  CHECK(a.apply(vec({1, 1})) == vec({3, 2}));
  CHECK(a.scaled(2) == Matrix::from_rows(p5, {{2, 4}, {1, 3}}));
  CHECK(Matrix::from_rows(p5, {{-1, 7}}) == Matrix::from_rows(p5, {{4, 2}}));
  CHECK(Matrix::unit(p5, 2, 3, 1, 2)(1, 2) == 1);
  CHECK(a.padded(3, 3).block(0, 0, 2, 2) == a);
  CHECK(a.column(1) == vec({2, 4}));
  CHECK(Matrix::outer(p5, vec({1, 2}), vec({3, 1})) == Matrix::from_rows(p5, {{3, 1}, {1, 2}}));
  CHECK_THROWS_AS(a * Matrix(p5, 3, 1), DimensionMismatch);
  CHECK_THROWS_AS(a + Matrix(FieldModulus(7), 2, 2), ModulusMismatch);
}

TEST_CASE("rref examples") {
  const FieldModulus p2(2), p7(7);
  auto r = rref(Matrix::identity(p7, 3));
  CHECK(r.reduced == Matrix::identity(p7, 3));
  CHECK(r.transform == Matrix::identity(p7, 3));
  CHECK(r.pivots == std::vector<std::size_t>{0, 1, 2});

  r = rref(Matrix(p7, 2, 2));
  CHECK(r.reduced == Matrix(p7, 2, 2));
  CHECK(r.transform == Matrix::identity(p7, 2));
  CHECK(r.pivots.empty());

  const Matrix swap = Matrix::from_rows(p2, {{0, 1}, {1, 0}});
  r = rref(swap);
  CHECK(r.reduced == Matrix::identity(p2, 2));
  CHECK(r.transform == swap);
}

TEST_CASE("rref properties on random matrices") {
  Rng rng(11);
  for (std::uint32_t p : {2u, 3u, 7u}) {
    const FieldModulus mod(p);
    for (int t = 0; t < 60; ++t) {
      const std::size_t rows = 1 + rftest::uniform(rng, 5), cols = 1 + rftest::uniform(rng, 5);
      const Matrix m = rftest::random_matrix(mod, rows, cols, rng);
      const auto r = rref(m);
      CHECK(r.transform * m == r.reduced);
      CHECK(is_rref(r.reduced, r.pivots));
      CHECK(rank(r.transform) == rows);
      CHECK(r.pivots.size() == rftest::naive_rank(m));
      CHECK(rank(m) + kernel_basis(m).dim() == cols);
      CHECK(image_basis(m).dim() == rank(m));
      for (const auto& k : kernel_basis(m).basis_vectors()) CHECK(is_zero_vector(m.apply(k)));
      for (std::size_t c = 0; c < cols; ++c) CHECK(image_basis(m).contains(m.column(c)));
    }
  }
}

TEST_CASE("rank and kernel examples") {
  const FieldModulus p2(2), p5(5);
  CHECK(rank(Matrix::identity(p5, 4)) == 4);
  CHECK(kernel_basis(Matrix::identity(p5, 4)).is_zero());
  CHECK(rank(Matrix(p5, 3, 3)) == 0);
  CHECK(kernel_basis(Matrix(p5, 3, 3)).is_whole());
  const Matrix ones = Matrix::from_rows(p2, {{1, 1}, {1, 1}});
  CHECK(rank(ones) == 1);
  const Subspace k = kernel_basis(ones);
  CHECK(k.dim() == 1);
  CHECK(k.contains(vec({1, 1})));
}

TEST_CASE("subspace examples") {
  const FieldModulus p2(2), p5(5);
  const auto e1 = Subspace::span(p5, 2, std::vector<Vector>{vec({1, 0})});
  const auto e2 = Subspace::span(p5, 2, std::vector<Vector>{vec({0, 1})});
  CHECK(subspace_sum(e1, e2).is_whole());
  CHECK(subspace_intersect(e1, e2).is_zero());
  CHECK(subspace_sum(e1, e1) == e1);
  CHECK(subspace_intersect(e1, e1) == e1);

  const auto d = Subspace::span(p2, 2, std::vector<Vector>{vec({1, 1})});
  const auto f = Subspace::span(p2, 2, std::vector<Vector>{vec({1, 0})});
  CHECK(subspace_intersect(d, f).is_zero());
  CHECK(subspace_sum(d, f).dim() == 2);
  CHECK(rftest::span_size(p2, 2, d.basis_vectors()) == 2);

  CHECK_THROWS_AS(subspace_sum(e1, Subspace::zero(p5, 3)), DimensionMismatch);
  CHECK(Subspace::span(p5, 2, std::vector<Vector>{vec({2, 4}), vec({1, 2})}).dim() == 1);
  CHECK(e1.coordinates(vec({3, 0})) == std::optional<Vector>(vec({3})));
  CHECK_FALSE(e1.coordinates(vec({3, 1})).has_value());
}

TEST_CASE("subspace laws on random inputs") {
  Rng rng(5);
  for (std::uint32_t p : {2u, 3u}) {
    const FieldModulus mod(p);
    for (int t = 0; t < 80; ++t) {
      const std::size_t n = 1 + rftest::uniform(rng, 4);
      auto random_space = [&] {
        std::vector<Vector> vs;
        const std::size_t k = rftest::uniform(rng, static_cast<std::uint32_t>(n + 1));
        for (std::size_t i = 0; i < k; ++i) vs.push_back(rftest::random_vector(mod, n, rng));
        return Subspace::span(mod, n, vs);
      };
      const Subspace a = random_space(), b = random_space();
      const Subspace s = subspace_sum(a, b), i = subspace_intersect(a, b);
      CHECK(s.dim() + i.dim() == a.dim() + b.dim());
      CHECK(s.contains(a));
      CHECK(s.contains(b));
      CHECK(a.contains(i));
      CHECK(b.contains(i));
      // Intersection against brute-force membership.
      std::size_t common = 0;
      for (const auto& v : rftest::all_vectors(mod, n)) common += a.contains(v) && b.contains(v);
      std::size_t expect = 1;
      for (std::size_t k = 0; k < i.dim(); ++k) expect *= p;
      CHECK(common == expect);
      const Subspace c = a.complement();
      CHECK(subspace_sum(a, c).is_whole());
      CHECK(subspace_intersect(a, c).is_zero());
      for (const auto& v : c.basis_vectors()) {
        std::size_t nonzero = 0;
        for (auto x : v) nonzero += x != 0;
        CHECK(nonzero == 1);
      }
    }
  }
}

TEST_CASE("solve") {
  const FieldModulus p3(3), p7(7);
  const Vector b = vec({1, 2, 3});
  CHECK(solve(Matrix::identity(p7, 3), b) == std::optional<Vector>(b));
  CHECK_FALSE(solve(Matrix(p7, 3, 3), b).has_value());
  CHECK(solve(Matrix::from_rows(p3, {{1, 1}}), vec({0})) == std::optional<Vector>(vec({0, 0})));
  Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    const Matrix a = rftest::random_matrix(p7, 3, 4, rng);
    const Vector x = rftest::random_vector(p7, 4, rng);
    const Vector y = a.apply(x);
    auto sol = solve(a, y);
    REQUIRE(sol.has_value());
    CHECK(a.apply(*sol) == y);
  }
}

TEST_CASE("idempotentizer") {
  const FieldModulus p2(2), p5(5);
  CHECK(idempotentizer(Matrix::identity(p5, 3)) == Matrix::identity(p5, 3));
  CHECK(idempotentizer(Matrix(p5, 3, 3)) == Matrix::identity(p5, 3));
  const Matrix h = Matrix::from_rows(p2, {{0, 1}, {0, 0}});
  const Matrix g = idempotentizer(h);
  CHECK((g * h) * (g * h) == g * h);
  CHECK(rank(g) == 2);
  Rng rng(17);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const FieldModulus mod(p);
    for (int t = 0; t < 80; ++t) {
      const std::size_t n = 1 + rftest::uniform(rng, 5);
      Matrix m = rftest::random_matrix(mod, n, n, rng);
      if (t % 2 == 0 && n > 1) m = m * Matrix::unit(mod, n, n, 0, 0) + Matrix::outer(mod, rftest::random_vector(mod, n, rng), rftest::random_vector(mod, n, rng));
      const Matrix gg = idempotentizer(m);
      const Matrix e = gg * m;
      CHECK(e * e == e);
      CHECK(rank(gg) == n);
      CHECK(rank(e) == rank(m));
    }
  }
  CHECK_THROWS_AS(idempotentizer(Matrix(p5, 2, 3)), DimensionMismatch);
}

TEST_CASE("inverse") {
  const FieldModulus p7(7);
  const Matrix a = Matrix::from_rows(p7, {{2, 1}, {1, 1}});
  CHECK(inverse(a) * a == Matrix::identity(p7, 2));
  CHECK_THROWS_AS(inverse(Matrix::from_rows(p7, {{1, 2}, {2, 4}})), PreconditionFailed);
}

TEST_CASE("incremental echelon basis") {
  const FieldModulus p5(5);
  EchelonBasis b(p5, 3);
  CHECK(b.insert(vec({1, 2, 0})));
  CHECK(b.insert(vec({0, 1, 1})));
  CHECK_FALSE(b.insert(vec({1, 3, 1})));
  CHECK(b.contains(vec({2, 4, 0})));
  CHECK_FALSE(b.contains(vec({0, 0, 1})));
  CHECK(b.size() == 2);
  CHECK(b.to_subspace() == Subspace::span(p5, 3, std::vector<Vector>{vec({1, 2, 0}), vec({0, 1, 1})}));
  CHECK(is_zero_vector(b.reduce(vec({1, 3, 1}))));
}

TEST_CASE("image_sum") {
  const FieldModulus p5(5);
  const std::vector<Matrix> maps{Matrix::unit(p5, 2, 2, 1, 0), Matrix::unit(p5, 2, 2, 0, 0)};
  const auto s = Subspace::span(p5, 2, std::vector<Vector>{vec({1, 0})});
  CHECK(image_sum(maps, s).is_whole());
  CHECK(image_sum(maps, Subspace::span(p5, 2, std::vector<Vector>{vec({0, 1})})).is_zero());
}
