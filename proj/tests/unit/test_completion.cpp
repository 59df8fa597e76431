#include <doctest.h>

#include "brute.hpp"
#include "rankforge/completion.hpp"
#include "rankforge/errors.hpp"
#include "rankforge/linalg.hpp"
#include "rankforge/oracle.hpp"

using namespace rankforge;

namespace {

const FieldModulus kP2(2);

Matrix E(const FieldModulus& mod, std::size_t n, std::size_t i, std::size_t j) {
  return Matrix::unit(mod, n, n, i, j);
}
Matrix E(std::size_t n, std::size_t i, std::size_t j) { return E(kP2, n, i, j); }

Subspace span1(const FieldModulus& mod, Vector v) {
  const std::size_t n = v.size();
  return Subspace::span(mod, n, std::vector<Vector>{std::move(v)});
}

}  // namespace

TEST_CASE("env_image_closure") {
  const auto seed = span1(kP2, {1, 0});
  CHECK(env_image_closure(std::vector<Matrix>{Matrix(kP2, 2, 2)}, seed).is_zero());
  CHECK(env_image_closure(std::vector<Matrix>{Matrix::identity(kP2, 2)}, seed) == seed);
  CHECK(env_image_closure(std::vector<Matrix>{E(2, 1, 0)}, seed) == span1(kP2, {0, 1}));
  // Products of several generators are reached.
  const std::vector<Matrix> gens{E(3, 1, 0), E(3, 2, 1)};
  CHECK(env_image_closure(gens, span1(kP2, {1, 0, 0})) ==
        Subspace::span(kP2, 3, std::vector<Vector>{{0, 1, 0}, {0, 0, 1}}));
}

TEST_CASE("check_max_rank examples") {
  {
    const std::vector<Matrix> L{E(2, 0, 0)};
    const auto v = check_max_rank(L, E(2, 0, 0));
    REQUIRE(std::holds_alternative<Certified>(v));
    const auto& w = std::get<Certified>(v).witness;
    CHECK(w.W == span1(kP2, {0, 1}));
    CHECK(w.dim_U == 2);
    CHECK(w.dim_W == 1);
    CHECK(w.dim_LW == 0);
    CHECK(w.rank_h == 1);
    CHECK(w.identity_holds());
  }
  {
    const std::vector<Matrix> L{E(2, 0, 0), E(2, 1, 1)};
    const auto v = check_max_rank(L, E(2, 0, 0));
    REQUIRE(std::holds_alternative<NotCertified>(v));
    const auto& chain = std::get<NotCertified>(v).chain;
    CHECK(chain.start() == Vector{0, 1});
    CHECK(chain.generator_indices == std::vector<std::size_t>{1});
    CHECK(chain.chain_vectors.back() == Vector{0, 1});
  }
  {
    const std::vector<Matrix> L{E(2, 0, 0), E(2, 0, 1)};
    const auto v = check_max_rank(L, E(2, 0, 0));
    REQUIRE(std::holds_alternative<Certified>(v));
    CHECK(std::get<Certified>(v).witness.rank_h == 1);
    CHECK(rftest::brute_max_rank_in_span(L) == 1);
  }
  const std::vector<Matrix> L{E(2, 0, 0)};
  CHECK_THROWS_AS(check_max_rank(L, E(2, 1, 1)), PreconditionFailed);
}

TEST_CASE("find_escape_chain") {
  CHECK_FALSE(find_escape_chain(std::vector<Matrix>{E(2, 0, 0)}, Matrix::identity(kP2, 2)).has_value());

  auto c = find_escape_chain(std::vector<Matrix>{E(2, 0, 0)}, Matrix(kP2, 2, 2));
  REQUIRE(c.has_value());
  CHECK(c->length() == 1);
  CHECK(c->start() == Vector{1, 0});

  const Matrix e = E(3, 0, 0) + E(3, 1, 1);
  c = find_escape_chain(std::vector<Matrix>{E(3, 2, 2)}, e);
  REQUIRE(c.has_value());
  CHECK(c->length() == 1);
  CHECK(c->start() == Vector{0, 0, 1});

  // The only image of ker e = span{e3} is e1, inside the image of e.
  CHECK_FALSE(find_escape_chain(std::vector<Matrix>{E(3, 0, 2)}, E(3, 0, 0)).has_value());

  CHECK_THROWS_AS(find_escape_chain(std::vector<Matrix>{}, E(2, 0, 1)), PreconditionFailed);
}

TEST_CASE("chains of length two") {
  // e = E11 + E22 on F^3, t0: e3 -> e1, t1: e1 -> e3.
  const Matrix e = E(3, 0, 0) + E(3, 1, 1);
  const std::vector<Matrix> gens{E(3, 0, 2), E(3, 2, 0)};
  auto c = find_escape_chain(gens, e);
  REQUIRE(c.has_value());
  CHECK(c->length() == 2);
  CHECK(c->generator_indices == std::vector<std::size_t>{0, 1});
  for (std::size_t k = 0; k < c->length(); ++k) {
    CHECK(gens[c->generator_indices[k]].apply(c->chain_vectors[k]) == c->chain_vectors[k + 1]);
  }
  CHECK(is_zero_vector(e.apply(c->start())));
  CHECK_FALSE(image_basis(e).contains(c->chain_vectors.back()));
  CHECK(image_basis(e).contains(c->chain_vectors[1]));
}

TEST_CASE("augment_rank examples") {
  {
    const Pencil p({Matrix(kP2, 2, 2), E(2, 0, 0)});
    const auto h = CosetElement::constant_term(p);
    const Matrix g = idempotentizer(h.matrix());
    EscapeChain chain{{1}, {Vector{1, 0}, (g * E(2, 0, 0)).apply(Vector{1, 0})}};
    const auto next = augment_rank(p, h, chain, g);
    CHECK(next.matrix() == E(2, 0, 0));
    CHECK(rank(next.matrix()) == 1);
  }
  {
    const Pencil p({E(2, 0, 0), E(2, 1, 1)});
    const auto h = CosetElement::constant_term(p);
    const Matrix g = idempotentizer(h.matrix());
    const Vector v{0, 1};
    EscapeChain chain{{1}, {v, (g * E(2, 1, 1)).apply(v)}};
    const auto next = augment_rank(p, h, chain, g);
    CHECK(rank(next.matrix()) == 2);
    CHECK(next.assignment() == Vector{1});
  }
  const Pencil p({E(2, 0, 0), E(2, 1, 1)});
  const auto h = CosetElement::constant_term(p);
  const Matrix g = idempotentizer(h.matrix());
  CHECK_THROWS_AS(augment_rank(p, h, EscapeChain{{0}, {Vector{0, 1}, Vector{0, 1}}}, g), PreconditionFailed);
  CHECK_THROWS_AS(augment_rank(p, h, EscapeChain{{1}, {Vector{1, 0}, Vector{0, 0}}}, g), PreconditionFailed);
}

TEST_CASE("generic_increment") {
  const FieldModulus p3(3), p5(5);
  auto r = generic_increment(E(p3, 2, 0, 0), E(p3, 2, 1, 1));
  CHECK(r.alpha.value() == 1);
  CHECK(rank(r.result) == 2);

  r = generic_increment(Matrix(p3, 2, 2), E(p3, 2, 0, 1));
  CHECK(r.alpha.value() == 1);
  CHECK(rank(r.result) >= 1);

  std::size_t bad = 0;
  for (std::uint32_t a = 0; a < 5; ++a) {
    bad += rank(E(p5, 2, 0, 0) + E(p5, 2, 1, 1).scaled(a)) <= 1;
  }
  CHECK(bad == 1);

  CHECK_THROWS_AS(generic_increment(E(p3, 2, 0, 0), E(p3, 2, 0, 1)), PreconditionFailed);
  // Over GF(2) both trial values can fail: h + h'' = all-ones has rank 1.
  try {
    generic_increment(E(2, 0, 0), Matrix::from_rows(kP2, {{0, 1}, {1, 1}}));
    FAIL("expected FieldTooSmall");
  } catch (const FieldTooSmall& e) {
    CHECK(e.required_bound() >= 2);
  }
}

TEST_CASE("fact_bound") {
  const FieldModulus p5(5);
  const std::vector<Matrix> I{Matrix::identity(p5, 3)};
  CHECK(fact_bound(I, Subspace::zero(p5, 3)) == 3);
  CHECK(fact_bound(I, Subspace::whole(p5, 3)) == 3);
  const std::vector<Matrix> L{E(p5, 2, 0, 0), E(p5, 2, 0, 1)};
  CHECK(fact_bound(L, Subspace::whole(p5, 2)) == 1);
}

TEST_CASE("complete_max_rank examples") {
  const FieldModulus p7(7);
  auto r = complete_max_rank(Pencil({Matrix::identity(p7, 3), E(p7, 3, 0, 1)}));
  CHECK(r.rank == 3);
  CHECK(r.assignment == Vector{0});
  CHECK(r.chains.empty());
  CHECK(r.witness.identity_holds());

  r = complete_max_rank(Pencil({Matrix(kP2, 2, 2), E(2, 0, 0), E(2, 1, 1)}));
  CHECK(r.rank == 2);
  CHECK(r.assignment == Vector{1, 1});
  CHECK(r.rank_trace == std::vector<std::size_t>{0, 1, 2});

  r = complete_max_rank(Pencil({Matrix(kP2, 2, 2), E(2, 0, 0), E(2, 0, 1)}));
  CHECK(r.rank == 1);
  CHECK(r.witness.W.is_whole());
  CHECK(r.witness.dim_LW == 1);
  CHECK(r.witness.dim_U - (r.witness.dim_W - r.witness.dim_LW) == 1);

  r = complete_max_rank(Pencil({Matrix::from_rows(kP2, {{0, 1}, {0, 0}}), E(2, 0, 0), E(2, 1, 1)}));
  CHECK(r.rank == 2);

  CHECK_THROWS_AS(complete_max_rank(Pencil({Matrix(kP2, 2, 2), Matrix::identity(kP2, 2)})), PreconditionFailed);
}

TEST_CASE("rectangular pencils") {
  const FieldModulus p3(3);
  // 2x3: B0 = 0, B1 = E11, B2 = E23.
  const Pencil p({Matrix(p3, 2, 3), Matrix::unit(p3, 2, 3, 0, 0), Matrix::unit(p3, 2, 3, 1, 2)});
  const auto r = complete_max_rank(p);
  CHECK(r.rank == 2);
  CHECK(rank(p.evaluate(r.assignment)) == 2);
  CHECK(r.witness.W.ambient_dim() == 3);
  CHECK(r.witness.dim_U == 3);
  CHECK(r.witness.identity_holds());
  CHECK_FALSE(r.embedding.is_identity());
}

TEST_CASE("complete_max_rank agrees with enumeration") {
  rftest::Rng rng(99);
  for (std::uint32_t q : {2u, 3u}) {
    const FieldModulus mod(q);
    for (int t = 0; t < 40; ++t) {
      const std::size_t rows = 1 + rftest::uniform(rng, 4), cols = 1 + rftest::uniform(rng, 4);
      const std::size_t vars = rftest::uniform(rng, 4);
      const Pencil p = rftest::random_rank_one_pencil(mod, rows, cols, vars, rng);
      const auto r = complete_max_rank(p);
      CHECK(r.rank == oracle_max_completion_rank(p).rank);
      CHECK(rank(p.evaluate(r.assignment)) == r.rank);
      CHECK(r.witness.identity_holds());
      CHECK(fact_bound(p.coefficients(), r.witness.W) == r.rank);
    }
  }
}
