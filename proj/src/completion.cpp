#include "rankforge/completion.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>
#include <sstream>
#include <string>

#include "rankforge/errors.hpp"
#include "rankforge/linalg.hpp"

namespace rankforge {

namespace {

constexpr std::size_t kNoParent = std::numeric_limits<std::size_t>::max();

void require_square_family(std::span<const Matrix> gens, std::size_t n) {
  for (const auto& g : gens) {
    if (g.rows() != n || g.cols() != n) throw DimensionMismatch("generators must be square of the ambient size");
  }
}

// Column j is the row-major flattening of L_basis[j].
Matrix flattened_columns(std::span<const Matrix> L_basis, std::size_t entries) {
  std::vector<Vector> cols;
  cols.reserve(L_basis.size());
  for (const auto& b : L_basis) cols.push_back(b.entries());
  return Matrix::from_columns(L_basis.front().modulus(), entries, cols);
}

std::string join_indices(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  return os.str();
}

}  // namespace

Subspace env_image_closure(std::span<const Matrix> generators, const Subspace& seed) {
  const std::size_t n = seed.ambient_dim();
  require_square_family(generators, n);
  EchelonBasis acc(seed.modulus(), n);
  std::deque<Vector> work;
  auto push_images = [&](const Vector& x) {
    for (const auto& gen : generators) {
      Vector y = gen.apply(x);
      if (acc.insert(y)) work.push_back(std::move(y));
    }
  };
  for (const auto& s : seed.basis_vectors()) push_images(s);
  while (!work.empty()) {
    Vector x = std::move(work.front());
    work.pop_front();
    push_images(x);
  }
  return acc.to_subspace();
}

std::optional<EscapeChain> find_escape_chain(std::span<const Matrix> generators, const Matrix& e) {
  if (!e.is_square()) throw DimensionMismatch("idempotent must be square");
  if (!(e * e == e)) throw PreconditionFailed("find_escape_chain needs an idempotent e");
  const std::size_t n = e.rows();
  require_square_family(generators, n);
  const Subspace image = image_basis(e);
  const Subspace kernel = kernel_basis(e);

  struct Node {
    Vector v;
    std::size_t parent;
    std::size_t generator;
  };
  std::vector<Node> nodes;
  EchelonBasis discovered(e.modulus(), n);
  std::vector<std::size_t> frontier;
  for (auto& v : kernel.basis_vectors()) {
    discovered.insert(v);
    frontier.push_back(nodes.size());
    nodes.push_back({std::move(v), kNoParent, kNoParent});
  }

  auto build = [&](std::size_t leaf, std::size_t gen, Vector last) {
    EscapeChain chain;
    std::vector<std::size_t> path;
    for (std::size_t at = leaf; at != kNoParent; at = nodes[at].parent) path.push_back(at);
    std::reverse(path.begin(), path.end());
    for (std::size_t k = 0; k < path.size(); ++k) {
      chain.chain_vectors.push_back(nodes[path[k]].v);
      if (k > 0) chain.generator_indices.push_back(nodes[path[k]].generator);
    }
    chain.generator_indices.push_back(gen);
    chain.chain_vectors.push_back(std::move(last));
    return chain;
  };

  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t at : frontier) {
      for (std::size_t i = 0; i < generators.size(); ++i) {
        Vector y = generators[i].apply(nodes[at].v);
        if (is_zero_vector(y)) continue;
        if (!image.contains(y)) return build(at, i, std::move(y));
        if (discovered.insert(y)) {
          next.push_back(nodes.size());
          nodes.push_back({std::move(y), at, i});
        }
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

WitnessReport restrict_witness(std::span<const Matrix> L_basis, const Matrix& h,
                               const Subspace& padded_W) {
  const FieldModulus& mod = h.modulus();
  const std::size_t cols = h.cols();
  Subspace W = padded_W;
  if (padded_W.ambient_dim() != cols) {
    const std::size_t k = padded_W.ambient_dim();
    std::vector<Vector> units;
    for (std::size_t i = 0; i < cols; ++i) units.push_back(unit_vector(k, i));
    const Subspace inside = subspace_intersect(padded_W, Subspace::span(mod, k, units));
    std::vector<Vector> cut;
    for (const auto& v : inside.basis_vectors()) cut.emplace_back(v.begin(), v.begin() + cols);
    W = Subspace::span(mod, cols, cut);
  }
  WitnessReport rep{W, cols, rank(h), W.dim(), 0};
  rep.dim_LW = L_basis.empty() ? 0 : image_sum(L_basis, W).dim();
  return rep;
}

MaxRankVerdict check_max_rank(std::span<const Matrix> L_basis, const Matrix& h) {
  if (L_basis.empty()) {
    if (!h.is_zero()) throw PreconditionFailed("h is not in the span of an empty basis");
  } else {
    for (const auto& b : L_basis) {
      if (b.rows() != h.rows() || b.cols() != h.cols()) throw DimensionMismatch("L basis and h shapes differ");
    }
    if (!solve(flattened_columns(L_basis, h.rows() * h.cols()), h.entries())) {
      throw PreconditionFailed("h is not in the span of the given L basis");
    }
  }

  const std::size_t k = std::max(h.rows(), h.cols());
  const Matrix hp = h.padded(k, k);
  const Matrix g = idempotentizer(hp);
  const Matrix e = g * hp;
  std::vector<Matrix> gL;
  gL.reserve(L_basis.size());
  for (const auto& b : L_basis) gL.push_back(g * b.padded(k, k));

  const Subspace kernel = kernel_basis(e);
  const Subspace closure = env_image_closure(gL, kernel);
  if (image_basis(e).contains(closure)) {
    WitnessReport rep = restrict_witness(L_basis, h, subspace_sum(closure, kernel));
    if (!rep.identity_holds()) throw InvariantBreach("witness does not satisfy the rank identity");
    return Certified{std::move(rep)};
  }
  auto chain = find_escape_chain(gL, e);
  if (!chain) throw InvariantBreach("closure escapes the image but no escape chain was found");
  return NotCertified{std::move(*chain)};
}

CosetElement augment_rank(const Pencil& pencil, const CosetElement& h, const EscapeChain& chain,
                          const Matrix& g) {
  const FieldModulus& mod = pencil.modulus();
  if (chain.length() == 0 || chain.chain_vectors.size() != chain.length() + 1) {
    throw PreconditionFailed("malformed escape chain");
  }
  const Matrix e = g * h.matrix();
  if (!is_zero_vector(e.apply(chain.start()))) throw PreconditionFailed("chain start is not in ker(g h)");
  std::set<std::size_t> seen;
  for (std::size_t k = 0; k < chain.length(); ++k) {
    const std::size_t idx = chain.generator_indices[k];
    if (idx == 0 || idx > pencil.num_vars()) throw PreconditionFailed("chain index outside 1..n");
    if (!seen.insert(idx).second) throw PreconditionFailed("chain repeats a generator");
    if (!((g * pencil.coefficient(idx)).apply(chain.chain_vectors[k]) == chain.chain_vectors[k + 1])) {
      throw PreconditionFailed("chain vectors do not follow the generators");
    }
  }
  if (image_basis(e).contains(chain.chain_vectors.back())) {
    throw PreconditionFailed("chain end lies inside the image of g h");
  }

  Vector coeffs = h.coeffs();
  for (std::size_t idx : chain.generator_indices) coeffs[idx] = mod.add(coeffs[idx], 1);
  CosetElement next(pencil, std::move(coeffs));
  const std::size_t before = rank(h.matrix());
  const std::size_t after = rank(next.matrix());
  if (after <= before) {
    throw RankDidNotIncrease("augmentation along the escape chain kept rank " + std::to_string(before) +
                             "; some coefficient matrix is not of rank one");
  }
  return next;
}

GenericIncrement generic_increment(const Matrix& h, const Matrix& h_dd) {
  if (h.rows() != h_dd.rows() || h.cols() != h_dd.cols()) throw DimensionMismatch("h and h'' shapes differ");
  const FieldModulus& mod = h.modulus();
  const Subspace image = image_basis(h);
  bool escapes = false;
  for (const auto& v : kernel_basis(h).basis_vectors()) {
    if (!image.contains(h_dd.apply(v))) {
      escapes = true;
      break;
    }
  }
  if (!escapes) throw PreconditionFailed("h'' ker(h) is contained in the image of h");
  const std::size_t r = rank(h);
  const std::size_t trials = std::min<std::size_t>(mod.value(), r + 2);
  for (const auto& alpha : enumerate(mod, trials)) {
    Matrix cand = h + h_dd.scaled(alpha.value());
    if (rank(cand) > r) return {alpha, std::move(cand)};
  }
  throw FieldTooSmall("no alpha among the first " + std::to_string(trials) + " field elements raises the rank",
                      r + 1);
}

std::size_t fact_bound(std::span<const Matrix> L_basis, const Subspace& W) {
  const std::size_t dim_lw = L_basis.empty() ? 0 : image_sum(L_basis, W).dim();
  return W.ambient_dim() - (W.dim() - dim_lw);
}

CompletionResult complete_max_rank(const Pencil& pencil) {
  const RankOneReport report = validate_rank_one(pencil);
  if (!report.ok()) {
    throw PreconditionFailed("coefficient matrices of rank > 1 at indices " + join_indices(report.violations));
  }
  const PaddedPencil padded = pad_to_square(pencil);
  const Pencil& sq = padded.pencil;
  const std::size_t k = padded.embedding.size;

  std::vector<std::size_t> active;
  for (std::size_t i = 1; i <= sq.num_vars(); ++i) {
    if (!sq.coefficient(i).is_zero()) active.push_back(i);
  }

  CompletionResult result;
  result.embedding = padded.embedding;
  result.dropped_zero_generators = report.zero_rank;

  CosetElement h = CosetElement::constant_term(sq);
  for (std::size_t pass = 0; pass <= k + 1; ++pass) {
    const Matrix g = idempotentizer(h.matrix());
    const Matrix e = g * h.matrix();
    std::vector<Matrix> gens;
    gens.reserve(active.size());
    for (std::size_t i : active) gens.push_back(g * sq.coefficient(i));
    result.rank_trace.push_back(rank(h.matrix()));

    auto chain = find_escape_chain(gens, e);
    if (!chain) {
      std::vector<Matrix> gL{e};
      gL.insert(gL.end(), gens.begin(), gens.end());
      const Subspace kernel = kernel_basis(e);
      const Subspace closure = env_image_closure(gL, kernel);
      if (!image_basis(e).contains(closure)) {
        throw InvariantBreach("no escape chain although Env(gL) ker(gh) leaves the image");
      }
      const Vector x = h.assignment();
      const Matrix h_orig = pencil.evaluate(x);
      result.witness = restrict_witness(pencil.coefficients(), h_orig, subspace_sum(closure, kernel));
      if (!result.witness.identity_holds()) throw InvariantBreach("witness does not satisfy the rank identity");
      result.assignment = x;
      result.rank = result.witness.rank_h;
      return result;
    }
    for (auto& idx : chain->generator_indices) idx = active[idx];
    h = augment_rank(sq, h, *chain, g);
    result.chains.push_back(std::move(*chain));
  }
  throw InvariantBreach("completion did not terminate within the rank bound");
}

}  // namespace rankforge
