#include "rankforge/oracle.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "rankforge/errors.hpp"
#include "rankforge/linalg.hpp"

namespace rankforge {

namespace {

std::uint64_t checked_power(std::uint64_t base, std::size_t exp, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (r > cap / base) throw CapExceeded("enumeration exceeds cap of " + std::to_string(cap) + " states");
    r *= base;
  }
  if (r > cap) throw CapExceeded("enumeration exceeds cap of " + std::to_string(cap) + " states");
  return r;
}

// Odometer over F^n with index 0 most significant; false after the last vector.
bool next_lex(Vector& v, std::uint32_t p) {
  for (std::size_t i = v.size(); i-- > 0;) {
    if (++v[i] < p) return true;
    v[i] = 0;
  }
  return false;
}

// Spinning: push every new vector through every action until nothing new appears.
EchelonBasis spin(const SModule& m, const std::vector<Vector>& seeds) {
  EchelonBasis basis(m.modulus(), m.dim());
  std::deque<Vector> queue;
  for (const auto& s : seeds) {
    if (basis.insert(s)) queue.push_back(s);
  }
  while (!queue.empty()) {
    const Vector v = std::move(queue.front());
    queue.pop_front();
    for (const auto& a : m.actions()) {
      Vector w = a.apply(v);
      if (basis.insert(w)) queue.push_back(std::move(w));
    }
  }
  return basis;
}

// Representatives of the projective points of F^n: first nonzero entry 1.
std::vector<Vector> projective_points(std::size_t n, std::uint32_t p) {
  std::vector<Vector> pts;
  for (std::size_t lead = 0; lead < n; ++lead) {
    const std::size_t tail = n - lead - 1;
    Vector t(tail, 0);
    do {
      Vector v(n, 0);
      v[lead] = 1;
      std::copy(t.begin(), t.end(), v.begin() + static_cast<std::ptrdiff_t>(lead + 1));
      pts.push_back(std::move(v));
    } while (next_lex(t, p));
  }
  return pts;
}

}  // namespace

std::size_t SemisimpleSpec::total_dim() const noexcept {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.simple_dim * b.multiplicity;
  return n;
}

std::size_t oracle_closure_dim(const SModule& m, const std::vector<Vector>& vectors) {
  return spin(m, vectors).size();
}

RankArgmax oracle_max_completion_rank(const Pencil& pencil, EnumerationCap cap) {
  const std::size_t n = pencil.num_vars();
  const std::uint32_t p = pencil.modulus().value();
  checked_power(p, n, cap.max_states);
  const std::size_t ceiling = std::min(pencil.rows(), pencil.cols());
  Vector x(n, 0);
  RankArgmax best{rank(pencil.evaluate(x)), x};
  while (best.rank < ceiling && next_lex(x, p)) {
    const std::size_t r = rank(pencil.evaluate(x));
    if (r > best.rank) best = {r, x};
  }
  return best;
}

CyclicArgmax oracle_max_cyclic_dim(const SModule& m, EnumerationCap cap) {
  const std::size_t n = m.dim();
  const std::uint32_t p = m.modulus().value();
  checked_power(p, n, cap.max_states);
  Vector v(n, 0);
  CyclicArgmax best{0, v};
  while (best.dim < n && next_lex(v, p)) {
    const std::size_t d = oracle_closure_dim(m, {v});
    if (d > best.dim) best = {d, v};
  }
  return best;
}

std::size_t oracle_min_generators(const SModule& m, EnumerationCap cap) {
  const std::size_t n = m.dim();
  if (n == 0) return 0;
  const std::uint32_t p = m.modulus().value();
  std::uint64_t work = 0;
  auto key_of = [](const EchelonBasis& b) { return b.to_subspace().basis().entries(); };

  std::set<std::vector<std::uint32_t>> seen;
  std::vector<Subspace> level{Subspace::zero(m.modulus(), n)};
  seen.insert(level.front().basis().entries());
  for (std::size_t ell = 1; ell <= n; ++ell) {
    std::vector<Subspace> next;
    for (const auto& S : level) {
      // One representative per projective point of V/S.
      const Subspace comp = S.complement();
      const auto comp_basis = comp.basis_vectors();
      for (const auto& coords : projective_points(comp_basis.size(), p)) {
        if (++work > cap.max_states) {
          throw CapExceeded("generator search exceeds cap of " + std::to_string(cap.max_states) + " closures");
        }
        Vector v(n, 0);
        for (std::size_t k = 0; k < coords.size(); ++k) {
          if (coords[k] != 0) v = axpy(m.modulus(), v, coords[k], comp_basis[k]);
        }
        std::vector<Vector> seeds = S.basis_vectors();
        seeds.push_back(std::move(v));
        const EchelonBasis sum = spin(m, seeds);
        if (sum.size() == n) return ell;
        auto key = key_of(sum);
        if (seen.insert(key).second) next.push_back(sum.to_subspace());
      }
    }
    level = std::move(next);
  }
  throw InvariantBreach("the standard basis failed to generate the module");
}

std::size_t max_dim_formula(const SemisimpleSpec& spec, std::size_t ell) {
  if (ell == 0) throw PreconditionFailed("generator budget must be positive");
  std::size_t total = 0;
  for (const auto& b : spec.blocks) total += b.simple_dim * std::min(b.multiplicity, ell * b.simple_dim);
  return total;
}

std::size_t min_generators_formula(const SemisimpleSpec& spec) {
  std::size_t best = 0;
  for (const auto& b : spec.blocks) {
    if (b.multiplicity == 0) continue;
    if (b.simple_dim == 0) throw PreconditionFailed("simple dimension must be positive");
    best = std::max(best, (b.multiplicity + b.simple_dim - 1) / b.simple_dim);
  }
  return best;
}

SModule build_semisimple_family(const SemisimpleSpec& spec, FieldModulus mod) {
  const std::size_t n = spec.total_dim();
  std::vector<Matrix> actions;
  std::size_t offset = 0;
  for (const auto& b : spec.blocks) {
    const std::size_t d = b.simple_dim;
    if (d == 0) throw PreconditionFailed("simple dimension must be positive");
    std::vector<Matrix> local;
    if (d == 1) {
      local.push_back(Matrix::identity(mod, 1));
    } else {
      Matrix shift(mod, d, d);
      for (std::size_t i = 0; i < d; ++i) shift.set((i + 1) % d, i, 1);
      local.push_back(std::move(shift));
      local.push_back(Matrix::unit(mod, d, d, 0, 0));
    }
    for (const auto& g : local) {
      Matrix a(mod, n, n);
      for (std::size_t copy = 0; copy < b.multiplicity; ++copy) {
        const std::size_t base = offset + copy * d;
        for (std::size_t r = 0; r < d; ++r)
          for (std::size_t c = 0; c < d; ++c) a.set(base + r, base + c, g(r, c));
      }
      actions.push_back(std::move(a));
    }
    offset += d * b.multiplicity;
  }
  return SModule(mod, n, std::move(actions));
}

}  // namespace rankforge
