#include "rankforge/pencil.hpp"

#include <algorithm>

#include "rankforge/errors.hpp"
#include "rankforge/linalg.hpp"

namespace rankforge {

Pencil::Pencil(std::vector<Matrix> coefficients) : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) throw DimensionMismatch("a pencil needs at least the constant matrix B0");
  for (const auto& b : coeffs_) {
    if (!(b.modulus() == coeffs_.front().modulus())) throw ModulusMismatch();
    if (b.rows() != rows() || b.cols() != cols()) {
      throw DimensionMismatch("pencil coefficient matrices must share one shape");
    }
  }
}

Matrix Pencil::evaluate(std::span<const std::uint32_t> x) const {
  if (x.size() != num_vars()) throw DimensionMismatch("assignment length does not match variable count");
  Vector c(num_vars() + 1);
  c[0] = 1;
  std::copy(x.begin(), x.end(), c.begin() + 1);
  return combine(c);
}

Matrix Pencil::combine(std::span<const std::uint32_t> c) const {
  if (c.size() != coeffs_.size()) throw DimensionMismatch("coefficient vector length mismatch");
  Matrix out(modulus(), rows(), cols());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (c[i] == 0) continue;
    out += coeffs_[i].scaled(c[i]);
  }
  return out;
}

CosetElement::CosetElement(const Pencil& pencil, Vector coeffs)
    : coeffs_(std::move(coeffs)), matrix_(pencil.combine(coeffs_)) {}

CosetElement::CosetElement(const Pencil& pencil, Vector coeffs, Matrix matrix)
    : coeffs_(std::move(coeffs)), matrix_(std::move(matrix)) {
  if (!(pencil.combine(coeffs_) == matrix_)) {
    throw PreconditionFailed("coset element matrix disagrees with its coefficient vector");
  }
}

CosetElement CosetElement::constant_term(const Pencil& pencil) {
  Vector c(pencil.num_vars() + 1, 0);
  c[0] = 1;
  return CosetElement(pencil, std::move(c));
}

RankOneReport validate_rank_one(const Pencil& pencil) {
  RankOneReport report;
  for (std::size_t i = 1; i <= pencil.num_vars(); ++i) {
    const std::size_t r = rank(pencil.coefficient(i));
    if (r == 0) report.zero_rank.push_back(i);
    if (r > 1) report.violations.push_back(i);
  }
  return report;
}

PaddedPencil pad_to_square(const Pencil& pencil) {
  const std::size_t k = std::max(pencil.rows(), pencil.cols());
  std::vector<Matrix> padded;
  padded.reserve(pencil.num_vars() + 1);
  for (const auto& b : pencil.coefficients()) padded.push_back(b.padded(k, k));
  return {Pencil(std::move(padded)), {pencil.rows(), pencil.cols(), k}};
}

}  // namespace rankforge
