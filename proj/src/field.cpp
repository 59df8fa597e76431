#include "rankforge/field.hpp"

#include <ostream>
#include <string>

#include "rankforge/errors.hpp"

namespace rankforge {

bool is_prime(std::uint32_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint32_t d = 3; static_cast<std::uint64_t>(d) * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldModulus::FieldModulus(std::uint32_t p) : p_(p) {
  if (p >= kMaxExclusive || !is_prime(p)) {
    throw PreconditionFailed("field modulus must be a prime below 2^31, got " + std::to_string(p));
  }
}

std::uint32_t FieldModulus::inv(std::uint32_t a) const {
  if (a == 0) throw DivisionByZero();
  // Extended Euclid on (a, p); p prime so gcd is 1.
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return reduce(t);
}

void FieldScalar::check_same(const FieldScalar& o) const {
  if (!(mod_ == o.mod_)) throw ModulusMismatch();
}

FieldScalar FieldScalar::operator+(const FieldScalar& o) const {
  check_same(o);
  return FieldScalar(mod_, mod_.add(value_, o.value_));
}

FieldScalar FieldScalar::operator-(const FieldScalar& o) const {
  check_same(o);
  return FieldScalar(mod_, mod_.sub(value_, o.value_));
}

FieldScalar FieldScalar::operator*(const FieldScalar& o) const {
  check_same(o);
  return FieldScalar(mod_, mod_.mul(value_, o.value_));
}

std::ostream& operator<<(std::ostream& os, const FieldScalar& s) { return os << s.value(); }

std::vector<FieldScalar> enumerate(const FieldModulus& mod, std::size_t k) {
  if (k > mod.value()) {
    throw PreconditionFailed("cannot enumerate " + std::to_string(k) + " elements of GF(" +
                             std::to_string(mod.value()) + ")");
  }
  std::vector<FieldScalar> out;
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) out.emplace_back(mod, static_cast<std::int64_t>(i));
  return out;
}

}  // namespace rankforge
