#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

namespace rankforge {

/// Prime modulus p of GF(p), 2 <= p < 2^31.
///
/// The raw-residue helpers (add/mul/...) are what the dense kernels use; they
/// assume canonical inputs in [0, p) and return canonical outputs.
class FieldModulus {
 public:
  static constexpr std::uint32_t kMaxExclusive = 1u << 31;

  /// Throws PreconditionFailed unless p is a prime below 2^31.
  explicit FieldModulus(std::uint32_t p);

  std::uint32_t value() const noexcept { return p_; }

  std::uint32_t reduce(std::int64_t x) const noexcept {
    std::int64_t r = x % static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept {
    return a >= b ? a - b : a + (p_ - b);
  }
  std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }
  // a + b*c, the elimination inner step.
  std::uint32_t fma(std::uint32_t a, std::uint32_t b, std::uint32_t c) const noexcept {
    return static_cast<std::uint32_t>((static_cast<std::uint64_t>(b) * c + a) % p_);
  }
  /// Throws DivisionByZero for a == 0.
  std::uint32_t inv(std::uint32_t a) const;

  friend bool operator==(const FieldModulus&, const FieldModulus&) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint32_t n) noexcept;

class FieldScalar {
 public:
  FieldScalar(FieldModulus mod, std::int64_t value) : mod_(mod), value_(mod.reduce(value)) {}

  std::uint32_t value() const noexcept { return value_; }
  const FieldModulus& modulus() const noexcept { return mod_; }
  bool is_zero() const noexcept { return value_ == 0; }

  FieldScalar operator+(const FieldScalar& o) const;
  FieldScalar operator-(const FieldScalar& o) const;
  FieldScalar operator*(const FieldScalar& o) const;
  FieldScalar operator-() const { return FieldScalar(mod_, mod_.neg(value_)); }
  FieldScalar inv() const { return FieldScalar(mod_, mod_.inv(value_)); }

  friend bool operator==(const FieldScalar&, const FieldScalar&) = default;

 private:
  void check_same(const FieldScalar& o) const;

  FieldModulus mod_;
  std::uint32_t value_;
};

std::ostream& operator<<(std::ostream& os, const FieldScalar& s);

/// The first k canonical elements 0, 1, ..., k-1. Throws PreconditionFailed
/// when k > p.
std::vector<FieldScalar> enumerate(const FieldModulus& mod, std::size_t k);

}  // namespace rankforge
