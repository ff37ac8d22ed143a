#pragma once

#include <cstdint>

namespace pmatch {

/// Residue of the prime field F_p, always kept in [0, p).
using Residue = std::uint32_t;

/// Deterministic primality test (trial division; inputs here are below 2^31).
bool is_prime(std::uint64_t n) noexcept;

/// The characteristic p of F_p. Arithmetic helpers live here so that every
/// residue flowing through the library is reduced by the same object.
class PrimeModulus {
 public:
  /// F_2.
  constexpr PrimeModulus() noexcept = default;
  /// Throws std::invalid_argument unless p is a prime with 2 <= p < 2^31.
  explicit PrimeModulus(std::int64_t p);

  constexpr std::uint32_t value() const noexcept { return p_; }

  Residue reduce(std::int64_t x) const noexcept {
    const std::int64_t r = x % static_cast<std::int64_t>(p_);
    return static_cast<Residue>(r < 0 ? r + p_ : r);
  }
  Residue add(Residue x, Residue y) const noexcept {
    const std::uint64_t s = std::uint64_t{x} + y;
    return static_cast<Residue>(s >= p_ ? s - p_ : s);
  }
  Residue sub(Residue x, Residue y) const noexcept { return x >= y ? x - y : x + (p_ - y); }
  Residue neg(Residue x) const noexcept { return x == 0 ? 0 : p_ - x; }
  Residue mul(Residue x, Residue y) const noexcept {
    return static_cast<Residue>(std::uint64_t{x} * y % p_);
  }
  /// Multiplicative inverse; throws std::domain_error for 0.
  Residue inverse(Residue x) const;

  friend constexpr bool operator==(PrimeModulus, PrimeModulus) noexcept = default;

 private:
  std::uint32_t p_ = 2;
};

}  // namespace pmatch
