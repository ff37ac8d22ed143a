#include "pmatch/field.hpp"

#include <stdexcept>
#include <string>

namespace pmatch {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeModulus::PrimeModulus(std::int64_t p) {
  if (p < 2 || p >= (std::int64_t{1} << 31) || !is_prime(static_cast<std::uint64_t>(p))) {
    throw std::invalid_argument("modulus must be a prime p with 2 <= p < 2^31, got " +
                                std::to_string(p));
  }
  p_ = static_cast<std::uint32_t>(p);
}

Residue PrimeModulus::inverse(Residue x) const {
  if (x % p_ == 0) throw std::domain_error("zero has no inverse in F_p");
  // Fermat: x^(p-2).
  std::uint64_t result = 1, base = x % p_, e = p_ - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<Residue>(result);
}

}  // namespace pmatch
