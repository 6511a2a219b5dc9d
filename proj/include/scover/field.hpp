#pragma once

#include <cstdint>

namespace scover {

/// Deterministic primality test, exact for every 64-bit input.
bool is_prime(std::uint64_t k);

/// Arithmetic in GF(p) for prime p. Residues are validated to lie in
/// [0, p); inv(0) is rejected.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p);

  std::uint64_t p() const { return p_; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t neg(std::uint64_t a) const;
  std::uint64_t inv(std::uint64_t a) const;

 private:
  std::uint64_t check(std::uint64_t a) const;
  std::uint64_t p_;
};

/// Prime located at or above sqrt(n/(s-1)). The window [lo, hi] with
/// hi = lo + (n/(s-1))^0.2625 is evaluated in floating point; the prime
/// itself is certified by exact integer arithmetic (q*q*(s-1) >= n and
/// is_prime). widened is set when q falls beyond hi, which can happen at
/// small sizes where the prime-gap interval is not yet guaranteed.
struct PrimeWitness {
  std::uint64_t q;
  double lo;
  double hi;
  bool widened;
};

/// Smallest prime q with q >= sqrt(n/(s-1)). Requires n >= s >= 3. The
/// scan never extends beyond 2*ceil(sqrt(n/(s-1))), where Bertrand's
/// postulate guarantees a prime.
PrimeWitness prime_in_interval(std::int64_t n, int s);

}  // namespace scover
