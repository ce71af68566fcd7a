#pragma once

#include <cstdint>
#include <vector>

namespace cheb {

inline constexpr std::uint64_t kMaxSieveLimit = 100'000'000;

/// All primes up to a limit, built once and then shared read-only.
class PrimeSieve {
 public:
  explicit PrimeSieve(std::uint64_t limit);

  std::uint64_t limit() const noexcept { return limit_; }
  const std::vector<std::uint32_t>& primes() const noexcept { return primes_; }

  bool is_prime(std::uint64_t n) const;
  /// pi(x) for x <= limit; throws SieveRangeExceeded beyond.
  std::uint64_t count_upto(double x) const;
  /// Primes p <= x (a prefix of primes()).
  std::size_t prefix_length(double x) const;
  void require_range(double x) const;

 private:
  std::uint64_t limit_;
  std::vector<std::uint32_t> primes_;
};

/// Throws LimitTooLarge above 10^8 and InvalidArgument below 2.
PrimeSieve sieve_primes(std::uint64_t limit);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m);
/// Multiplicative order of a modulo m (gcd(a, m) = 1).
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m);

/// Prime factorization by trial division, ascending (prime, exponent).
std::vector<std::pair<std::uint64_t, int>> factor_integer(std::uint64_t n);

/// Number of ways to write n as an ordered product of k factors.
double divisor_function_k(std::uint64_t n, unsigned k);

}  // namespace cheb
