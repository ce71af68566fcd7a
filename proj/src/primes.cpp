#include "cheb/primes.hpp"

#include <algorithm>
#include <cmath>

#include "cheb/errors.hpp"

namespace cheb {

PrimeSieve::PrimeSieve(std::uint64_t limit) : limit_(limit) {
  require(limit >= 2, ErrorCode::InvalidArgument, "sieve limit must be at least 2");
  require(limit <= kMaxSieveLimit, ErrorCode::LimitTooLarge,
          "sieve limit " + std::to_string(limit) + " exceeds 10^8");
  // Odd-only sieve: index i stands for 2i + 1.
  const std::uint64_t half = (limit + 1) / 2;
  std::vector<bool> composite(half, false);
  composite[0] = true;
  for (std::uint64_t i = 1; (2 * i + 1) * (2 * i + 1) <= limit; ++i) {
    if (composite[i]) continue;
    const std::uint64_t p = 2 * i + 1;
    for (std::uint64_t j = p * p / 2; j < half; j += p) composite[j] = true;
  }
  primes_.reserve(static_cast<std::size_t>(1.3 * limit / std::log(static_cast<double>(limit)) + 16));
  primes_.push_back(2);
  for (std::uint64_t i = 1; i < half; ++i)
    if (!composite[i]) primes_.push_back(static_cast<std::uint32_t>(2 * i + 1));
}

bool PrimeSieve::is_prime(std::uint64_t n) const {
  if (n > limit_) fail(ErrorCode::SieveRangeExceeded, std::to_string(n) + " is beyond the sieve limit");
  return std::binary_search(primes_.begin(), primes_.end(), static_cast<std::uint32_t>(n));
}

void PrimeSieve::require_range(double x) const {
  require(x <= static_cast<double>(limit_), ErrorCode::SieveRangeExceeded,
          "x = " + std::to_string(x) + " exceeds the sieve limit " + std::to_string(limit_));
}

std::size_t PrimeSieve::prefix_length(double x) const {
  require_range(x);
  if (x < 2) return 0;
  const auto bound = static_cast<std::uint32_t>(std::floor(x));
  return static_cast<std::size_t>(std::upper_bound(primes_.begin(), primes_.end(), bound) - primes_.begin());
}

std::uint64_t PrimeSieve::count_upto(double x) const { return prefix_length(x); }

PrimeSieve sieve_primes(std::uint64_t limit) { return PrimeSieve(limit); }

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m) {
  require(m >= 1, ErrorCode::InvalidArgument, "modulus must be positive");
  if (m == 1) return 1;
  std::uint64_t x = a % m, k = 1;
  while (x != 1) {
    x = mul_mod(x, a, m);
    ++k;
    require(k <= m, ErrorCode::InvalidArgument, "element is not invertible");
  }
  return k;
}

std::vector<std::pair<std::uint64_t, int>> factor_integer(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

double divisor_function_k(std::uint64_t n, unsigned k) {
  double r = 1;
  for (auto [p, e] : factor_integer(n)) {
    // C(k + e - 1, e)
    double c = 1;
    for (int i = 1; i <= e; ++i) c = c * (k + i - 1) / i;
    r *= c;
  }
  return r;
}

}  // namespace cheb
