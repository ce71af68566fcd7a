#include "cheb/artin_coeffs.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <numbers>

#include "cheb/errors.hpp"

namespace cheb {

namespace {

int frobenius_order_or_throw(const FieldDescriptor& field, std::uint64_t p) {
  const auto data = frobenius_data(field, p);
  require(!data.ramified, ErrorCode::RamifiedPrime, std::to_string(p) + " is ramified in " + field.name());
  return data.frobenius_order;
}

void require_coprime(const FieldDescriptor& field, std::uint64_t n) {
  require(n >= 1, ErrorCode::InvalidArgument, "n must be positive");
  require(gcd(abs(field.disc_field()), BigInt(n)) == 1, ErrorCode::NotCoprimeToDiscriminant,
          std::to_string(n) + " is not coprime to the discriminant of " + field.name());
}

}  // namespace

std::vector<std::complex<double>> LocalRootMultiset::roots() const {
  std::vector<std::complex<double>> out;
  const int mult = group_order / frobenius_order;
  for (int j = 0; j < frobenius_order; ++j) {
    const double angle = 2 * std::numbers::pi * j / frobenius_order;
    const std::complex<double> z = j == 0 ? 1.0 : std::polar(1.0, angle);
    for (int r = 0; r < mult - (j == 0 ? 1 : 0); ++r) out.push_back(z);
  }
  return out;
}

LocalRootMultiset make_root_multiset(int frobenius_order, int group_order) {
  require(frobenius_order >= 1 && group_order >= 1 && group_order % frobenius_order == 0,
          ErrorCode::InvalidArgument, "Frobenius order must divide the group order");
  return {frobenius_order, group_order};
}

LocalRootMultiset local_roots(const FieldDescriptor& field, std::uint64_t p) {
  return make_root_multiset(frobenius_order_or_throw(field, p), static_cast<int>(field.degree_closure()));
}

std::vector<BigInt> complete_homogeneous(const LocalRootMultiset& roots, int N) {
  // (1 - T^d)^{-r} = sum_i C(r + i - 1, i) T^{d i}
  const int d = roots.frobenius_order, r = roots.group_order / d;
  std::vector<BigInt> series(N + 1, 0);
  BigInt binom = 1;
  for (int i = 0; d * i <= N; ++i) {
    if (i > 0) binom = binom * (r + i - 1) / i;
    series[d * i] = binom;
  }
  for (int k = N; k >= 1; --k) series[k] -= series[k - 1];
  return series;
}

std::vector<BigInt> euler_factor_series(const FieldDescriptor& field, std::uint64_t p, int N) {
  require(N >= 0 && N <= kMaxEulerTruncation, ErrorCode::ParameterOutOfRange, "truncation must be in [0, 24]");
  return complete_homogeneous(local_roots(field, p), N);
}

BigInt coeff_a_K(const FieldDescriptor& field, std::uint64_t n) {
  require_coprime(field, n);
  BigInt value = 1;
  for (auto [p, e] : factor_integer(n)) value *= complete_homogeneous(local_roots(field, p), e)[e];
  return value;
}

int Partition::weight() const noexcept {
  int w = 0;
  for (int x : parts) w += x;
  return w;
}

std::vector<Partition> partitions_of(int j, int max_length) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int largest) -> void {
    if (remaining == 0) {
      out.push_back({cur});
      return;
    }
    if (static_cast<int>(cur.size()) == max_length) return;
    for (int part = std::min(remaining, largest); part >= 1; --part) {
      cur.push_back(part);
      self(self, remaining - part, part);
      cur.pop_back();
    }
  };
  if (j >= 0 && max_length >= 0) rec(rec, j, j);
  return out;
}

BigInt schur_exact(const Partition& lambda, const LocalRootMultiset& roots) {
  const int l = lambda.length();
  require(l <= roots.m(), ErrorCode::PartitionTooLong,
          "partition of length " + std::to_string(l) + " exceeds " + std::to_string(roots.m()) + " roots");
  if (l == 0) return 1;
  const auto h = complete_homogeneous(roots, lambda.parts.front() + l);
  std::vector<std::vector<BigInt>> jt(l, std::vector<BigInt>(l, 0));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      const int idx = lambda.parts[i] - i + j;
      if (idx >= 0) jt[i][j] = h[idx];
    }
  return bareiss_determinant(std::move(jt));
}

std::complex<double> schur(const Partition& lambda, const LocalRootMultiset& roots) {
  return {schur_exact(lambda, roots).convert_to<double>(), 0.0};
}

BigInt coeff_a_KxK_prime(const FieldDescriptor& K, const FieldDescriptor& K2, std::uint64_t p, int j) {
  require(j >= 0 && j <= kMaxRankinSelbergDegree, ErrorCode::ParameterOutOfRange, "j must be in [0, 8]");
  const auto a = local_roots(K, p), b = local_roots(K2, p);
  BigInt total = 0;
  for (const auto& lambda : partitions_of(j, std::min(a.m(), b.m())))
    total += schur_exact(lambda, a) * schur_exact(lambda, b);
  return total;
}

BigInt coeff_a_KxK(const FieldDescriptor& K, const FieldDescriptor& K2, std::uint64_t n) {
  require_coprime(K, n);
  require_coprime(K2, n);
  BigInt value = 1;
  for (auto [p, e] : factor_integer(n)) value *= coeff_a_KxK_prime(K, K2, p, e);
  return value;
}

double lambda_vm(const FieldDescriptor& field, std::uint64_t n) {
  require(n >= 2, ErrorCode::InvalidArgument, "n must be at least 2");
  const auto f = factor_integer(n);
  if (f.size() != 1) return 0;
  const auto [p, k] = f.front();
  const int d = frobenius_order_or_throw(field, p);
  const int g = static_cast<int>(field.degree_closure());
  return ((k % d == 0 ? g : 0) - 1) * std::log(static_cast<double>(p));
}

std::vector<double> mertens_partial_sums(const FieldDescriptor& field, const std::vector<double>& etas, std::uint64_t N,
                                         const PrimeSieve& sieve) {
  for (double eta : etas) require(eta > 0, ErrorCode::ParameterOutOfRange, "eta must be positive");
  require(N >= 100, ErrorCode::ParameterOutOfRange, "truncation must be at least 100");
  const std::size_t count = sieve.prefix_length(static_cast<double>(N));
  const int g = static_cast<int>(field.degree_closure());
  std::vector<double> totals(etas.size(), 0.0);
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t p = sieve.primes()[i];
    const auto data = frobenius_data(field, p);
    if (data.ramified) continue;
    const double logp = std::log(static_cast<double>(p));
    std::uint64_t n = p;
    for (int k = 1;; ++k) {
      const int coeff = (k % data.frobenius_order == 0 ? g : 0) - 1;
      for (std::size_t e = 0; e < etas.size(); ++e)
        totals[e] += std::abs(coeff) * logp * std::exp(-(1 + etas[e]) * k * logp);
      if (n > N / p) break;
      n *= p;
    }
  }
  return totals;
}

double mertens_partial_sum(const FieldDescriptor& field, double eta, std::uint64_t N, const PrimeSieve& sieve) {
  return mertens_partial_sums(field, {eta}, N, sieve).front();
}

double taylor_tail_bound(int m, int k, double eta, double N) {
  const double L = std::log(N);
  if (L < k / (1 + eta)) return INFINITY;
  // Chebyshev psi(t) <= 1.04 t with partial summation against (log t)^k t^{-1-eta}.
  const double boundary = std::exp((k + 1) * std::log(eta) + k * std::log(L) - eta * L - std::lgamma(k + 1.0));
  const double integral = boost::math::gamma_q(k + 1.0, eta * L);
  return 1.04 * m * (boundary + integral);
}

TaylorTerm log_deriv_taylor_term(const FieldDescriptor& field, int k, double eta, double tau, std::uint64_t N,
                                 const PrimeSieve& sieve, double tail_tolerance) {
  require(eta > 0 && eta <= 1, ErrorCode::ParameterOutOfRange, "eta must be in (0, 1]");
  require(k >= 0 && k <= 40, ErrorCode::ParameterOutOfRange, "k must be in [0, 40]");
  require(N >= 2, ErrorCode::ParameterOutOfRange, "truncation must be at least 2");
  TaylorTerm term;
  term.tail_bound = taylor_tail_bound(field.m(), k, eta, static_cast<double>(N));
  require(term.tail_bound <= tail_tolerance, ErrorCode::TruncationInsufficient,
          "tail bound " + std::to_string(term.tail_bound) + " exceeds tolerance at N = " + std::to_string(N));
  const std::size_t count = sieve.prefix_length(static_cast<double>(N));
  const int g = static_cast<int>(field.degree_closure());
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t p = sieve.primes()[i];
    const auto data = frobenius_data(field, p);
    if (data.ramified) continue;
    const double logp = std::log(static_cast<double>(p));
    std::uint64_t n = p;
    for (int e = 1;; ++e) {
      const int coeff = (e % data.frobenius_order == 0 ? g : 0) - 1;
      if (coeff != 0) {
        const double logn = e * logp;
        term.sum += coeff * logp * std::pow(logn, k) * std::exp(-(1 + eta) * logn) * std::polar(1.0, -tau * logn);
      }
      if (n > N / p) break;
      n *= p;
    }
  }
  term.value = std::exp((k + 1) * std::log(eta) - std::lgamma(k + 1.0)) * std::abs(term.sum);
  return term;
}

}  // namespace cheb
