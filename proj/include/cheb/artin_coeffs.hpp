#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "cheb/exact.hpp"
#include "cheb/fields.hpp"
#include "cheb/primes.hpp"

namespace cheb {

/// Local roots of zeta_K/zeta at an unramified prime: every d-th root of
/// unity with multiplicity |G|/d, less one copy of 1.
struct LocalRootMultiset {
  int frobenius_order = 1;
  int group_order = 1;

  int m() const noexcept { return group_order - 1; }
  /// Explicit list; roots of unity in order of angle, with multiplicity.
  std::vector<std::complex<double>> roots() const;
};

LocalRootMultiset make_root_multiset(int frobenius_order, int group_order);
LocalRootMultiset local_roots(const FieldDescriptor& field, std::uint64_t p);

inline constexpr int kMaxEulerTruncation = 24;
inline constexpr int kMaxRankinSelbergDegree = 8;

/// h_0, ..., h_N of the roots, i.e. the power series (1 - T)(1 - T^d)^{-|G|/d}.
std::vector<BigInt> complete_homogeneous(const LocalRootMultiset& roots, int N);
/// Coefficients a_K(p^k) for k <= N (N <= 24).
std::vector<BigInt> euler_factor_series(const FieldDescriptor& field, std::uint64_t p, int N);

/// a_K(n) for n coprime to D_K.
BigInt coeff_a_K(const FieldDescriptor& field, std::uint64_t n);

struct Partition {
  std::vector<int> parts;  // nonincreasing, positive

  int length() const noexcept { return static_cast<int>(parts.size()); }
  int weight() const noexcept;
};

/// Partitions of j with at most max_length parts, in reverse lexicographic order.
std::vector<Partition> partitions_of(int j, int max_length);

/// Jacobi-Trudi determinant det[h_{lambda_i - i + j}]; exact.
BigInt schur_exact(const Partition& lambda, const LocalRootMultiset& roots);
std::complex<double> schur(const Partition& lambda, const LocalRootMultiset& roots);

/// Sum over partitions lambda of j of s_lambda(A_K(p)) s_lambda(A_K'(p)).
BigInt coeff_a_KxK_prime(const FieldDescriptor& K, const FieldDescriptor& K2, std::uint64_t p, int j);
BigInt coeff_a_KxK(const FieldDescriptor& K, const FieldDescriptor& K2, std::uint64_t n);

/// lambda_K(n) Lambda(n).
double lambda_vm(const FieldDescriptor& field, std::uint64_t n);

/// Sum of |lambda_K(n) Lambda(n)| n^{-1-eta} over unramified prime powers n <= N.
double mertens_partial_sum(const FieldDescriptor& field, double eta, std::uint64_t N, const PrimeSieve& sieve);
/// Same sum for several eta in one pass over the primes.
std::vector<double> mertens_partial_sums(const FieldDescriptor& field, const std::vector<double>& etas, std::uint64_t N,
                                         const PrimeSieve& sieve);

struct TaylorTerm {
  std::complex<double> sum;  // truncated sum of lambda Lambda (log n)^k n^{-s0}
  double value = 0;          // eta^{k+1}/k! * |sum|
  double tail_bound = 0;     // bound on the omitted part, on the same scale as value
};

/// Throws TruncationInsufficient when the certified tail exceeds the tolerance.
TaylorTerm log_deriv_taylor_term(const FieldDescriptor& field, int k, double eta, double tau, std::uint64_t N,
                                 const PrimeSieve& sieve, double tail_tolerance = 1e-8);

/// Certified bound on eta^{k+1}/k! * sum_{n > N} |lambda Lambda(n)| (log n)^k n^{-1-eta}.
double taylor_tail_bound(int m, int k, double eta, double N);

}  // namespace cheb
