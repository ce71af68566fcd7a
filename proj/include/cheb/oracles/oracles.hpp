#pragma once

// Independent reference implementations used to cross-check the library.
// They favour obviousness over speed and share no code paths with it.

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

namespace cheb::oracle {

std::vector<std::uint64_t> trial_division_primes(std::uint64_t limit);
/// Primes up to limit by a segmented sieve with a fixed segment size.
std::uint64_t segmented_prime_count(std::uint64_t limit);
std::vector<std::uint64_t> segmented_primes(std::uint64_t limit);

/// Roots of f modulo p by exhaustive evaluation (f constant-first).
std::vector<std::uint64_t> roots_mod_p(const std::vector<std::int64_t>& f, std::uint64_t p);
/// Irreducibility over F_p by trial division with every monic polynomial
/// of degree <= deg/2 (small p and degree only).
bool is_irreducible_bruteforce(const std::vector<std::uint64_t>& f, std::uint64_t p);

/// Kronecker symbol (D/n) for n >= 1.
int kronecker(std::int64_t D, std::uint64_t n);

/// Coefficients of (1 - T)/(1 - T^d)^{g/d} by long division, degree <= N.
std::vector<std::int64_t> euler_series_by_division(int d, int g, int N);

/// Coefficient of T^j in prod_{a, b} (1 - a b T)^{-1} over two root lists.
std::complex<double> rankin_selberg_bruteforce(const std::vector<std::complex<double>>& a,
                                               const std::vector<std::complex<double>>& b, int j);

/// Number of conjugacy classes and their sizes of the permutation group
/// generated by the given permutations (closure by BFS, conjugation by brute force).
std::vector<std::size_t> class_sizes_bruteforce(const std::vector<std::vector<int>>& generators);

/// Every subgroup of a group given by its multiplication table (|G| <= 24),
/// as sorted element lists: subsets closed under the product.
std::vector<std::vector<int>> subgroups_bruteforce(const std::vector<std::vector<int>>& table);

/// Adaptive Simpson on [a, b].
double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol);

/// int_{-T}^{T} |sum c_n n^{-it}|^2 dt by adaptive Simpson, panelled.
double msq_quadrature(const std::vector<std::pair<std::uint64_t, std::complex<double>>>& poly, double T,
                      double tol = 1e-10);

/// int f(t) e^{-zt} dt by Gauss-Kronrod on each smooth piece of f.
std::complex<double> laplace_quadrature(const std::function<double(double)>& f, const std::vector<double>& breaks,
                                        std::complex<double> z);

/// f(t) from its transform F on the imaginary axis: (1/pi) int_0^W Re(F(iw) e^{iwt}) dw.
double fourier_inversion(const std::function<std::complex<double>(std::complex<double>)>& F, double t,
                         double W = 2e4);

/// Minimum of g on [lo, hi] over an evenly spaced grid of `points` points.
double grid_minimum(const std::function<double(double)>& g, double lo, double hi, int points);

/// #{p <= x : p = r mod q} via the residue of each prime.
std::uint64_t count_primes_in_residue(std::uint64_t x, std::uint64_t q, std::uint64_t r);

/// Squarefree part by naive trial division over all d with d^2 | n.
std::int64_t squarefree_part_naive(std::int64_t n);

/// Discriminant of the biquadratic field Q(sqrt d1, sqrt d2) as the product
/// of the discriminants of its three quadratic subfields.
std::int64_t biquadratic_discriminant(std::int64_t d1, std::int64_t d2);

}  // namespace cheb::oracle
