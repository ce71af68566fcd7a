#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cheb/fields.hpp"
#include "cheb/primes.hpp"

namespace cheb {

/// Finite Dirichlet polynomial sum_n c(n) n^{-it}.
using DirichletPolynomial = std::map<std::uint64_t, std::complex<double>>;

std::complex<double> evaluate_dirichlet(const DirichletPolynomial& poly, double t);

/// int_{-T}^{T} |sum_n c(n) n^{-it}|^2 dt in closed form.
double msq_integral(const DirichletPolynomial& poly, double T);

/// sum_K |sum_{x < n <= x e^{1/T}, (n, D_K) = 1} a_K(n) b(n)|^2.
double pre_large_sieve_lhs(const std::vector<const FieldDescriptor*>& family, const DirichletPolynomial& b, double x,
                           double T);

/// Prime polynomial c(p) = a_K(p) log p / p on y < p <= u.
DirichletPolynomial prime_polynomial(const FieldDescriptor& field, double y, double u, const PrimeSieve& sieve);

/// sum_K of msq_integral of the prime polynomial of K over y < p <= u.
double mvt_primes_lhs(const std::vector<const FieldDescriptor*>& family, double y, double u, double T,
                      const PrimeSieve& sieve);

/// int_0^infty |sum_{x < n <= x e^{1/T}} c(n)|^2 dx/x, exact (piecewise constant in log x).
double gallagher_window_integral(const DirichletPolynomial& poly, double T);

/// Largest eigenvalues of M^* M and M M^* for a complex coefficient matrix.
std::pair<double, double> duality_top_eigenvalues(const std::vector<std::vector<std::complex<double>>>& M);

/// Log-scale bound shapes with the implicit constant left symbolic.
struct BoundShape {
  std::string name;
  std::string formula;
  double log_rhs = 0;     // natural log of the shape without its constant
  double lhs = -1;        // negative when not computed
  double log_ratio = 0;   // log(lhs) - log_rhs when lhs > 0
  bool literal_range = true;  // parameter range holds with constant 1
};

/// Zero-density shape (QT)^{10^7 m^3 (1 - sigma)} (log QT)^{2 m^2} times m_F.
BoundShape zero_density_shape(double sigma, double Q, double T, int m, double intersection_multiplicity);
/// Mean value shape (log y)^{2 m^2} m_F log u; literal range y >= (QT)^{108(m+1)}.
BoundShape mean_value_shape(double y, double u, double Q, double T, int m, double intersection_multiplicity,
                            double lhs);

}  // namespace cheb
