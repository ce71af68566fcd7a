#include "cheb/large_sieve.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "cheb/artin_coeffs.hpp"
#include "cheb/errors.hpp"

namespace cheb {

std::complex<double> evaluate_dirichlet(const DirichletPolynomial& poly, double t) {
  std::complex<double> s = 0;
  for (const auto& [n, c] : poly) s += c * std::polar(1.0, -t * std::log(static_cast<double>(n)));
  return s;
}

double msq_integral(const DirichletPolynomial& poly, double T) {
  require(T > 0, ErrorCode::ParameterOutOfRange, "T must be positive");
  std::vector<std::pair<double, std::complex<double>>> terms;
  for (const auto& [n, c] : poly) terms.emplace_back(std::log(static_cast<double>(n)), c);
  double total = 0;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    total += 2 * T * std::norm(terms[i].second);
    for (std::size_t j = i + 1; j < terms.size(); ++j) {
      const double L = terms[j].first - terms[i].first;
      // Both orders (n, q) and (q, n) together give 2 Re(c_n conj(c_q)) * 2 sin(TL)/L.
      total += 2 * std::real(terms[i].second * std::conj(terms[j].second)) * 2 * std::sin(T * L) / L;
    }
  }
  return std::max(total, 0.0);
}

double pre_large_sieve_lhs(const std::vector<const FieldDescriptor*>& family, const DirichletPolynomial& b, double x,
                           double T) {
  require(T > 0 && x > 0, ErrorCode::ParameterOutOfRange, "x and T must be positive");
  const double hi = x * std::exp(1 / T);
  double total = 0;
  for (const auto* field : family) {
    std::complex<double> s = 0;
    for (const auto& [n, value] : b) {
      const double nd = static_cast<double>(n);
      if (nd <= x || nd > hi || value == 0.0) continue;
      if (gcd(abs(field->disc_field()), BigInt(n)) != 1) continue;
      s += coeff_a_K(*field, n).convert_to<double>() * value;
    }
    total += std::norm(s);
  }
  return total;
}

DirichletPolynomial prime_polynomial(const FieldDescriptor& field, double y, double u, const PrimeSieve& sieve) {
  DirichletPolynomial poly;
  const std::size_t hi = sieve.prefix_length(u);
  for (std::size_t i = sieve.prefix_length(std::max(y, 1.0)); i < hi; ++i) {
    const std::uint64_t p = sieve.primes()[i];
    const auto data = frobenius_data(field, p);
    if (data.ramified) continue;
    const int a = (data.frobenius_order == 1 ? static_cast<int>(field.degree_closure()) : 0) - 1;
    if (a != 0) poly[p] = a * std::log(static_cast<double>(p)) / static_cast<double>(p);
  }
  return poly;
}

double mvt_primes_lhs(const std::vector<const FieldDescriptor*>& family, double y, double u, double T,
                      const PrimeSieve& sieve) {
  require(y >= 1 && y <= u, ErrorCode::ParameterOutOfRange, "need 1 <= y <= u");
  double total = 0;
  for (const auto* field : family) total += msq_integral(prime_polynomial(*field, y, u, sieve), T);
  return total;
}

double gallagher_window_integral(const DirichletPolynomial& poly, double T) {
  require(T > 0, ErrorCode::ParameterOutOfRange, "T must be positive");
  // In v = log x, the term n is inside the window exactly for log n - 1/T <= v < log n.
  struct Event {
    double v;
    std::complex<double> delta;
  };
  std::vector<Event> events;
  for (const auto& [n, c] : poly) {
    const double ln = std::log(static_cast<double>(n));
    events.push_back({std::max(ln - 1 / T, 0.0), c});
    events.push_back({ln, -c});
  }
  std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) { return a.v < b.v; });
  double total = 0;
  std::complex<double> current = 0;
  for (std::size_t i = 0; i < events.size(); ++i) {
    current += events[i].delta;
    if (i + 1 < events.size()) total += std::norm(current) * (events[i + 1].v - events[i].v);
  }
  return total;
}

std::pair<double, double> duality_top_eigenvalues(const std::vector<std::vector<std::complex<double>>>& M) {
  require(!M.empty() && !M.front().empty(), ErrorCode::InvalidArgument, "empty matrix");
  Eigen::MatrixXcd A(M.size(), M.front().size());
  for (std::size_t i = 0; i < M.size(); ++i)
    for (std::size_t j = 0; j < M[i].size(); ++j) A(i, j) = M[i][j];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> left(A.adjoint() * A), right(A * A.adjoint());
  return {left.eigenvalues().maxCoeff(), right.eigenvalues().maxCoeff()};
}

BoundShape zero_density_shape(double sigma, double Q, double T, int m, double intersection_multiplicity) {
  require(sigma >= 0.5 && sigma <= 1, ErrorCode::ParameterOutOfRange, "sigma must be in [1/2, 1]");
  require(Q >= 1 && T >= 1 && Q * T > 1, ErrorCode::ParameterOutOfRange, "need Q, T >= 1 and QT > 1");
  require(m >= 1 && intersection_multiplicity >= 1, ErrorCode::ParameterOutOfRange, "need m >= 1 and m_F >= 1");
  BoundShape shape;
  shape.name = "zero_density";
  shape.formula = "m_F * (QT)^(1e7 m^3 (1 - sigma)) * (log QT)^(2 m^2)";
  const double lqt = std::log(Q * T);
  shape.log_rhs = std::log(intersection_multiplicity) + 1e7 * std::pow(m, 3) * (1 - sigma) * lqt +
                  2.0 * m * m * std::log(lqt);
  return shape;
}

BoundShape mean_value_shape(double y, double u, double Q, double T, int m, double intersection_multiplicity,
                            double lhs) {
  require(y > 1 && u >= y, ErrorCode::ParameterOutOfRange, "need 1 < y <= u");
  require(Q >= 1 && T >= 1 && m >= 1 && intersection_multiplicity >= 1, ErrorCode::ParameterOutOfRange,
          "need Q, T >= 1, m >= 1 and m_F >= 1");
  BoundShape shape;
  shape.name = "prime_mean_value";
  shape.formula = "(log y)^(2 m^2) * m_F * log u";
  shape.log_rhs = 2.0 * m * m * std::log(std::log(y)) + std::log(intersection_multiplicity) + std::log(std::log(u));
  shape.lhs = lhs;
  if (lhs > 0) shape.log_ratio = std::log(lhs) - shape.log_rhs;
  shape.literal_range = std::log(y) >= 108.0 * (m + 1) * std::log(Q * T) && std::log(u) <= 12000 * std::log(y);
  return shape;
}

}  // namespace cheb
