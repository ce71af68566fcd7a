#include <cmath>
#include <random>

#include "cheb/artin_coeffs.hpp"
#include "cheb/families.hpp"
#include "cheb/large_sieve.hpp"
#include "cheb/oracles/oracles.hpp"
#include "common.hpp"

using namespace cheb;

namespace {

DirichletPolynomial random_poly(std::mt19937_64& rng, int terms, std::uint64_t support) {
  std::uniform_real_distribution<double> u(-1, 1);
  DirichletPolynomial p;
  for (int i = 0; i < terms; ++i) p[1 + rng() % support] = {u(rng), u(rng)};
  return p;
}

std::vector<std::pair<std::uint64_t, std::complex<double>>> as_list(const DirichletPolynomial& p) {
  return {p.begin(), p.end()};
}

}  // namespace

TEST_CASE("msq_integral examples") {
  const double c = std::log(5.0) / 5;
  CHECK(msq_integral({{5, c}}, 1) == doctest::Approx(2 * c * c));
  CHECK(msq_integral({{5, c}}, 1) == doctest::Approx(0.20722).epsilon(1e-4));
  CHECK(msq_integral({}, 3) == 0);
  const DirichletPolynomial two{{2, 1.0}, {3, 1.0}};
  for (double T : {1e-4, 1e-6}) CHECK(msq_integral(two, T) / T == doctest::Approx(8).epsilon(1e-3));
  CHECK(test::code_of([] { msq_integral({{1, 1.0}}, -1); }) == ErrorCode::ParameterOutOfRange);
}

TEST_CASE("msq_integral agrees with adaptive quadrature") {
  std::mt19937_64 rng(11);
  for (double T : {0.5, 1.0, 10.0})
    for (int i = 0; i < 6; ++i) {
      const auto p = random_poly(rng, 1 + static_cast<int>(rng() % 10), 20);
      CHECK(std::abs(msq_integral(p, T) - oracle::msq_quadrature(as_list(p), T)) <= 1e-8);
    }
}

TEST_CASE("pre-large-sieve left side") {
  const auto& gauss = test::field("gaussian");
  CHECK(pre_large_sieve_lhs({&gauss}, {}, 100, 1) == 0);
  CHECK(pre_large_sieve_lhs({&gauss}, {{9, 1.0}}, 8, 1) == doctest::Approx(1));
  CHECK(pre_large_sieve_lhs({&gauss}, {{15, 1.0}}, 14, 1) == doctest::Approx(1));

  std::vector<FieldDescriptor> quads;
  for (auto D : fundamental_discriminants_up_to(40)) {
    if (quads.size() == 10) break;
    quads.push_back(make_quadratic_field(D));
  }
  std::vector<const FieldDescriptor*> fam;
  for (const auto& f : quads) fam.push_back(&f);
  DirichletPolynomial b;
  for (std::uint64_t p : test::sieve().primes()) {
    if (p > 300) break;
    b[p] = 1.0;
  }
  double by_hand = 0;
  const double hi = 100 * std::exp(1.0);
  for (const auto& K : quads) {
    const auto D = K.disc_field().convert_to<std::int64_t>();
    double s = 0;
    for (const auto& [n, v] : b)
      if (n > 100 && n <= hi && D % static_cast<std::int64_t>(n) != 0) s += oracle::kronecker(D, n) * v.real();
    by_hand += s * s;
  }
  CHECK(pre_large_sieve_lhs(fam, b, 100, 1) == doctest::Approx(by_hand));

  double prev = 0;
  for (std::size_t k = 1; k <= fam.size(); ++k) {
    const double v = pre_large_sieve_lhs({fam.begin(), fam.begin() + k}, b, 100, 1);
    CHECK(v >= prev);
    prev = v;
  }
}

TEST_CASE("prime mean value") {
  const auto& gauss = test::field("gaussian");
  const auto& s = test::sieve();
  CHECK(mvt_primes_lhs({&gauss}, 20, 20, 1, s) == 0);
  const auto poly = prime_polynomial(gauss, 2, 20, s);
  CHECK(std::abs(mvt_primes_lhs({&gauss}, 2, 20, 1, s) - oracle::msq_quadrature(as_list(poly), 1)) <= 1e-6);
  double prev = 0;
  for (double T : {0.5, 1.0, 2.0, 4.0, 8.0}) {
    const double v = mvt_primes_lhs({&gauss}, 2, 500, T, s);
    CHECK(v >= prev);
    prev = v;
  }
}

TEST_CASE("bound shapes") {
  const auto at1 = zero_density_shape(1, 10, 10, 2, 3);
  CHECK(at1.log_rhs == doctest::Approx(std::log(3.0) + 8 * std::log(std::log(100.0))));
  const auto half = zero_density_shape(0.5, 10, 10, 1, 1);
  CHECK(half.log_rhs == doctest::Approx(1e7 * 0.5 * std::log(100.0) + 2 * std::log(std::log(100.0))));
  const auto mv = mean_value_shape(1e3, 1e6, 10, 1, 1, 1, 2.0);
  CHECK(mv.log_rhs == doctest::Approx(2 * std::log(std::log(1e3)) + std::log(std::log(1e6))));
  CHECK(mv.log_ratio == doctest::Approx(std::log(2.0) - mv.log_rhs));
  CHECK_FALSE(mv.literal_range);
  CHECK(test::code_of([] { zero_density_shape(0.4, 10, 10, 1, 1); }) == ErrorCode::ParameterOutOfRange);
}

TEST_CASE("Gallagher constant is stable across seeds") {
  auto worst_ratio = [](std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    double worst = 0;
    for (int i = 0; i < 20; ++i) {
      const auto p = random_poly(rng, 6, 200);
      for (double T : {1.0, 5.0}) {
        const double g = gallagher_window_integral(p, T);
        if (g > 0) worst = std::max(worst, msq_integral(p, T) / (T * T * g));
      }
    }
    return worst;
  };
  const double a = worst_ratio(1), b = worst_ratio(2);
  CHECK(a > 0);
  CHECK(std::max(a, b) / std::min(a, b) <= 2);
}

TEST_CASE("Gallagher window integral of a single term") {
  // |c|^2 times the measure of {v : log n - 1/T <= v < log n} with v >= 0.
  CHECK(gallagher_window_integral({{10, 2.0}}, 2) == doctest::Approx(4 * 0.5));
  CHECK(gallagher_window_integral({{2, 1.0}}, 1) == doctest::Approx(std::log(2.0)));
}

TEST_CASE("duality of quadratic forms") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int t = 0; t < 10; ++t) {
    const std::size_t r = 2 + rng() % 5, c = 2 + rng() % 7;
    std::vector<std::vector<std::complex<double>>> M(r, std::vector<std::complex<double>>(c));
    for (auto& row : M)
      for (auto& v : row) v = {u(rng), u(rng)};
    const auto [a, b] = duality_top_eigenvalues(M);
    CHECK(std::abs(a - b) <= 1e-8 * std::max(1.0, a));
  }
}
