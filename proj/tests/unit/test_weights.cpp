#include <cmath>
#include <random>

#include "cheb/oracles/oracles.hpp"
#include "cheb/weights.hpp"
#include "common.hpp"

using namespace cheb;

TEST_CASE("f on and off its plateau") {
  const WeightParams p(1e6, 0.1);
  CHECK(f_eval(p, 0.75) == 1);
  CHECK(f_eval(p, 0.5) == 1);
  CHECK(f_eval(p, 1.0) == 1);
  CHECK(f_eval(p, 0) == 0);
  CHECK(f_eval(p, p.support_lo()) == 0);
  CHECK(f_eval(p, p.support_hi()) == 0);
  CHECK(p.support_lo() == doctest::Approx(0.5 - 0.1 / std::log(1e6)));
}

TEST_CASE("f inside the ramp matches Fourier inversion of F") {
  const WeightParams p(std::exp(2.0), 0.2);
  const double t = 1 + p.eps() / (2 * p.log_x());
  const double v = f_eval(p, t);
  CHECK(v > 0);
  CHECK(v < 1);
  const double inv = oracle::fourier_inversion([&](std::complex<double> z) { return laplace_F(p, z); }, t);
  CHECK(std::abs(inv - v) <= 1e-8);
}

TEST_CASE("support, plateau and range on grids") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0, 1);
  for (int i = 0; i < 20; ++i) {
    const WeightParams p(std::exp(1.2 + 30 * u(rng)), 0.01 + 0.23 * u(rng));
    for (int k = 0; k <= 10'000; ++k) {
      const double t = -0.1 + 1.3 * k / 10'000;
      const double v = f_eval(p, t);
      CHECK(v >= 0);
      CHECK(v <= 1);
      if (t <= p.support_lo() || t >= p.support_hi()) CHECK(v == 0);
      if (t >= 0.5 && t <= 1) CHECK(v == 1);
    }
  }
}

TEST_CASE("F(0) and the main term") {
  const WeightParams p(std::exp(2.0), 0.1);
  CHECK(laplace_F(p, 0).real() == doctest::Approx(0.55));
  CHECK(laplace_F(p, 0).imag() == 0);
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0, 1);
  for (int i = 0; i < 20; ++i) {
    const WeightParams q(std::exp(1.2 + 40 * u(rng)), 0.01 + 0.23 * u(rng));
    const double F0 = laplace_F(q, 0).real();
    CHECK(F0 > 0.5);
    CHECK(F0 < 0.75);
  }
  for (double x : {1e4, 1e6, 1e9}) {
    const WeightParams w(x, 0.1);
    const double L = std::log(x);
    const double F = laplace_F(w, -L).real();
    CHECK(std::abs(F - x / L) <= 2 * (0.1 * x + std::sqrt(x)) / L);
  }
  CHECK(std::abs(laplace_F(p, 200)) < 1e-40);
}

TEST_CASE("F agrees with quadrature") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-1, 1);
  const WeightParams p(1e3, 0.2);
  const auto bp = p.breakpoints();
  const std::vector<double> breaks(bp.begin(), bp.end());
  for (int i = 0; i < 20; ++i) {
    std::complex<double> z(50 * u(rng), 50 * u(rng));
    if (std::abs(z) > 50) continue;
    const auto ref = oracle::laplace_quadrature([&](double t) { return f_eval(p, t); }, breaks, z);
    CHECK(std::abs(laplace_F(p, z) - ref) <= 1e-10 * std::max(1.0, std::abs(ref)));
  }
}

TEST_CASE("F is real on the real axis and conjugate-symmetric") {
  const WeightParams p(1e5, 0.15);
  for (double r : {-10.0, -1.0, 0.3, 7.0}) CHECK(laplace_F(p, r).imag() == 0);
  for (std::complex<double> z : {std::complex<double>(1, 2), {-3, 40}, {0.5, -7}})
    CHECK(std::abs(laplace_F(p, std::conj(z)) - std::conj(laplace_F(p, z))) <= 1e-14 * std::abs(laplace_F(p, z)));
}

TEST_CASE("Taylor fallback agrees with the direct formula") {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(0, 1);
  for (int i = 0; i < 500; ++i) {
    const double r = std::pow(10.0, -5 + 2 * u(rng));
    const std::complex<double> w = std::polar(r, 2 * M_PI * u(rng));
    const auto a = expm1_ratio_taylor(w), b = expm1_ratio_direct(w);
    CHECK(std::abs(a - b) <= 1e-12 * std::abs(b));
  }
  CHECK(expm1_ratio(0) == std::complex<double>(1, 0));
}

TEST_CASE("bounds (iv) and (v)") {
  CHECK(check_bound_iv(WeightParams(100, 0.1), 1).pass);
  CHECK(check_bound_iv(WeightParams(100, 0.1), {0.01, 50}).pass);
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0, 1);
  const WeightParams p(1e6, 0.1);
  for (int i = 0; i < 1000; ++i) {
    const std::complex<double> s(3 * u(rng) + 1e-9, 1000 * (2 * u(rng) - 1));
    CHECK(check_bound_iv(p, s).pass);
  }
  CHECK(check_bound_v(p, 0).pass);
  const auto at100 = check_bound_v(p, 100);
  CHECK(at100.pass);
  CHECK(at100.slack >= 1);
  for (int k = -10'000; k <= 10'000; ++k) CHECK(check_bound_v(p, k * 0.1).pass);
}

TEST_CASE("eps presets and parameter checks") {
  const double x = 1e8, eta = 20;
  CHECK(eps_preset_pi(x, eta) == doctest::Approx(std::pow(x, -0.25) + std::min(0.125, 8 * std::exp(-eta / 4))));
  CHECK(eps_preset_li(x, 40, 60) == doctest::Approx(std::pow(x, -0.25) + std::min(1.0 / 16, 8 * std::exp(-10.0)) +
                                                    std::min(1.0 / 16, 8 * std::exp(-15.0))));
  CHECK(test::code_of([] { eps_preset_pi(4000, 1); }) == ErrorCode::ParameterOutOfRange);
  CHECK(test::code_of([] { WeightParams(1e6, 0.3); }) == ErrorCode::ParameterOutOfRange);
  CHECK(test::code_of([] { WeightParams(2, 0.1); }) == ErrorCode::ParameterOutOfRange);
}
