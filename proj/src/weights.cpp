#include "cheb/weights.hpp"

#include <algorithm>
#include <cmath>

#include "cheb/errors.hpp"

namespace cheb {

WeightParams::WeightParams(double x, double eps) : x_(x), eps_(eps), log_x_(std::log(x)) {
  require(std::isfinite(x) && x >= 3, ErrorCode::ParameterOutOfRange, "x must be at least 3");
  require(eps > 0 && eps < 0.25, ErrorCode::ParameterOutOfRange, "eps must be in (0, 1/4)");
}

std::array<double, 6> WeightParams::breakpoints() const {
  const double a_ = a();
  return {0.5 - a_, 0.5 - a_ / 2, 0.5, 1.0, 1 + a_ / 2, 1 + a_};
}

namespace {

// CDF of S = -(V1 + V2), V_i uniform on [0, b], at s.
double smoothing_cdf(double s, double b) {
  const double w = -s;
  if (w <= 0) return 1;
  if (w >= 2 * b) return 0;
  const double tri = w <= b ? w * w / (2 * b * b) : 1 - (2 * b - w) * (2 * b - w) / (2 * b * b);
  return 1 - tri;
}

}  // namespace

double f_eval(const WeightParams& params, double t) {
  const double b = params.a() / 2;
  const double v = smoothing_cdf(t - 0.5, b) - smoothing_cdf(t - 1 - params.a(), b);
  return std::clamp(v, 0.0, 1.0);
}

std::complex<double> expm1_ratio_taylor(std::complex<double> w) {
  // sum_{k=0}^{8} w^k/(k+1)!, Horner form.
  std::complex<double> r = 1.0 / 362880.0;
  for (int k = 8; k >= 1; --k) {
    double fact = 1;
    for (int i = 2; i <= k; ++i) fact *= i;
    r = r * w + 1.0 / fact;
  }
  return r;
}

std::complex<double> expm1_ratio_direct(std::complex<double> w) {
  const double x = w.real(), y = w.imag();
  const double s = std::sin(y / 2);
  const std::complex<double> num(std::expm1(x) * std::cos(y) - 2 * s * s, std::exp(x) * std::sin(y));
  return num / w;
}

std::complex<double> expm1_ratio(std::complex<double> w) {
  return std::abs(w) < kTaylorThreshold ? expm1_ratio_taylor(w) : expm1_ratio_direct(w);
}

std::complex<double> laplace_F(const WeightParams& params, std::complex<double> z) {
  const double a = params.a(), A = 0.5 + a, b = a / 2;
  const std::complex<double> g = expm1_ratio(b * z);
  return std::exp(-(1 + a) * z) * A * expm1_ratio(A * z) * g * g;
}

BoundCheck check_bound_iv(const WeightParams& params, std::complex<double> s) {
  require(s.real() > 0, ErrorCode::ParameterOutOfRange, "bound (iv) needs Re(s) > 0");
  const double sigma = s.real(), L = params.log_x(), eps = params.eps(), abs_s = std::abs(s);
  BoundCheck out;
  out.lhs = std::abs(laplace_F(params, -s * L));
  const double decay = (1 + std::exp(-sigma * L / 2)) * std::pow(4 / (eps * abs_s), 2) / (abs_s * L);
  out.rhs = std::exp(sigma * eps + sigma * L) * std::min(1.0, decay);
  out.pass = out.lhs <= out.rhs;
  out.slack = out.lhs > 0 ? out.rhs / out.lhs : INFINITY;
  return out;
}

BoundCheck check_bound_v(const WeightParams& params, double t) {
  const std::complex<double> s(-0.5, t);
  const double L = params.log_x(), eps = params.eps();
  BoundCheck out;
  out.lhs = std::abs(laplace_F(params, -s * L));
  out.rhs = 5 * std::exp(-L / 4) * std::pow(4 / eps, 2) / ((0.25 + t * t) * L);
  out.pass = out.lhs <= out.rhs;
  out.slack = out.lhs > 0 ? out.rhs / out.lhs : INFINITY;
  return out;
}

namespace {

double checked_eps(double eps, double x) {
  require(eps < 0.25, ErrorCode::ParameterOutOfRange,
          "eps preset " + std::to_string(eps) + " is not below 1/4 at x = " + std::to_string(x) + " (needs x > 4096)");
  return eps;
}

}  // namespace

double eps_preset_pi(double x, double eta) {
  require(x >= 3 && eta >= 0, ErrorCode::ParameterOutOfRange, "need x >= 3 and eta >= 0");
  return checked_eps(std::pow(x, -0.25) + std::min(0.125, 8 * std::exp(-eta / 4)), x);
}

double eps_preset_li(double x, double eta_K, double eta_Q) {
  require(x >= 3 && eta_K >= 0 && eta_Q >= 0, ErrorCode::ParameterOutOfRange, "need x >= 3 and eta >= 0");
  return checked_eps(
      std::pow(x, -0.25) + std::min(0.0625, 8 * std::exp(-eta_K / 4)) + std::min(0.0625, 8 * std::exp(-eta_Q / 4)), x);
}

}  // namespace cheb
