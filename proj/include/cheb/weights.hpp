#pragma once

#include <array>
#include <complex>

namespace cheb {

/// Smooth cutoff with parameters x >= 3 and eps in (0, 1/4).
class WeightParams {
 public:
  WeightParams(double x, double eps);

  double x() const noexcept { return x_; }
  double eps() const noexcept { return eps_; }
  double log_x() const noexcept { return log_x_; }
  /// eps / log x: the smoothing width.
  double a() const noexcept { return eps_ / log_x_; }
  double support_lo() const noexcept { return 0.5 - a(); }
  double support_hi() const noexcept { return 1 + a(); }
  /// Breakpoints where f changes its quadratic piece.
  std::array<double, 6> breakpoints() const;

 private:
  double x_, eps_, log_x_;
};

double f_eval(const WeightParams& params, double t);

/// F(z) = int f(t) e^{-zt} dt in closed form.
std::complex<double> laplace_F(const WeightParams& params, std::complex<double> z);

/// (e^w - 1)/w: exact-cancellation formula, and its degree-8 Taylor polynomial.
std::complex<double> expm1_ratio(std::complex<double> w);
std::complex<double> expm1_ratio_direct(std::complex<double> w);
std::complex<double> expm1_ratio_taylor(std::complex<double> w);
inline constexpr double kTaylorThreshold = 1e-4;

struct BoundCheck {
  double lhs = 0;
  double rhs = 0;
  bool pass = false;
  double slack = 0;  // rhs / lhs
};

/// |F(-s log x)| <= e^{sigma eps} x^sigma min{1, (1 + x^{-sigma/2}) (4/(eps|s|))^2 / (|s| log x)}.
BoundCheck check_bound_iv(const WeightParams& params, std::complex<double> s);
/// s = -1/2 + it: |F(-s log x)| <= 5 x^{-1/4} (4/eps)^2 (1/4 + t^2)^{-1} / log x.
BoundCheck check_bound_v(const WeightParams& params, double t);

/// eps = x^{-1/4} + min{1/8, 8 e^{-eta/4}}.
double eps_preset_pi(double x, double eta);
/// eps = x^{-1/4} + min{1/16, 8 e^{-etaK/4}} + min{1/16, 8 e^{-etaQ/4}}.
double eps_preset_li(double x, double eta_K, double eta_Q);

}  // namespace cheb
