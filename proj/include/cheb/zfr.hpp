#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace cheb {

inline constexpr double kDefaultC1 = 0.05;
inline constexpr double kDefaultCEps = 0.1;

/// One piece of a zero-free region on an interval of u = log t.
struct ZfrPiece {
  double u_lo = 0;
  double u_hi = 0;  // may be +infinity
  std::function<double(double u)> delta;
  std::string provenance;
};

/// Guaranteed zero-free width Delta(t) for t >= 3, as a lower bound stored
/// in the variable u = log t. Values are clamped to [0, 1/2]; where pieces
/// overlap the largest value wins.
class ZfrData {
 public:
  ZfrData(std::vector<ZfrPiece> pieces, std::optional<double> delta_at_3 = std::nullopt,
          std::string point_provenance = {});

  static ZfrData constant(double delta);
  /// Pointwise maximum.
  static ZfrData combine(const ZfrData& a, const ZfrData& b);

  /// Delta at t = e^u for u > log 3.
  double delta_u(double u) const;
  /// Delta at t = 3, including any point piece.
  double delta_at_3() const;
  double delta_t(double t) const;
  const std::vector<ZfrPiece>& pieces() const noexcept { return pieces_; }
  std::vector<std::string> provenance() const;

 private:
  std::vector<ZfrPiece> pieces_;
  std::optional<double> point_;
  std::string point_provenance_;
};

/// Classical region c1/(log D + n log t) for t > 3 with the point value
/// min(c1/(log D + n log 3), c_eps D^{-1/n}) at t = 3.
ZfrData classical_zfr(double log_D, int n, double c1 = kDefaultC1, double c_eps = kDefaultCEps);

/// Region of the large-ZFR construction: 20 delta log Q/(log Q + u) up to
/// u = Q^{eps/2}, then c1/(2 log Q + n u).
ZfrData large_zfr(double log_Q, double eps, int m, double c1 = kDefaultC1);

/// inf_{t >= 3} Delta(t) log x + log t by grid search plus refinement.
double eta_from_delta(const ZfrData& zfr, double log_x, int grid_points = 10000);

/// Closed-form eta for the classical region, minimizing over u >= u_min.
/// With u_min = log 3 this equals eta_from_delta(classical_zfr(...)).
double eta_classical_closed(double log_D, int n, double c1, double c_eps, double log_x, double u_min);
double eta_classical_closed(double log_D, int n, double c1, double c_eps, double log_x);

/// Explicit kappa with eta_classical >= kappa sqrt(log x) whenever
/// log D <= (n/2) log log x.
double classical_sqrt_constant(int n, double c1, double c_eps);

struct LargeZfrResult {
  double eta = 0;
  double delta = 0;
  double u1 = 0, u2 = 0, U = 0;
  double branch1 = 0, branch2 = 0;  // inf phi_1 on [U, inf), inf phi_2 on [0, U]
  double bound_terms[3] = {0, 0, 0};
  double bound_sum = 0;
  bool bound_holds = false;  // e^{-eta} <= bound_sum
};

double large_zfr_phi1(double u, double log_Q, int n, double c1, double log_x);
double large_zfr_phi2(double u, double log_Q, double delta, double log_x);

/// Throws ParameterOutOfRange unless Q >= 2, 0 < eps < 1, x >= 3, m >= 1.
LargeZfrResult eta_large_zfr_closed(double log_Q, double eps, int m, double log_x, double c1 = kDefaultC1);

/// e^{-eta/8} log(e D); DomainTooSmall when log x < 4 log log(e D).
double error_factor(double eta, double log_x, double log_D);

/// eta as a function of log x.
struct EtaProfile {
  std::function<double(double log_x)> eta;
  std::string method;
};

EtaProfile profile_from_zfr(ZfrData zfr, int grid_points = 10000);
EtaProfile classical_profile(double log_D, int n, double c1 = kDefaultC1, double c_eps = kDefaultCEps);

}  // namespace cheb
