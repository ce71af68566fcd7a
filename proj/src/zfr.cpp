#include "cheb/zfr.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cheb/errors.hpp"

namespace cheb {

namespace {

const double kLog3 = std::log(3.0);
constexpr double kInf = std::numeric_limits<double>::infinity();

double clamp_delta(double d) { return std::clamp(d, 0.0, 0.5); }

}  // namespace

ZfrData::ZfrData(std::vector<ZfrPiece> pieces, std::optional<double> delta_at_3, std::string point_provenance)
    : pieces_(std::move(pieces)), point_(delta_at_3), point_provenance_(std::move(point_provenance)) {
  require(!pieces_.empty(), ErrorCode::InvalidArgument, "zero-free region needs at least one piece");
  std::vector<std::pair<double, double>> spans;
  for (const auto& p : pieces_) {
    require(p.u_lo < p.u_hi && static_cast<bool>(p.delta), ErrorCode::InvalidArgument, "malformed zero-free piece");
    spans.emplace_back(p.u_lo, p.u_hi);
  }
  std::sort(spans.begin(), spans.end());
  double reach = spans.front().first;
  require(reach <= kLog3, ErrorCode::InvalidArgument, "pieces must start at t = 3");
  for (const auto& [lo, hi] : spans) {
    require(lo <= reach, ErrorCode::InvalidArgument, "pieces leave a gap");
    reach = std::max(reach, hi);
  }
  require(reach == kInf, ErrorCode::InvalidArgument, "pieces must cover all t >= 3");
}

ZfrData ZfrData::constant(double delta) {
  return ZfrData({{kLog3, kInf, [delta](double) { return delta; }, "constant"}});
}

ZfrData ZfrData::combine(const ZfrData& a, const ZfrData& b) {
  auto pieces = a.pieces_;
  pieces.insert(pieces.end(), b.pieces_.begin(), b.pieces_.end());
  std::optional<double> point;
  if (a.point_ || b.point_) point = std::max(a.delta_at_3(), b.delta_at_3());
  std::string prov = a.point_provenance_;
  if (!b.point_provenance_.empty()) prov += (prov.empty() ? "" : "; ") + b.point_provenance_;
  return ZfrData(std::move(pieces), point, prov);
}

double ZfrData::delta_u(double u) const {
  double best = 0;
  for (const auto& p : pieces_)
    if (u >= p.u_lo && u <= p.u_hi) best = std::max(best, clamp_delta(p.delta(u)));
  return best;
}

double ZfrData::delta_at_3() const { return point_ ? clamp_delta(*point_) : delta_u(kLog3); }

double ZfrData::delta_t(double t) const {
  require(t >= 3, ErrorCode::ParameterOutOfRange, "Delta is defined for t >= 3");
  return t == 3 ? delta_at_3() : delta_u(std::log(t));
}

std::vector<std::string> ZfrData::provenance() const {
  std::vector<std::string> out;
  for (const auto& p : pieces_) out.push_back(p.provenance);
  if (point_) out.push_back(point_provenance_);
  return out;
}

ZfrData classical_zfr(double log_D, int n, double c1, double c_eps) {
  require(log_D >= 0 && n >= 1 && c1 > 0 && c_eps > 0, ErrorCode::ParameterOutOfRange,
          "classical region needs D >= 1, n >= 1 and positive constants");
  auto classical = [=](double u) { return c1 / (log_D + n * u); };
  const double stark = c_eps * std::exp(-log_D / n);
  return ZfrData({{kLog3, kInf, classical, "classical; one possible real simple exceptional zero"}},
                 std::min(classical(kLog3), stark), "Stark bound for the exceptional zero at t = 3");
}

ZfrData large_zfr(double log_Q, double eps, int m, double c1) {
  require(log_Q >= std::log(2.0) && eps > 0 && eps < 1 && m >= 1, ErrorCode::ParameterOutOfRange,
          "large region needs Q >= 2, 0 < eps < 1 and m >= 1");
  const double delta = eps / (1e9 * std::pow(m, 3));
  const double U = std::exp(eps / 2 * log_Q);
  const int n = m + 1;
  std::vector<ZfrPiece> pieces;
  if (U > kLog3)
    pieces.push_back({kLog3, U, [=](double u) { return 20 * delta * log_Q / (log_Q + u); }, "zero-density construction"});
  pieces.push_back({std::min(U, kLog3), kInf, [=](double u) { return c1 / (2 * log_Q + n * u); }, "classical"});
  return ZfrData(std::move(pieces));
}

double eta_from_delta(const ZfrData& zfr, double log_x, int grid_points) {
  require(log_x >= kLog3, ErrorCode::ParameterOutOfRange, "x must be at least 3");
  require(grid_points >= 10, ErrorCode::ParameterOutOfRange, "grid too small");
  const double at3 = zfr.delta_at_3() * log_x + kLog3;
  // Every term is at least u, so no u beyond the value at t = 3 can improve it.
  auto objective = [&](double u) { return zfr.delta_u(u) * log_x + u; };
  const double lo = kLog3, hi = at3;
  double best = at3;
  if (hi <= lo) return best;
  const double h = (hi - lo) / grid_points;
  int best_i = -1;
  for (int i = 0; i <= grid_points; ++i) {
    const double u = lo + i * h;
    const double v = i == 0 ? objective(std::nextafter(lo, kInf)) : objective(u);
    if (v < best) {
      best = v;
      best_i = i;
    }
  }
  if (best_i < 0) return best;
  // Golden-section refinement around the best grid point.
  double a = lo + std::max(0, best_i - 1) * h, b = lo + std::min(grid_points, best_i + 1) * h;
  a = std::max(a, std::nextafter(lo, kInf));
  const double r = (std::sqrt(5.0) - 1) / 2;
  double c = b - r * (b - a), d = a + r * (b - a);
  double fc = objective(c), fd = objective(d);
  for (int it = 0; it < 200 && b - a > 1e-15 * std::max(1.0, std::abs(b)); ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - r * (b - a);
      fc = objective(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + r * (b - a);
      fd = objective(d);
    }
  }
  return std::min({best, fc, fd});
}

double eta_classical_closed(double log_D, int n, double c1, double c_eps, double log_x, double u_min) {
  require(log_x >= kLog3 && log_D >= 0 && n >= 1 && c1 > 0 && c_eps > 0, ErrorCode::ParameterOutOfRange,
          "closed form needs x >= 3, D >= 1, n >= 1 and positive constants");
  auto phi = [&](double u) { return clamp_delta(c1 / (log_D + n * u)) * log_x + u; };
  const double u_star = std::sqrt(c1 * log_x / n) - log_D / n;
  const double u_clamp = (2 * c1 - log_D) / n;  // where c1/(log D + n u) = 1/2
  double best = std::min({phi(u_min), phi(std::max(u_min, u_star)), phi(std::max(u_min, u_clamp))});
  const double stark = clamp_delta(c_eps * std::exp(-log_D / n)) * log_x + u_min;
  return std::min(best, stark);
}

double eta_classical_closed(double log_D, int n, double c1, double c_eps, double log_x) {
  return eta_classical_closed(log_D, n, c1, c_eps, log_x, kLog3);
}

double classical_sqrt_constant(int n, double c1, double c_eps) {
  return std::min({c_eps, std::sqrt(c1 / n), std::exp(1.0) / 2 * c1 / n, 0.5});
}

double large_zfr_phi1(double u, double log_Q, int n, double c1, double log_x) {
  return c1 * log_x / (2 * log_Q + n * u) + u;
}

double large_zfr_phi2(double u, double log_Q, double delta, double log_x) {
  return 20 * delta * log_Q * log_x / (log_Q + u) + u;
}

LargeZfrResult eta_large_zfr_closed(double log_Q, double eps, int m, double log_x, double c1) {
  require(log_Q >= std::log(2.0), ErrorCode::ParameterOutOfRange, "Q must be at least 2");
  require(eps > 0 && eps < 1, ErrorCode::ParameterOutOfRange, "eps must be in (0, 1)");
  require(log_x >= kLog3, ErrorCode::ParameterOutOfRange, "x must be at least 3");
  require(m >= 1 && c1 > 0, ErrorCode::ParameterOutOfRange, "need m >= 1 and c1 > 0");
  LargeZfrResult r;
  const int n = m + 1;
  r.delta = eps / (1e9 * std::pow(m, 3));
  r.U = std::exp(eps / 2 * log_Q);
  r.u1 = std::sqrt(c1 * log_x / n) - 2 * log_Q / n;
  r.u2 = std::sqrt(20 * r.delta * log_Q * log_x) - log_Q;
  r.branch1 = large_zfr_phi1(std::max(r.u1, r.U), log_Q, n, c1, log_x);
  r.branch2 = large_zfr_phi2(std::clamp(r.u2, 0.0, r.U), log_Q, r.delta, log_x);
  r.eta = std::min(r.branch1, r.branch2);
  r.bound_terms[0] = std::exp(-20 * r.delta * log_x);
  r.bound_terms[1] = std::exp(-std::sqrt(20 * r.delta * log_Q * log_x) - log_Q / 2);
  r.bound_terms[2] = std::exp(-std::sqrt(c1 * log_x / n) - r.U);
  r.bound_sum = r.bound_terms[0] + r.bound_terms[1] + r.bound_terms[2];
  r.bound_holds = std::exp(-r.eta) <= r.bound_sum * (1 + 1e-12);
  return r;
}

double error_factor(double eta, double log_x, double log_D) {
  require(log_D >= 0, ErrorCode::ParameterOutOfRange, "D must be at least 1");
  const double log_eD = 1 + log_D;
  require(log_x >= 4 * std::log(log_eD), ErrorCode::DomainTooSmall,
          "x is below (log eD)^4 = " + std::to_string(std::pow(log_eD, 4)));
  return std::exp(-eta / 8) * log_eD;
}

EtaProfile profile_from_zfr(ZfrData zfr, int grid_points) {
  return {[zfr = std::move(zfr), grid_points](double log_x) { return eta_from_delta(zfr, log_x, grid_points); },
          "grid"};
}

EtaProfile classical_profile(double log_D, int n, double c1, double c_eps) {
  return {[=](double log_x) { return eta_classical_closed(log_D, n, c1, c_eps, log_x); }, "closed-form"};
}

}  // namespace cheb
