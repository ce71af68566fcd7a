#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>

#include "cheb/artin_coeffs.hpp"
#include "cheb/chebotarev.hpp"
#include "cheb/families.hpp"
#include "cheb/large_sieve.hpp"
#include "cheb/oracles/oracles.hpp"
#include "cheb/weights.hpp"
#include "cheb/zfr.hpp"

using namespace cheb;

namespace {

const Catalog& catalog() {
  static const Catalog c = load_catalog(CHEB_TEST_CATALOG);
  return c;
}

const PrimeSieve& sieve() {
  static const PrimeSieve s(1'100'000);
  return s;
}

struct Outcome {
  bool ok;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o{false, ""};
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = secs < limit_s;
  const bool pass = o.ok && in_time;
  if (!pass) ++failures;
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2f s of %.0f s", secs, limit_s);
  std::cout << (pass ? "PASS" : "FAIL") << " [" << id << "] " << title << " (" << timing
            << (in_time ? "" : ", over time") << (o.detail.empty() ? "" : "; " + o.detail) << ")" << std::endl;
}

// Coarse grid followed by a fine grid around the coarse minimizer.
double two_level_grid_min(const std::function<double(double)>& g, double lo, double hi, int points) {
  double best_u = lo, best = g(lo);
  for (int i = 1; i < points; ++i) {
    const double u = lo + (hi - lo) * i / (points - 1);
    const double v = g(u);
    if (v < best) best = v, best_u = u;
  }
  const double h = (hi - lo) / (points - 1);
  const double a = std::max(lo, best_u - h), b = std::min(hi, best_u + h);
  return std::min(best, oracle::grid_minimum(g, a, b, points));
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

}  // namespace

int main() {
  criterion(1, "Schur-sum a_KxK(p^j) equals brute-force Euler-product coefficient", 60, [] {
    const std::vector<std::string> names{"gaussian", "sqrt5", "cyclic7", "zeta5", "zeta12", "s3_23"};
    double worst = 0;
    int cases = 0;
    for (const auto& a : names)
      for (const auto& b : names) {
        const auto& K = catalog().find(a);
        const auto& K2 = catalog().find(b);
        for (std::uint32_t p : sieve().primes()) {
          if (p > 50) break;
          if (K.divides_disc(p) || K2.divides_disc(p)) continue;
          const auto r1 = local_roots(K, p).roots(), r2 = local_roots(K2, p).roots();
          for (int j = 0; j <= 6; ++j) {
            const double ours = coeff_a_KxK_prime(K, K2, p, j).convert_to<double>();
            const auto ref = oracle::rankin_selberg_bruteforce(r1, r2, j);
            worst = std::max(worst, std::abs(ours - ref) / std::max(1.0, std::abs(ref)));
            ++cases;
          }
        }
      }
    return Outcome{worst <= 1e-9, std::to_string(cases) + " cases, max rel error " + fmt(worst)};
  });

  criterion(2, "a_K(n) equals the Kronecker symbol for Q(i) and Q(sqrt 5), n <= 10^4", 5, [] {
    int mismatches = 0, checked = 0;
    for (const auto& [name, D] : std::vector<std::pair<std::string, std::int64_t>>{{"gaussian", -4}, {"sqrt5", 5}}) {
      const auto& K = catalog().find(name);
      for (std::uint64_t n = 1; n <= 10'000; ++n) {
        if (std::gcd<std::uint64_t, std::uint64_t>(n, std::abs(D)) != 1) continue;
        ++checked;
        if (coeff_a_K(K, n) != oracle::kronecker(D, n)) ++mismatches;
      }
    }
    return Outcome{mismatches == 0, std::to_string(checked) + " values, " + std::to_string(mismatches) + " mismatches"};
  });

  criterion(3, "exact Chebotarev counts and class-partition identity", 30, [] {
    const auto& gauss = catalog().find("gaussian");
    const auto count = pi_C_count(gauss, parse_class_selector(gauss, "1"), 1e5, sieve()).count;
    const auto ref = oracle::count_primes_in_residue(100'000, 4, 1);
    bool ok = count == ref && count == 4783;
    int identities = 0;
    for (const auto& K : catalog().fields)
      for (double x : {1e3, 1e4, 1e5}) {
        const SplittingTable table(K, sieve(), x);
        std::uint64_t total = 0, ramified = 0;
        for (const auto& sel : resolvable_selectors(K)) {
          const auto c = pi_C_count(K, table, sel, x);
          total += c.count;
          ramified = c.ramified;
        }
        ok = ok && total + ramified == pi_count(x, sieve());
        ++identities;
      }
    return Outcome{ok, "pi_{1}(1e5, Q(i)) = " + std::to_string(count) + ", " + std::to_string(identities) +
                           " partition identities"};
  });

  criterion(4, "weight transform vs quadrature, bounds (iv) and (v), F(0) range", 30, [] {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> unit(0, 1);
    const std::vector<WeightParams> params{WeightParams(1e3, 0.2), WeightParams(1e6, 0.1), WeightParams(std::exp(2.0), 0.05),
                                           WeightParams(1e12, 0.01)};
    double worst = 0;
    for (int i = 0; i < 200; ++i) {
      const auto& p = params[i % params.size()];
      const std::complex<double> z = std::polar(50 * std::sqrt(unit(rng)), 2 * M_PI * unit(rng));
      const auto bp = p.breakpoints();
      const auto ref =
          oracle::laplace_quadrature([&](double t) { return f_eval(p, t); }, {bp.begin(), bp.end()}, z);
      worst = std::max(worst, std::abs(laplace_F(p, z) - ref) / std::max(1.0, std::abs(ref)));
    }
    bool bounds = true;
    for (const auto& p : params)
      for (int k = 0; k < 1000; ++k) {
        const double t = -1000 + 2000.0 * k / 999;
        bounds = bounds && check_bound_iv(p, {0.01 + 2.99 * (k % 37) / 36.0, t}).pass;
        bounds = bounds && check_bound_v(p, t).pass;
      }
    bool f0 = true;
    for (int i = 0; i < 20; ++i) {
      const WeightParams q(std::exp(1.2 + 40 * unit(rng)), 0.01 + 0.23 * unit(rng));
      const double F0 = laplace_F(q, 0).real();
      f0 = f0 && F0 > 0.5 && F0 < 0.75;
    }
    return Outcome{worst <= 1e-10 && bounds && f0, "max rel error " + fmt(worst) + (bounds ? "" : ", bound failure") +
                                                       (f0 ? "" : ", F(0) out of range")};
  });

  criterion(5, "eta closed forms agree with grid search", 60, [] {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> unit(0, 1);
    const double log3 = std::log(3.0);
    auto rel = [](double a, double b) { return std::abs(a - b) / std::abs(b); };
    double worst_c = 0, worst_l = 0;
    int interior_c = 0, interior_l = 0;
    for (int i = 0; i < 50; ++i) {
      // Odd tuples disable the point value at t = 3 so the interior and clamp branches decide.
      const bool interior = i % 2;
      const double logD = i % 5 == 0 ? 0 : (interior ? 5 : 40) * unit(rng);
      const double L = log3 + std::exp((interior ? 9 : 7) * unit(rng));
      const int n = 1 + static_cast<int>(rng() % 8);
      const double c_eps = interior ? 1e300 : kDefaultCEps;
      const auto zfr = classical_zfr(logD, n, kDefaultC1, c_eps);
      const double closed = eta_classical_closed(logD, n, kDefaultC1, c_eps, L);
      auto phi = [&](double u) { return (u == log3 ? zfr.delta_at_3() : zfr.delta_u(u)) * L + u; };
      const double at3 = phi(log3);
      const double grid = std::min(at3, two_level_grid_min(phi, log3, at3, 100'000));
      if (grid < at3 * (1 - 1e-9)) ++interior_c;
      worst_c = std::max(worst_c, rel(closed, grid));
    }
    for (int i = 0; i < 50; ++i) {
      const double logQ = 1 + 30 * unit(rng), eps = 0.05 + 0.9 * unit(rng);
      const double L = i % 2 ? 3 + 1e4 * unit(rng) : std::exp(std::log(3.0) + 32 * unit(rng));
      const int m = 1 + static_cast<int>(rng() % 5);
      const auto r = eta_large_zfr_closed(logQ, eps, m, L);
      auto p1 = [&](double u) { return large_zfr_phi1(u, logQ, m + 1, kDefaultC1, L); };
      auto p2 = [&](double u) { return large_zfr_phi2(u, logQ, r.delta, L); };
      const double g1 = two_level_grid_min(p1, r.U, std::max(r.U, p1(r.U)), 100'000);
      const double g2 = two_level_grid_min(p2, 0, std::min(r.U, p2(0)), 100'000);
      if (r.u1 > r.U || (r.u2 > 0 && r.u2 < r.U)) ++interior_l;
      worst_l = std::max({worst_l, rel(r.branch1, g1), rel(r.branch2, g2), rel(r.eta, std::min(g1, g2))});
    }
    return Outcome{worst_c <= 1e-5 && worst_l <= 1e-5,
                   "classical max rel " + fmt(worst_c) + " (" + std::to_string(interior_c) +
                       " interior minima), large-ZFR max rel " + fmt(worst_l) + " (" + std::to_string(interior_l) +
                       " interior minima)"};
  });

  criterion(6, "mean-square integral vs quadrature; Mertens bound", 60, [] {
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> unit(-1, 1);
    double worst = 0;
    for (int i = 0; i < 100; ++i) {
      DirichletPolynomial poly;
      const int terms = 1 + static_cast<int>(rng() % 8);
      for (int k = 0; k < terms; ++k) poly[1 + rng() % 40] += std::complex<double>(unit(rng), unit(rng));
      const double T = 0.2 + 4 * (unit(rng) + 1);
      const std::vector<std::pair<std::uint64_t, std::complex<double>>> list(poly.begin(), poly.end());
      const double ours = msq_integral(poly, T), ref = oracle::msq_quadrature(list, T);
      worst = std::max(worst, std::abs(ours - ref) / std::max(1.0, ref));
    }
    bool mertens = true;
    double tightest = 0;
    const std::vector<double> etas{0.1, 0.5, 1.0, 2.0};
    for (const auto& K : catalog().fields) {
      const auto sums = mertens_partial_sums(K, etas, 1'000'000, sieve());
      for (std::size_t e = 0; e < etas.size(); ++e) {
        const double bound = std::max(K.m(), 0) / etas[e];
        mertens = mertens && sums[e] <= bound + 1e-12;
        if (bound > 0) tightest = std::max(tightest, sums[e] / bound);
      }
    }
    return Outcome{worst <= 1e-8 && mertens,
                   "msq max rel " + fmt(worst) + ", Mertens worst ratio " + fmt(tightest) + (mertens ? "" : " (violated)")};
  });

  criterion(7, "compositum discriminant divisibility over 20 quadratic fields", 5, [] {
    const auto all = fundamental_discriminants_up_to(200);
    std::vector<std::int64_t> chosen{-4, -3};
    for (std::size_t i = 0; chosen.size() < 20 && i < all.size(); i += 6)
      if (all[i] != -4 && all[i] != -3) chosen.push_back(all[i]);
    bool ok = chosen.size() == 20;
    int pairs = 0;
    for (std::size_t i = 0; i < chosen.size(); ++i)
      for (std::size_t j = i + 1; j < chosen.size(); ++j) {
        const auto c = compositum_disc_check(make_quadratic_field(chosen[i]), make_quadratic_field(chosen[j]));
        ok = ok && c.divides && c.disc_compositum == oracle::biquadratic_discriminant(chosen[i], chosen[j]);
        ++pairs;
      }
    const auto z12 = compositum_disc_check(make_quadratic_field(-4), make_quadratic_field(-3));
    ok = ok && z12.disc_compositum == 144;
    return Outcome{ok, std::to_string(pairs) + " pairs, D(Q(i, sqrt -3)) = " + z12.disc_compositum.str()};
  });

  criterion(8, "base-change inequality, exact two-sided counts", 60, [] {
    bool ok = true;
    int comparisons = 0;
    for (double x : {1e3, 1e4}) {
      const auto& s3 = catalog().find("s3_23");
      for (std::size_t c = 0; c < s3.group().classes().size(); ++c)
        if (s3.group().classes()[c].order == 3) {
          const auto A3 = s3.group().cyclic_subgroup(s3.group().classes()[c].representative);
          ok = ok && base_change_compare(s3, c, A3, x, sieve()).pass;
          ++comparisons;
        }
      for (const auto& K : catalog().fields) {
        const auto& G = K.group();
        if (!G.is_abelian()) continue;
        for (std::size_t c = 0; c < G.classes().size(); ++c) {
          if (!is_resolvable(K, parse_class_selector(K, "class:" + std::to_string(c)))) continue;
          const auto H = G.cyclic_subgroup(G.classes()[c].representative);
          ok = ok && base_change_compare(K, c, H, x, sieve()).pass;
          ++comparisons;
        }
      }
    }
    return Outcome{ok, std::to_string(comparisons) + " comparisons"};
  });

  criterion(9, "equidistribution for Q(zeta5) at 10^6", 60, [] {
    const auto& K = catalog().find("zeta5");
    const double x = 1e6;
    const SplittingTable table(K, sieve(), x);
    double worst = 0;
    for (const auto& sel : resolvable_selectors(K)) worst = std::max(worst, std::abs(pi_C_count(K, table, sel, x).error));
    const double threshold = 2 * std::sqrt(x) * std::log(x);
    return Outcome{worst <= threshold, "max error " + fmt(worst) + " vs " + fmt(threshold)};
  });

  criterion(10, "two full self-test runs are byte-identical", 120, [] {
    auto capture = [] {
      const std::string cmd = std::string(CHEB_CLI_PATH) + " --selftest";
      FILE* pipe = popen(cmd.c_str(), "r");
      if (!pipe) return std::pair<int, std::string>{-1, ""};
      std::string out;
      char buf[4096];
      std::size_t n;
      while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
      return std::pair<int, std::string>{pclose(pipe), out};
    };
    const auto a = capture(), b = capture();
    const bool ok = a.first == 0 && b.first == 0 && !a.second.empty() && a.second == b.second;
    return Outcome{ok, std::to_string(a.second.size()) + " bytes" + (a.second == b.second ? "" : ", reports differ")};
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
