#include "cheb/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "cheb/artin_coeffs.hpp"
#include "cheb/chebotarev.hpp"
#include "cheb/errors.hpp"
#include "cheb/families.hpp"
#include "cheb/large_sieve.hpp"
#include "cheb/oracles/oracles.hpp"
#include "cheb/polymod.hpp"
#include "cheb/weights.hpp"
#include "cheb/zfr.hpp"

namespace cheb {

namespace {

using json = nlohmann::ordered_json;

class Checks {
 public:
  void add(const std::string& name, bool pass, json detail = json::object()) {
    json c;
    c["name"] = name;
    c["pass"] = pass;
    if (!detail.empty()) c["detail"] = std::move(detail);
    all_pass_ = all_pass_ && pass;
    items_.push_back(std::move(c));
  }
  json finish(const std::string& module) const {
    json r;
    r["module"] = module;
    r["pass"] = all_pass_;
    r["checks"] = items_;
    return r;
  }

 private:
  json items_ = json::array();
  bool all_pass_ = true;
};

const PrimeSieve& shared_sieve() {
  static const PrimeSieve sieve(1'100'000);
  return sieve;
}

json groups_fields(const Catalog& catalog, const SelftestOptions& opts) {
  Checks checks;
  for (const auto& [label, gens] : std::vector<std::pair<std::string, std::vector<std::vector<int>>>>{
           {"S3", {{1, 0, 2}, {1, 2, 0}}},
           {"A5", {{1, 2, 0, 3, 4}, {1, 2, 3, 4, 0}}},
           {"D8", {{1, 2, 3, 0}, {0, 3, 2, 1}}}}) {
    const auto group = build_group(label);
    std::vector<std::size_t> sizes;
    for (const auto& c : group.classes()) sizes.push_back(c.size);
    std::sort(sizes.begin(), sizes.end());
    checks.add("class sizes " + label, sizes == oracle::class_sizes_bruteforce(gens), {{"sizes", sizes}});
  }
  {
    const PrimeSieve s(10'000);
    std::vector<std::uint64_t> ours(s.primes().begin(), s.primes().end());
    checks.add("sieve 1e4 vs trial division", ours == oracle::trial_division_primes(10'000), {{"count", ours.size()}});
    const auto count = shared_sieve().count_upto(1e6);
    checks.add("pi(1e6) vs segmented sieve", count == oracle::segmented_prime_count(1'000'000), {{"count", count}});
  }
  {
    std::mt19937_64 rng(opts.seed);
    bool ok = true;
    int trials = 0;
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
      for (int t = 0; t < 20; ++t) {
        std::vector<std::int64_t> f(6);
        for (auto& c : f) c = static_cast<std::int64_t>(rng() % 41) - 20;
        f.back() = 1;
        const auto factors = factor_poly_mod_p(f, p);
        ModPoly product{1};
        int deg = 0;
        for (const auto& fac : factors) {
          ok = ok && oracle::is_irreducible_bruteforce(fac.factor, p);
          for (int k = 0; k < fac.multiplicity; ++k) product = polymod::mul(product, fac.factor, p);
          deg += fac.degree * fac.multiplicity;
        }
        ok = ok && deg == 5 && product == polymod::monic(reduce_mod_p(f, p), p);
        ++trials;
      }
    }
    checks.add("factorization: irreducible factors multiply back", ok, {{"trials", trials}});
  }
  {
    const auto& z5 = catalog.find("zeta5");
    bool ok = true;
    for (std::size_t i = 0; i < shared_sieve().prefix_length(1e4); ++i) {
      const std::uint64_t p = shared_sieve().primes()[i];
      if (p == 5) continue;
      ok = ok && frobenius_data(z5, p).frobenius_order == static_cast<int>(multiplicative_order(p, 5));
    }
    checks.add("zeta5 Frobenius order = order of p mod 5", ok);
  }
  return checks.finish("groups_fields");
}

json artin_coeffs(const Catalog& catalog, const SelftestOptions&) {
  Checks checks;
  bool series_ok = true;
  for (int g : {1, 2, 3, 4, 6, 12})
    for (int d = 1; d <= g; ++d) {
      if (g % d) continue;
      const auto ours = complete_homogeneous(make_root_multiset(d, g), 12);
      const auto ref = oracle::euler_series_by_division(d, g, 12);
      for (int k = 0; k <= 12; ++k) series_ok = series_ok && ours[k] == ref[k];
    }
  checks.add("Euler factor series vs long division", series_ok);

  const auto& gauss = catalog.find("gaussian");
  bool kron = true;
  for (std::uint64_t n = 1; n <= 2000; n += 2) kron = kron && coeff_a_K(gauss, n) == oracle::kronecker(-4, n);
  checks.add("a_K(n) = Kronecker(-4, n), odd n <= 2000", kron);

  double worst = 0;
  const std::vector<std::string> names{"gaussian", "cyclic7", "zeta5", "s3_23"};
  for (const auto& a : names)
    for (const auto& b : names) {
      const auto& K = catalog.find(a);
      const auto& K2 = catalog.find(b);
      for (std::uint64_t p : {3, 11, 13, 29}) {
        if (K.divides_disc(p) || K2.divides_disc(p)) continue;
        for (int j = 0; j <= 4; ++j) {
          const double ours = coeff_a_KxK_prime(K, K2, p, j).convert_to<double>();
          const auto ref = oracle::rankin_selberg_bruteforce(local_roots(K, p).roots(), local_roots(K2, p).roots(), j);
          worst = std::max(worst, std::abs(ours - ref) / std::max(1.0, std::abs(ref)));
        }
      }
    }
  checks.add("Cauchy identity vs Euler product", worst <= 1e-9, {{"max_rel_error", worst}});
  for (const auto& f : catalog.fields) {
    const double v = mertens_partial_sum(f, 0.5, 10'000, shared_sieve());
    checks.add("Mertens bound " + f.name(), v <= std::max(f.m(), 0) / 0.5 + 1e-12, {{"value", v}});
  }
  return checks.finish("artin_coeffs");
}

json large_sieve(const Catalog& catalog, const SelftestOptions& opts) {
  Checks checks;
  std::mt19937_64 rng(opts.seed + 1);
  std::uniform_real_distribution<double> unit(-1, 1);
  double worst = 0;
  for (int t = 0; t < 5; ++t) {
    DirichletPolynomial poly;
    std::vector<std::pair<std::uint64_t, std::complex<double>>> list;
    for (int k = 0; k < 8; ++k) {
      const std::uint64_t n = 1 + rng() % 60;
      poly[n] = {unit(rng), unit(rng)};
    }
    for (const auto& [n, c] : poly) list.emplace_back(n, c);
    const double ours = msq_integral(poly, 1.0), ref = oracle::msq_quadrature(list, 1.0);
    worst = std::max(worst, std::abs(ours - ref));
  }
  checks.add("msq_integral vs adaptive Simpson", worst <= 1e-8, {{"max_abs_error", worst}});
  const auto& gauss = catalog.find("gaussian");
  const double lhs = mvt_primes_lhs({&gauss}, 2, 20, 1, shared_sieve());
  DirichletPolynomial poly = prime_polynomial(gauss, 2, 20, shared_sieve());
  std::vector<std::pair<std::uint64_t, std::complex<double>>> list(poly.begin(), poly.end());
  const double ref = oracle::msq_quadrature(list, 1.0);
  checks.add("prime mean value Q(i), 2 < p <= 20", std::abs(lhs - ref) <= 1e-6, {{"lhs", lhs}, {"oracle", ref}});
  std::vector<std::vector<std::complex<double>>> M(4, std::vector<std::complex<double>>(6));
  for (auto& row : M)
    for (auto& v : row) v = {unit(rng), unit(rng)};
  const auto [l, r] = duality_top_eigenvalues(M);
  checks.add("duality of top eigenvalues", std::abs(l - r) <= 1e-8 * std::max(1.0, l));
  return checks.finish("large_sieve");
}

json weights(const Catalog&, const SelftestOptions& opts) {
  Checks checks;
  std::mt19937_64 rng(opts.seed + 2);
  std::uniform_real_distribution<double> unit(-1, 1);
  const WeightParams params(std::exp(2.0), 0.2);
  auto f = [&](double t) { return f_eval(params, t); };
  const auto bp = params.breakpoints();
  const std::vector<double> breaks(bp.begin(), bp.end());
  double worst = 0;
  for (int i = 0; i < 20; ++i) {
    std::complex<double> z(unit(rng) * 20, unit(rng) * 20);
    const auto ours = laplace_F(params, z), ref = oracle::laplace_quadrature(f, breaks, z);
    worst = std::max(worst, std::abs(ours - ref) / std::max(1.0, std::abs(ref)));
  }
  checks.add("F vs quadrature", worst <= 1e-10, {{"max_rel_error", worst}});
  const double t = 1 + params.a() / 2;
  const double inv = oracle::fourier_inversion([&](std::complex<double> z) { return laplace_F(params, z); }, t);
  checks.add("f vs Fourier inversion at 1 + a/2", std::abs(inv - f_eval(params, t)) <= 1e-8,
             {{"f", f_eval(params, t)}, {"inversion", inv}});
  const double F0 = laplace_F(params, 0).real();
  checks.add("1/2 < F(0) < 3/4", F0 > 0.5 && F0 < 0.75, {{"F0", F0}});
  bool iv = true, v = true;
  for (int i = 0; i < 200; ++i) {
    iv = iv && check_bound_iv(params, {0.01 + 1.5 * (unit(rng) + 1), 500 * unit(rng)}).pass;
    v = v && check_bound_v(params, 1000 * unit(rng)).pass;
  }
  checks.add("bound (iv) on samples", iv);
  checks.add("bound (v) on samples", v);
  return checks.finish("weights");
}

json zfr(const Catalog&, const SelftestOptions& opts) {
  Checks checks;
  std::mt19937_64 rng(opts.seed + 3);
  std::uniform_real_distribution<double> unit(0, 1);
  double worst = 0;
  for (int i = 0; i < 10; ++i) {
    const double logD = 20 * unit(rng), logx = 3 + 60 * unit(rng);
    const int n = 1 + static_cast<int>(rng() % 6);
    const double closed = eta_classical_closed(logD, n, kDefaultC1, kDefaultCEps, logx);
    const double grid = eta_from_delta(classical_zfr(logD, n), logx);
    worst = std::max(worst, std::abs(closed - grid) / grid);
  }
  checks.add("classical closed form vs grid", worst <= 1e-5, {{"max_rel_error", worst}});
  double worst2 = 0;
  for (int i = 0; i < 10; ++i) {
    const double logQ = 1 + 30 * unit(rng), eps = 0.05 + 0.9 * unit(rng), logx = 3 + 1e4 * unit(rng);
    const int m = 1 + static_cast<int>(rng() % 5);
    const auto r = eta_large_zfr_closed(logQ, eps, m, logx);
    const double g1 = oracle::grid_minimum(
        [&](double u) { return large_zfr_phi1(u, logQ, m + 1, kDefaultC1, logx); }, r.U,
        std::max(r.U, large_zfr_phi1(r.U, logQ, m + 1, kDefaultC1, logx)), 100'000);
    const double g2 = oracle::grid_minimum([&](double u) { return large_zfr_phi2(u, logQ, r.delta, logx); }, 0,
                                           std::min(r.U, large_zfr_phi2(0, logQ, r.delta, logx)), 100'000);
    const double grid = std::min(g1, g2);
    worst2 = std::max(worst2, std::abs(r.eta - grid) / grid);
  }
  checks.add("large-ZFR closed form vs grid", worst2 <= 1e-5, {{"max_rel_error", worst2}});
  const double lx = std::log(1e6);
  checks.add("Delta = 1/2 gives (1/2) log x + log 3",
             std::abs(eta_from_delta(ZfrData::constant(0.5), lx) - (lx / 2 + std::log(3.0))) <= 1e-9);
  return checks.finish("zfr");
}

json chebotarev(const Catalog& catalog, const SelftestOptions& opts) {
  Checks checks;
  const auto& gauss = catalog.find("gaussian");
  const auto one = parse_class_selector(gauss, "1");
  const auto count = pi_C_count(gauss, one, 1e5, shared_sieve(), opts.threads).count;
  checks.add("pi_{1}(1e5, Q(i)) vs residue enumeration", count == oracle::count_primes_in_residue(100000, 4, 1),
             {{"count", count}});
  for (const auto& f : catalog.fields) {
    SplittingTable table(f, shared_sieve(), 1e4, opts.threads);
    std::uint64_t total = 0, ram = 0, pi = 0;
    for (const auto& sel : resolvable_selectors(f)) {
      const auto c = pi_C_count(f, table, sel, 1e4);
      total += c.count;
      ram = c.ramified;
      pi = c.pi;
    }
    checks.add("partition identity 1e4 " + f.name(), total + ram == pi);
  }
  const WeightParams params(1e4, 0.1);
  const double psi = psi_weighted_class(gauss, one, params, shared_sieve(), opts.threads);
  double naive = 0;
  for (std::uint64_t n = 2; n <= 11000; ++n) {
    const auto fac = factor_integer(n);
    if (fac.size() != 1 || fac[0].first == 2) continue;
    const auto [p, k] = fac[0];
    // Frob^k trivial iff p = 1 mod 4 or k even.
    if (p % 4 == 1 || k % 2 == 0) naive += std::log(double(p)) * f_eval(params, std::log(double(n)) / std::log(1e4));
  }
  checks.add("psi-tilde vs naive loop", std::abs(psi - naive) <= 1e-9 * naive, {{"psi", psi}, {"naive", naive}});
  const auto adm = is_admissible(build_group("S3"), 1);
  checks.add("S3 transpositions have no automatic certificate", !adm.certificate.has_value());
  return checks.finish("chebotarev");
}

json families(const Catalog&, const SelftestOptions&) {
  Checks checks;
  const auto discs = fundamental_discriminants_up_to(60);
  bool ok = true;
  int pairs = 0;
  for (std::size_t i = 0; i < discs.size(); ++i)
    for (std::size_t j = i + 1; j < discs.size(); ++j) {
      const auto K = make_quadratic_field(discs[i]), K2 = make_quadratic_field(discs[j]);
      const auto c = compositum_disc_check(K, K2);
      ok = ok && c.divides && c.disc_compositum == oracle::biquadratic_discriminant(discs[i], discs[j]);
      ++pairs;
    }
  checks.add("compositum discriminants divide and match subfield product", ok, {{"pairs", pairs}});
  bool sq = true;
  for (std::int64_t n = -3000; n <= 3000; ++n)
    if (n != 0) sq = sq && squarefree_part(n) == oracle::squarefree_part_naive(n);
  checks.add("squarefree part vs naive", sq);
  return checks.finish("families");
}

}  // namespace

const std::vector<std::string>& selftest_modules() {
  static const std::vector<std::string> names{"groups_fields", "artin_coeffs", "large_sieve", "weights",
                                              "zfr",           "chebotarev",   "families"};
  return names;
}

nlohmann::ordered_json run_selftest(const std::string& module, const Catalog& catalog, const SelftestOptions& opts) {
  using Fn = json (*)(const Catalog&, const SelftestOptions&);
  const std::vector<std::pair<std::string, Fn>> table{
      {"groups_fields", groups_fields}, {"artin_coeffs", artin_coeffs}, {"large_sieve", large_sieve},
      {"weights", weights},             {"zfr", zfr},                   {"chebotarev", chebotarev},
      {"families", families}};
  json report;
  report["schema"] = 1;
  report["selftest"] = module;
  report["seed"] = opts.seed;
  json modules = json::array();
  bool pass = true;
  bool found = false;
  for (const auto& [name, fn] : table) {
    if (module != "all" && module != name) continue;
    found = true;
    auto r = fn(catalog, opts);
    pass = pass && r["pass"].get<bool>();
    modules.push_back(std::move(r));
  }
  require(found, ErrorCode::InvalidArgument, "unknown selftest module '" + module + "'");
  report["pass"] = pass;
  report["modules"] = modules;
  return report;
}

}  // namespace cheb
