#include "cheb/polymod.hpp"

#include <algorithm>
#include <random>

#include "cheb/errors.hpp"
#include "cheb/primes.hpp"

namespace cheb {

namespace {

void trim(ModPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

}  // namespace

ModPoly reduce_mod_p(const std::vector<std::int64_t>& coeffs, std::uint64_t p) {
  require(p >= 2 && p < (1ULL << 32), ErrorCode::InvalidArgument, "modulus out of range");
  ModPoly f(coeffs.size());
  const auto sp = static_cast<std::int64_t>(p);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    std::int64_t r = coeffs[i] % sp;
    f[i] = static_cast<std::uint64_t>(r < 0 ? r + sp : r);
  }
  trim(f);
  return f;
}

namespace polymod {

int degree(const ModPoly& f) { return static_cast<int>(f.size()) - 1; }

ModPoly mul(const ModPoly& a, const ModPoly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  ModPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  }
  trim(c);
  return c;
}

std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b, std::uint64_t p) {
  require(!b.empty(), ErrorCode::InvalidArgument, "polynomial division by zero");
  ModPoly r = a;
  if (r.size() < b.size()) return {{}, r};
  ModPoly q(r.size() - b.size() + 1, 0);
  const std::uint64_t lead_inv = inv_mod(b.back(), p);
  for (std::size_t k = q.size(); k-- > 0;) {
    const std::uint64_t c = r[k + b.size() - 1] * lead_inv % p;
    q[k] = c;
    if (!c) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[k + j] = (r[k + j] + (p - c) * b[j]) % p;
  }
  trim(q);
  trim(r);
  return {q, r};
}

ModPoly mod(const ModPoly& a, const ModPoly& b, std::uint64_t p) { return divmod(a, b, p).second; }

ModPoly monic(const ModPoly& f, std::uint64_t p) {
  if (f.empty() || f.back() == 1) return f;
  const std::uint64_t inv = inv_mod(f.back(), p);
  ModPoly g(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) g[i] = f[i] * inv % p;
  return g;
}

ModPoly gcd(ModPoly a, ModPoly b, std::uint64_t p) {
  while (!b.empty()) {
    ModPoly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

ModPoly derivative(const ModPoly& f, std::uint64_t p) {
  if (f.size() <= 1) return {};
  ModPoly d(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) d[i - 1] = f[i] * (i % p) % p;
  trim(d);
  return d;
}

ModPoly sub(const ModPoly& a, const ModPoly& b, std::uint64_t p) {
  ModPoly c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const std::uint64_t x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
    c[i] = (x + p - y) % p;
  }
  trim(c);
  return c;
}

ModPoly powmod(ModPoly base, std::uint64_t e, const ModPoly& modulus, std::uint64_t p) {
  ModPoly result = mod({1}, modulus, p);
  base = mod(base, modulus, p);
  while (e) {
    if (e & 1) result = mod(mul(result, base, p), modulus, p);
    e >>= 1;
    if (e) base = mod(mul(base, base, p), modulus, p);
  }
  return result;
}

std::uint64_t eval(const ModPoly& f, std::uint64_t x, std::uint64_t p) {
  std::uint64_t r = 0;
  for (std::size_t i = f.size(); i-- > 0;) r = (r * x + f[i]) % p;
  return r;
}

}  // namespace polymod

namespace {

using namespace polymod;

// f(x) = g(x^p) with every exponent a multiple of p; returns g.
ModPoly pth_root(const ModPoly& f, std::uint64_t p) {
  ModPoly g(f.size() / p + 1, 0);
  for (std::size_t i = 0; i < f.size(); i += p) g[i / p] = f[i];  // a^p = a in F_p
  trim(g);
  return g;
}

void squarefree_decomposition(const ModPoly& f, std::uint64_t p, std::uint64_t scale,
                              std::vector<std::pair<ModPoly, int>>& out) {
  if (degree(f) < 1) return;
  ModPoly fp = derivative(f, p);
  if (fp.empty()) {
    squarefree_decomposition(pth_root(f, p), p, scale * p, out);
    return;
  }
  ModPoly c = gcd(f, fp, p);
  ModPoly w = divmod(f, c, p).first;
  int i = 1;
  while (degree(w) >= 1) {
    ModPoly y = gcd(w, c, p);
    ModPoly fac = monic(divmod(w, y, p).first, p);
    if (degree(fac) >= 1) out.emplace_back(fac, static_cast<int>(i * scale));
    w = y;
    c = divmod(c, y, p).first;
    ++i;
  }
  if (degree(c) >= 1) squarefree_decomposition(pth_root(monic(c, p), p), p, scale * p, out);
}

// Splits squarefree monic f into products of irreducibles of equal degree.
std::vector<std::pair<ModPoly, int>> distinct_degree(ModPoly f, std::uint64_t p) {
  std::vector<std::pair<ModPoly, int>> out;
  const ModPoly x{0, 1};
  ModPoly h = mod(x, f, p);
  for (int i = 1; 2 * i <= degree(f); ++i) {
    h = powmod(h, p, f, p);
    ModPoly g = gcd(f, sub(h, x, p), p);
    if (degree(g) >= 1) {
      out.emplace_back(g, i);
      f = divmod(f, g, p).first;
      h = mod(h, f, p);
    }
  }
  if (degree(f) >= 1) out.emplace_back(monic(f, p), degree(f));
  return out;
}

void equal_degree(const ModPoly& g, int d, std::uint64_t p, std::mt19937_64& rng, std::vector<ModPoly>& out) {
  if (degree(g) == d) {
    out.push_back(g);
    return;
  }
  std::uniform_int_distribution<std::uint64_t> coeff(0, p - 1);
  for (;;) {
    ModPoly a(static_cast<std::size_t>(degree(g)));
    for (auto& c : a) c = coeff(rng);
    while (!a.empty() && a.back() == 0) a.pop_back();
    if (degree(a) < 1) continue;
    ModPoly b;
    if (p == 2) {
      // Trace map a + a^2 + ... + a^(2^(d-1)).
      ModPoly t = mod(a, g, p);
      b = t;
      for (int i = 1; i < d; ++i) {
        t = mod(mul(t, t, p), g, p);
        ModPoly s(std::max(b.size(), t.size()), 0);
        for (std::size_t j = 0; j < s.size(); ++j) s[j] = ((j < b.size() ? b[j] : 0) + (j < t.size() ? t[j] : 0)) % 2;
        while (!s.empty() && s.back() == 0) s.pop_back();
        b = s;
      }
    } else {
      // a^((p^d - 1)/2) = (a^(1 + p + ... + p^(d-1)))^((p - 1)/2)
      ModPoly t = mod(a, g, p), norm = t;
      for (int i = 1; i < d; ++i) {
        t = powmod(t, p, g, p);
        norm = mod(mul(norm, t, p), g, p);
      }
      b = sub(powmod(norm, (p - 1) / 2, g, p), {1}, p);
    }
    ModPoly h = gcd(g, b, p);
    if (degree(h) >= 1 && degree(h) < degree(g)) {
      equal_degree(h, d, p, rng, out);
      equal_degree(divmod(g, h, p).first, d, p, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<ModFactor> factor_poly_mod_p(const std::vector<std::int64_t>& coeffs, std::uint64_t p,
                                         std::uint64_t seed) {
  ModPoly f = monic(reduce_mod_p(coeffs, p), p);
  require(!f.empty(), ErrorCode::InvalidPolynomial, "polynomial vanishes modulo " + std::to_string(p));
  std::mt19937_64 rng(seed ^ (p * 0x9e3779b97f4a7c15ULL));
  std::vector<ModFactor> result;
  std::vector<std::pair<ModPoly, int>> sqf;
  squarefree_decomposition(f, p, 1, sqf);
  for (const auto& [part, mult] : sqf) {
    for (const auto& [block, d] : distinct_degree(part, p)) {
      std::vector<ModPoly> irreducibles;
      equal_degree(block, d, p, rng, irreducibles);
      for (auto& g : irreducibles) result.push_back({monic(g, p), d, mult});
    }
  }
  std::sort(result.begin(), result.end(), [](const ModFactor& a, const ModFactor& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (a.multiplicity != b.multiplicity) return a.multiplicity < b.multiplicity;
    return a.factor < b.factor;
  });
  // Merge equal factors that arrived from different squarefree layers.
  std::vector<ModFactor> merged;
  for (auto& fac : result) {
    auto it = std::find_if(merged.begin(), merged.end(), [&](const ModFactor& m) { return m.factor == fac.factor; });
    if (it == merged.end()) merged.push_back(fac);
    else it->multiplicity += fac.multiplicity;
  }
  return merged;
}

std::optional<CycleType> factorization_type_mod_p(const std::vector<std::int64_t>& coeffs, std::uint64_t p) {
  ModPoly f = reduce_mod_p(coeffs, p);
  if (f.size() != coeffs.size() || f.size() < 2) return std::nullopt;
  f = monic(f, p);
  if (degree(gcd(f, derivative(f, p), p)) >= 1) return std::nullopt;
  CycleType type;
  for (const auto& [block, d] : distinct_degree(f, p))
    for (int k = 0; k < degree(block) / d; ++k) type.push_back(d);
  std::sort(type.rbegin(), type.rend());
  return type;
}

}  // namespace cheb
