#include "cheb/oracles/oracles.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <stdexcept>

namespace cheb::oracle {

namespace {

bool is_prime_trial(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t pmod(std::int64_t a, std::uint64_t p) {
  const auto sp = static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(((a % sp) + sp) % sp);
}

}  // namespace

std::vector<std::uint64_t> trial_division_primes(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 2; n <= limit; ++n)
    if (is_prime_trial(n)) out.push_back(n);
  return out;
}

std::vector<std::uint64_t> segmented_primes(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  const auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit))) + 1;
  std::vector<std::uint64_t> base;
  std::vector<char> small(root + 1, 1);
  for (std::uint64_t i = 2; i <= root; ++i) {
    if (!small[i]) continue;
    base.push_back(i);
    for (std::uint64_t j = i * i; j <= root; j += i) small[j] = 0;
  }
  constexpr std::uint64_t kSegment = 1 << 15;
  std::vector<char> seg(kSegment);
  for (std::uint64_t lo = 2; lo <= limit; lo += kSegment) {
    const std::uint64_t hi = std::min(limit, lo + kSegment - 1);
    std::fill(seg.begin(), seg.end(), 1);
    for (std::uint64_t p : base) {
      if (p * p > hi) break;
      std::uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
      for (std::uint64_t j = start; j <= hi; j += p) seg[j - lo] = 0;
    }
    for (std::uint64_t n = lo; n <= hi; ++n)
      if (seg[n - lo]) out.push_back(n);
  }
  return out;
}

std::uint64_t segmented_prime_count(std::uint64_t limit) { return segmented_primes(limit).size(); }

std::vector<std::uint64_t> roots_mod_p(const std::vector<std::int64_t>& f, std::uint64_t p) {
  std::vector<std::uint64_t> roots;
  for (std::uint64_t x = 0; x < p; ++x) {
    std::uint64_t v = 0;
    for (std::size_t i = f.size(); i-- > 0;) v = (v * x + pmod(f[i], p)) % p;
    if (v == 0) roots.push_back(x);
  }
  return roots;
}

bool is_irreducible_bruteforce(const std::vector<std::uint64_t>& f, std::uint64_t p) {
  const int n = static_cast<int>(f.size()) - 1;
  if (n <= 0) return false;
  if (n == 1) return true;
  for (int d = 1; 2 * d <= n; ++d) {
    // Enumerate monic g of degree d: p^d choices of lower coefficients.
    std::uint64_t total = 1;
    for (int i = 0; i < d; ++i) total *= p;
    for (std::uint64_t code = 0; code < total; ++code) {
      std::vector<std::uint64_t> g(d + 1);
      std::uint64_t c = code;
      for (int i = 0; i < d; ++i) {
        g[i] = c % p;
        c /= p;
      }
      g[d] = 1;
      std::vector<std::uint64_t> r = f;
      for (int k = n - d; k >= 0; --k) {
        const std::uint64_t q = r[k + d];
        if (!q) continue;
        for (int j = 0; j <= d; ++j) r[k + j] = (r[k + j] + (p - q) * g[j] % p) % p;
      }
      bool zero = true;
      for (int i = 0; i < d; ++i) zero = zero && r[i] == 0;
      if (zero) return false;
    }
  }
  return true;
}

int kronecker(std::int64_t D, std::uint64_t n) {
  if (n == 0) return (D == 1 || D == -1) ? 1 : 0;
  int result = 1;
  while (n % 2 == 0) {
    n /= 2;
    const std::int64_t r = ((D % 8) + 8) % 8;
    if (r == 0 || r == 2 || r == 4 || r == 6) return 0;
    if (r == 3 || r == 5) result = -result;
  }
  // Jacobi symbol (D/n) for odd n by reciprocity.
  std::uint64_t a = pmod(D, n), m = n;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      if (m % 8 == 3 || m % 8 == 5) result = -result;
    }
    std::swap(a, m);
    if (a % 4 == 3 && m % 4 == 3) result = -result;
    a %= m;
  }
  return m == 1 ? result : 0;
}

std::vector<std::int64_t> euler_series_by_division(int d, int g, int N) {
  // Denominator (1 - T^d)^{g/d} expanded, numerator 1 - T.
  std::vector<std::int64_t> den(N + 1, 0);
  den[0] = 1;
  for (int r = 0; r < g / d; ++r)
    for (int k = N; k >= d; --k) den[k] -= den[k - d];
  std::vector<std::int64_t> num(N + 1, 0);
  num[0] = 1;
  if (N >= 1) num[1] = -1;
  std::vector<std::int64_t> q(N + 1, 0);
  for (int k = 0; k <= N; ++k) {
    std::int64_t s = num[k];
    for (int i = 1; i <= k; ++i) s -= den[i] * q[k - i];
    q[k] = s;  // den[0] = 1
  }
  return q;
}

std::complex<double> rankin_selberg_bruteforce(const std::vector<std::complex<double>>& a,
                                               const std::vector<std::complex<double>>& b, int j) {
  std::vector<std::complex<double>> series(j + 1, 0.0);
  series[0] = 1.0;
  for (const auto& x : a)
    for (const auto& y : b) {
      const std::complex<double> z = x * y;
      // Multiply by 1/(1 - zT): s_k += z s_{k-1}, ascending.
      for (int k = 1; k <= j; ++k) series[k] += z * series[k - 1];
    }
  return series[j];
}

std::vector<std::size_t> class_sizes_bruteforce(const std::vector<std::vector<int>>& generators) {
  using Perm = std::vector<int>;
  const std::size_t n = generators.front().size();
  auto compose = [](const Perm& a, const Perm& b) {
    Perm c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
    return c;
  };
  auto inverse = [](const Perm& a) {
    Perm c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[a[i]] = static_cast<int>(i);
    return c;
  };
  Perm id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = static_cast<int>(i);
  std::set<Perm> elems{id};
  std::vector<Perm> queue{id};
  for (std::size_t q = 0; q < queue.size(); ++q)
    for (const auto& g : generators) {
      Perm h = compose(queue[q], g);
      if (elems.insert(h).second) queue.push_back(h);
    }
  std::set<Perm> done;
  std::vector<std::size_t> sizes;
  for (const auto& x : elems) {
    if (done.count(x)) continue;
    std::set<Perm> cls;
    for (const auto& g : elems) cls.insert(compose(compose(g, x), inverse(g)));
    done.insert(cls.begin(), cls.end());
    sizes.push_back(cls.size());
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

std::vector<std::vector<int>> subgroups_bruteforce(const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  if (n > 16) throw std::invalid_argument("subgroups_bruteforce supports |G| <= 16");
  int e = 0;
  for (int a = 0; a < n; ++a) {
    bool ok = true;
    for (int b = 0; b < n; ++b) ok = ok && table[a][b] == b;
    if (ok) e = a;
  }
  std::vector<std::vector<int>> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (!(mask >> e & 1)) continue;
    bool closed = true;
    for (int a = 0; a < n && closed; ++a)
      for (int b = 0; b < n && closed; ++b)
        if ((mask >> a & 1) && (mask >> b & 1) && !(mask >> table[a][b] & 1)) closed = false;
    if (!closed) continue;
    std::vector<int> members;
    for (int a = 0; a < n; ++a)
      if (mask >> a & 1) members.push_back(a);
    out.push_back(members);
  }
  return out;
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol) {
  auto simpson = [&](double fa, double fm, double fb, double h) { return h / 6 * (fa + 4 * fm + fb); };
  std::function<double(double, double, double, double, double, double, double, int)> rec =
      [&](double lo, double hi, double flo, double fmid, double fhi, double whole, double eps, int depth) {
        const double mid = (lo + hi) / 2;
        const double lm = (lo + mid) / 2, rm = (mid + hi) / 2;
        const double flm = f(lm), frm = f(rm);
        const double left = simpson(flo, flm, fmid, mid - lo), right = simpson(fmid, frm, fhi, hi - mid);
        if (depth <= 0 || std::abs(left + right - whole) <= 15 * eps)
          return left + right + (left + right - whole) / 15;
        return rec(lo, mid, flo, flm, fmid, left, eps / 2, depth - 1) +
               rec(mid, hi, fmid, frm, fhi, right, eps / 2, depth - 1);
      };
  const double fa = f(a), fb = f(b), fm = f((a + b) / 2);
  return rec(a, b, fa, fm, fb, simpson(fa, fm, fb, b - a), tol, 50);
}

double msq_quadrature(const std::vector<std::pair<std::uint64_t, std::complex<double>>>& poly, double T,
                      double tol) {
  auto integrand = [&](double t) {
    std::complex<double> s = 0;
    for (const auto& [n, c] : poly) s += c * std::exp(std::complex<double>(0, -t * std::log(double(n))));
    return std::norm(s);
  };
  const int panels = std::max(8, static_cast<int>(std::ceil(2 * T / 0.25)));
  double total = 0;
  for (int i = 0; i < panels; ++i) {
    const double a = -T + 2 * T * i / panels, b = -T + 2 * T * (i + 1) / panels;
    total += adaptive_simpson(integrand, a, b, tol / panels);
  }
  return total;
}

std::complex<double> laplace_quadrature(const std::function<double(double)>& f, const std::vector<double>& breaks,
                                        std::complex<double> z) {
  using boost::math::quadrature::gauss_kronrod;
  double re = 0, im = 0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double a = breaks[i], b = breaks[i + 1];
    if (b <= a) continue;
    re += gauss_kronrod<double, 61>::integrate(
        [&](double t) { return f(t) * std::real(std::exp(-z * t)); }, a, b, 10, 1e-14);
    im += gauss_kronrod<double, 61>::integrate(
        [&](double t) { return f(t) * std::imag(std::exp(-z * t)); }, a, b, 10, 1e-14);
  }
  return {re, im};
}

double fourier_inversion(const std::function<std::complex<double>(std::complex<double>)>& F, double t, double W) {
  using boost::math::quadrature::gauss;
  const double width = 0.5;
  const int panels = static_cast<int>(std::ceil(W / width));
  double total = 0;
  for (int i = 0; i < panels; ++i) {
    const double a = i * width, b = (i + 1) * width;
    total += gauss<double, 20>::integrate(
        [&](double w) { return std::real(F({0.0, w}) * std::exp(std::complex<double>(0, w * t))); }, a, b);
  }
  return total / std::numbers::pi;
}

double grid_minimum(const std::function<double(double)>& g, double lo, double hi, int points) {
  double best = g(lo);
  for (int i = 1; i < points; ++i) best = std::min(best, g(lo + (hi - lo) * i / (points - 1)));
  return best;
}

std::uint64_t count_primes_in_residue(std::uint64_t x, std::uint64_t q, std::uint64_t r) {
  std::uint64_t count = 0;
  for (std::uint64_t n = r % q; n <= x; n += q)
    if (is_prime_trial(n)) ++count;
  return count;
}

std::int64_t squarefree_part_naive(std::int64_t n) {
  if (n == 0) throw std::invalid_argument("zero");
  std::int64_t m = n;
  for (std::int64_t d = 2; d * d <= (m < 0 ? -m : m); ++d)
    while (m % (d * d) == 0) m /= d * d;
  return m;
}

std::int64_t biquadratic_discriminant(std::int64_t d1, std::int64_t d2) {
  auto disc = [](std::int64_t s) {
    s = squarefree_part_naive(s);
    return ((s % 4) + 4) % 4 == 1 ? s : 4 * s;
  };
  return disc(d1) * disc(d2) * disc(d1 * d2);
}

}  // namespace cheb::oracle
