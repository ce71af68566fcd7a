#include "cheb/fields.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <mutex>
#include <sstream>

#include "cheb/errors.hpp"
#include "cheb/parallel.hpp"
#include "cheb/polymod.hpp"

namespace cheb {

namespace {

double log_abs(const BigInt& n) {
  BigInt a = abs(n);
  if (a == 0) return -INFINITY;
  const auto bits = msb(a);
  if (bits < 60) return std::log(a.convert_to<double>());
  const auto shift = bits - 52;
  return std::log((a >> shift).convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

std::string trim_copy(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(trim_copy(cur));
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

std::shared_ptr<const FiniteGroup> cached_group(const std::string& label) {
  static std::mutex lock;
  static std::map<std::string, std::shared_ptr<const FiniteGroup>> cache;
  std::lock_guard<std::mutex> guard(lock);
  auto it = cache.find(label);
  if (it == cache.end()) it = cache.emplace(label, std::make_shared<const FiniteGroup>(build_group(label))).first;
  return it->second;
}

}  // namespace

BigInt poly_discriminant(const IntegerPolynomial& f) {
  const int n = f.degree();
  require(n >= 1, ErrorCode::InvalidPolynomial, "discriminant needs degree at least 1");
  std::vector<BigInt> a(f.coeffs.begin(), f.coeffs.end());
  std::vector<BigInt> d(n);
  for (int i = 1; i <= n; ++i) d[i - 1] = a[i] * i;
  // Sylvester matrix of f (degree n) and f' (degree n - 1).
  const int size = 2 * n - 1;
  std::vector<std::vector<BigInt>> s(size, std::vector<BigInt>(size, 0));
  for (int r = 0; r < n - 1; ++r)
    for (int k = 0; k <= n; ++k) s[r][r + k] = a[n - k];
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= n - 1; ++k) s[n - 1 + r][r + k] = d[n - 1 - k];
  BigInt res = bareiss_determinant(std::move(s));
  if ((n * (n - 1) / 2) % 2) res = -res;
  return res / a[n];
}

FieldDescriptor::FieldDescriptor(std::string name, IntegerPolynomial poly, std::shared_ptr<const FiniteGroup> group,
                                 BigInt disc_field, bool strong_artin)
    : name_(std::move(name)),
      poly_(std::move(poly)),
      group_(std::move(group)),
      disc_(std::move(disc_field)),
      strong_artin_(strong_artin) {
  require(poly_.degree() >= 1 && poly_.is_monic(), ErrorCode::InvalidPolynomial,
          name_ + ": defining polynomial must be monic of positive degree");
  poly_disc_ = poly_discriminant(poly_);
  require(poly_disc_ != 0, ErrorCode::InvalidPolynomial, name_ + ": defining polynomial is not squarefree");
  require(disc_ != 0, ErrorCode::InvalidField, name_ + ": field discriminant must be nonzero");

  // Every prime ramified in the closure already divides the polynomial discriminant.
  BigInt rest = abs(disc_);
  for (BigInt g = gcd(rest, poly_disc_); g > 1; g = gcd(rest, poly_disc_)) rest /= g;
  require(rest == 1, ErrorCode::InvalidField,
          name_ + ": field discriminant has a prime not dividing the polynomial discriminant");
  log_abs_disc_ = log_abs(disc_);

  const auto deg = static_cast<std::size_t>(poly_.degree());
  if (deg == group_->natural_degree()) {
    regular_ = false;
  } else if (deg == group_->order()) {
    regular_ = true;
  } else {
    fail(ErrorCode::InvalidField, name_ + ": degree " + std::to_string(deg) + " matches neither the natural degree " +
                                      std::to_string(group_->natural_degree()) + " nor the order of " +
                                      group_->name());
  }
  const auto& classes = group_->classes();
  class_block_.assign(classes.size(), -1);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const ElementId rep = classes[c].representative;
    class_types_.push_back(regular_ ? group_->regular_cycle_type(rep)
                                    : cycle_type(group_->natural_permutation(rep)));
    int b = block_of_type(class_types_.back());
    if (b < 0) {
      blocks_.push_back({class_types_.back(), classes[c].order, {}});
      b = static_cast<int>(blocks_.size()) - 1;
    }
    blocks_[b].classes.push_back(c);
    class_block_[c] = b;
  }
}

int FieldDescriptor::block_of_type(const CycleType& type) const {
  for (std::size_t b = 0; b < blocks_.size(); ++b)
    if (blocks_[b].type == type) return static_cast<int>(b);
  return -1;
}

FieldDescriptor make_field(const std::string& name, const std::vector<std::int64_t>& coeffs,
                           const std::string& group_label, const BigInt& disc, bool strong_artin) {
  return FieldDescriptor(name, IntegerPolynomial{coeffs}, cached_group(group_label), disc, strong_artin);
}

FrobeniusData frobenius_data(const FieldDescriptor& field, std::uint64_t p) {
  FrobeniusData data;
  data.p = p;
  std::optional<CycleType> type;
  if (!field.divides_disc(p)) type = factorization_type_mod_p(field.poly().coeffs, p);
  if (!type) {
    data.ramified = true;
    return data;
  }
  data.factorization_type = *type;
  data.frobenius_order = std::accumulate(type->begin(), type->end(), 1, [](int a, int b) { return std::lcm(a, b); });
  data.block = field.block_of_type(*type);
  require(data.block >= 0, ErrorCode::InvalidField,
          field.name() + ": factorization type " + format_cycle_type(*type) + " mod " + std::to_string(p) +
              " is not a cycle type of " + field.group().name());
  const auto& classes = field.type_blocks()[data.block].classes;
  if (classes.size() == 1) data.class_index = classes.front();
  return data;
}

SplittingTable::SplittingTable(const FieldDescriptor& field, const PrimeSieve& sieve, double x, unsigned threads)
    : primes_(&sieve.primes()), x_(x) {
  const std::size_t n = sieve.prefix_length(x);
  blocks_.assign(n, kRamified);
  for_each_block(n, threads, [&](std::size_t, std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      const auto data = frobenius_data(field, (*primes_)[i]);
      blocks_[i] = data.ramified ? kRamified : static_cast<std::int16_t>(data.block);
    }
  });
}

const FieldDescriptor& Catalog::find(const std::string& name) const {
  for (const auto& f : fields)
    if (f.name() == name) return f;
  fail(ErrorCode::InvalidArgument, "no field named '" + name + "' in the catalog");
}

Catalog parse_catalog(std::istream& in, const std::string& source) {
  Catalog catalog;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim_copy(line);
    if (line.empty()) continue;
    const std::string where = source + ":" + std::to_string(lineno) + ": ";
    auto cols = split(line, '|');
    if (cols.size() != 4 && cols.size() != 5)
      fail(ErrorCode::CatalogParse, where + "expected 4 or 5 '|'-separated columns");
    bool strong = false;
    if (cols.size() == 5) {
      if (cols[4] != "strong_artin") fail(ErrorCode::CatalogParse, where + "unknown flag '" + cols[4] + "'");
      strong = true;
    }
    if (cols[0].empty()) fail(ErrorCode::CatalogParse, where + "empty field name");
    std::vector<std::int64_t> coeffs;
    std::istringstream cs(cols[1]);
    std::string tok;
    while (cs >> tok) {
      try {
        std::size_t used = 0;
        const long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        coeffs.push_back(v);
      } catch (const std::exception&) {
        fail(ErrorCode::CatalogParse, where + "bad coefficient '" + tok + "'");
      }
    }
    if (coeffs.size() < 2) fail(ErrorCode::CatalogParse, where + "polynomial needs degree at least 1");
    BigInt disc;
    try {
      disc = parse_bigint(cols[3]);
    } catch (const Error&) {
      fail(ErrorCode::CatalogParse, where + "bad discriminant '" + cols[3] + "'");
    }
    for (const auto& f : catalog.fields)
      if (f.name() == cols[0]) fail(ErrorCode::CatalogParse, where + "duplicate field name '" + cols[0] + "'");
    try {
      catalog.fields.push_back(make_field(cols[0], coeffs, cols[2], disc, strong));
    } catch (const Error& e) {
      fail(ErrorCode::CatalogParse, where + e.what());
    }
  }
  return catalog;
}

Catalog load_catalog(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorCode::CatalogParse, "cannot open catalog '" + path + "'");
  return parse_catalog(in, path);
}

}  // namespace cheb
