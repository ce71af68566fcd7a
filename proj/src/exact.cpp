#include "cheb/exact.hpp"

#include <cctype>

#include "cheb/errors.hpp"

namespace cheb {

BigInt bareiss_determinant(std::vector<std::vector<BigInt>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

BigInt parse_bigint(const std::string& text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) negative = text[i++] == '-';
  require(i < text.size(), ErrorCode::InvalidArgument, "empty integer '" + text + "'");
  BigInt value = 0;
  for (; i < text.size(); ++i) {
    require(std::isdigit(static_cast<unsigned char>(text[i])), ErrorCode::InvalidArgument,
            "malformed integer '" + text + "'");
    value = value * 10 + (text[i] - '0');
  }
  return negative ? BigInt(-value) : value;
}

std::uint64_t mod_small(const BigInt& n, std::uint64_t p) {
  BigInt r = n % p;
  if (r < 0) r += p;
  return r.convert_to<std::uint64_t>();
}

}  // namespace cheb
