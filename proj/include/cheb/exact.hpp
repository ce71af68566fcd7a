#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace cheb {

using BigInt = boost::multiprecision::cpp_int;

/// Fraction-free Gaussian elimination; exact for square integer matrices.
BigInt bareiss_determinant(std::vector<std::vector<BigInt>> a);

/// Base-10 parse with optional sign; throws InvalidArgument on junk.
BigInt parse_bigint(const std::string& text);

std::uint64_t mod_small(const BigInt& n, std::uint64_t p);

}  // namespace cheb
