#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cheb/groups.hpp"

namespace cheb {

/// Dense polynomial over the field with p elements, constant term first,
/// no trailing zero coefficients (the zero polynomial is empty).
using ModPoly = std::vector<std::uint64_t>;

inline constexpr std::uint64_t kDefaultFactorSeed = 0x5eed'c4eb'07a2'e5ULL;

/// Reduces integer coefficients modulo p (p prime, p < 2^32).
ModPoly reduce_mod_p(const std::vector<std::int64_t>& coeffs, std::uint64_t p);

namespace polymod {
int degree(const ModPoly& f);
ModPoly mul(const ModPoly& a, const ModPoly& b, std::uint64_t p);
/// Returns (quotient, remainder).
std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b, std::uint64_t p);
ModPoly mod(const ModPoly& a, const ModPoly& b, std::uint64_t p);
ModPoly gcd(ModPoly a, ModPoly b, std::uint64_t p);
ModPoly monic(const ModPoly& f, std::uint64_t p);
ModPoly derivative(const ModPoly& f, std::uint64_t p);
ModPoly sub(const ModPoly& a, const ModPoly& b, std::uint64_t p);
ModPoly powmod(ModPoly base, std::uint64_t e, const ModPoly& modulus, std::uint64_t p);
std::uint64_t eval(const ModPoly& f, std::uint64_t x, std::uint64_t p);
}  // namespace polymod

struct ModFactor {
  ModPoly factor;  // monic irreducible
  int degree = 0;
  int multiplicity = 0;
};

/// Complete factorization into monic irreducibles with multiplicities
/// (squarefree decomposition, distinct-degree, then equal-degree
/// splitting). The leading coefficient is discarded. Factors are sorted
/// by (degree, multiplicity, coefficients).
std::vector<ModFactor> factor_poly_mod_p(const std::vector<std::int64_t>& coeffs, std::uint64_t p,
                                         std::uint64_t seed = kDefaultFactorSeed);

/// Degrees of the irreducible factors in nonincreasing order when f mod p
/// is squarefree of full degree, nullopt otherwise. Distinct-degree only.
std::optional<CycleType> factorization_type_mod_p(const std::vector<std::int64_t>& coeffs, std::uint64_t p);

}  // namespace cheb
