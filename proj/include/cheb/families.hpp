#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cheb/chebotarev.hpp"
#include "cheb/fields.hpp"

namespace cheb {

enum class IntersectionRule { QuadraticEquality, ResolventDiscriminant, SimpleGroup, ExplicitPairs };

std::string intersection_rule_name(IntersectionRule rule);

/// Default rule for a group tag; nullopt when no rule is known.
std::optional<IntersectionRule> default_intersection_rule(const FiniteGroup& group);

struct Family {
  std::vector<const FieldDescriptor*> fields;  // all with the same group tag
  BigInt Q;
  IntersectionRule rule = IntersectionRule::ExplicitPairs;
  std::set<std::pair<std::string, std::string>> explicit_pairs;  // nontrivially intersecting names

  /// Members with |D_K| <= Q.
  std::vector<const FieldDescriptor*> members() const;
};

/// Builds a family with the group's default rule. Throws InvalidArgument on
/// mixed group tags, UndecidableIntersectionRule when no rule applies and no
/// explicit pairs are given.
Family make_family(std::vector<const FieldDescriptor*> fields, const BigInt& Q,
                   std::set<std::pair<std::string, std::string>> explicit_pairs = {});

/// Whether K and K' share a subfield other than Q under the family's rule.
bool intersects_nontrivially(const Family& family, const FieldDescriptor& K, const FieldDescriptor& K2);

std::size_t intersection_multiplicity(const Family& family);

/// Squarefree part with sign; IntegerTooLarge above 10^12 in absolute value.
std::int64_t squarefree_part(const BigInt& n);
std::int64_t resolvent_square_class(const FieldDescriptor& field);

bool is_fundamental_discriminant(std::int64_t D);
/// Fundamental discriminant of Q(sqrt(s)) for squarefree s != 1.
std::int64_t fundamental_discriminant_of(std::int64_t squarefree);
/// Field Q(sqrt(D)) with defining polynomial x^2 - x - (D-1)/4 or x^2 - D/4.
FieldDescriptor make_quadratic_field(std::int64_t D);
/// Fundamental discriminants with 0 < |D| <= bound, ordered by |D| then sign.
std::vector<std::int64_t> fundamental_discriminants_up_to(std::int64_t bound);

struct CompositumCheck {
  BigInt d1, d2, d3;
  BigInt disc_compositum;  // d1 d2 d3
  bool divides = false;            // D_{KK'} | d1^2 d2^2
  bool conductor_divides = false;  // D_{KK'}/(d1 d2) | d1 d2
};

/// NotQuadratic unless both fields are quadratic; EqualFields when equal.
CompositumCheck compositum_disc_check(const FieldDescriptor& K, const FieldDescriptor& K2);

struct FieldError {
  std::string name;
  std::string worst_selector;
  double max_error = 0;
};

struct AverageErrorReport {
  double x = 0;
  std::size_t size = 0;
  std::size_t multiplicity = 0;
  double avg_error = 0;
  std::vector<FieldError> per_field;
  double log_multiplicity_diagnostic = 0;  // log(m_F Q^eps / #F)
  double exceptional_fraction = 0;         // share with max error above the threshold
};

/// (1/#F(Q)) sum_K max_C |pi_C - |C|/|G| pi(x)| over resolvable selectors.
AverageErrorReport avg_cheb_error(const Family& family, double x, const PrimeSieve& sieve, double eps = 0.1,
                                  double error_threshold = INFINITY);

}  // namespace cheb
