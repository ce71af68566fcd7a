#include "cheb/families.hpp"

#include <algorithm>
#include <cmath>

#include "cheb/errors.hpp"

namespace cheb {

namespace {

bool is_symmetric_tag(const std::string& name) { return name.size() == 2 && name[0] == 'S' && name[1] >= '2'; }

bool is_simple_group(const FiniteGroup& group) {
  if (group.order() < 2) return false;
  for (const auto& h : group.subgroups()) {
    const auto k = h.count();
    if (k > 1 && k < group.order() && group.is_normal(h)) return false;
  }
  return true;
}

bool same_field_data(const FieldDescriptor& a, const FieldDescriptor& b) {
  return a.disc_field() == b.disc_field() && a.poly().coeffs == b.poly().coeffs;
}

}  // namespace

std::string intersection_rule_name(IntersectionRule rule) {
  switch (rule) {
    case IntersectionRule::QuadraticEquality: return "quadratic-equality";
    case IntersectionRule::ResolventDiscriminant: return "resolvent-discriminant";
    case IntersectionRule::SimpleGroup: return "simple-group";
    case IntersectionRule::ExplicitPairs: return "explicit-pairs";
  }
  return "unknown";
}

std::optional<IntersectionRule> default_intersection_rule(const FiniteGroup& group) {
  if (group.order() == 2) return IntersectionRule::QuadraticEquality;
  if (is_symmetric_tag(group.name())) return IntersectionRule::ResolventDiscriminant;
  if (is_simple_group(group)) return IntersectionRule::SimpleGroup;
  return std::nullopt;
}

std::vector<const FieldDescriptor*> Family::members() const {
  std::vector<const FieldDescriptor*> out;
  for (const auto* f : fields)
    if (abs(f->disc_field()) <= Q) out.push_back(f);
  return out;
}

Family make_family(std::vector<const FieldDescriptor*> fields, const BigInt& Q,
                   std::set<std::pair<std::string, std::string>> explicit_pairs) {
  require(Q >= 1, ErrorCode::ParameterOutOfRange, "Q must be at least 1");
  Family fam;
  fam.fields = std::move(fields);
  fam.Q = Q;
  fam.explicit_pairs = std::move(explicit_pairs);
  if (fam.fields.empty()) return fam;
  const auto& group = fam.fields.front()->group();
  for (const auto* f : fam.fields)
    require(f->group().name() == group.name(), ErrorCode::InvalidArgument, "family members must share a group tag");
  const auto rule = default_intersection_rule(group);
  if (rule) {
    fam.rule = *rule;
  } else {
    require(!fam.explicit_pairs.empty(), ErrorCode::UndecidableIntersectionRule,
            "no intersection rule for " + group.name() + " and no explicit pairs given");
    fam.rule = IntersectionRule::ExplicitPairs;
  }
  return fam;
}

bool intersects_nontrivially(const Family& family, const FieldDescriptor& K, const FieldDescriptor& K2) {
  if (&K == &K2) return true;
  switch (family.rule) {
    case IntersectionRule::QuadraticEquality:
      return K.disc_field() == K2.disc_field();
    case IntersectionRule::ResolventDiscriminant:
      return resolvent_square_class(K) == resolvent_square_class(K2);
    case IntersectionRule::SimpleGroup:
      if (same_field_data(K, K2)) return true;
      if (K.disc_field() != K2.disc_field()) return false;
      if (family.explicit_pairs.count({K.name(), K2.name()}) || family.explicit_pairs.count({K2.name(), K.name()}))
        return true;
      fail(ErrorCode::UndecidableIntersectionRule,
           K.name() + " and " + K2.name() + " share a discriminant; equality of the fields is not decided");
    case IntersectionRule::ExplicitPairs:
      return family.explicit_pairs.count({K.name(), K2.name()}) || family.explicit_pairs.count({K2.name(), K.name()});
  }
  return false;
}

std::size_t intersection_multiplicity(const Family& family) {
  const auto members = family.members();
  std::size_t best = 0;
  for (const auto* K : members) {
    std::size_t count = 0;
    for (const auto* K2 : members) count += intersects_nontrivially(family, *K, *K2);
    best = std::max(best, count);
  }
  return best;
}

std::int64_t squarefree_part(const BigInt& n) {
  require(n != 0, ErrorCode::InvalidArgument, "squarefree part of 0");
  require(abs(n) <= BigInt(1'000'000'000'000LL), ErrorCode::IntegerTooLarge,
          "squarefree part is supported up to 10^12 in absolute value");
  const std::int64_t v = n.convert_to<std::int64_t>();
  std::int64_t result = v < 0 ? -1 : 1;
  for (auto [p, e] : factor_integer(static_cast<std::uint64_t>(v < 0 ? -v : v)))
    if (e % 2) result *= static_cast<std::int64_t>(p);
  return result;
}

std::int64_t resolvent_square_class(const FieldDescriptor& field) { return squarefree_part(field.poly_disc()); }

bool is_fundamental_discriminant(std::int64_t D) {
  if (D == 0 || D == 1) return false;
  const std::int64_t r = ((D % 4) + 4) % 4;
  if (r == 1) return squarefree_part(D) == D;
  if (r != 0) return false;
  const std::int64_t m = D / 4, rm = ((m % 4) + 4) % 4;
  return (rm == 2 || rm == 3) && squarefree_part(m) == m;
}

std::int64_t fundamental_discriminant_of(std::int64_t s) {
  require(s != 1 && s != 0 && squarefree_part(s) == s, ErrorCode::InvalidArgument,
          std::to_string(s) + " is not a squarefree integer other than 0, 1");
  return ((s % 4) + 4) % 4 == 1 ? s : 4 * s;
}

FieldDescriptor make_quadratic_field(std::int64_t D) {
  require(is_fundamental_discriminant(D), ErrorCode::InvalidArgument,
          std::to_string(D) + " is not a fundamental discriminant");
  std::vector<std::int64_t> coeffs;
  if (((D % 4) + 4) % 4 == 1) coeffs = {-(D - 1) / 4, -1, 1};
  else coeffs = {-D / 4, 0, 1};
  return make_field("quadratic(" + std::to_string(D) + ")", coeffs, "C2", BigInt(D));
}

std::vector<std::int64_t> fundamental_discriminants_up_to(std::int64_t bound) {
  std::vector<std::int64_t> out;
  for (std::int64_t a = 3; a <= bound; ++a)
    for (std::int64_t D : {-a, a})
      if (is_fundamental_discriminant(D)) out.push_back(D);
  return out;
}

CompositumCheck compositum_disc_check(const FieldDescriptor& K, const FieldDescriptor& K2) {
  require(K.poly().degree() == 2 && K.group().order() == 2 && K2.poly().degree() == 2 && K2.group().order() == 2,
          ErrorCode::NotQuadratic, "compositum check needs two quadratic fields");
  require(K.disc_field() != K2.disc_field(), ErrorCode::EqualFields, K.name() + " and " + K2.name() + " are equal");
  CompositumCheck c;
  c.d1 = K.disc_field();
  c.d2 = K2.disc_field();
  c.d3 = fundamental_discriminant_of(squarefree_part(c.d1 * c.d2));
  c.disc_compositum = c.d1 * c.d2 * c.d3;
  const BigInt bound = c.d1 * c.d1 * c.d2 * c.d2;
  c.divides = bound % c.disc_compositum == 0;
  c.conductor_divides = (c.d1 * c.d2) % (c.disc_compositum / (c.d1 * c.d2)) == 0;
  return c;
}

AverageErrorReport avg_cheb_error(const Family& family, double x, const PrimeSieve& sieve, double eps,
                                  double error_threshold) {
  AverageErrorReport rep;
  rep.x = x;
  const auto members = family.members();
  rep.size = members.size();
  if (members.empty()) return rep;
  rep.multiplicity = intersection_multiplicity(family);
  std::size_t exceptional = 0;
  double total = 0;
  for (const auto* K : members) {
    SplittingTable table(*K, sieve, x);
    FieldError fe{K->name(), "", 0};
    for (const auto& sel : resolvable_selectors(*K)) {
      const double err = std::abs(pi_C_count(*K, table, sel, x).error);
      if (err > fe.max_error || fe.worst_selector.empty()) {
        fe.max_error = err;
        fe.worst_selector = sel.label;
      }
    }
    total += fe.max_error;
    exceptional += fe.max_error > error_threshold;
    rep.per_field.push_back(fe);
  }
  rep.avg_error = total / static_cast<double>(rep.size);
  const double logQ = std::log(family.Q.convert_to<double>());
  rep.log_multiplicity_diagnostic =
      std::log(static_cast<double>(rep.multiplicity)) + eps * logQ - std::log(static_cast<double>(rep.size));
  rep.exceptional_fraction = static_cast<double>(exceptional) / static_cast<double>(rep.size);
  return rep;
}

}  // namespace cheb
