#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cheb/fields.hpp"
#include "cheb/primes.hpp"
#include "cheb/weights.hpp"
#include "cheb/zfr.hpp"

namespace cheb {

/// A set of conjugacy classes (a single class or a union).
struct ClassSelector {
  std::vector<std::size_t> classes;  // sorted, distinct
  std::string label;

  bool contains(std::size_t c) const;
};

/// "1" or "id" (identity class), "class:<k>[+<k>...]" (class indices), or
/// "type:<parts>" (all classes with that cycle type, e.g. "type:2,1").
ClassSelector parse_class_selector(const FieldDescriptor& field, const std::string& text);
/// Size of the union of the selected classes.
std::size_t selector_size(const FiniteGroup& group, const ClassSelector& sel);
/// True when the selector is a union of whole factorization-type blocks.
bool is_resolvable(const FieldDescriptor& field, const ClassSelector& sel);
/// One selector per type block: the exact class when the type pins it
/// down, otherwise the union of the classes of that type.
std::vector<ClassSelector> resolvable_selectors(const FieldDescriptor& field);

std::uint64_t pi_count(double x, const PrimeSieve& sieve);

struct ChebotarevCount {
  double x = 0;
  ClassSelector selector;
  std::size_t selector_size = 0;
  std::size_t group_order = 0;
  std::uint64_t count = 0;
  std::uint64_t pi = 0;
  std::uint64_t ramified = 0;
  double expected = 0;  // |C|/|G| pi(x)
  double error = 0;     // count - expected
};

/// Throws AmbiguousClass when the selector is not resolvable.
ChebotarevCount pi_C_count(const FieldDescriptor& field, const SplittingTable& table, const ClassSelector& sel,
                           double x);
ChebotarevCount pi_C_count(const FieldDescriptor& field, const ClassSelector& sel, double x, const PrimeSieve& sieve,
                           unsigned threads = 1);

struct AdmissibilityCertificate {
  std::size_t class_index = 0;
  ElementSet subgroup;
  std::size_t subgroup_order = 0;
  ElementId witness = 0;            // element of H meeting C
  std::string entire_characters;    // justification for condition (ii)
  std::string dedekind_quotient;    // justification for condition (iii)
  bool conditional = false;         // relies on the strong-Artin catalog flag
};

struct AdmissibilityResult {
  std::optional<AdmissibilityCertificate> certificate;
  std::vector<std::string> reasons;  // why candidate subgroups failed, when none is found
};

/// Searches {1}, G, <g> for g in C, then every subgroup by increasing order.
AdmissibilityResult is_admissible(const FiniteGroup& group, std::size_t class_index, bool strong_artin = false);

/// sum over unramified p^k with Frob^k in the selector of log p f(log p^k / log x).
/// The sieve must reach x^{1 + eps/log x}.
double psi_weighted_class(const FieldDescriptor& field, const ClassSelector& sel, const WeightParams& params,
                          const PrimeSieve& sieve, unsigned threads = 1);

/// Abel summation S(X)/log X + int_2^X S(t)/(t log^2 t) dt for the step
/// function S(t) = sum_{n <= t} weight(n). Points must be ascending, n >= 2.
double partial_summation_pi(const std::vector<std::pair<double, double>>& weighted, double X);

struct BaseChangeResult {
  std::size_t class_index = 0;
  ElementId witness = 0;
  std::size_t class_size = 0;
  std::size_t subgroup_order = 0;
  std::size_t h_class_size = 0;
  std::uint64_t pi_C = 0;
  std::uint64_t pi_C_H = 0;  // prime ideals of the fixed field counted with norm <= x
  double scaled = 0;         // |C|/|G| |H|/|C_H| pi_C_H
  double lhs = 0;
  double rhs_bound = 0;
  bool pass = false;
};

/// Exact two-sided count for |pi_C - (|C|/|G|)(|H|/|C_H|) pi_{C_H}(x, K/K^H)|.
/// UnsupportedSubgroupAction when the Frobenius type does not determine the
/// count over K^H; AmbiguousClass when C itself is not resolvable.
BaseChangeResult base_change_compare(const FieldDescriptor& field, std::size_t class_index, const ElementSet& H,
                                     double x, const PrimeSieve& sieve);

struct FlexiErrorReport {
  double x = 0;
  ChebotarevCount count;
  double actual_error = 0;
  double eta_K = 0;
  double eta_Q = 0;
  double li_shape = 0;
  double li_ratio = 0;
  std::optional<double> pi_shape;
  std::optional<double> pi_ratio;
  bool pi_conditional = false;
  std::optional<AdmissibilityCertificate> certificate;
};

/// DomainTooSmall when x < (log eD_K)^4.
FlexiErrorReport flexi_error_report(const FieldDescriptor& field, const ClassSelector& sel, double x,
                                    const PrimeSieve& sieve, const EtaProfile& eta_K, const EtaProfile& eta_Q);

}  // namespace cheb
