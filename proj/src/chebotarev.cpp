#include "cheb/chebotarev.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "cheb/errors.hpp"
#include "cheb/parallel.hpp"

namespace cheb {

bool ClassSelector::contains(std::size_t c) const { return std::binary_search(classes.begin(), classes.end(), c); }

ClassSelector parse_class_selector(const FieldDescriptor& field, const std::string& text) {
  const auto& group = field.group();
  ClassSelector sel;
  sel.label = text;
  if (text == "1" || text == "id") {
    sel.classes = {group.class_of(group.identity())};
    return sel;
  }
  auto parse_list = [&](const std::string& body, char sep) {
    std::vector<int> values;
    std::istringstream in(body);
    std::string tok;
    while (std::getline(in, tok, sep)) {
      std::size_t used = 0;
      int v = -1;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      require(used == tok.size() && !tok.empty() && v >= 0, ErrorCode::InvalidArgument,
              "malformed class selector '" + text + "'");
      values.push_back(v);
    }
    require(!values.empty(), ErrorCode::InvalidArgument, "empty class selector '" + text + "'");
    return values;
  };
  if (text.rfind("class:", 0) == 0) {
    for (int v : parse_list(text.substr(6), '+')) {
      require(static_cast<std::size_t>(v) < group.classes().size(), ErrorCode::InvalidArgument,
              "class index " + std::to_string(v) + " out of range for " + group.name());
      sel.classes.push_back(static_cast<std::size_t>(v));
    }
  } else if (text.rfind("type:", 0) == 0) {
    auto parts = parse_list(text.substr(5), ',');
    CycleType type(parts.begin(), parts.end());
    std::sort(type.rbegin(), type.rend());
    const int b = field.block_of_type(type);
    require(b >= 0, ErrorCode::InvalidArgument, "no element of " + group.name() + " has cycle type " + text.substr(5));
    sel.classes = field.type_blocks()[b].classes;
  } else {
    fail(ErrorCode::InvalidArgument, "unknown class selector '" + text + "' (use 1, class:<k> or type:<parts>)");
  }
  std::sort(sel.classes.begin(), sel.classes.end());
  sel.classes.erase(std::unique(sel.classes.begin(), sel.classes.end()), sel.classes.end());
  return sel;
}

std::size_t selector_size(const FiniteGroup& group, const ClassSelector& sel) {
  std::size_t n = 0;
  for (auto c : sel.classes) n += group.classes()[c].size;
  return n;
}

bool is_resolvable(const FieldDescriptor& field, const ClassSelector& sel) {
  for (const auto& block : field.type_blocks()) {
    std::size_t inside = 0;
    for (auto c : block.classes) inside += sel.contains(c);
    if (inside != 0 && inside != block.classes.size()) return false;
  }
  return true;
}

std::vector<ClassSelector> resolvable_selectors(const FieldDescriptor& field) {
  std::vector<ClassSelector> out;
  for (const auto& block : field.type_blocks()) {
    ClassSelector sel;
    sel.classes = block.classes;
    if (block.classes.size() == 1) {
      sel.label = "class:" + std::to_string(block.classes.front());
    } else {
      sel.label = "type:" + format_cycle_type(block.type);
    }
    out.push_back(std::move(sel));
  }
  return out;
}

std::uint64_t pi_count(double x, const PrimeSieve& sieve) { return sieve.count_upto(x); }

ChebotarevCount pi_C_count(const FieldDescriptor& field, const SplittingTable& table, const ClassSelector& sel,
                           double x) {
  require(is_resolvable(field, sel), ErrorCode::AmbiguousClass,
          "selector " + sel.label + " is not determined by factorization types in " + field.group().name());
  require(x <= table.x(), ErrorCode::SieveRangeExceeded, "splitting table does not reach x");
  ChebotarevCount out;
  out.x = x;
  out.selector = sel;
  out.selector_size = selector_size(field.group(), sel);
  out.group_order = field.group().order();
  std::vector<bool> block_in(field.type_blocks().size());
  for (std::size_t b = 0; b < block_in.size(); ++b) block_in[b] = sel.contains(field.type_blocks()[b].classes.front());
  for (std::size_t i = 0; i < table.size() && table.prime(i) <= x; ++i) {
    ++out.pi;
    if (table.ramified(i)) {
      ++out.ramified;
    } else if (block_in[table.block(i)]) {
      ++out.count;
    }
  }
  out.expected = static_cast<double>(out.selector_size) / out.group_order * static_cast<double>(out.pi);
  out.error = static_cast<double>(out.count) - out.expected;
  return out;
}

ChebotarevCount pi_C_count(const FieldDescriptor& field, const ClassSelector& sel, double x, const PrimeSieve& sieve,
                           unsigned threads) {
  require(is_resolvable(field, sel), ErrorCode::AmbiguousClass,
          "selector " + sel.label + " is not determined by factorization types in " + field.group().name());
  SplittingTable table(field, sieve, x, threads);
  return pi_C_count(field, table, sel, x);
}

AdmissibilityResult is_admissible(const FiniteGroup& group, std::size_t class_index, bool strong_artin) {
  require(class_index < group.classes().size(), ErrorCode::InvalidArgument, "class index out of range");
  const auto& C = group.classes()[class_index].members;
  const ElementSet G = group.all_elements();

  std::vector<ElementSet> candidates;
  ElementSet trivial;
  trivial.set(group.identity());
  candidates.push_back(trivial);
  candidates.push_back(G);
  for (std::size_t g = 0; g < group.order(); ++g)
    if (C.test(g)) candidates.push_back(group.cyclic_subgroup(static_cast<ElementId>(g)));
  for (const auto& h : group.subgroups()) candidates.push_back(h);

  AdmissibilityResult result;
  std::vector<std::string> seen;
  for (const auto& H : candidates) {
    const std::string key = H.to_string();
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
    seen.push_back(key);
    const ElementSet meet = H & C;
    if (meet.none()) continue;
    const bool whole = H == G;
    std::string ii, iii;
    bool conditional = false;
    if (group.is_abelian(H)) {
      ii = "H abelian (class field theory)";
    } else if (whole && strong_artin) {
      ii = "Artin holomorphy asserted for G";
      conditional = true;
    }
    if (whole) {
      iii = "H = G";
    } else if (group.is_normal(H)) {
      iii = "H normal (Aramata-Brauer)";
    }
    if (!ii.empty() && !iii.empty()) {
      AdmissibilityCertificate cert;
      cert.class_index = class_index;
      cert.subgroup = H;
      cert.subgroup_order = H.count();
      for (std::size_t g = 0; g < group.order(); ++g)
        if (meet.test(g)) {
          cert.witness = static_cast<ElementId>(g);
          break;
        }
      cert.entire_characters = ii;
      cert.dedekind_quotient = iii;
      cert.conditional = conditional;
      result.certificate = cert;
      result.reasons.clear();
      return result;
    }
    std::string why = "subgroup of order " + std::to_string(H.count()) + ":";
    if (ii.empty()) why += " not abelian";
    if (iii.empty()) why += ii.empty() ? ", not normal" : " not normal";
    if (std::find(result.reasons.begin(), result.reasons.end(), why) == result.reasons.end())
      result.reasons.push_back(why);
  }
  return result;
}

double psi_weighted_class(const FieldDescriptor& field, const ClassSelector& sel, const WeightParams& params,
                          const PrimeSieve& sieve, unsigned threads) {
  const double log_hi = params.support_hi() * params.log_x();
  const double hi = std::exp(log_hi);
  const double lo_log = params.support_lo() * params.log_x();
  const std::size_t n = sieve.prefix_length(std::min(hi, static_cast<double>(sieve.limit())));
  require(hi <= static_cast<double>(sieve.limit()) + 1, ErrorCode::SieveRangeExceeded,
          "weighted sum needs primes up to " + std::to_string(hi));
  const auto& group = field.group();
  const auto& blocks = field.type_blocks();

  // Decision for Frob^k per (block, k): 1 inside, 0 outside, -1 ambiguous.
  constexpr int kMaxPower = 64;
  std::vector<std::vector<int>> decide(blocks.size(), std::vector<int>(kMaxPower + 1, 0));
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (int k = 1; k <= kMaxPower; ++k) {
      int verdict = -2;
      for (auto c : blocks[b].classes) {
        const int in = sel.contains(group.power_class(c, k)) ? 1 : 0;
        verdict = verdict == -2 ? in : (verdict == in ? in : -1);
      }
      decide[b][k] = verdict;
    }

  std::vector<double> partial(block_count(n), 0.0);
  for_each_block(n, threads, [&](std::size_t blk, std::size_t begin, std::size_t end) {
    double s = 0;
    for (std::size_t i = begin; i < end; ++i) {
      const std::uint64_t p = sieve.primes()[i];
      const double logp = std::log(static_cast<double>(p));
      const int max_k = static_cast<int>(log_hi / logp + 1e-12);
      if (max_k < 1) continue;
      const auto data = frobenius_data(field, p);
      if (data.ramified) continue;
      for (int k = std::max(1, static_cast<int>(std::ceil(lo_log / logp - 1e-12))); k <= max_k; ++k) {
        const double t = k * logp / params.log_x();
        const double w = f_eval(params, t);
        if (w == 0) continue;
        const int verdict = decide[data.block][k];
        require(verdict >= 0, ErrorCode::AmbiguousClass,
                "Frobenius power class at p = " + std::to_string(p) + " is not determined for " + sel.label);
        if (verdict == 1) s += logp * w;
      }
    }
    partial[blk] = s;
  });
  double total = 0;
  for (double s : partial) total += s;
  return total;
}

double partial_summation_pi(const std::vector<std::pair<double, double>>& weighted, double X) {
  if (weighted.empty() || X < 2) return 0;
  double total = 0, S = 0;
  for (std::size_t i = 0; i < weighted.size(); ++i) {
    const double n = weighted[i].first;
    require(n >= 2 && (i == 0 || n >= weighted[i - 1].first), ErrorCode::InvalidArgument,
            "weighted data must be ascending and start at n >= 2");
    if (n > X) break;
    S += weighted[i].second;
    const double next = (i + 1 < weighted.size() && weighted[i + 1].first <= X) ? weighted[i + 1].first : X;
    total += S * (1 / std::log(n) - 1 / std::log(next));
  }
  return total + S / std::log(X);
}

namespace {

// Norm exponents f of the primes of K^H above p whose Frobenius lies in C_H,
// when Frob_p = sigma.
std::vector<int> fixed_field_degrees(const FiniteGroup& group, const ElementSet& H, const ElementSet& CH,
                                     ElementId sigma) {
  const ElementSet D = group.cyclic_subgroup(sigma);
  std::vector<ElementSet> cosets;
  std::vector<int> fs;
  for (std::size_t t = 0; t < group.order(); ++t) {
    const auto tau = static_cast<ElementId>(t);
    ElementSet coset;
    for (std::size_t h = 0; h < group.order(); ++h) {
      if (!H.test(h)) continue;
      for (std::size_t d = 0; d < group.order(); ++d)
        if (D.test(d)) coset.set(group.mul(group.mul(static_cast<ElementId>(h), tau), static_cast<ElementId>(d)));
    }
    if (std::find(cosets.begin(), cosets.end(), coset) != cosets.end()) continue;
    cosets.push_back(coset);
    const int f = static_cast<int>(coset.count() / H.count());
    const ElementId frob = group.power(group.conjugate(sigma, tau), f);
    require(H.test(frob), ErrorCode::InvalidGroupTable, "Frobenius power left the subgroup");
    if (CH.test(frob)) fs.push_back(f);
  }
  std::sort(fs.begin(), fs.end());
  return fs;
}

}  // namespace

BaseChangeResult base_change_compare(const FieldDescriptor& field, std::size_t class_index, const ElementSet& H,
                                     double x, const PrimeSieve& sieve) {
  const auto& group = field.group();
  require(class_index < group.classes().size(), ErrorCode::InvalidArgument, "class index out of range");
  require(group.is_subgroup(H), ErrorCode::InvalidArgument, "H is not a subgroup");
  require(x >= 2, ErrorCode::ParameterOutOfRange, "x must be at least 2");
  const auto& C = group.classes()[class_index];
  const ElementSet meet = C.members & H;
  require(meet.any(), ErrorCode::InvalidArgument, "C does not meet H");

  BaseChangeResult r;
  r.class_index = class_index;
  for (std::size_t g = 0; g < group.order(); ++g)
    if (meet.test(g)) {
      r.witness = static_cast<ElementId>(g);
      break;
    }
  ElementSet CH;
  for (std::size_t h = 0; h < group.order(); ++h)
    if (H.test(h)) CH.set(group.conjugate(r.witness, static_cast<ElementId>(h)));
  r.class_size = C.size;
  r.subgroup_order = H.count();
  r.h_class_size = CH.count();

  ClassSelector sel{{class_index}, "class:" + std::to_string(class_index)};
  const auto count = pi_C_count(field, sel, x, sieve);
  r.pi_C = count.count;

  const auto& blocks = field.type_blocks();
  std::vector<std::optional<std::vector<int>>> per_block(blocks.size());
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    std::optional<std::vector<int>> common;
    bool consistent = true;
    for (auto c : blocks[b].classes) {
      auto fs = fixed_field_degrees(group, H, CH, group.classes()[c].representative);
      if (!common) common = fs;
      else if (*common != fs) consistent = false;
    }
    if (consistent) per_block[b] = common;
  }
  const std::size_t n = sieve.prefix_length(x);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t p = sieve.primes()[i];
    const auto data = frobenius_data(field, p);
    if (data.ramified) continue;
    require(per_block[data.block].has_value(), ErrorCode::UnsupportedSubgroupAction,
            "primes of the fixed field above " + std::to_string(p) + " are not determined by the factorization type");
    for (int f : *per_block[data.block])
      if (f * std::log(static_cast<double>(p)) <= std::log(x) + 1e-12) ++r.pi_C_H;
  }
  const double G = static_cast<double>(group.order());
  r.scaled = r.class_size / G * (static_cast<double>(r.subgroup_order) / r.h_class_size) * r.pi_C_H;
  r.lhs = std::abs(static_cast<double>(r.pi_C) - r.scaled);
  r.rhs_bound = r.class_size / G * (G * std::sqrt(x) + 2 / std::log(2.0) * field.log_abs_disc());
  r.pass = r.lhs <= r.rhs_bound;
  return r;
}

FlexiErrorReport flexi_error_report(const FieldDescriptor& field, const ClassSelector& sel, double x,
                                    const PrimeSieve& sieve, const EtaProfile& eta_K, const EtaProfile& eta_Q) {
  const double L = std::log(x);
  FlexiErrorReport rep;
  rep.x = x;
  rep.eta_K = eta_K.eta(L);
  rep.eta_Q = eta_Q.eta(L);
  const double factor_K = error_factor(rep.eta_K, L, field.log_abs_disc());  // checks the domain
  rep.count = pi_C_count(field, sel, x, sieve);
  rep.actual_error = std::abs(rep.count.error);
  const double share = static_cast<double>(rep.count.selector_size) / rep.count.group_order;
  const double tail = share * std::pow(x, 0.75) / L;
  rep.li_shape = share * x / L * (factor_K + std::exp(-rep.eta_Q / 8)) + tail;
  rep.li_ratio = rep.actual_error / rep.li_shape;
  if (sel.classes.size() == 1) {
    auto adm = is_admissible(field.group(), sel.classes.front(), field.strong_artin());
    if (adm.certificate) {
      rep.certificate = adm.certificate;
      rep.pi_conditional = adm.certificate->conditional;
      rep.pi_shape = share * x / L * factor_K + tail;
      rep.pi_ratio = rep.actual_error / *rep.pi_shape;
    }
  }
  return rep;
}

}  // namespace cheb
