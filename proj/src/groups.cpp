#include "cheb/groups.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "cheb/errors.hpp"

namespace cheb {

namespace {

Permutation compose(const Permutation& a, const Permutation& b) {
  // (a*b)(i) = a(b(i))
  Permutation out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[b[i]];
  return out;
}

Permutation identity_permutation(std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), std::uint8_t{0});
  return p;
}

Permutation cycle_permutation(std::size_t n, const std::vector<int>& cycle) {
  Permutation p = identity_permutation(n);
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    p[cycle[i]] = static_cast<std::uint8_t>(cycle[(i + 1) % cycle.size()]);
  }
  return p;
}

Permutation product_of_cycles(std::size_t n, const std::vector<std::vector<int>>& cycles) {
  Permutation p = identity_permutation(n);
  for (const auto& c : cycles) p = compose(cycle_permutation(n, c), p);
  return p;
}

std::vector<int> range(int n) {
  std::vector<int> r(n);
  std::iota(r.begin(), r.end(), 0);
  return r;
}

bool parse_suffix(std::string_view name, std::string_view prefix, int& value) {
  if (name.size() <= prefix.size() || name.substr(0, prefix.size()) != prefix) return false;
  auto digits = name.substr(prefix.size());
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  return ec == std::errc{} && ptr == digits.data() + digits.size();
}

}  // namespace

CycleType cycle_type(const Permutation& perm) {
  std::vector<bool> seen(perm.size(), false);
  CycleType type;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

std::string format_cycle_type(const CycleType& type) {
  std::ostringstream os;
  for (std::size_t i = 0; i < type.size(); ++i) os << (i ? "," : "") << type[i];
  return os.str();
}

FiniteGroup::FiniteGroup(std::string name, std::vector<std::vector<ElementId>> table,
                         std::vector<Permutation> action)
    : name_(std::move(name)), table_(std::move(table)), action_(std::move(action)) {
  validate();
  compute_derived();
}

FiniteGroup FiniteGroup::from_permutations(std::string name, std::vector<Permutation> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  require(!elements.empty() && elements.size() <= kMaxGroupOrder, ErrorCode::InvalidGroupTable,
          "group " + name + ": order out of range");
  std::map<Permutation, ElementId> index;
  for (std::size_t i = 0; i < elements.size(); ++i) index.emplace(elements[i], static_cast<ElementId>(i));
  std::vector<std::vector<ElementId>> table(elements.size(), std::vector<ElementId>(elements.size()));
  for (std::size_t a = 0; a < elements.size(); ++a) {
    for (std::size_t b = 0; b < elements.size(); ++b) {
      auto it = index.find(compose(elements[a], elements[b]));
      require(it != index.end(), ErrorCode::InvalidGroupTable,
              "group " + name + ": permutations not closed under composition");
      table[a][b] = it->second;
    }
  }
  return FiniteGroup(std::move(name), std::move(table), std::move(elements));
}

FiniteGroup FiniteGroup::generated_by(std::string name, const std::vector<Permutation>& generators) {
  require(!generators.empty(), ErrorCode::InvalidGroupTable, "no generators");
  std::set<Permutation> seen{identity_permutation(generators.front().size())};
  std::vector<Permutation> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& p : frontier) {
      for (const auto& g : generators) {
        auto q = compose(g, p);
        if (seen.insert(q).second) next.push_back(std::move(q));
      }
    }
    frontier = std::move(next);
    require(seen.size() <= kMaxGroupOrder, ErrorCode::InvalidGroupTable, "group too large");
  }
  return from_permutations(std::move(name), {seen.begin(), seen.end()});
}

void FiniteGroup::validate() const {
  const std::size_t n = table_.size();
  require(n >= 1 && n <= kMaxGroupOrder, ErrorCode::InvalidGroupTable, name_ + ": bad order");
  for (const auto& row : table_) {
    require(row.size() == n, ErrorCode::InvalidGroupTable, name_ + ": table is not square");
    for (auto v : row) require(v < n, ErrorCode::InvalidGroupTable, name_ + ": table not closed");
  }
  require(action_.size() == n, ErrorCode::InvalidGroupTable, name_ + ": action size mismatch");
  // Associativity, exhaustively.
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const ElementId ab = table_[a][b];
      for (std::size_t c = 0; c < n; ++c) {
        require(table_[ab][c] == table_[a][table_[b][c]], ErrorCode::InvalidGroupTable,
                name_ + ": multiplication is not associative");
      }
    }
  // A two-sided identity and inverses.
  std::size_t e = n;
  for (std::size_t a = 0; a < n && e == n; ++a) {
    bool ok = true;
    for (std::size_t b = 0; b < n && ok; ++b) ok = table_[a][b] == b && table_[b][a] == b;
    if (ok) e = a;
  }
  require(e < n, ErrorCode::InvalidGroupTable, name_ + ": no identity");
  for (std::size_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < n && !found; ++b) found = table_[a][b] == e && table_[b][a] == e;
    require(found, ErrorCode::InvalidGroupTable, name_ + ": element without inverse");
  }
  // The action must be a faithful homomorphism.
  std::set<Permutation> distinct(action_.begin(), action_.end());
  require(distinct.size() == n, ErrorCode::InvalidGroupTable, name_ + ": action not faithful");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      require(compose(action_[a], action_[b]) == action_[table_[a][b]], ErrorCode::InvalidGroupTable,
              name_ + ": action is not a homomorphism");
}

void FiniteGroup::compute_derived() {
  const std::size_t n = table_.size();
  for (std::size_t a = 0; a < n; ++a)
    if (table_[a][a] == a) identity_ = static_cast<ElementId>(a);
  inverse_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (table_[a][b] == identity_) inverse_[a] = static_cast<ElementId>(b);
  orders_.assign(n, 1);
  for (std::size_t a = 0; a < n; ++a) {
    ElementId x = static_cast<ElementId>(a);
    int k = 1;
    while (x != identity_) {
      x = table_[x][a];
      ++k;
    }
    orders_[a] = k;
  }
  class_of_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    if (class_of_[a] != n) continue;
    ConjugacyClass cls;
    cls.representative = static_cast<ElementId>(a);
    cls.order = orders_[a];
    for (std::size_t g = 0; g < n; ++g) cls.members.set(conjugate(static_cast<ElementId>(a), static_cast<ElementId>(g)));
    cls.size = cls.members.count();
    for (std::size_t m = 0; m < n; ++m)
      if (cls.members.test(m)) class_of_[m] = classes_.size();
    classes_.push_back(cls);
  }
}

ElementId FiniteGroup::conjugate(ElementId g, ElementId by) const {
  return table_[table_[by][g]][inverse_[by]];
}

ElementId FiniteGroup::power(ElementId g, long long k) const {
  const long long ord = orders_[g];
  long long e = ((k % ord) + ord) % ord;
  ElementId x = identity_;
  for (long long i = 0; i < e; ++i) x = table_[x][g];
  return x;
}

std::size_t FiniteGroup::power_class(std::size_t class_index, long long k) const {
  return class_of_[power(classes_.at(class_index).representative, k)];
}

bool FiniteGroup::is_abelian() const { return is_abelian(all_elements()); }

bool FiniteGroup::is_central(ElementId g) const { return classes_[class_of_[g]].size == 1; }

ElementSet FiniteGroup::all_elements() const {
  ElementSet s;
  for (std::size_t a = 0; a < order(); ++a) s.set(a);
  return s;
}

ElementSet FiniteGroup::closure(const std::vector<ElementId>& generators) const {
  ElementSet members;
  members.set(identity_);
  std::vector<ElementId> frontier{identity_};
  while (!frontier.empty()) {
    std::vector<ElementId> next;
    for (ElementId x : frontier)
      for (ElementId g : generators) {
        ElementId y = table_[x][g];
        if (!members.test(y)) {
          members.set(y);
          next.push_back(y);
        }
      }
    frontier = std::move(next);
  }
  return members;
}

ElementSet FiniteGroup::cyclic_subgroup(ElementId g) const { return closure({g}); }

bool FiniteGroup::is_subgroup(const ElementSet& set) const {
  if (!set.test(identity_)) return false;
  for (std::size_t a = 0; a < order(); ++a) {
    if (!set.test(a)) continue;
    for (std::size_t b = 0; b < order(); ++b)
      if (set.test(b) && !set.test(table_[a][inverse_[b]])) return false;
  }
  return true;
}

bool FiniteGroup::is_normal(const ElementSet& subgroup) const {
  for (std::size_t h = 0; h < order(); ++h) {
    if (!subgroup.test(h)) continue;
    for (std::size_t g = 0; g < order(); ++g)
      if (!subgroup.test(conjugate(static_cast<ElementId>(h), static_cast<ElementId>(g)))) return false;
  }
  return true;
}

bool FiniteGroup::is_abelian(const ElementSet& subgroup) const {
  for (std::size_t a = 0; a < order(); ++a) {
    if (!subgroup.test(a)) continue;
    for (std::size_t b = a + 1; b < order(); ++b)
      if (subgroup.test(b) && table_[a][b] != table_[b][a]) return false;
  }
  return true;
}

std::vector<ElementSet> FiniteGroup::subgroups() const {
  struct Found {
    ElementSet members;
    std::vector<ElementId> generators;
  };
  auto key = [](const ElementSet& s) { return s.to_string(); };

  std::vector<Found> cyclic;
  std::set<std::string> seen;
  for (std::size_t g = 0; g < order(); ++g) {
    ElementSet s = cyclic_subgroup(static_cast<ElementId>(g));
    if (seen.insert(key(s)).second) cyclic.push_back({s, {static_cast<ElementId>(g)}});
  }
  // Every subgroup is a join of cyclic subgroups; grow joins until stable.
  std::vector<Found> all = cyclic;
  std::size_t processed = 0;
  while (processed < all.size()) {
    const Found current = all[processed++];
    for (const auto& c : cyclic) {
      if ((c.members & ~current.members).none()) continue;
      auto gens = current.generators;
      gens.push_back(c.generators.front());
      ElementSet joined = closure(gens);
      if (seen.insert(key(joined)).second) all.push_back({joined, gens});
    }
  }
  std::vector<ElementSet> out;
  out.reserve(all.size());
  for (auto& f : all) out.push_back(f.members);
  std::sort(out.begin(), out.end(), [&](const ElementSet& a, const ElementSet& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return key(a) > key(b);
  });
  return out;
}

CycleType FiniteGroup::regular_cycle_type(ElementId g) const {
  const int d = orders_[g];
  return CycleType(order() / d, d);
}

FiniteGroup build_group(std::string_view name) {
  int n = 0;
  const std::string label(name);
  if (parse_suffix(name, "C", n) && n >= 1 && n <= 12) {
    return FiniteGroup::generated_by(label, {cycle_permutation(n, range(n))});
  }
  if (parse_suffix(name, "S", n) && n >= 1 && n <= 5) {
    if (n == 1) return FiniteGroup::generated_by(label, {identity_permutation(1)});
    return FiniteGroup::generated_by(label, {cycle_permutation(n, {0, 1}), cycle_permutation(n, range(n))});
  }
  if (parse_suffix(name, "A", n) && n >= 3 && n <= 5) {
    std::vector<Permutation> gens{cycle_permutation(n, {0, 1, 2})};
    if (n == 4) gens.push_back(cycle_permutation(n, {1, 2, 3}));
    if (n == 5) gens.push_back(cycle_permutation(n, range(5)));
    return FiniteGroup::generated_by(label, gens);
  }
  if (name == "V4" || name == "D4") {
    return FiniteGroup::generated_by(label, {product_of_cycles(4, {{0, 1}, {2, 3}}),
                                             product_of_cycles(4, {{0, 2}, {1, 3}})});
  }
  if (parse_suffix(name, "D", n) && n % 2 == 0 && n >= 6 && n <= 12) {
    const int k = n / 2;
    Permutation reflection(k);
    for (int i = 0; i < k; ++i) reflection[i] = static_cast<std::uint8_t>((k - i) % k);
    return FiniteGroup::generated_by(label, {cycle_permutation(k, range(k)), reflection});
  }
  fail(ErrorCode::UnknownGroup, "unknown group label '" + label + "'");
}

std::vector<std::string> group_catalog_names() {
  std::vector<std::string> names;
  for (int d = 1; d <= 12; ++d) names.push_back("C" + std::to_string(d));
  for (int n = 1; n <= 5; ++n) names.push_back("S" + std::to_string(n));
  for (int n = 3; n <= 5; ++n) names.push_back("A" + std::to_string(n));
  for (int n = 4; n <= 12; n += 2) names.push_back("D" + std::to_string(n));
  return names;
}

}  // namespace cheb
