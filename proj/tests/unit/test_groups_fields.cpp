#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "cheb/chebotarev.hpp"
#include "cheb/groups.hpp"
#include "cheb/oracles/oracles.hpp"
#include "cheb/polymod.hpp"
#include "common.hpp"

using namespace cheb;

namespace {

std::multiset<std::pair<std::size_t, int>> class_profile(const FiniteGroup& g) {
  std::multiset<std::pair<std::size_t, int>> out;
  for (const auto& c : g.classes()) out.insert({c.size, c.order});
  return out;
}

std::vector<std::vector<int>> table_of(const FiniteGroup& g) {
  std::vector<std::vector<int>> t(g.order(), std::vector<int>(g.order()));
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b) t[a][b] = g.mul(static_cast<ElementId>(a), static_cast<ElementId>(b));
  return t;
}

}  // namespace

TEST_CASE("small groups have the expected classes") {
  const auto c2 = build_group("C2");
  CHECK(c2.order() == 2);
  CHECK(c2.classes().size() == 2);
  for (const auto& c : c2.classes()) CHECK(c.size == 1);

  const auto s3 = build_group("S3");
  CHECK(s3.order() == 6);
  CHECK(class_profile(s3) == std::multiset<std::pair<std::size_t, int>>{{1, 1}, {3, 2}, {2, 3}});

  const auto a5 = build_group("A5");
  CHECK(a5.order() == 60);
  CHECK(a5.classes().size() == 5);
}

TEST_CASE("class sizes agree with brute-force conjugation") {
  const std::vector<std::pair<const char*, std::vector<std::vector<int>>>> cases{
      {"S3", {{1, 0, 2}, {1, 2, 0}}},
      {"S4", {{1, 0, 2, 3}, {1, 2, 3, 0}}},
      {"A4", {{1, 2, 0, 3}, {0, 2, 3, 1}}},
      {"A5", {{1, 2, 0, 3, 4}, {1, 2, 3, 4, 0}}},
      {"C6", {{1, 2, 3, 4, 5, 0}}},
      {"D10", {{1, 2, 3, 4, 0}, {0, 4, 3, 2, 1}}}};
  for (const auto& [name, gens] : cases) {
    CAPTURE(name);
    const auto g = build_group(name);
    std::vector<std::size_t> sizes;
    for (const auto& c : g.classes()) sizes.push_back(c.size);
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == oracle::class_sizes_bruteforce(gens));
  }
}

TEST_CASE("every catalog group satisfies the axioms and has the right subgroups") {
  for (const auto& name : group_catalog_names()) {
    CAPTURE(name);
    const auto g = build_group(name);
    const auto e = g.identity();
    for (std::size_t a = 0; a < g.order(); ++a) {
      const auto ea = static_cast<ElementId>(a);
      CHECK(g.mul(e, ea) == ea);
      CHECK(g.mul(ea, g.inverse(ea)) == e);
      for (std::size_t b = 0; b < g.order(); ++b)
        for (std::size_t c = 0; c < g.order(); c += 7)
          CHECK(g.mul(g.mul(ea, b), c) == g.mul(ea, g.mul(b, c)));
    }
    if (g.order() <= 16) {
      std::set<std::vector<int>> ours;
      for (const auto& h : g.subgroups()) {
        std::vector<int> elems;
        for (std::size_t i = 0; i < g.order(); ++i)
          if (h[i]) elems.push_back(static_cast<int>(i));
        ours.insert(elems);
      }
      const auto ref = oracle::subgroups_bruteforce(table_of(g));
      CHECK(ours == std::set<std::vector<int>>(ref.begin(), ref.end()));
    }
  }
}

TEST_CASE("group construction errors") {
  CHECK(test::code_of([] { build_group("Q8"); }) == ErrorCode::UnknownGroup);
  CHECK(test::code_of([] { build_group("C13"); }) == ErrorCode::UnknownGroup);
  std::vector<std::vector<ElementId>> bad{{0, 1}, {1, 1}};
  CHECK(test::code_of([&] { FiniteGroup("bad", bad, {{0, 1}, {1, 0}}); }) == ErrorCode::InvalidGroupTable);
}

TEST_CASE("prime sieve") {
  const PrimeSieve s10(10);
  CHECK(std::vector<std::uint32_t>(s10.primes()) == std::vector<std::uint32_t>{2, 3, 5, 7});
  const PrimeSieve s100(100);
  CHECK(s100.primes().size() == 25);
  const PrimeSieve s(10'000);
  CHECK(std::vector<std::uint64_t>(s.primes().begin(), s.primes().end()) == oracle::trial_division_primes(10'000));
  CHECK(test::sieve().count_upto(1e6) == 78498);
  CHECK(oracle::segmented_prime_count(1'000'000) == 78498);
  CHECK(test::code_of([] { PrimeSieve(100'000'001); }) == ErrorCode::LimitTooLarge);
  CHECK(test::code_of([&] { s100.count_upto(101); }) == ErrorCode::SieveRangeExceeded);
  CHECK(s100.is_prime(97));
  CHECK_FALSE(s100.is_prime(91));
}

TEST_CASE("factorization mod p") {
  auto shape = [](const std::vector<ModFactor>& fs) {
    std::multiset<std::pair<int, int>> out;
    for (const auto& f : fs) out.insert({f.degree, f.multiplicity});
    return out;
  };
  const std::vector<std::int64_t> x2p1{1, 0, 1};
  CHECK(shape(factor_poly_mod_p(x2p1, 5)) == std::multiset<std::pair<int, int>>{{1, 1}, {1, 1}});
  CHECK(oracle::roots_mod_p(x2p1, 5) == std::vector<std::uint64_t>{2, 3});
  CHECK(shape(factor_poly_mod_p(x2p1, 3)) == std::multiset<std::pair<int, int>>{{2, 1}});
  CHECK(oracle::roots_mod_p(x2p1, 3).empty());
  const auto at2 = factor_poly_mod_p(x2p1, 2);
  REQUIRE(at2.size() == 1);
  CHECK(at2[0].multiplicity == 2);
  CHECK(at2[0].factor == ModPoly{1, 1});
}

TEST_CASE("factorization agrees with root counting and reconstructs the polynomial") {
  std::mt19937_64 rng(7);
  for (std::uint64_t p : {2, 3, 5, 7, 13, 101, 1009}) {
    for (int t = 0; t < 30; ++t) {
      std::vector<std::int64_t> f(7);
      for (auto& c : f) c = static_cast<std::int64_t>(rng() % 201) - 100;
      f.back() = 1;
      const auto fs = factor_poly_mod_p(f, p);
      ModPoly prod{1};
      std::size_t linear = 0;
      for (const auto& fac : fs) {
        if (p <= 13) CHECK(oracle::is_irreducible_bruteforce(fac.factor, p));
        if (fac.degree == 1) ++linear;
        for (int k = 0; k < fac.multiplicity; ++k) prod = polymod::mul(prod, fac.factor, p);
      }
      CHECK(prod == polymod::monic(reduce_mod_p(f, p), p));
      CHECK(linear == oracle::roots_mod_p(f, p).size());
    }
  }
}

TEST_CASE("factorization is reproducible for a fixed seed") {
  const std::vector<std::int64_t> f{1, 0, 0, 0, 0, 0, 0, 0, 1};
  CHECK(factor_poly_mod_p(f, 17, 42).size() == 8);
  const auto a = factor_poly_mod_p(f, 17, 42), b = factor_poly_mod_p(f, 17, 42);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].factor == b[i].factor);
}

TEST_CASE("Frobenius data examples") {
  const auto& gauss = test::field("gaussian");
  const auto f5 = frobenius_data(gauss, 5);
  CHECK_FALSE(f5.ramified);
  CHECK(f5.factorization_type == CycleType{1, 1});
  CHECK(f5.frobenius_order == 1);
  REQUIRE(f5.class_index.has_value());
  CHECK(*f5.class_index == gauss.group().class_of(gauss.group().identity()));
  CHECK(frobenius_data(gauss, 2).ramified);
  CHECK(frobenius_data(test::field("zeta5"), 7).frobenius_order == 4);
}

TEST_CASE("Frobenius order in cyclotomic fields is the multiplicative order") {
  for (auto [name, q] : {std::pair{"zeta5", 5}, std::pair{"zeta8", 8}, std::pair{"zeta12", 12}}) {
    CAPTURE(name);
    const auto& K = test::field(name);
    for (std::size_t i = 0; i < test::sieve().prefix_length(1e4); ++i) {
      const std::uint64_t p = test::sieve().primes()[i];
      if (q % p == 0) continue;
      CHECK(frobenius_data(K, p).frobenius_order == static_cast<int>(multiplicative_order(p, q)));
    }
  }
}

TEST_CASE("unramified factorization types are consistent with the group") {
  for (const auto& K : test::catalog().fields) {
    CAPTURE(K.name());
    const auto n = static_cast<std::size_t>(K.poly().degree());
    for (std::size_t i = 0; i < test::sieve().prefix_length(2000); ++i) {
      const std::uint64_t p = test::sieve().primes()[i];
      const auto fd = frobenius_data(K, p);
      if (fd.ramified) continue;
      int sum = 0;
      for (int part : fd.factorization_type) sum += part;
      CHECK(static_cast<std::size_t>(sum) == n);
      CHECK(K.group().order() % fd.frobenius_order == 0);
      CHECK(fd.block >= 0);
      if (n == K.group().order()) {
        for (int part : fd.factorization_type) CHECK(part == fd.frobenius_order);
      }
    }
  }
}

TEST_CASE("S_n splitting proportions match class sizes") {
  const PrimeSieve& s = test::sieve();
  for (const char* name : {"s3_23", "s4_283", "s5_2869"}) {
    CAPTURE(name);
    const auto& K = test::field(name);
    const SplittingTable table(K, s, 1e6);
    std::vector<double> counts(K.type_blocks().size(), 0);
    double total = 0;
    for (std::size_t i = 0; i < table.size(); ++i)
      if (!table.ramified(i)) {
        ++counts[table.block(i)];
        ++total;
      }
    for (std::size_t b = 0; b < counts.size(); ++b) {
      std::size_t size = 0;
      for (auto c : K.type_blocks()[b].classes) size += K.group().classes()[c].size;
      const double share = static_cast<double>(size) / K.group().order();
      const double sigma = std::sqrt(total * share * (1 - share));
      CHECK(std::abs(counts[b] - share * total) <= 3 * sigma);
    }
  }
}

TEST_CASE("catalog parsing") {
  CHECK(test::catalog().fields.size() == 13);
  CHECK(test::field("s3_23").poly_disc() == -23);
  CHECK(test::field("gaussian").m() == 1);
  CHECK(test::code_of([] { test::catalog().find("nope"); }) == ErrorCode::InvalidArgument);

  std::istringstream ok("# comment\n\nq5 | -1 -1 1 | C2 | 5 \n");
  CHECK(parse_catalog(ok).fields.size() == 1);

  std::istringstream bad("q5 | -1 -1 1 | C2 | 5\nbroken | 1 0 1 | C2\n");
  try {
    parse_catalog(bad, "cat.txt");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CatalogParse);
    CHECK(std::string(e.what()).find("cat.txt:2") != std::string::npos);
  }
  std::istringstream huge("big | 1 0 1 | C2 | -4x\n");
  CHECK(test::code_of([&] { parse_catalog(huge); }) == ErrorCode::CatalogParse);
}

TEST_CASE("field validation") {
  CHECK(test::code_of([] { make_field("bad", {1, 0, 1}, "C2", 5); }) == ErrorCode::InvalidField);
  CHECK(test::code_of([] { make_field("sq", {1, 2, 1}, "C2", 1); }) == ErrorCode::InvalidPolynomial);
  CHECK(test::code_of([] { make_field("deg", {1, 0, 1}, "C3", -4); }) == ErrorCode::InvalidField);
  const auto big = make_field("s4", {-1, -1, 0, 0, 1}, "S4", parse_bigint("263898685087308495981516810961"));
  CHECK(big.log_abs_disc() == doctest::Approx(12 * std::log(283.0)));
  CHECK(big.divides_disc(283));
  CHECK_FALSE(big.divides_disc(281));
}
