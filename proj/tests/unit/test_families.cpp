#include <cmath>

#include "cheb/families.hpp"
#include "cheb/oracles/oracles.hpp"
#include "common.hpp"

using namespace cheb;

TEST_CASE("squarefree parts and resolvent classes") {
  CHECK(resolvent_square_class(test::field("s3_23")) == -23);
  CHECK(resolvent_square_class(test::field("s3_31")) == -31);
  CHECK(resolvent_square_class(test::field("sqrt2")) == 2);
  for (std::int64_t n = -5000; n <= 5000; ++n)
    if (n != 0) CHECK(squarefree_part(n) == oracle::squarefree_part_naive(n));
  CHECK(squarefree_part(BigInt(999'999'999'989LL)) == 999'999'999'989LL);
  CHECK(test::code_of([] { squarefree_part(BigInt(1'000'000'000'001LL)); }) == ErrorCode::IntegerTooLarge);
}

TEST_CASE("fundamental discriminants") {
  CHECK(fundamental_discriminants_up_to(12) == std::vector<std::int64_t>{-3, -4, 5, -7, -8, 8, -11, 12});
  CHECK(is_fundamental_discriminant(-4));
  CHECK_FALSE(is_fundamental_discriminant(-16));
  CHECK_FALSE(is_fundamental_discriminant(1));
  CHECK(fundamental_discriminant_of(3) == 12);
  CHECK(fundamental_discriminant_of(-3) == -3);
  const auto K = make_quadratic_field(-7);
  CHECK(K.poly_disc() == -7);
}

TEST_CASE("compositum discriminants") {
  const auto c = compositum_disc_check(test::field("gaussian"), test::field("sqrt-3"));
  CHECK(c.disc_compositum == 144);
  CHECK(c.d3 == 12);
  CHECK(c.divides);
  CHECK(c.conductor_divides);
  CHECK(c.disc_compositum == test::field("zeta12").disc_field());

  const auto r = compositum_disc_check(test::field("sqrt2"), make_quadratic_field(12));
  CHECK(r.disc_compositum == 2304);
  CHECK(9216 % 2304 == 0);
  CHECK(r.divides);
  CHECK(r.conductor_divides);

  const auto discs = fundamental_discriminants_up_to(200);
  std::vector<FieldDescriptor> quads;
  for (std::size_t i = 0; i < discs.size(); i += 6) quads.push_back(make_quadratic_field(discs[i]));
  for (std::size_t i = 0; i < quads.size(); ++i)
    for (std::size_t j = i + 1; j < quads.size(); ++j) {
      const auto cc = compositum_disc_check(quads[i], quads[j]);
      CHECK(cc.divides);
      CHECK(cc.conductor_divides);
      CHECK(cc.disc_compositum == oracle::biquadratic_discriminant(cc.d1.convert_to<std::int64_t>(),
                                                                    cc.d2.convert_to<std::int64_t>()));
    }

  CHECK(test::code_of([] { compositum_disc_check(test::field("gaussian"), test::field("cyclic7")); }) ==
        ErrorCode::NotQuadratic);
  CHECK(test::code_of([] { compositum_disc_check(test::field("gaussian"), make_quadratic_field(-4)); }) ==
        ErrorCode::EqualFields);
}

TEST_CASE("intersection multiplicity") {
  std::vector<FieldDescriptor> quads;
  for (auto D : fundamental_discriminants_up_to(60)) quads.push_back(make_quadratic_field(D));
  std::vector<const FieldDescriptor*> ptrs;
  for (const auto& q : quads) ptrs.push_back(&q);
  const auto fam = make_family(ptrs, 60);
  CHECK(fam.rule == IntersectionRule::QuadraticEquality);
  CHECK(intersection_multiplicity(fam) == 1);

  // Symmetry of the rule, and monotonicity under adding fields.
  for (const auto* a : ptrs)
    for (const auto* b : ptrs) CHECK(intersects_nontrivially(fam, *a, *b) == intersects_nontrivially(fam, *b, *a));
  std::size_t prev = 0;
  for (std::size_t k = 1; k <= ptrs.size(); k += 5) {
    const auto m = intersection_multiplicity(make_family({ptrs.begin(), ptrs.begin() + k}, 60));
    CHECK(m >= prev);
    CHECK(m >= 1);
    prev = m;
  }

  // Same quintic shifted by x -> x + 1: equal square class of the discriminant.
  const auto& s5 = test::field("s5_2869");
  const auto shifted = make_field("s5_shift", {-1, 4, 10, 10, 5, 1}, "S5", s5.disc_field());
  CHECK(resolvent_square_class(shifted) == resolvent_square_class(s5));
  CHECK(intersection_multiplicity(make_family({&s5, &shifted}, s5.disc_field())) == 2);

  const auto A5 = build_group("A5");
  CHECK(default_intersection_rule(A5) == IntersectionRule::SimpleGroup);
  CHECK(default_intersection_rule(build_group("C3")) == IntersectionRule::SimpleGroup);
  CHECK_FALSE(default_intersection_rule(build_group("C4")).has_value());
  const auto& z5 = test::field("zeta5");
  CHECK(test::code_of([&] { make_family({&z5}, 1000); }) == ErrorCode::UndecidableIntersectionRule);
  const auto explicit_fam = make_family({&z5}, 1000, {{"zeta5", "zeta5"}});
  CHECK(intersection_multiplicity(explicit_fam) == 1);
  CHECK(test::code_of([&] { make_family({&z5, &test::field("gaussian")}, 1000, {{"a", "b"}}); }) ==
        ErrorCode::InvalidArgument);
}

TEST_CASE("average Chebotarev error") {
  const auto& s = test::sieve();
  const auto& gauss = test::field("gaussian");
  const auto single = avg_cheb_error(make_family({&gauss}, 4), 1e5, s);
  CHECK(single.size == 1);
  CHECK(single.avg_error == doctest::Approx(std::abs(4783 - 9592 / 2.0)));

  std::vector<FieldDescriptor> quads;
  for (auto D : fundamental_discriminants_up_to(100)) {
    if (quads.size() == 20) break;
    quads.push_back(make_quadratic_field(D));
  }
  std::vector<const FieldDescriptor*> ptrs;
  for (const auto& q : quads) ptrs.push_back(&q);
  const auto rep = avg_cheb_error(make_family(ptrs, 100), 1e5, s);
  CHECK(rep.size == 20);
  CHECK(rep.multiplicity == 1);
  double second_pass = 0;
  for (const auto* K : ptrs) {
    const SplittingTable table(*K, s, 1e5);
    double worst = 0;
    for (const auto& sel : resolvable_selectors(*K)) worst = std::max(worst, std::abs(pi_C_count(*K, table, sel, 1e5).error));
    second_pass += worst;
  }
  CHECK(rep.avg_error == doctest::Approx(second_pass / 20));

  const auto bigger_Q = avg_cheb_error(make_family(ptrs, 10'000), 1e5, s);
  CHECK(bigger_Q.avg_error == rep.avg_error);
  CHECK(bigger_Q.size == rep.size);

  const auto thr = avg_cheb_error(make_family(ptrs, 100), 1e5, s, 0.1, 0);
  CHECK(thr.exceptional_fraction == doctest::Approx(1));
}
