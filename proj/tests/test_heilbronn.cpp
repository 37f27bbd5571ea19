#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "superchar/builtin_groups.hpp"

using namespace superchar;

namespace {

Subgroup first_of_order(const FamilyPtr& f, int order) {
  for (std::size_t i = 0; i < f->size(); ++i)
    if (f->subgroup(i).order() == order) return f->subgroup(i);
  throw std::runtime_error("no subgroup of that order");
}

FamilyPtr family(const char* spec, const TheoryChooser& chooser) {
  auto g = builtin_group(spec);
  return make_family(g, enumerate_subgroups(g), chooser);
}

std::vector<BigInt> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_SUITE("heilbronn") {

TEST_CASE("base values are recovered") {
  auto fam = family("s4", all_classical());
  const NSystem n(fam, ints({3, -1, 0, 2, 5}));
  const auto& top = fam->top_theory();
  for (std::size_t x = 0; x < top->block_count(); ++x) {
    const auto v = n_value(n, fam->subgroup(fam->top_index()), top->sigma(x));
    CHECK(v.integral);
    CHECK(v.value == Cyclotomic(BigRational(n.base()[x])));
  }
  CHECK_THROWS_AS(NSystem(fam, ints({1, 2})), Error);
}

TEST_CASE("zero system") {
  auto fam = family("s3", all_classical());
  const NSystem n(fam, ints({0, 0, 0}));
  std::mt19937_64 rng(4);
  for (std::size_t i = 0; i < fam->size(); ++i) {
    const auto phi = oracle::random_superclass_function(rng, fam->theory(i));
    CHECK(n_value(n, fam->subgroup(i), phi.values()).value.is_zero());
  }
  CHECK(check_ach3(n).passed);
  CHECK(verify_artin_takagi(n).passed);
}

TEST_CASE("regular character under the maximal theory") {
  auto fam = family("s3", all_maximal());
  const NSystem n(fam, ints({2, 3}));
  CHECK(n_top(n, regular_character(fam->top())).value == Cyclotomic(5L));
  const Report r = verify_artin_takagi(n);
  CHECK(r.passed);
}

TEST_CASE("Theta from the defining sum") {
  auto fam = family("s3", all_classical());
  const NSystem n(fam, ints({1, 1, 1}));
  // Theta_G = 1 + sgn + chi2 / 2 with chi2 the degree-2 character
  const auto t = theta(n, fam->subgroup(fam->top_index()));
  CHECK(t.values().values() == std::vector<Cyclotomic>{3L, Cyclotomic(BigRational(3, 2)), 0L});
  const auto& tab = *fam->top_theory()->table();
  const auto direct = tab.row(0) + tab.row(1) + scale(BigRational(1, 2), Cyclotomic(1L)) * tab.row(2);
  CHECK(t.values() == direct);
  CHECK(theta_via_superinduction(n, fam->subgroup(fam->top_index())).values() == direct);
}

TEST_CASE("Theta on the trivial subgroup") {
  auto fam = family("s3", all_classical());
  const NSystem n(fam, ints({2, -1, 4}));
  const auto one = fam->subgroup(0);
  REQUIRE(one.order() == 1);
  const auto t = theta(n, one);
  const auto n1 = n_value(n, one, trivial_character(one.local()));
  CHECK(t.values()[0] == n1.value);
  // n({1}, 1) = Theta_G(1) = sum of the base values
  CHECK(n1.value == Cyclotomic(5L));
}

TEST_CASE("nonnegativity check") {
  auto s3 = family("s3", all_classical());
  const NSystem bad(s3, ints({1, -1, 1}));
  const Report r = check_ach3(bad);
  CHECK_FALSE(r.passed);
  bool at_top_sign = false;
  for (const auto& v : r.violations) at_top_sign = at_top_sign || v.location == "H={0,1,2,3,4,5} X1";
  CHECK(at_top_sign);
  CHECK(check_ach3(NSystem(s3, ints({0, 0, 0}))).passed);
  auto c3 = family("c3", all_classical());
  CHECK(check_ach3(NSystem(c3, ints({1, 1, 1}))).passed);
}

TEST_CASE("non-integer values are warnings") {
  auto s3 = family("s3", all_classical());
  const Report r = check_ach3(NSystem(s3, ints({1, 1, 1})));
  CHECK_FALSE(r.warnings.empty());
}

TEST_CASE("Artin-Takagi on random bases") {
  std::mt19937_64 rng(21);
  for (const auto& fam : {family("s3", all_classical()), family("s3", all_maximal()), family("s4", all_classical()),
                          family("d4", maximal_top_classical_below()), family("q8", all_classical())}) {
    for (int trial = 0; trial < 10; ++trial) {
      const NSystem n(fam, oracle::random_base(rng, fam->top_theory()->block_count()));
      CHECK(verify_artin_takagi(n).passed);
    }
  }
}

TEST_CASE("Heilbronn-Stark by independent evaluation") {
  auto fam = family("s3", all_classical());
  const NSystem n(fam, ints({1, 0, 2}));
  const auto a3 = first_of_order(fam, 3);
  CHECK(verify_heilbronn_stark(n, a3).passed);
  const auto t = theta(n, a3);
  for (int x = 0; x < a3.order(); ++x)
    CHECK(t.values().at_element(x) == n.theta_top().values().at_element(a3.elements()[x]));
  CHECK(verify_heilbronn_stark(n, fam->subgroup(fam->top_index())).passed);
}

TEST_CASE("Heilbronn-Stark on random bases over all subgroups") {
  std::mt19937_64 rng(22);
  for (const auto& fam : {family("s4", all_classical()), family("d4", all_maximal()),
                          family("q8", maximal_top_classical_below())}) {
    for (int trial = 0; trial < 5; ++trial) {
      const NSystem n(fam, oracle::random_base(rng, fam->top_theory()->block_count()));
      for (std::size_t i = 0; i < fam->size(); ++i) CHECK(verify_heilbronn_stark(n, fam->subgroup(i)).passed);
    }
  }
}

TEST_CASE("additivity and superinduction invariance") {
  std::mt19937_64 rng(23);
  for (const auto& fam : {family("s4", all_classical()), family("d4", maximal_top_classical_below())}) {
    const NSystem n(fam, oracle::random_base(rng, fam->top_theory()->block_count()));
    for (std::size_t i = 0; i < fam->size(); ++i) {
      const auto& th = fam->theory(i);
      const auto a = oracle::random_superclass_function(rng, th);
      const auto b = oracle::random_superclass_function(rng, th);
      CHECK(n_value(n, i, a.values() + b.values()).value ==
            n_value(n, i, a.values()).value + n_value(n, i, b.values()).value);
      for (std::size_t y = 0; y < th->block_count(); ++y) {
        const auto s = superinduce(SuperclassFunction(th, th->sigma(y)), fam->top_theory(),
                                   fam->subgroup(i).embedding());
        CHECK(n_top(n, s.values()).value == n_value(n, i, th->sigma(y)).value);
      }
      CHECK(theta(n, fam->subgroup(i)).values() == theta_via_superinduction(n, fam->subgroup(i)).values());
    }
  }
}

TEST_CASE("subgroups outside the family") {
  auto g = symmetric_group(3);
  auto subs = enumerate_subgroups(g);
  auto fam = make_family(g, {subs.front(), subs.back()}, all_classical());
  const NSystem n(fam, ints({1, 1, 1}));
  try {
    theta(n, subs[1]);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SubgroupNotInFamily);
  }
}

TEST_CASE("certificates") {
  auto fam = family("s3", all_classical());
  const auto a3 = first_of_order(fam, 3);
  const auto g = fam->subgroup(fam->top_index());
  const DecompositionCertificate cert{a3, {{g, {1}}}};
  CHECK_NOTHROW(validate_certificate(*fam, cert));
  const NSystem n(fam, ints({1, 2, 0}));
  const auto r = verify_uvdw(n, cert);
  CHECK(r.passed);
  CHECK(r.inequality_asserted);
  CHECK(r.n_h.value == r.n_g.value + Cyclotomic(2L));

  const auto whole = verify_uvdw(n, DecompositionCertificate{g, {}});
  CHECK(whole.passed);
  CHECK(whole.n_h.value == whole.n_g.value);

  try {
    validate_certificate(*fam, DecompositionCertificate{a3, {{g, {2}}}});
    FAIL("non-linear term accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidCertificate);
    CHECK(e.witness() == "term 0");
  }
  try {
    validate_certificate(*fam, DecompositionCertificate{a3, {{g, {0}}}});
    FAIL("wrong identity accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidCertificate);
    CHECK(e.witness() == "identity");
  }
}

TEST_CASE("inequality is only asserted under nonnegativity") {
  auto fam = family("s3", all_classical());
  const auto a3 = first_of_order(fam, 3);
  const auto g = fam->subgroup(fam->top_index());
  const NSystem n(fam, ints({1, -2, 0}));
  const auto r = verify_uvdw(n, DecompositionCertificate{a3, {{g, {1}}}});
  CHECK(r.passed);
  CHECK_FALSE(r.ach3_holds);
  CHECK_FALSE(r.inequality_asserted);
}

TEST_CASE("certificate search") {
  auto fam = family("s3", all_classical());
  const auto a3 = first_of_order(fam, 3);
  const auto found = find_uvdw_certificate(*fam, a3);
  REQUIRE(found.certificate.has_value());
  REQUIRE(found.certificate->terms.size() == 1);
  CHECK(found.certificate->terms[0].subgroup.is_whole());
  CHECK(found.certificate->terms[0].sigma_blocks == std::vector<int>{1});

  // Reg - 1 = sgn + Ind chi + Ind chi^2, checked with the elementwise induction
  const auto one = fam->subgroup(0);
  const auto triv = find_uvdw_certificate(*fam, one);
  REQUIRE(triv.certificate.has_value());
  const auto& gg = *fam->top();
  std::vector<Cyclotomic> rhs(gg.order(), Cyclotomic(1L));
  for (const auto& t : triv.certificate->terms) {
    const auto ind = oracle::induce_elementwise(term_character(*fam, t), t.subgroup);
    for (int x = 0; x < gg.order(); ++x) rhs[x] += ind[x];
  }
  const auto lhs = oracle::induce_elementwise(trivial_character(one.local()), one);
  CHECK(lhs == rhs);

  const auto none = find_uvdw_certificate(*fam, one, 1);
  CHECK_FALSE(none.certificate.has_value());
  CHECK(none.budget_exhausted);

  auto maxfam = family("s3", all_maximal());
  CHECK_THROWS_AS(find_uvdw_certificate(*maxfam, maxfam->subgroup(0)), Error);
}

TEST_CASE("certificates exist for every subgroup of S4") {
  auto fam = family("s4", all_classical());
  for (std::size_t i = 0; i < fam->size(); ++i) {
    const auto found = find_uvdw_certificate(*fam, fam->subgroup(i));
    REQUIRE(found.certificate.has_value());
    CHECK_NOTHROW(validate_certificate(*fam, *found.certificate));
  }
}

}
