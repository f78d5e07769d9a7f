#include <doctest.h>

#include <numeric>

#include "covgroup/classification.hpp"
#include "covgroup/error.hpp"
#include "corpus.hpp"

using namespace covgroup;

namespace {

Group s3() { return from_permutation_generators(3, std::vector<std::string>{"(1 2 3)", "(1 2)"}); }
Group c3c3() { return presets::direct_product(presets::cyclic(3), presets::cyclic(3)); }

std::size_t involutions(const Group& g, const ElementSet& h) {
  std::size_t k = 0;
  h.for_each([&](Element x) { k += element_order(g, x) == 2; });
  return k;
}

std::size_t exponent(const Group& g, const ElementSet& h) {
  std::size_t e = 1;
  h.for_each([&](Element x) { e = std::lcm(e, element_order(g, x)); });
  return e;
}

}  // namespace

TEST_SUITE("classification") {

TEST_CASE("family tags print and parse") {
  for (const FamilyTag& t : {FamilyTag::cp_times_cp(3), FamilyTag::q8(), FamilyTag::cp_rtimes_cn(7, 6)}) {
    const auto back = FamilyTag::parse(t.to_string());
    REQUIRE(back.has_value());
    CHECK(*back == t);
  }
  CHECK(FamilyTag::cp_rtimes_cn(3, 2).to_string() == "CpRtimesCn(3,2)");
  CHECK_FALSE(FamilyTag::parse("Q16").has_value());
}

TEST_CASE("classify small examples") {
  const auto q8 = classify(Lattice(presets::generalized_quaternion(3)));
  CHECK(q8.one_sized);
  REQUIRE(q8.family);
  CHECK(*q8.family == FamilyTag::q8());
  CHECK(q8.witness_c->order == 1);

  const Lattice sc5(presets::direct_product(s3(), presets::cyclic(5)));
  const auto o = classify(sc5);
  CHECK(o.one_sized);
  REQUIRE(o.family);
  CHECK(*o.family == FamilyTag::cp_rtimes_cn(3, 2));
  CHECK(o.witness_c->order == 5);
  CHECK(outcome_is_consistent(sc5, o));

  CHECK_FALSE(classify(Lattice(presets::generalized_quaternion(4))).one_sized);
  CHECK_THROWS_AS(classify(Lattice(presets::cyclic(10))), Error);
}

TEST_CASE("verdict records") {
  const auto a = verify_theorem1(Lattice(c3c3()));
  CHECK(a.outcome.one_sized);
  CHECK(a.evidence.one_sized);
  CHECK(a.evidence.lambda == 4);
  CHECK(a.evidence.sigma == 4);
  CHECK(a.agreement);

  const auto b = verify_theorem1(Lattice(presets::direct_product(presets::direct_product(presets::cyclic(2),
                                                                                         presets::cyclic(2)),
                                                                 presets::cyclic(2))));
  CHECK_FALSE(b.outcome.one_sized);
  CHECK_FALSE(b.evidence.one_sized);
  CHECK(b.agreement);

  const auto c = verify_theorem1(Lattice(presets::semidirect_cp_cn(7, 3, 2)));
  CHECK(c.outcome.one_sized);
  CHECK(c.evidence.lambda == 8);
  CHECK(c.evidence.sigma == 8);
}

TEST_CASE("p-nilpotency lemma records") {
  const auto s = check_lemma_pnilp(Lattice(s3()), 3);
  CHECK_FALSE(s.hypothesis);
  CHECK(s.status == CheckStatus::Vacuous);

  const auto c12 = check_lemma_pnilp(Lattice(presets::cyclic(12)), 2);
  CHECK(c12.hypothesis);
  CHECK(c12.conclusion);
  CHECK(c12.status == CheckStatus::Confirmed);

  const auto q = check_lemma_pnilp(Lattice(presets::direct_product(presets::generalized_quaternion(3),
                                                                   presets::cyclic(3))), 2);
  CHECK(q.hypothesis);
  CHECK(q.conclusion);

  CHECK_THROWS_AS(check_lemma_pnilp(Lattice(presets::alternating(5)), 2), Error);
  CHECK_THROWS_AS(check_lemma_pnilp(Lattice(s3()), 5), Error);
  CHECK(to_string(CheckStatus::Violated) == "violated");
}

TEST_CASE("abelian sigma covers") {
  const auto a = check_bryce_serena(Lattice(c3c3()));
  CHECK(a.abelian_sigma_cover);
  CHECK(a.status == CheckStatus::Confirmed);
  const auto s = check_bryce_serena(Lattice(s3()));
  CHECK(s.abelian_sigma_cover);
  CHECK(s.solvable);
  const auto a5 = check_bryce_serena(Lattice(presets::alternating(5)));
  CHECK(a5.sigma == 10);
  CHECK_FALSE(a5.abelian_sigma_cover);
  REQUIRE(a5.abelian_cover_size.has_value());
  CHECK(*a5.abelian_cover_size > a5.sigma);
  CHECK(a5.status != CheckStatus::Violated);
}

TEST_CASE("quotient checks for one-sized groups") {
  const auto q = check_osclemma_quotients(Lattice(presets::generalized_quaternion(3)));
  CHECK(q.status == CheckStatus::Confirmed);
  bool saw_v4 = false;
  for (const auto& c : q.checks) {
    CHECK(c.holds);
    if (c.quotient_order == 4) {
      saw_v4 = true;
      CHECK(c.sigma == 3);
      CHECK(c.lambda == 3);
    }
  }
  CHECK(saw_v4);

  const auto s = check_osclemma_quotients(Lattice(s3()));
  REQUIRE_FALSE(s.checks.empty());
  CHECK(s.checks.front().kernel.order == 1);
  CHECK(s.checks.front().sigma == 4);

  const auto p = check_osclemma_quotients(Lattice(presets::direct_product(s3(), presets::cyclic(5))));
  bool saw_s3 = false;
  for (const auto& c : p.checks)
    if (c.kernel.order == 5) {
      saw_s3 = true;
      CHECK(c.sigma == 4);
      CHECK(c.holds);
    }
  CHECK(saw_s3);

  try {
    check_osclemma_quotients(Lattice(presets::dihedral(4)));
    FAIL("expected PreconditionViolation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PreconditionViolation);
  }
}

TEST_CASE("two generation") {
  const auto r = check_two_generation(Lattice(presets::semidirect_cp_cn(5, 4, 2)));
  CHECK(r.pairs_checked == 15);
  CHECK(r.pairs_failing == 0);
  CHECK(r.status == CheckStatus::Confirmed);
}

TEST_CASE("property: classification witnesses are sound") {
  for (const auto& c : testing_support::corpus()) {
    const Lattice& l = *c.lattice;
    const Group& g = l.group();
    if (is_cyclic(g)) continue;
    CAPTURE(c.name);
    const auto o = classify(l);
    CHECK(o.one_sized == o.witness_h.has_value());
    CHECK(o.one_sized == o.witness_c.has_value());
    CHECK(o.one_sized == o.family.has_value());
    if (!o.one_sized) continue;
    CHECK(outcome_is_consistent(l, o));
    const auto& h = *o.witness_h;
    const auto& cc = *o.witness_c;
    CHECK((h.members & cc.members) == ElementSet::singleton(0));
    CHECK(h.order * cc.order == g.order());
    CHECK(std::gcd(h.order, cc.order) == 1);
    CHECK(is_cyclic(g, cc.members));
    CHECK(is_normal(g, h.members));
    CHECK(is_normal(g, cc.members));
    switch (o.family->kind) {
      case FamilyTag::Kind::CpTimesCp:
        CHECK(h.order == o.family->p * o.family->p);
        CHECK(exponent(g, h.members) == o.family->p);
        break;
      case FamilyTag::Kind::Q8:
        CHECK(h.order == 8);
        CHECK(involutions(g, h.members) == 1);
        CHECK_FALSE(is_abelian(g, h.members));
        break;
      case FamilyTag::Kind::CpRtimesCn: {
        CHECK(h.order == o.family->p * o.family->n);
        CHECK(o.family->n % o.family->p != 0);
        CHECK_FALSE(is_abelian(g, h.members));
        const Group hg = induced_group(g, h.members);
        bool normal_p = false;
        for (const auto& s : all_subgroups(hg))
          if (s.order == o.family->p && is_normal(hg, s.members)) normal_p = true;
        CHECK(normal_p);
        break;
      }
    }
  }
}

}  // TEST_SUITE
