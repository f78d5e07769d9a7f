#include <doctest.h>

#include <algorithm>

#include "covgroup/error.hpp"
#include "covgroup/lattice.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using namespace covgroup;

namespace {

Group s3() { return from_permutation_generators(3, std::vector<std::string>{"(1 2 3)", "(1 2)"}); }

std::vector<std::size_t> orders_of(const std::vector<CyclicSubgroup>& cs) {
  std::vector<std::size_t> out;
  for (const auto& c : cs) out.push_back(c.subgroup.order);
  return out;
}

std::size_t maximal_cyclic_count(const std::vector<CyclicSubgroup>& cs) {
  return static_cast<std::size_t>(std::count_if(cs.begin(), cs.end(), [](const auto& c) { return c.maximal_cyclic; }));
}

}  // namespace

TEST_SUITE("subgroup_lattice") {

TEST_CASE("cyclic subgroups") {
  const auto c4 = cyclic_subgroups(presets::cyclic(4));
  CHECK(orders_of(c4) == std::vector<std::size_t>{1, 2, 4});
  CHECK(maximal_cyclic_count(c4) == 1);

  const auto q8 = cyclic_subgroups(presets::generalized_quaternion(3));
  CHECK(orders_of(q8) == std::vector<std::size_t>{1, 2, 4, 4, 4});
  CHECK(maximal_cyclic_count(q8) == 3);

  const Group e8 = presets::direct_product(presets::direct_product(presets::cyclic(2), presets::cyclic(2)),
                                           presets::cyclic(2));
  const auto e = cyclic_subgroups(e8);
  CHECK(maximal_cyclic_count(e) == 7);
  for (const auto& c : e)
    if (c.maximal_cyclic) CHECK(c.subgroup.order == 2);
}

TEST_CASE("all subgroups of small groups") {
  CHECK(all_subgroups(presets::cyclic(7)).size() == 2);
  const auto s = all_subgroups(s3());
  REQUIRE(s.size() == 6);
  CHECK(s.front().order == 1);
  CHECK(s.back().order == 6);
  const auto q = all_subgroups(presets::generalized_quaternion(3));
  std::vector<std::size_t> orders;
  for (const auto& h : q) orders.push_back(h.order);
  CHECK(orders == std::vector<std::size_t>{1, 2, 4, 4, 4, 8});
}

TEST_CASE("lattice order bound") {
  CHECK_THROWS_AS(Lattice(presets::alternating(5), 32), Error);
  CHECK_THROWS_AS(all_subgroups(presets::alternating(5), 32), Error);
}

TEST_CASE("maximal, Frattini and core") {
  const Lattice q8(presets::generalized_quaternion(3));
  CHECK(frattini(q8).members == center(q8.group()));
  CHECK(maximal_subgroups(q8).size() == 3);

  const Lattice l(s3());
  CHECK(frattini(l).order == 1);
  for (const auto& h : l.subgroups())
    if (h.order == 2) CHECK(normal_core(l.group(), h.members).order == 1);
  CHECK(normal_subgroups(l).size() == 3);
  const auto mins = minimal_normal_subgroups(l);
  REQUIRE(mins.size() == 1);
  CHECK(mins.front().order == 3);
}

TEST_CASE("solvability predicates") {
  const Lattice l(s3());
  CHECK(is_solvable(l.group()));
  CHECK_FALSE(is_nilpotent(l));
  CHECK(is_nilpotent(Lattice(presets::generalized_quaternion(3))));
  CHECK_FALSE(is_supersolvable(Lattice(presets::alternating(4))));
  CHECK(is_supersolvable(Lattice(presets::symmetric(3))));
  CHECK_FALSE(is_solvable(presets::alternating(5)));
  CHECK(derived_series(presets::alternating(5)).size() == 1);
}

TEST_CASE("Sylow subgroups") {
  const Lattice l(presets::symmetric(4));
  CHECK(sylow_subgroup(l, 2).order == 8);
  CHECK(sylow_subgroup(l, 3).order == 3);
  try {
    sylow_subgroup(l, 5);
    FAIL("expected PrimeDoesNotDivideOrder");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PrimeDoesNotDivideOrder);
  }
}

TEST_CASE("chief series of S3") {
  const auto series = chief_series(Lattice(s3()));
  REQUIRE(series.size() == 2);
  CHECK(series[0].factor_order == 3);
  CHECK(series[0].complement_count == 3);
  CHECK_FALSE(series[0].central);
  CHECK(series[1].factor_order == 2);
}

TEST_CASE("chief series of C2 x C2") {
  const auto series = chief_series(Lattice(presets::direct_product(presets::cyclic(2), presets::cyclic(2))));
  REQUIRE(series.size() == 2);
  CHECK(series[0].factor_order == 2);
  CHECK(series[0].complement_count == 2);
}

TEST_CASE("chief series of C4") {
  const auto series = chief_series(Lattice(presets::cyclic(4)));
  REQUIRE(series.size() == 2);
  CHECK(series[0].factor_order == 2);
  CHECK(series[1].factor_order == 2);
  CHECK(series[0].complement_count == 0);
  CHECK_FALSE(series[0].complemented);
  // The top factor G/N1 is complemented by N1/N1 itself: exactly one
  // complement, as for every top factor.
  CHECK(series[1].complement_count == 1);
}

TEST_CASE("normal p-complements") {
  const Lattice l(s3());
  CHECK(has_normal_p_complement(l, 2));
  CHECK_FALSE(has_normal_p_complement(l, 3));
  const Lattice a(presets::direct_product(presets::cyclic(4), presets::cyclic(6)));
  for (std::size_t p : {2, 3}) CHECK(has_normal_p_complement(a, p));
  CHECK_THROWS_AS(has_normal_p_complement(l, 5), Error);
}

TEST_CASE("oracle: join closure matches subset brute force up to order 16") {
  std::size_t checked = 0;
  for (const auto& c : testing_support::corpus()) {
    if (c.group().order() > 16) continue;
    CAPTURE(c.name);
    std::set<std::vector<Element>> ours;
    for (const auto& h : c.lattice->subgroups()) ours.insert(h.members.elements());
    CHECK(ours.size() == c.lattice->subgroups().size());
    CHECK(ours == oracle::subgroups_by_subsets(c.group()));
    ++checked;
  }
  CHECK(checked >= 40);
}

TEST_CASE("property: subgroup lattice invariants on the corpus") {
  for (const auto& c : testing_support::corpus()) {
    CAPTURE(c.name);
    const Lattice& l = *c.lattice;
    const Group& g = l.group();
    for (const auto& h : l.subgroups()) {
      CHECK(oracle::closed(g, h.members));
      CHECK(h.order == h.members.size());
      CHECK(g.order() % h.order == 0);
      CHECK(h.normal == is_normal(g, h.members));
    }
    CHECK(std::is_sorted(l.subgroups().begin(), l.subgroups().end(), canonical_less));

    const auto maxes = maximal_subgroups(l);
    const Subgroup phi = frattini(l);
    CHECK(is_normal(g, phi.members));
    for (const auto& m : maxes) {
      CHECK(l.index_of(m.members).has_value());
      CHECK(phi.members.is_subset_of(m.members));
      for (const auto& h : l.subgroups())
        CHECK_FALSE((m.members.is_subset_of(h.members) && h.order != m.order && h.order != g.order()));
    }

    if (!is_solvable(g)) continue;
    const auto series = chief_series(l);
    std::size_t product = 1;
    for (const auto& f : series) {
      product *= f.factor_order;
      CHECK(f.factor_order == f.upper.order / f.lower.order);
      CHECK(f.lower.members.is_subset_of(f.upper.members));
      CHECK(f.lower.order < f.upper.order);
      CHECK(is_normal(g, f.lower.members));
      CHECK(is_normal(g, f.upper.members));
      CHECK(f.complemented == (f.complement_count >= 1));
      for (std::size_t idx : l.normal_indices()) {
        const auto& n = l.at(idx);
        const bool strictly_between = f.lower.members.is_subset_of(n.members) &&
                                      n.members.is_subset_of(f.upper.members) && n.order != f.lower.order &&
                                      n.order != f.upper.order;
        CHECK_FALSE(strictly_between);
      }
      if (is_supersolvable(l)) CHECK(is_prime(f.factor_order));
    }
    CHECK(product == g.order());
  }
}

}  // TEST_SUITE
