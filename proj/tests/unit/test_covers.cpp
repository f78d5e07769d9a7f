#include <doctest.h>

#include <algorithm>

#include "covgroup/covers.hpp"
#include "covgroup/error.hpp"
#include "covgroup/set_cover.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using namespace covgroup;

namespace {

Group s3() { return from_permutation_generators(3, std::vector<std::string>{"(1 2 3)", "(1 2)"}); }
Group v4() { return presets::direct_product(presets::cyclic(2), presets::cyclic(2)); }
Group e8() { return presets::direct_product(v4(), presets::cyclic(2)); }

Cover family_of(const Lattice& l, auto pred) {
  Cover c;
  c.group_order = l.group().order();
  for (const auto& h : l.subgroups())
    if (pred(h)) c.members.push_back(h);
  c.canonicalize();
  return c;
}

std::set<std::size_t> sizes_of(const Lattice& l) { return irredundant_cover_sizes(l); }

}  // namespace

TEST_SUITE("covers") {

TEST_CASE("maximal cyclic families") {
  const Lattice q8(presets::generalized_quaternion(3));
  const Cover fq = maximal_cyclic_family(q8);
  CHECK(fq.size() == 3);
  for (const auto& m : fq.members) CHECK(m.order == 4);

  const Lattice e(e8());
  const Cover fe = maximal_cyclic_family(e);
  CHECK(fe.size() == 7);
  for (std::size_t i = 0; i < fe.size(); ++i)
    for (std::size_t j = i + 1; j < fe.size(); ++j)
      CHECK((fe.members[i].members & fe.members[j].members) == ElementSet::singleton(0));

  const Cover fs = maximal_cyclic_family(Lattice(s3()));
  CHECK(fs.size() == 4);
  CHECK_THROWS_AS(maximal_cyclic_family(Lattice(presets::cyclic(6))), Error);
}

TEST_CASE("lambda") {
  CHECK(lambda(Lattice(v4())) == 3);
  CHECK(lambda(Lattice(e8())) == 7);
  CHECK(lambda(Lattice(presets::dihedral(4))) == 5);
}

TEST_CASE("cover predicates") {
  const Lattice l(s3());
  const Cover all_cyclic = family_of(l, [](const Subgroup& h) { return h.order == 2 || h.order == 3; });
  CHECK(is_cover(l.group(), all_cyclic));
  CHECK(is_irredundant(l.group(), all_cyclic));
  const Cover a3 = family_of(l, [](const Subgroup& h) { return h.order == 3; });
  CHECK_FALSE(is_cover(l.group(), a3));
  CHECK_FALSE(is_irredundant(l.group(), a3));

  const Lattice e(e8());
  bool taken = false;
  const Cover padded = family_of(e, [&](const Subgroup& h) {
    if (h.order == 2) return true;
    if (h.order == 4 && !taken) return taken = true;
    return false;
  });
  CHECK(padded.size() == 8);
  CHECK(is_cover(e.group(), padded));
  CHECK_FALSE(is_irredundant(e.group(), padded));

  const Cover with_whole = family_of(l, [](const Subgroup& h) { return h.order == 6; });
  CHECK_THROWS_AS(is_cover(l.group(), with_whole), Error);
}

TEST_CASE("sigma") {
  CHECK(sigma_exact(Lattice(v4())) == SigmaValue::finite(3));
  CHECK(sigma_exact(Lattice(s3())) == SigmaValue::finite(4));
  CHECK(sigma_exact(Lattice(presets::cyclic(6))).is_infinite());
  CHECK(sigma_exact(Lattice(presets::cyclic(6))).to_string() == "infinite");
  CHECK(sigma_exact(Lattice(presets::alternating(5))) == SigmaValue::finite(10));
}

TEST_CASE("Tomkinson formula") {
  CHECK(sigma_tomkinson(Lattice(s3())) == SigmaValue::finite(4));
  CHECK(sigma_tomkinson(Lattice(v4())) == SigmaValue::finite(3));
  CHECK(sigma_tomkinson(Lattice(presets::direct_product(presets::cyclic(3), presets::cyclic(3)))) ==
        SigmaValue::finite(4));
  CHECK(sigma_tomkinson(Lattice(presets::cyclic(9))).is_infinite());
  try {
    sigma_tomkinson(Lattice(presets::alternating(5)));
    FAIL("expected NotSolvable");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSolvable);
  }
}

TEST_CASE("irredundant covers of small groups") {
  const Lattice l4(v4());
  const auto c4 = enumerate_irredundant_covers(l4);
  REQUIRE(c4.size() == 1);
  CHECK(c4.front().size() == 3);

  const Lattice q8(presets::generalized_quaternion(3));
  const auto cq = enumerate_irredundant_covers(q8);
  REQUIRE(cq.size() == 1);
  CHECK(cq.front() == maximal_cyclic_family(q8));
  CHECK(sizes_of(q8) == std::set<std::size_t>{3});

  const auto se = sizes_of(Lattice(e8()));
  CHECK(se.count(3) == 1);
  CHECK(se.count(7) == 1);
  CHECK(sizes_of(Lattice(s3())) == std::set<std::size_t>{4});
}

TEST_CASE("enumeration bound and cap") {
  const Lattice e(e8());
  const auto capped = enumerate_irredundant_covers(e, EnumerationOptions{32, 4, false});
  CHECK_FALSE(capped.empty());
  for (const auto& c : capped) CHECK(c.size() <= 4);
  CHECK(capped.size() < enumerate_irredundant_covers(e).size());

  const Lattice big(presets::direct_product(presets::generalized_quaternion(3), presets::cyclic(5)));
  try {
    enumerate_irredundant_covers(big);
    FAIL("expected EnumerationBoundExceeded");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::EnumerationBoundExceeded);
  }
  CHECK(enumerate_irredundant_covers(big, EnumerationOptions{32, std::nullopt, true}).size() == 1);
}

TEST_CASE("enumeration output is canonical and duplicate free") {
  const auto covers = enumerate_irredundant_covers(Lattice(presets::dihedral(4)));
  CHECK(covers.size() == 4);
  CHECK(std::is_sorted(covers.begin(), covers.end()));
  CHECK(std::adjacent_find(covers.begin(), covers.end()) == covers.end());
}

TEST_CASE("Frobenius-style covers") {
  auto check = [](const Group& g, std::size_t n_order) {
    const Lattice l(g);
    const Subgroup* n = nullptr;
    const Subgroup* h = nullptr;
    for (const auto& s : l.subgroups()) {
      if (s.order == n_order && s.normal) n = &s;
      if (s.order == g.order() / n_order && !s.normal && is_cyclic(g, s.members) && !h) h = &s;
    }
    REQUIRE(n != nullptr);
    REQUIRE(h != nullptr);
    const Cover c = frobenius_style_cover(g, n->members, h->members);
    CHECK(c.size() == n_order + 1);
    CHECK(is_irredundant(g, c));
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j)
        CHECK((c.members[i].members & c.members[j].members) == ElementSet::singleton(0));
    CHECK(n_order + (h->order - 1) * n_order == g.order());
  };
  check(s3(), 3);
  check(presets::dihedral(5), 5);
  check(presets::semidirect_cp_cn(5, 4, 2), 5);
  check(presets::semidirect_cp_cn(7, 3, 2), 7);
}

TEST_CASE("Frobenius-style preconditions are named") {
  const Group g = s3();
  const Lattice l(g);
  const ElementSet a3 = l.at(4).members;  // the order-3 subgroup sorts after the three of order 2
  REQUIRE(a3.size() == 3);
  const ElementSet t = l.at(1).members;
  try {
    frobenius_style_cover(g, t, a3);
    FAIL("expected PreconditionViolation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PreconditionViolation);
  }
  // D8: a reflection subgroup is not maximal.
  const Lattice d(presets::dihedral(4));
  const Subgroup* rot = nullptr;
  const Subgroup* refl = nullptr;
  for (const auto& s : d.subgroups()) {
    if (s.order == 4 && is_cyclic(d.group(), s.members)) rot = &s;
    if (s.order == 2 && !s.normal && !refl) refl = &s;
  }
  REQUIRE(rot);
  REQUIRE(refl);
  CHECK_THROWS_AS(frobenius_style_cover(d.group(), rot->members, refl->members), Error);
}

TEST_CASE("one-sized brute force") {
  CHECK(one_sized_bruteforce(Lattice(presets::generalized_quaternion(3))));
  CHECK_FALSE(one_sized_bruteforce(Lattice(e8())));
  CHECK_FALSE(one_sized_bruteforce(Lattice(presets::dihedral(4))));
  const auto ev = one_sized_evidence(Lattice(presets::dihedral(4)));
  CHECK(ev.lambda == 5);
  CHECK(ev.sigma == 3);
  CHECK_THROWS_AS(one_sized_bruteforce(Lattice(presets::cyclic(5))), Error);
}

TEST_CASE("set cover solver") {
  const ElementSet u = ElementSet::range(6);
  auto set = [](std::initializer_list<Element> xs) {
    ElementSet s;
    for (auto x : xs) s.insert(x);
    return s;
  };
  // Greedy takes the big set first and then needs three more.
  const std::vector<ElementSet> c{set({0, 1, 2, 3}), set({0, 1, 4}), set({2, 3, 5}), set({1, 5}), set({0, 4})};
  CHECK(greedy_set_cover(u, c).size() >= minimum_set_cover(u, c).size());
  const auto best = minimum_set_cover(u, c);
  CHECK(best.size() == 2);
  CHECK(covers_universe(u, c, best));
  CHECK(minimum_set_cover(u, std::vector<ElementSet>{set({0, 1})}).empty());
}

TEST_CASE("oracle: sigma over maximal subgroups equals sigma over all subgroups up to order 16") {
  for (const auto& c : testing_support::corpus()) {
    if (c.group().order() > 16) continue;
    CAPTURE(c.name);
    const auto ours = sigma_exact(*c.lattice);
    const auto theirs = oracle::sigma_unrestricted(c.group());
    CHECK(ours.is_infinite() == !theirs.has_value());
    if (theirs) CHECK(ours.value() == *theirs);
  }
}

TEST_CASE("oracle: enumeration matches family search up to order 16") {
  for (const auto& c : testing_support::corpus()) {
    const Group& g = c.group();
    if (g.order() > 16 || is_cyclic(g)) continue;
    CAPTURE(c.name);
    std::map<std::size_t, std::size_t> ours;
    for_each_irredundant_cover(*c.lattice, {}, [&](std::span<const std::size_t> m) { ++ours[m.size()]; });
    CHECK(ours == oracle::irredundant_cover_histogram(g));
  }
}

TEST_CASE("property: cover invariants on the corpus") {
  for (const auto& c : testing_support::corpus()) {
    const Lattice& l = *c.lattice;
    const Group& g = l.group();
    CAPTURE(c.name);
    const SigmaValue s = sigma_exact(l);
    CHECK(s.is_infinite() == is_cyclic(g));
    if (is_cyclic(g)) continue;

    const Cover mc = maximal_cyclic_family(l);
    CHECK(is_cover(g, mc));
    CHECK(is_irredundant(g, mc));
    const Cover best = minimum_cover(l);
    CHECK(best.size() == s.value());
    CHECK(is_cover(g, best));
    CHECK(best.size() <= greedy_cover(l).size());
    if (is_solvable(g)) CHECK(sigma_tomkinson(l) == s);

    // sigma(G) <= sigma(G/N) for every proper normal N with non-cyclic quotient.
    for (std::size_t idx : l.normal_indices()) {
      const auto& n = l.at(idx);
      if (n.order == 1 || n.order == g.order()) continue;
      const Group q = quotient(g, n.members).group;
      if (is_cyclic(q)) continue;
      CHECK(s.value() <= sigma_exact(Lattice(q)).value());
    }
  }
}

}  // TEST_SUITE
