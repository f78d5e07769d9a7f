#include "covgroup/classification.hpp"

#include <algorithm>
#include <numeric>
#include <regex>

#include "covgroup/error.hpp"
#include "covgroup/set_cover.hpp"

namespace covgroup {

std::string FamilyTag::to_string() const {
  switch (kind) {
    case Kind::CpTimesCp: return "CpTimesCp(" + std::to_string(p) + ")";
    case Kind::Q8: return "Q8";
    case Kind::CpRtimesCn: return "CpRtimesCn(" + std::to_string(p) + "," + std::to_string(n) + ")";
  }
  return {};
}

std::optional<FamilyTag> FamilyTag::parse(const std::string& text) {
  static const std::regex cp_cp(R"(CpTimesCp\((\d+)\))");
  static const std::regex cp_cn(R"(CpRtimesCn\((\d+),(\d+)\))");
  std::smatch m;
  if (text == "Q8") return q8();
  if (std::regex_match(text, m, cp_cp)) return cp_times_cp(std::stoul(m[1]));
  if (std::regex_match(text, m, cp_cn)) return cp_rtimes_cn(std::stoul(m[1]), std::stoul(m[2]));
  return std::nullopt;
}

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Confirmed: return "confirmed";
    case CheckStatus::Vacuous: return "vacuous";
    case CheckStatus::Violated: return "violated";
  }
  return {};
}

namespace {

bool normal_in(const Group& g, const ElementSet& sub, const ElementSet& ambient) {
  bool ok = true;
  ambient.for_each([&](Element x) {
    if (ok && !conjugate_set(g, sub, x).is_subset_of(sub)) ok = false;
  });
  return ok;
}

std::size_t count_of_order(const Group& g, const ElementSet& s, std::size_t k) {
  std::size_t count = 0;
  s.for_each([&](Element x) {
    if (element_order(g, x) == k) ++count;
  });
  return count;
}

}  // namespace

std::optional<FamilyTag> recognize_family(const Group& g, const ElementSet& h) {
  const std::size_t n = h.size();
  const bool abelian = is_abelian(g, h);

  const auto primes = prime_divisors(n);
  if (primes.size() == 1 && n == primes[0] * primes[0] && abelian) {
    const std::size_t p = primes[0];
    if (count_of_order(g, h, p) == n - 1) return FamilyTag::cp_times_cp(p);
  }

  if (n == 8 && !abelian && count_of_order(g, h, 2) == 1) return FamilyTag::q8();

  if (!abelian) {
    for (auto p : primes) {
      if (p_part(n, p) != p) continue;
      const std::size_t m = n / p;
      if (m < 2) continue;
      bool normal_p = false;
      h.for_each([&](Element x) {
        if (!normal_p && element_order(g, x) == p && normal_in(g, cyclic_subgroup(g, x), h)) normal_p = true;
      });
      if (normal_p && count_of_order(g, h, m) > 0) return FamilyTag::cp_rtimes_cn(p, m);
    }
  }
  return std::nullopt;
}

ClassificationOutcome classify(const Lattice& lattice) {
  const Group& g = lattice.group();
  if (is_cyclic(g)) throw Error(ErrorCode::GroupIsCyclic, "classify requires a non-cyclic group");
  const std::size_t order = g.order();

  std::vector<const Subgroup*> cyclic_normals;
  for (auto i : lattice.normal_indices())
    if (is_cyclic(g, lattice.at(i).members)) cyclic_normals.push_back(&lattice.at(i));

  for (auto hi : lattice.normal_indices()) {
    const Subgroup& h = lattice.at(hi);
    if (order % h.order != 0) continue;
    const std::size_t c_order = order / h.order;
    if (std::gcd(h.order, c_order) != 1) continue;
    for (const Subgroup* c : cyclic_normals) {
      if (c->order != c_order) continue;
      if ((h.members & c->members).size() != 1) continue;
      if (auto tag = recognize_family(g, h.members)) {
        ClassificationOutcome out;
        out.one_sized = true;
        out.witness_h = h;
        out.witness_c = *c;
        out.family = tag;
        return out;
      }
    }
  }
  return ClassificationOutcome{};
}

bool outcome_is_consistent(const Lattice& lattice, const ClassificationOutcome& outcome) {
  const Group& g = lattice.group();
  const bool all_present = outcome.witness_h && outcome.witness_c && outcome.family;
  const bool none_present = !outcome.witness_h && !outcome.witness_c && !outcome.family;
  if (outcome.one_sized != all_present) return false;
  if (!outcome.one_sized) return none_present;
  const auto& h = *outcome.witness_h;
  const auto& c = *outcome.witness_c;
  return is_subgroup(g, h.members) && is_subgroup(g, c.members) && is_normal(g, h.members) &&
         is_normal(g, c.members) && (h.members & c.members).size() == 1 && h.order * c.order == g.order() &&
         std::gcd(h.order, c.order) == 1 && is_cyclic(g, c.members) &&
         recognize_family(g, h.members) == outcome.family;
}

Theorem1Record verify_theorem1(const Lattice& lattice, const EnumerationOptions& options) {
  Theorem1Record r;
  r.outcome = classify(lattice);
  r.evidence = one_sized_evidence(lattice, options);
  r.agreement = r.outcome.one_sized == r.evidence.one_sized;
  return r;
}

PnilpRecord check_lemma_pnilp(const Lattice& lattice, std::size_t p) {
  const Group& g = lattice.group();
  if (!is_solvable(g)) throw Error(ErrorCode::NotSolvable, "p-nilpotency check requires a solvable group");
  if (!is_prime(p)) throw Error(ErrorCode::InvalidParameters, std::to_string(p) + " is not prime");
  if (g.order() % p != 0)
    throw Error(ErrorCode::PrimeDoesNotDivideOrder,
                std::to_string(p) + " does not divide " + std::to_string(g.order()));
  PnilpRecord r;
  r.prime = p;
  r.hypothesis = true;
  for (const auto& f : chief_series(lattice))
    if (f.prime == p && f.complemented && !f.central) r.hypothesis = false;
  r.conclusion = has_normal_p_complement(lattice, p);
  if (!r.hypothesis)
    r.status = CheckStatus::Vacuous;
  else
    r.status = r.conclusion ? CheckStatus::Confirmed : CheckStatus::Violated;
  return r;
}

BryceSerenaRecord check_bryce_serena(const Lattice& lattice) {
  const Group& g = lattice.group();
  if (is_cyclic(g)) throw Error(ErrorCode::GroupIsCyclic, "Bryce-Serena check requires a non-cyclic group");
  BryceSerenaRecord r;
  r.sigma = sigma_exact(lattice).value();
  r.solvable = is_solvable(g);

  const auto subgroups = lattice.subgroups();
  std::vector<std::size_t> abelian;
  for (std::size_t i = 0; i + 1 < subgroups.size(); ++i)
    if (is_abelian(g, subgroups[i].members)) abelian.push_back(i);
  std::vector<ElementSet> maximal_abelian;
  for (auto i : abelian) {
    const bool maximal = std::none_of(abelian.begin(), abelian.end(), [&](std::size_t j) {
      return subgroups[j].order > subgroups[i].order && subgroups[i].members.is_subset_of(subgroups[j].members);
    });
    if (maximal) maximal_abelian.push_back(subgroups[i].members);
  }

  ElementSet universe = g.all();
  universe.erase(Group::identity());
  const auto chosen = minimum_set_cover(universe, maximal_abelian);
  if (!chosen.empty()) r.abelian_cover_size = chosen.size();
  r.abelian_sigma_cover = r.abelian_cover_size && *r.abelian_cover_size == r.sigma;
  if (!r.abelian_sigma_cover)
    r.status = CheckStatus::Vacuous;
  else
    r.status = r.solvable ? CheckStatus::Confirmed : CheckStatus::Violated;
  return r;
}

namespace {

void require_one_sized(const Lattice& lattice, const char* what) {
  if (is_cyclic(lattice.group()) || lambda(lattice) != sigma_exact(lattice).value())
    throw Error(ErrorCode::PreconditionViolation, std::string(what) + " requires a one-sized group");
}

}  // namespace

OsclemmaQuotientRecord check_osclemma_quotients(const Lattice& lattice) {
  require_one_sized(lattice, "quotient check");
  const Group& g = lattice.group();
  OsclemmaQuotientRecord r;
  r.sigma = sigma_exact(lattice).value();
  bool all_hold = true;
  for (auto i : lattice.normal_indices()) {
    const Subgroup& n = lattice.at(i);
    auto q = quotient(g, n.members);
    if (is_cyclic(q.group)) continue;
    Lattice ql(q.group);
    QuotientCheck c;
    c.kernel = n;
    c.quotient_order = q.group.order();
    c.sigma = sigma_exact(ql).value();
    c.lambda = lambda(ql);
    c.holds = c.sigma == r.sigma && c.lambda == r.sigma;
    all_hold = all_hold && c.holds;
    r.checks.push_back(c);
  }
  r.status = all_hold ? CheckStatus::Confirmed : CheckStatus::Violated;
  return r;
}

TwoGenerationRecord check_two_generation(const Lattice& lattice) {
  require_one_sized(lattice, "two-generation check");
  const Group& g = lattice.group();
  std::vector<Element> gens;
  for (const auto& c : lattice.cyclic())
    if (c.maximal_cyclic) gens.push_back(c.generator);
  TwoGenerationRecord r;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const Element pair[] = {gens[i], gens[j]};
      ++r.pairs_checked;
      if (generated_subgroup(g, std::span<const Element>(pair)).size() != g.order()) ++r.pairs_failing;
    }
  r.status = r.pairs_failing == 0 ? CheckStatus::Confirmed : CheckStatus::Violated;
  return r;
}

OsclemmaCoverRecord check_osclemma_covers(const Lattice& lattice, const EnumerationOptions& options) {
  const Group& g = lattice.group();
  OsclemmaCoverRecord r;
  const Cover family = maximal_cyclic_family(lattice);
  r.lambda = family.size();
  r.sigma = sigma_exact(lattice).value();
  r.maximal_cyclic_family_irredundant = is_irredundant(g, family);

  // Maximal cyclic subgroups inside each lattice member, computed once.
  const auto subgroups = lattice.subgroups();
  std::vector<std::size_t> inside(subgroups.size());
  for (std::size_t i = 0; i < subgroups.size(); ++i)
    inside[i] = maximal_cyclic_subgroups_inside(lattice, subgroups[i].members);

  for_each_irredundant_cover(lattice, options, [&](std::span<const std::size_t> members) {
    ++r.covers_examined;
    if (members.size() < r.sigma || members.size() > r.lambda) ++r.covers_outside_range;
    const bool exactly_one = std::all_of(members.begin(), members.end(), [&](std::size_t i) { return inside[i] == 1; });
    if ((members.size() == r.lambda) != exactly_one) ++r.lambda_criterion_failures;
  });
  const bool ok = r.maximal_cyclic_family_irredundant && r.covers_outside_range == 0 &&
                  r.lambda_criterion_failures == 0 && r.covers_examined > 0;
  r.status = ok ? CheckStatus::Confirmed : CheckStatus::Violated;
  return r;
}

}  // namespace covgroup
