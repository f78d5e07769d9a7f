#include "covgroup/covers.hpp"

#include <algorithm>
#include <limits>

#include "covgroup/error.hpp"
#include "covgroup/set_cover.hpp"

namespace covgroup {

void Cover::canonicalize() {
  std::sort(members.begin(), members.end(), canonical_less);
  members.erase(std::unique(members.begin(), members.end()), members.end());
}

std::strong_ordering operator<=>(const Cover& a, const Cover& b) {
  if (auto c = a.members.size() <=> b.members.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.members.size(); ++i)
    if (auto c = canonical_compare(a.members[i].members, b.members[i].members); c != 0) return c;
  return std::strong_ordering::equal;
}

namespace {

void require_non_cyclic(const Group& g, const char* what) {
  if (is_cyclic(g)) throw Error(ErrorCode::GroupIsCyclic, std::string(what) + " requires a non-cyclic group");
}

void require_proper_members(const Group& g, const Cover& family) {
  for (const auto& m : family.members)
    if (m.members.size() >= g.order() || !is_subgroup(g, m.members))
      throw Error(ErrorCode::NotProperSubgroup, "cover member of order " + std::to_string(m.members.size()) +
                                                    " is not a proper subgroup");
}

Cover cover_from_indices(const Lattice& lattice, const std::vector<std::size_t>& indices) {
  Cover c;
  c.group_order = lattice.group().order();
  for (auto i : indices) c.members.push_back(lattice.at(i));
  c.canonicalize();
  return c;
}

std::vector<ElementSet> maximal_candidate_sets(const Lattice& lattice) {
  std::vector<ElementSet> sets;
  for (auto i : lattice.maximal_indices()) sets.push_back(lattice.at(i).members);
  return sets;
}

ElementSet non_identity(const Group& g) {
  ElementSet u = g.all();
  u.erase(Group::identity());
  return u;
}

Cover cover_from_maximal_choice(const Lattice& lattice, const std::vector<std::size_t>& chosen) {
  std::vector<std::size_t> indices;
  for (auto c : chosen) indices.push_back(lattice.maximal_indices()[c]);
  return cover_from_indices(lattice, indices);
}

}  // namespace

Cover maximal_cyclic_family(const Lattice& lattice) {
  require_non_cyclic(lattice.group(), "maximal_cyclic_family");
  Cover c;
  c.group_order = lattice.group().order();
  for (const auto& cyc : lattice.cyclic())
    if (cyc.maximal_cyclic) c.members.push_back(cyc.subgroup);
  c.canonicalize();
  return c;
}

std::size_t lambda(const Lattice& lattice) { return maximal_cyclic_family(lattice).size(); }

bool is_cover(const Group& g, const Cover& family) {
  require_proper_members(g, family);
  ElementSet u;
  for (const auto& m : family.members) u |= m.members;
  return u == g.all();
}

bool is_irredundant(const Group& g, const Cover& family) {
  if (!is_cover(g, family)) return false;
  for (std::size_t i = 0; i < family.members.size(); ++i) {
    ElementSet others;
    for (std::size_t j = 0; j < family.members.size(); ++j)
      if (j != i) others |= family.members[j].members;
    if (family.members[i].members.is_subset_of(others)) return false;
  }
  return true;
}

Cover minimum_cover(const Lattice& lattice) {
  require_non_cyclic(lattice.group(), "minimum_cover");
  const auto sets = maximal_candidate_sets(lattice);
  const auto chosen = minimum_set_cover(non_identity(lattice.group()), sets);
  if (chosen.empty()) throw Error(ErrorCode::ConsistencyViolation, "maximal subgroups fail to cover a non-cyclic group");
  return cover_from_maximal_choice(lattice, chosen);
}

Cover greedy_cover(const Lattice& lattice) {
  require_non_cyclic(lattice.group(), "greedy_cover");
  const auto sets = maximal_candidate_sets(lattice);
  return cover_from_maximal_choice(lattice, greedy_set_cover(non_identity(lattice.group()), sets));
}

SigmaValue sigma_exact(const Lattice& lattice) {
  if (is_cyclic(lattice.group())) return SigmaValue::infinite();
  return SigmaValue::finite(minimum_cover(lattice).size());
}

SigmaValue sigma_tomkinson(const Lattice& lattice) {
  const Group& g = lattice.group();
  if (is_cyclic(g)) return SigmaValue::infinite();
  if (!is_solvable(g)) throw Error(ErrorCode::NotSolvable, "Tomkinson's formula needs a solvable group");
  std::optional<std::size_t> q;
  for (const auto& f : chief_series(lattice))
    if (f.complement_count >= 2 && (!q || f.factor_order < *q)) q = f.factor_order;
  if (!q) throw Error(ErrorCode::NoFactorWithMultipleComplements, "no chief factor has two or more complements");
  return SigmaValue::finite(*q + 1);
}

namespace {

class IrredundantSearch {
 public:
  IrredundantSearch(const Lattice& lattice, std::optional<std::size_t> cap, const IrredundantCoverVisitor& visit)
      : lattice_(lattice), cap_(cap), visit_(visit) {
    const auto subgroups = lattice.subgroups();
    for (const auto& cyc : lattice.cyclic()) {
      if (!cyc.maximal_cyclic) continue;
      generators_.push_back(cyc.generator);
      std::vector<std::size_t> containing;
      for (std::size_t i = 0; i + 1 < subgroups.size(); ++i)
        if (subgroups[i].members.contains(cyc.generator)) containing.push_back(i);
      candidates_.push_back(std::move(containing));
    }
  }

  void run() { search(0, ElementSet{}, ElementSet{}); }

 private:
  struct Decision {
    Element generator;
    std::size_t member;
  };

  // Each cover is produced once: the member chosen for a generator must be the
  // canonically least member of the final family containing that generator.
  // A later, canonically smaller member containing an earlier decision's
  // generator therefore kills the branch.
  void search(std::size_t start, const ElementSet& once, const ElementSet& multi) {
    const ElementSet covered = once | multi;
    std::size_t i = start;
    while (i < generators_.size() && covered.contains(generators_[i])) ++i;
    if (i == generators_.size()) {
      family_.clear();
      for (const auto& d : decisions_) family_.push_back(d.member);
      std::sort(family_.begin(), family_.end());
      visit_(family_);
      return;
    }
    if (cap_ && decisions_.size() >= *cap_) return;

    for (auto candidate : candidates_[i]) {
      const ElementSet& m = lattice_.at(candidate).members;
      if (!respects_earlier_decisions(candidate, m)) continue;
      const ElementSet next_multi = multi | (once & m);
      const ElementSet next_once = (once | m) - next_multi;
      if (!has_private_elements(m, next_once)) continue;
      decisions_.push_back(Decision{generators_[i], candidate});
      search(i + 1, next_once, next_multi);
      decisions_.pop_back();
    }
  }

  bool respects_earlier_decisions(std::size_t candidate, const ElementSet& m) const {
    for (const auto& d : decisions_)
      if (candidate < d.member && m.contains(d.generator)) return false;
    return true;
  }

  bool has_private_elements(const ElementSet& added, const ElementSet& once) const {
    if (!added.intersects(once)) return false;
    for (const auto& d : decisions_)
      if (!lattice_.at(d.member).members.intersects(once)) return false;
    return true;
  }

  const Lattice& lattice_;
  std::optional<std::size_t> cap_;
  const IrredundantCoverVisitor& visit_;
  std::vector<Element> generators_;
  std::vector<std::vector<std::size_t>> candidates_;
  std::vector<Decision> decisions_;
  std::vector<std::size_t> family_;
};

}  // namespace

void for_each_irredundant_cover(const Lattice& lattice, const EnumerationOptions& options,
                                const IrredundantCoverVisitor& visit) {
  const Group& g = lattice.group();
  require_non_cyclic(g, "enumerate_irredundant_covers");
  if (g.order() > options.order_bound && !options.force)
    throw Error(ErrorCode::EnumerationBoundExceeded, "order " + std::to_string(g.order()) +
                                                         " exceeds enumeration bound " +
                                                         std::to_string(options.order_bound));
  IrredundantSearch(lattice, options.size_cap, visit).run();
}

std::vector<Cover> enumerate_irredundant_covers(const Lattice& lattice, const EnumerationOptions& options) {
  std::vector<Cover> covers;
  for_each_irredundant_cover(lattice, options, [&](std::span<const std::size_t> family) {
    covers.push_back(cover_from_indices(lattice, std::vector<std::size_t>(family.begin(), family.end())));
  });
  std::sort(covers.begin(), covers.end());
  return covers;
}

std::set<std::size_t> irredundant_cover_sizes(const Lattice& lattice, const EnumerationOptions& options) {
  std::set<std::size_t> sizes;
  for_each_irredundant_cover(lattice, options, [&](std::span<const std::size_t> family) { sizes.insert(family.size()); });
  return sizes;
}

std::size_t maximal_cyclic_subgroups_inside(const Lattice& lattice, const ElementSet& members) {
  std::size_t count = 0;
  for (const auto& cyc : lattice.cyclic())
    if (cyc.maximal_cyclic && cyc.subgroup.members.is_subset_of(members)) ++count;
  return count;
}

Cover frobenius_style_cover(const Group& g, const ElementSet& n, const ElementSet& h) {
  auto fail = [](const std::string& why) -> Cover { throw Error(ErrorCode::PreconditionViolation, why); };
  if (!is_subgroup(g, n)) return fail("N is not a subgroup");
  if (!is_subgroup(g, h)) return fail("H is not a subgroup");
  if (!is_normal(g, n)) return fail("N is not normal");
  if (!is_cyclic(g, h)) return fail("H is not cyclic");
  if (h.size() >= g.order()) return fail("H is not proper");
  if ((n & h).size() != 1) return fail("N and H intersect non-trivially");
  if (n.size() * h.size() != g.order()) return fail("NH is not G");
  if (normal_core(g, h).order != 1) return fail("H is not core-free");
  const auto h_gens = h.elements();
  for (Element x = 0; x < g.order(); ++x) {
    if (h.contains(x)) continue;
    std::vector<Element> gens = h_gens;
    gens.push_back(x);
    if (generated_subgroup(g, std::span<const Element>(gens)).size() != g.order()) return fail("H is not maximal");
  }

  Cover c;
  c.group_order = g.order();
  c.members.push_back(make_subgroup(g, n));
  for (Element x = 0; x < g.order(); ++x) c.members.push_back(make_subgroup(g, conjugate_set(g, h, x)));
  c.canonicalize();

  if (c.size() != n.size() + 1)
    throw Error(ErrorCode::ConsistencyViolation, "cover has " + std::to_string(c.size()) + " members");
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if ((c.members[i].members & c.members[j].members).size() != 1)
        throw Error(ErrorCode::ConsistencyViolation, "two cover members meet non-trivially");
  if (!is_irredundant(g, c)) throw Error(ErrorCode::ConsistencyViolation, "constructed cover is redundant");
  return c;
}

OneSizedEvidence one_sized_evidence(const Lattice& lattice, const EnumerationOptions& options) {
  const Group& g = lattice.group();
  require_non_cyclic(g, "one_sized_bruteforce");
  OneSizedEvidence ev;
  ev.lambda = lambda(lattice);
  ev.sigma = sigma_exact(lattice).value();
  ev.one_sized = ev.lambda == ev.sigma;
  if (g.order() <= options.order_bound || options.force) {
    EnumerationOptions uncapped = options;
    uncapped.size_cap.reset();
    uncapped.force = true;
    ev.irredundant_sizes = irredundant_cover_sizes(lattice, uncapped);
    const auto& sizes = *ev.irredundant_sizes;
    if (sizes.empty() || *sizes.begin() != ev.sigma || *sizes.rbegin() != ev.lambda)
      throw Error(ErrorCode::ConsistencyViolation, "enumerated cover sizes disagree with sigma/lambda");
    if ((sizes.size() == 1) != ev.one_sized)
      throw Error(ErrorCode::ConsistencyViolation, "one-sizedness from sizes disagrees with lambda = sigma");
  }
  return ev;
}

bool one_sized_bruteforce(const Lattice& lattice, const EnumerationOptions& options) {
  return one_sized_evidence(lattice, options).one_sized;
}

}  // namespace covgroup
