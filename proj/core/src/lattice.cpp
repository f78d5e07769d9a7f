#include "covgroup/lattice.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "covgroup/error.hpp"

namespace covgroup {

namespace {

/// Small generating set: greedily add elements not yet generated.
std::vector<Element> generating_set(const Group& g) {
  std::vector<Element> gens;
  ElementSet generated = ElementSet::singleton(Group::identity());
  for (Element x = 1; x < g.order(); ++x) {
    if (generated.contains(x)) continue;
    gens.push_back(x);
    generated = generated_subgroup(g, std::span<const Element>(gens));
  }
  return gens;
}

bool normal_under(const Group& g, const ElementSet& s, std::span<const Element> gens) {
  for (Element x : gens)
    if (!conjugate_set(g, s, x).is_subset_of(s)) return false;
  return true;
}

/// Closure of S together with one more element; S must already be a subgroup.
ElementSet join_with(const Group& g, const ElementSet& s, std::span<const Element> s_gens, Element extra) {
  ElementSet members = s;
  std::vector<Element> queue = s.elements();
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Element x = queue[head];
    auto visit = [&](Element gen) {
      const Element y = g.mul(x, gen);
      if (!members.contains(y)) {
        members.insert(y);
        queue.push_back(y);
      }
    };
    for (Element gen : s_gens) visit(gen);
    visit(extra);
  }
  return members;
}

bool is_prime_power(std::size_t n, std::size_t& prime) {
  if (n < 2) return false;
  const auto primes = prime_divisors(n);
  if (primes.size() != 1) return false;
  prime = primes.front();
  return true;
}

}  // namespace

Subgroup make_subgroup(const Group& g, const ElementSet& members) {
  return Subgroup{members, members.size(), is_normal(g, members)};
}

std::vector<CyclicSubgroup> cyclic_subgroups(const Group& g) {
  std::unordered_map<ElementSet, Element, ElementSetHash> seen;
  std::vector<ElementSet> order_seen;
  for (Element x = 0; x < g.order(); ++x) {
    ElementSet c = cyclic_subgroup(g, x);
    if (seen.emplace(c, x).second) order_seen.push_back(c);
  }
  std::sort(order_seen.begin(), order_seen.end(), CanonicalLess{});
  const auto gens = generating_set(g);
  std::vector<CyclicSubgroup> out;
  out.reserve(order_seen.size());
  for (const auto& c : order_seen)
    out.push_back(CyclicSubgroup{Subgroup{c, c.size(), normal_under(g, c, gens)}, seen.at(c), false});
  for (auto& c : out) {
    c.maximal_cyclic = std::none_of(out.begin(), out.end(), [&](const CyclicSubgroup& other) {
      return other.subgroup.order > c.subgroup.order && c.subgroup.members.is_subset_of(other.subgroup.members);
    });
  }
  return out;
}

std::vector<Subgroup> all_subgroups(const Group& g, std::size_t max_order) {
  if (g.order() > max_order)
    throw Error(ErrorCode::OrderBoundExceeded,
                "order " + std::to_string(g.order()) + " exceeds bound " + std::to_string(max_order));
  const auto cyclic = cyclic_subgroups(g);

  struct Node {
    ElementSet members;
    std::vector<Element> gens;
  };
  std::vector<Node> nodes;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  for (const auto& c : cyclic) {
    seen.insert(c.subgroup.members);
    std::vector<Element> gens;
    if (c.generator != Group::identity()) gens.push_back(c.generator);
    nodes.push_back(Node{c.subgroup.members, std::move(gens)});
  }
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (const auto& c : cyclic) {
      if (c.subgroup.members.is_subset_of(nodes[i].members)) continue;
      ElementSet joined = join_with(g, nodes[i].members, nodes[i].gens, c.generator);
      if (seen.insert(joined).second) {
        std::vector<Element> gens = nodes[i].gens;
        gens.push_back(c.generator);
        nodes.push_back(Node{joined, std::move(gens)});
      }
    }
  }

  std::vector<ElementSet> sets;
  sets.reserve(nodes.size());
  for (auto& n : nodes) sets.push_back(n.members);
  std::sort(sets.begin(), sets.end(), CanonicalLess{});
  const auto group_gens = generating_set(g);
  std::vector<Subgroup> out;
  out.reserve(sets.size());
  for (const auto& s : sets) out.push_back(Subgroup{s, s.size(), normal_under(g, s, group_gens)});
  return out;
}

Lattice::Lattice(Group group, std::size_t max_order)
    : group_(std::move(group)), subgroups_(all_subgroups(group_, max_order)), cyclic_(cyclic_subgroups(group_)) {
  const std::size_t count = subgroups_.size();
  for (std::size_t i = 0; i + 1 < count; ++i) {
    bool maximal = true;
    for (std::size_t j = i + 1; j + 1 < count && maximal; ++j)
      if (subgroups_[j].order > subgroups_[i].order && subgroups_[i].members.is_subset_of(subgroups_[j].members))
        maximal = false;
    if (maximal) maximal_.push_back(i);
  }
  for (std::size_t i = 0; i < count; ++i)
    if (subgroups_[i].normal) normal_.push_back(i);
}

std::optional<std::size_t> Lattice::index_of(const ElementSet& members) const {
  auto it = std::lower_bound(subgroups_.begin(), subgroups_.end(), members,
                             [](const Subgroup& s, const ElementSet& m) { return canonical_compare(s.members, m) < 0; });
  if (it != subgroups_.end() && it->members == members) return static_cast<std::size_t>(it - subgroups_.begin());
  return std::nullopt;
}

std::vector<Subgroup> maximal_subgroups(const Lattice& lattice) {
  std::vector<Subgroup> out;
  for (auto i : lattice.maximal_indices()) out.push_back(lattice.at(i));
  return out;
}

std::vector<Subgroup> normal_subgroups(const Lattice& lattice) {
  std::vector<Subgroup> out;
  for (auto i : lattice.normal_indices()) out.push_back(lattice.at(i));
  return out;
}

std::vector<Subgroup> minimal_normal_subgroups(const Lattice& lattice) {
  std::vector<Subgroup> out;
  const auto& normals = lattice.normal_indices();
  for (auto i : normals) {
    const auto& n = lattice.at(i);
    if (n.order == 1) continue;
    const bool minimal = std::none_of(normals.begin(), normals.end(), [&](std::size_t j) {
      const auto& m = lattice.at(j);
      return m.order > 1 && m.order < n.order && m.members.is_subset_of(n.members);
    });
    if (minimal) out.push_back(n);
  }
  return out;
}

Subgroup normal_core(const Group& g, const ElementSet& h) {
  ElementSet core = h;
  for (Element x = 0; x < g.order(); ++x) core &= conjugate_set(g, h, x);
  return Subgroup{core, core.size(), true};
}

Subgroup frattini(const Lattice& lattice) {
  ElementSet meet = lattice.whole().members;
  for (auto i : lattice.maximal_indices()) meet &= lattice.at(i).members;
  return Subgroup{meet, meet.size(), true};
}

std::vector<ElementSet> derived_series(const Group& g) {
  std::vector<ElementSet> series{g.all()};
  for (;;) {
    ElementSet next = commutator_subgroup(g, series.back(), series.back());
    if (next == series.back()) break;
    series.push_back(next);
  }
  return series;
}

bool is_solvable(const Group& g) { return derived_series(g).back().size() == 1; }

bool is_nilpotent(const Lattice& lattice) {
  const std::size_t n = lattice.group().order();
  for (auto p : prime_divisors(n)) {
    const std::size_t target = p_part(n, p);
    const auto count = std::count_if(lattice.subgroups().begin(), lattice.subgroups().end(),
                                     [&](const Subgroup& s) { return s.order == target; });
    if (count != 1) return false;
  }
  return true;
}

bool is_supersolvable(const Lattice& lattice) {
  const std::size_t n = lattice.group().order();
  return std::all_of(lattice.maximal_indices().begin(), lattice.maximal_indices().end(),
                     [&](std::size_t i) { return is_prime(n / lattice.at(i).order); });
}

Subgroup sylow_subgroup(const Lattice& lattice, std::size_t p) {
  const std::size_t n = lattice.group().order();
  if (!is_prime(p)) throw Error(ErrorCode::InvalidParameters, std::to_string(p) + " is not prime");
  if (n % p != 0)
    throw Error(ErrorCode::PrimeDoesNotDivideOrder, std::to_string(p) + " does not divide " + std::to_string(n));
  const std::size_t target = p_part(n, p);
  for (const auto& s : lattice.subgroups())
    if (s.order == target) return s;
  throw Error(ErrorCode::ConsistencyViolation, "no Sylow subgroup found");
}

std::vector<ChiefFactor> chief_series(const Lattice& lattice) {
  const Group& g = lattice.group();
  const auto group_gens = generating_set(g);
  std::vector<ChiefFactor> factors;
  Subgroup current = lattice.trivial();
  while (current.order < g.order()) {
    const Subgroup* next = nullptr;
    // Canonical order is by order first, so the first normal subgroup strictly
    // above `current` is minimal over it.
    for (auto i : lattice.normal_indices()) {
      const auto& n = lattice.at(i);
      if (n.order > current.order && current.members.is_subset_of(n.members)) {
        next = &n;
        break;
      }
    }
    if (next == nullptr) throw Error(ErrorCode::ConsistencyViolation, "chief series stalled");

    ChiefFactor f;
    f.lower = current;
    f.upper = *next;
    f.factor_order = next->order / current.order;
    for (const auto& a : lattice.subgroups()) {
      if (!current.members.is_subset_of(a.members)) continue;
      if ((a.members & next->members) != current.members) continue;
      if (a.order * f.factor_order == g.order()) ++f.complement_count;
    }
    f.complemented = f.complement_count >= 1;
    bool central = true;
    next->members.for_each([&](Element h) {
      for (Element x : group_gens) {
        if (!central) return;
        const Element comm = g.mul(g.mul(g.inv(h), g.inv(x)), g.mul(h, x));
        if (!current.members.contains(comm)) central = false;
      }
    });
    f.central = central;
    std::size_t prime = 0;
    if (is_prime_power(f.factor_order, prime)) f.prime = prime;
    factors.push_back(f);
    current = *next;
  }
  return factors;
}

bool has_normal_p_complement(const Lattice& lattice, std::size_t p) {
  const std::size_t n = lattice.group().order();
  if (!is_prime(p)) throw Error(ErrorCode::InvalidParameters, std::to_string(p) + " is not prime");
  if (n % p != 0)
    throw Error(ErrorCode::PrimeDoesNotDivideOrder, std::to_string(p) + " does not divide " + std::to_string(n));
  const std::size_t target = n / p_part(n, p);
  return std::any_of(lattice.normal_indices().begin(), lattice.normal_indices().end(),
                     [&](std::size_t i) { return lattice.at(i).order == target; });
}

}  // namespace covgroup
