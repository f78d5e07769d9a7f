#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "covgroup/element_set.hpp"
#include "covgroup/group.hpp"

namespace covgroup {

struct Subgroup {
  ElementSet members;
  std::size_t order = 0;
  bool normal = false;

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members == b.members; }
};

inline bool canonical_less(const Subgroup& a, const Subgroup& b) {
  return canonical_compare(a.members, b.members) < 0;
}

Subgroup make_subgroup(const Group& g, const ElementSet& members);

struct CyclicSubgroup {
  Subgroup subgroup;
  /// Smallest element index generating the subgroup.
  Element generator = 0;
  bool maximal_cyclic = false;
};

/// The full subgroup lattice of a group, held in canonical order (by order,
/// then by member list), so index 0 is the trivial subgroup and the last
/// entry is the whole group.
class Lattice {
 public:
  /// Throws OrderBoundExceeded when |G| > max_order.
  explicit Lattice(Group group, std::size_t max_order = ElementSet::kCapacity);

  const Group& group() const { return group_; }
  std::span<const Subgroup> subgroups() const { return subgroups_; }
  const Subgroup& trivial() const { return subgroups_.front(); }
  const Subgroup& whole() const { return subgroups_.back(); }

  const std::vector<CyclicSubgroup>& cyclic() const { return cyclic_; }
  /// Indices into subgroups(), canonical order.
  const std::vector<std::size_t>& maximal_indices() const { return maximal_; }
  const std::vector<std::size_t>& normal_indices() const { return normal_; }

  std::optional<std::size_t> index_of(const ElementSet& members) const;
  const Subgroup& at(std::size_t index) const { return subgroups_[index]; }

 private:
  Group group_;
  std::vector<Subgroup> subgroups_;
  std::vector<CyclicSubgroup> cyclic_;
  std::vector<std::size_t> maximal_;
  std::vector<std::size_t> normal_;
};

/// Every <g>, deduplicated and in canonical order, tagged maximal-cyclic iff
/// not strictly inside another cyclic subgroup.
std::vector<CyclicSubgroup> cyclic_subgroups(const Group& g);

/// Join-closure fixpoint seeded with the cyclic subgroups.
std::vector<Subgroup> all_subgroups(const Group& g, std::size_t max_order = ElementSet::kCapacity);

std::vector<Subgroup> maximal_subgroups(const Lattice& lattice);
std::vector<Subgroup> normal_subgroups(const Lattice& lattice);
std::vector<Subgroup> minimal_normal_subgroups(const Lattice& lattice);
/// Largest normal subgroup of G inside H.
Subgroup normal_core(const Group& g, const ElementSet& h);
Subgroup frattini(const Lattice& lattice);

/// G, G', G'', ... down to the first repeated term.
std::vector<ElementSet> derived_series(const Group& g);
bool is_solvable(const Group& g);
bool is_nilpotent(const Lattice& lattice);
bool is_supersolvable(const Lattice& lattice);
/// The first Sylow p-subgroup in canonical order. Throws PrimeDoesNotDivideOrder.
Subgroup sylow_subgroup(const Lattice& lattice, std::size_t p);

struct ChiefFactor {
  Subgroup lower;
  Subgroup upper;
  std::size_t factor_order = 0;
  /// Distinct subgroups A with lower <= A, A meet upper = lower, A upper = G.
  std::size_t complement_count = 0;
  bool complemented = false;
  bool central = false;
  /// p when factor_order is a power of the prime p.
  std::optional<std::size_t> prime;
};

/// 1 = N0 < N1 < ... < Nk = G, each N(i+1) the canonically first normal
/// subgroup of G minimal over N(i).
std::vector<ChiefFactor> chief_series(const Lattice& lattice);

/// True iff G has a normal subgroup of order |G| / p^a (p^a the p-part).
bool has_normal_p_complement(const Lattice& lattice, std::size_t p);

}  // namespace covgroup
