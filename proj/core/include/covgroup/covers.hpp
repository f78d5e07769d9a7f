#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "covgroup/lattice.hpp"

namespace covgroup {

/// A family of proper subgroups, kept in canonical member order so that two
/// families with the same members compare equal.
struct Cover {
  std::vector<Subgroup> members;
  std::size_t group_order = 0;

  std::size_t size() const { return members.size(); }
  void canonicalize();

  friend bool operator==(const Cover& a, const Cover& b) { return a.members == b.members; }
  friend std::strong_ordering operator<=>(const Cover& a, const Cover& b);
};

/// sigma(G); infinite exactly for cyclic groups.
class SigmaValue {
 public:
  static SigmaValue infinite() { return SigmaValue{}; }
  static SigmaValue finite(std::size_t v) {
    SigmaValue s;
    s.value_ = v;
    return s;
  }

  bool is_infinite() const { return !value_.has_value(); }
  std::size_t value() const { return value_.value(); }
  std::string to_string() const { return value_ ? std::to_string(*value_) : "infinite"; }

  friend bool operator==(const SigmaValue&, const SigmaValue&) = default;

 private:
  std::optional<std::size_t> value_;
};

struct EnumerationOptions {
  /// Largest group order enumerated without `force`.
  std::size_t order_bound = 32;
  /// Only report irredundant covers with at most this many members.
  std::optional<std::size_t> size_cap;
  bool force = false;
};

/// All maximal cyclic subgroups. Throws GroupIsCyclic.
Cover maximal_cyclic_family(const Lattice& lattice);
/// Number of maximal cyclic subgroups. Throws GroupIsCyclic.
std::size_t lambda(const Lattice& lattice);

/// Throws NotProperSubgroup if a member is not a proper subgroup of G.
bool is_cover(const Group& g, const Cover& family);
/// A cover in which every member has an element lying in no other member.
bool is_irredundant(const Group& g, const Cover& family);

/// Exact sigma via minimum set cover of G \ {1} by maximal subgroups.
SigmaValue sigma_exact(const Lattice& lattice);
/// A cover of size sigma(G) by maximal subgroups. Throws GroupIsCyclic.
Cover minimum_cover(const Lattice& lattice);
/// Greedy cover by maximal subgroups; an upper bound for sigma.
Cover greedy_cover(const Lattice& lattice);

/// q + 1 for q the least order of a chief factor with at least two
/// complements. Throws NotSolvable, or NoFactorWithMultipleComplements for a
/// non-cyclic group without such a factor.
SigmaValue sigma_tomkinson(const Lattice& lattice);

/// Receives the members of one irredundant cover as ascending indices into
/// Lattice::subgroups(). The span is only valid during the call.
using IrredundantCoverVisitor = std::function<void(std::span<const std::size_t>)>;

/// Streams every irredundant cover of G exactly once. Throws GroupIsCyclic or
/// EnumerationBoundExceeded.
///
/// Covers are grown from the generators x_1..x_k of the maximal cyclic
/// subgroups: the first x_i not yet covered is assigned to each proper
/// subgroup containing it in turn. Any irredundant cover H is reached by
/// always picking a member of H, because the members picked for x_1..x_k
/// already cover G and so form all of H. Branches in which some member has
/// lost its last private element are cut, since adding members cannot give
/// one back. A member chosen for x_i must be the canonically least member of
/// the final family containing x_i, which makes the path to each cover unique.
void for_each_irredundant_cover(const Lattice& lattice, const EnumerationOptions& options,
                                const IrredundantCoverVisitor& visit);
/// Collects for_each_irredundant_cover into canonical order.
std::vector<Cover> enumerate_irredundant_covers(const Lattice& lattice, const EnumerationOptions& options = {});
std::set<std::size_t> irredundant_cover_sizes(const Lattice& lattice, const EnumerationOptions& options = {});

/// Maximal cyclic subgroups of G contained in `members`.
std::size_t maximal_cyclic_subgroups_inside(const Lattice& lattice, const ElementSet& members);

/// {N} together with the conjugates of H, for H cyclic, maximal and core-free
/// and N a normal complement of H. Throws PreconditionViolation naming the
/// failed hypothesis.
Cover frobenius_style_cover(const Group& g, const ElementSet& n, const ElementSet& h);

struct OneSizedEvidence {
  bool one_sized = false;
  std::size_t lambda = 0;
  std::size_t sigma = 0;
  /// Present when |G| is within the enumeration bound.
  std::optional<std::set<std::size_t>> irredundant_sizes;
};

/// lambda(G) == sigma(G), cross-checked against the enumerated cover sizes
/// when the group is small enough. Throws GroupIsCyclic, or
/// ConsistencyViolation if the two disagree.
OneSizedEvidence one_sized_evidence(const Lattice& lattice, const EnumerationOptions& options = {});
bool one_sized_bruteforce(const Lattice& lattice, const EnumerationOptions& options = {});

}  // namespace covgroup
