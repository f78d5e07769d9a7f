#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "covgroup/element_set.hpp"

namespace covgroup {

using CayleyTable = std::vector<std::vector<Element>>;

/// A finite group given by its Cayley table. Element 0 is the identity.
///
/// Groups are immutable after construction; the only way in is
/// `Group::from_table`, which checks every group axiom, or one of the
/// constructors in this header that build a table known to be valid and
/// still run it through the same validation.
class Group {
 public:
  /// Validates `table` and returns the group. Throws `Error` with
  /// InvalidTable, NoIdentityAtZero, NotLatinSquare, MissingInverse or
  /// NotAssociative naming the first violated axiom.
  static Group from_table(const CayleyTable& table, std::string name = {});

  std::size_t order() const { return order_; }
  Element mul(Element a, Element b) const { return table_[a * order_ + b]; }
  Element inv(Element a) const { return inverse_[a]; }
  static constexpr Element identity() { return 0; }

  const std::string& name() const { return name_; }
  Group renamed(std::string name) const {
    Group g = *this;
    g.name_ = std::move(name);
    return g;
  }

  CayleyTable cayley_table() const;
  std::span<const Element> inverses() const { return inverse_; }
  ElementSet all() const { return ElementSet::range(order_); }

  /// Same table (names are ignored).
  friend bool operator==(const Group& a, const Group& b) {
    return a.order_ == b.order_ && a.table_ == b.table_;
  }

 private:
  Group() = default;

  std::size_t order_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::string name_;
};

inline Group validate_group(const CayleyTable& table, std::string name = {}) {
  return Group::from_table(table, std::move(name));
}

/// A map between the elements of two groups, stored as a table of target
/// indices. Only produced by constructions that guarantee the homomorphism
/// identity; `is_homomorphism` re-checks it.
struct Homomorphism {
  std::size_t source_order = 0;
  std::size_t target_order = 0;
  std::vector<Element> map;
};

bool is_homomorphism(const Group& source, const Group& target, const Homomorphism& hom);

// --- permutations -----------------------------------------------------------

/// A permutation of {0, ..., degree-1}; `images[i]` is the image of i.
struct Permutation {
  std::vector<std::size_t> images;

  std::size_t degree() const { return images.size(); }
  static Permutation identity(std::size_t degree);
  friend bool operator==(const Permutation&, const Permutation&) = default;
};

/// Parses cycle notation over the points 1..degree, e.g. "(1 2 3)(4 5)" or
/// "()". Throws MalformedCycle.
Permutation parse_cycles(std::string_view text, std::size_t degree);

/// Closure of the generators under composition. Element 0 is the identity
/// and the others are ordered by their image tuples, so reruns are
/// bit-identical. The product a*b applies a first, then b.
Group from_permutation_generators(std::size_t degree, std::span<const Permutation> generators,
                                  std::string name = {});
Group from_permutation_generators(std::size_t degree, const std::vector<std::string>& cycles,
                                  std::string name = {});

// --- presets -----------------------------------------------------------------

namespace presets {

Group cyclic(std::size_t n);
/// Dihedral group of order 2n.
Group dihedral(std::size_t n);
/// Generalized quaternion group of order 2^k, k >= 3.
Group generalized_quaternion(std::size_t k);
Group symmetric(std::size_t n);
Group alternating(std::size_t n);
/// Pairs (a, b) numbered a * |second| + b.
Group direct_product(const Group& first, const Group& second);
/// <x> x| <a> with |x| = p, |a| = n and a^-1 x a = x^l. Requires p prime,
/// n >= 1 and l^n = 1 (mod p).
Group semidirect_cp_cn(std::size_t p, std::size_t n, std::size_t l);

}  // namespace presets

// --- element and subset queries ---------------------------------------------

std::size_t element_order(const Group& g, Element x);
/// x^k for k >= 0.
Element power(const Group& g, Element x, std::size_t k);

/// Smallest subgroup containing `generators`.
ElementSet generated_subgroup(const Group& g, std::span<const Element> generators);
ElementSet generated_subgroup(const Group& g, const ElementSet& generators);
ElementSet cyclic_subgroup(const Group& g, Element x);

bool is_subgroup(const Group& g, const ElementSet& s);
bool is_normal(const Group& g, const ElementSet& s);

ElementSet center(const Group& g);
ElementSet centralizer(const Group& g, const ElementSet& s);
/// {x^-1 s x : s in S}.
ElementSet conjugate_set(const Group& g, const ElementSet& s, Element x);
/// Subgroup generated by all commutators [a, b] with a in A and b in B.
ElementSet commutator_subgroup(const Group& g, const ElementSet& a, const ElementSet& b);

bool is_abelian(const Group& g);
bool is_abelian(const Group& g, const ElementSet& s);
bool is_cyclic(const Group& g);
bool is_cyclic(const Group& g, const ElementSet& s);

struct QuotientResult {
  Group group;
  Homomorphism projection;
};

/// G/N. The coset of the identity is element 0; other cosets are ordered by
/// their smallest member. Throws NotSubgroup or NotNormal.
QuotientResult quotient(const Group& g, const ElementSet& normal_subgroup);

/// The subgroup S as a group in its own right, elements renumbered in
/// increasing order of their index in G.
Group induced_group(const Group& g, const ElementSet& s, std::string name = {});

// --- small arithmetic helpers shared across modules ---------------------------

bool is_prime(std::size_t n);
std::vector<std::size_t> prime_divisors(std::size_t n);
/// p^a exactly dividing n.
std::size_t p_part(std::size_t n, std::size_t p);

}  // namespace covgroup
