#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace covgroup {

using Element = std::uint32_t;

/// Fixed-width membership bitset over element indices 0..kCapacity-1.
///
/// Subgroups, cosets and cover unions are all ElementSets. Equality is exact
/// set equality; `canonical_compare` orders by cardinality first and then by
/// the sorted member list, which is the ordering used for every
/// deduplicated family in the library.
class ElementSet {
 public:
  static constexpr std::size_t kCapacity = 512;
  static constexpr std::size_t kWords = kCapacity / 64;

  ElementSet() = default;

  static ElementSet singleton(Element e) {
    ElementSet s;
    s.insert(e);
    return s;
  }

  /// The set {0, ..., n-1}.
  static ElementSet range(std::size_t n) {
    ElementSet s;
    for (std::size_t w = 0; w < kWords && n > 0; ++w) {
      const std::size_t take = n < 64 ? n : 64;
      s.words_[w] = take == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << take) - 1);
      n -= take;
    }
    return s;
  }

  void insert(Element e) { words_[e >> 6] |= std::uint64_t{1} << (e & 63); }
  void erase(Element e) { words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63)); }
  bool contains(Element e) const { return (words_[e >> 6] >> (e & 63)) & 1U; }

  std::size_t size() const {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }

  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  bool is_subset_of(const ElementSet& other) const {
    for (std::size_t w = 0; w < kWords; ++w)
      if (words_[w] & ~other.words_[w]) return false;
    return true;
  }

  bool intersects(const ElementSet& other) const {
    for (std::size_t w = 0; w < kWords; ++w)
      if (words_[w] & other.words_[w]) return true;
    return false;
  }

  /// Smallest member; kCapacity when empty.
  Element first() const {
    for (std::size_t w = 0; w < kWords; ++w)
      if (words_[w] != 0)
        return static_cast<Element>(w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w])));
    return static_cast<Element>(kCapacity);
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < kWords; ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(bits));
        f(static_cast<Element>(w * 64 + bit));
        bits &= bits - 1;
      }
    }
  }

  std::vector<Element> elements() const {
    std::vector<Element> out;
    out.reserve(size());
    for_each([&](Element e) { out.push_back(e); });
    return out;
  }

  ElementSet& operator|=(const ElementSet& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  ElementSet& operator&=(const ElementSet& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  ElementSet& operator^=(const ElementSet& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] ^= o.words_[w];
    return *this;
  }
  /// Set difference.
  ElementSet& operator-=(const ElementSet& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] &= ~o.words_[w];
    return *this;
  }

  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator^(ElementSet a, const ElementSet& b) { return a ^= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

  std::size_t hash() const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto w : words_) {
      h ^= static_cast<std::size_t>(w);
      h *= 0x100000001b3ULL;
      h ^= h >> 29;
    }
    return h;
  }

  const std::array<std::uint64_t, kWords>& words() const { return words_; }

 private:
  std::array<std::uint64_t, kWords> words_{};
};

/// Cardinality first, then lexicographic comparison of the sorted members.
inline std::strong_ordering canonical_compare(const ElementSet& a, const ElementSet& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  for (std::size_t w = 0; w < ElementSet::kWords; ++w) {
    const std::uint64_t diff = a.words()[w] ^ b.words()[w];
    if (diff != 0) {
      const std::uint64_t lowest = diff & (~diff + 1);
      // The set holding the smallest differing element sorts first.
      return (a.words()[w] & lowest) ? std::strong_ordering::less : std::strong_ordering::greater;
    }
  }
  return std::strong_ordering::equal;
}

struct CanonicalLess {
  bool operator()(const ElementSet& a, const ElementSet& b) const {
    return canonical_compare(a, b) < 0;
  }
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace covgroup
