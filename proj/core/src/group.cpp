#include "covgroup/group.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "covgroup/error.hpp"

namespace covgroup {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidTable: return "InvalidTable";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NoIdentityAtZero: return "NoIdentityAtZero";
    case ErrorCode::MissingInverse: return "MissingInverse";
    case ErrorCode::NotLatinSquare: return "NotLatinSquare";
    case ErrorCode::MalformedCycle: return "MalformedCycle";
    case ErrorCode::InvalidParameters: return "InvalidParameters";
    case ErrorCode::NotSubgroup: return "NotSubgroup";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::OrderBoundExceeded: return "OrderBoundExceeded";
    case ErrorCode::PrimeDoesNotDivideOrder: return "PrimeDoesNotDivideOrder";
    case ErrorCode::GroupIsCyclic: return "GroupIsCyclic";
    case ErrorCode::NotProperSubgroup: return "NotProperSubgroup";
    case ErrorCode::NotSolvable: return "NotSolvable";
    case ErrorCode::NoFactorWithMultipleComplements: return "NoFactorWithMultipleComplements";
    case ErrorCode::EnumerationBoundExceeded: return "EnumerationBoundExceeded";
    case ErrorCode::PreconditionViolation: return "PreconditionViolation";
    case ErrorCode::ConsistencyViolation: return "ConsistencyViolation";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DuplicateName: return "DuplicateName";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::UnknownGroup: return "UnknownGroup";
  }
  return "Unknown";
}

// --- Group -------------------------------------------------------------------

Group Group::from_table(const CayleyTable& table, std::string name) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(ErrorCode::InvalidTable, "empty table");
  if (n > ElementSet::kCapacity)
    throw Error(ErrorCode::OrderBoundExceeded,
                "order " + std::to_string(n) + " exceeds " + std::to_string(ElementSet::kCapacity));
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n)
      throw Error(ErrorCode::InvalidTable, "row " + std::to_string(a) + " has wrong length");
    for (auto v : table[a])
      if (v >= n) throw Error(ErrorCode::InvalidTable, "entry out of range in row " + std::to_string(a));
  }

  Group g;
  g.order_ = n;
  g.name_ = std::move(name);
  g.table_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) g.table_[a * n + b] = table[a][b];

  for (Element a = 0; a < n; ++a)
    if (g.mul(0, a) != a || g.mul(a, 0) != a)
      throw Error(ErrorCode::NoIdentityAtZero, "element 0 is not a two-sided identity for " + std::to_string(a));

  g.inverse_.assign(n, 0);
  for (Element a = 0; a < n; ++a) {
    bool found = false;
    for (Element b = 0; b < n && !found; ++b) {
      if (g.mul(a, b) == 0 && g.mul(b, a) == 0) {
        g.inverse_[a] = b;
        found = true;
      }
    }
    if (!found) throw Error(ErrorCode::MissingInverse, "element " + std::to_string(a) + " has no inverse");
  }

  std::vector<char> seen(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < n; ++b) {
      auto v = g.table_[a * n + b];
      if (seen[v]) throw Error(ErrorCode::NotLatinSquare, "row " + std::to_string(a) + " repeats an entry");
      seen[v] = 1;
    }
  }
  for (std::size_t b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t a = 0; a < n; ++a) {
      auto v = g.table_[a * n + b];
      if (seen[v]) throw Error(ErrorCode::NotLatinSquare, "column " + std::to_string(b) + " repeats an entry");
      seen[v] = 1;
    }
  }

  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      const Element ab = g.mul(a, b);
      for (Element c = 0; c < n; ++c)
        if (g.mul(ab, c) != g.mul(a, g.mul(b, c)))
          throw Error(ErrorCode::NotAssociative, "(" + std::to_string(a) + "*" + std::to_string(b) + ")*" +
                                                     std::to_string(c) + " differs");
    }
  return g;
}

CayleyTable Group::cayley_table() const {
  CayleyTable t(order_, std::vector<Element>(order_));
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = 0; b < order_; ++b) t[a][b] = table_[a * order_ + b];
  return t;
}

bool is_homomorphism(const Group& source, const Group& target, const Homomorphism& hom) {
  if (hom.map.size() != source.order() || hom.source_order != source.order() ||
      hom.target_order != target.order())
    return false;
  if (hom.map[0] != 0) return false;
  for (Element a = 0; a < source.order(); ++a)
    for (Element b = 0; b < source.order(); ++b)
      if (hom.map[source.mul(a, b)] != target.mul(hom.map[a], hom.map[b])) return false;
  return true;
}

// --- permutations --------------------------------------------------------------

Permutation Permutation::identity(std::size_t degree) {
  Permutation p;
  p.images.resize(degree);
  std::iota(p.images.begin(), p.images.end(), std::size_t{0});
  return p;
}

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  Permutation perm = Permutation::identity(degree);
  std::vector<char> used(degree, 0);
  std::size_t i = 0;
  auto fail = [&](const std::string& why) -> Permutation {
    throw Error(ErrorCode::MalformedCycle, "'" + std::string(text) + "': " + why);
  };
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };

  skip_space();
  if (i == text.size()) return fail("empty permutation (write () for the identity)");
  while (i < text.size()) {
    if (text[i] != '(') return fail("expected '('");
    ++i;
    std::vector<std::size_t> cycle;
    for (;;) {
      while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
      if (i == text.size()) return fail("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) return fail("unexpected character");
      std::size_t value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<std::size_t>(text[i] - '0');
        if (value > degree) return fail("point exceeds degree " + std::to_string(degree));
        ++i;
      }
      if (value < 1) return fail("points are numbered from 1");
      if (used[value - 1]) return fail("point " + std::to_string(value) + " repeated");
      used[value - 1] = 1;
      cycle.push_back(value - 1);
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) perm.images[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip_space();
  }
  return perm;
}

namespace {

Permutation compose(const Permutation& first, const Permutation& second) {
  Permutation out;
  out.images.resize(first.degree());
  for (std::size_t i = 0; i < first.degree(); ++i) out.images[i] = second.images[first.images[i]];
  return out;
}

}  // namespace

Group from_permutation_generators(std::size_t degree, std::span<const Permutation> generators,
                                  std::string name) {
  if (degree == 0) throw Error(ErrorCode::InvalidParameters, "degree must be positive");
  for (const auto& gen : generators)
    if (gen.degree() != degree) throw Error(ErrorCode::MalformedCycle, "generator degree mismatch");

  std::set<std::vector<std::size_t>> found;
  std::vector<Permutation> frontier{Permutation::identity(degree)};
  found.insert(frontier.front().images);
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& p : frontier)
      for (const auto& gen : generators) {
        Permutation q = compose(p, gen);
        if (found.insert(q.images).second) {
          if (found.size() > ElementSet::kCapacity)
            throw Error(ErrorCode::OrderBoundExceeded, "permutation closure exceeds order " +
                                                           std::to_string(ElementSet::kCapacity));
          next.push_back(std::move(q));
        }
      }
    frontier = std::move(next);
  }

  // std::set iterates lexicographically and the identity tuple is the least.
  std::vector<Permutation> elements;
  elements.reserve(found.size());
  std::map<std::vector<std::size_t>, Element> index;
  for (const auto& images : found) {
    index.emplace(images, static_cast<Element>(elements.size()));
    elements.push_back(Permutation{images});
  }
  const std::size_t n = elements.size();
  CayleyTable table(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a][b] = index.at(compose(elements[a], elements[b]).images);
  return Group::from_table(table, std::move(name));
}

Group from_permutation_generators(std::size_t degree, const std::vector<std::string>& cycles,
                                  std::string name) {
  std::vector<Permutation> gens;
  gens.reserve(cycles.size());
  for (const auto& c : cycles) gens.push_back(parse_cycles(c, degree));
  return from_permutation_generators(degree, gens, std::move(name));
}

// --- presets --------------------------------------------------------------------

namespace presets {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::InvalidParameters, what);
}

std::size_t mod_pow(std::size_t base, std::size_t exp, std::size_t mod) {
  std::size_t result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1U) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1U;
  }
  return result;
}

}  // namespace

Group cyclic(std::size_t n) {
  require(n >= 1 && n <= ElementSet::kCapacity, "cyclic order must be in 1.." + std::to_string(ElementSet::kCapacity));
  CayleyTable t(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = static_cast<Element>((a + b) % n);
  return Group::from_table(t, "C" + std::to_string(n));
}

Group dihedral(std::size_t n) {
  require(n >= 1 && 2 * n <= ElementSet::kCapacity, "dihedral parameter out of range");
  // r^i s^j -> i + n j; (r^i s^a)(r^k s^b) = r^(i + (-1)^a k) s^(a+b).
  const std::size_t order = 2 * n;
  CayleyTable t(order, std::vector<Element>(order));
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t i = x % n, a = x / n, k = y % n, b = y / n;
      const std::size_t rot = a == 0 ? (i + k) % n : (i + n - k) % n;
      t[x][y] = static_cast<Element>(rot + n * ((a + b) % 2));
    }
  return Group::from_table(t, "D" + std::to_string(order));
}

Group generalized_quaternion(std::size_t k) {
  require(k >= 3 && (std::size_t{1} << k) <= ElementSet::kCapacity, "quaternion exponent k must be >= 3");
  // x^i y^j -> i + m j with m = 2^(k-1); y^2 = x^(m/2), y x = x^-1 y.
  const std::size_t order = std::size_t{1} << k;
  const std::size_t m = order / 2;
  CayleyTable t(order, std::vector<Element>(order));
  for (std::size_t u = 0; u < order; ++u)
    for (std::size_t v = 0; v < order; ++v) {
      const std::size_t i = u % m, a = u / m, j = v % m, b = v / m;
      std::size_t rot = 0, ys = 0;
      if (a == 0) {
        rot = (i + j) % m;
        ys = b;
      } else if (b == 0) {
        rot = (i + m - j) % m;
        ys = 1;
      } else {
        rot = (i + m - j + m / 2) % m;
        ys = 0;
      }
      t[u][v] = static_cast<Element>(rot + m * ys);
    }
  return Group::from_table(t, "Q" + std::to_string(order));
}

Group symmetric(std::size_t n) {
  require(n >= 1, "symmetric degree must be positive");
  std::vector<Permutation> gens;
  if (n >= 2) {
    Permutation swap = Permutation::identity(n);
    std::swap(swap.images[0], swap.images[1]);
    Permutation cycle = Permutation::identity(n);
    for (std::size_t i = 0; i < n; ++i) cycle.images[i] = (i + 1) % n;
    gens = {cycle, swap};
  }
  return from_permutation_generators(n, gens, "S" + std::to_string(n));
}

Group alternating(std::size_t n) {
  require(n >= 1, "alternating degree must be positive");
  std::vector<Permutation> gens;
  for (std::size_t c = 2; c < n; ++c) {
    Permutation p = Permutation::identity(n);
    p.images[0] = 1;
    p.images[1] = c;
    p.images[c] = 0;
    gens.push_back(p);
  }
  return from_permutation_generators(n, gens, "A" + std::to_string(n));
}

Group direct_product(const Group& first, const Group& second) {
  const std::size_t n1 = first.order(), n2 = second.order();
  require(n1 * n2 <= ElementSet::kCapacity, "direct product order exceeds " + std::to_string(ElementSet::kCapacity));
  const std::size_t n = n1 * n2;
  CayleyTable t(n, std::vector<Element>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const auto a = static_cast<Element>(first.mul(static_cast<Element>(x / n2), static_cast<Element>(y / n2)));
      const auto b = static_cast<Element>(second.mul(static_cast<Element>(x % n2), static_cast<Element>(y % n2)));
      t[x][y] = static_cast<Element>(a * n2 + b);
    }
  return Group::from_table(t, first.name() + "x" + second.name());
}

Group semidirect_cp_cn(std::size_t p, std::size_t n, std::size_t l) {
  require(is_prime(p), "p = " + std::to_string(p) + " is not prime");
  require(n >= 1 && p * n <= ElementSet::kCapacity, "n out of range");
  require(mod_pow(l, n, p) == 1, std::to_string(l) + "^" + std::to_string(n) + " is not 1 mod " + std::to_string(p));
  // a x a^-1 = x^m with m = l^-1 mod p, so (x^i a^j)(x^k a^b) = x^(i + k m^j) a^(j+b).
  const std::size_t m = mod_pow(l, n - 1, p);
  const std::size_t order = p * n;
  std::vector<std::size_t> m_pow(n);
  m_pow[0] = 1;
  for (std::size_t j = 1; j < n; ++j) m_pow[j] = m_pow[j - 1] * m % p;
  CayleyTable t(order, std::vector<Element>(order));
  for (std::size_t u = 0; u < order; ++u)
    for (std::size_t v = 0; v < order; ++v) {
      const std::size_t i = u % p, j = u / p, k = v % p, b = v / p;
      t[u][v] = static_cast<Element>((i + k * m_pow[j]) % p + p * ((j + b) % n));
    }
  return Group::from_table(t, "C" + std::to_string(p) + ":C" + std::to_string(n) + "[" + std::to_string(l) + "]");
}

}  // namespace presets

// --- queries ----------------------------------------------------------------------

std::size_t element_order(const Group& g, Element x) {
  std::size_t k = 1;
  for (Element y = x; y != Group::identity(); y = g.mul(y, x)) ++k;
  return k;
}

Element power(const Group& g, Element x, std::size_t k) {
  Element result = Group::identity();
  for (std::size_t i = 0; i < k; ++i) result = g.mul(result, x);
  return result;
}

ElementSet generated_subgroup(const Group& g, std::span<const Element> generators) {
  ElementSet members = ElementSet::singleton(Group::identity());
  std::vector<Element> queue{Group::identity()};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Element x = queue[head];
    for (Element gen : generators) {
      const Element y = g.mul(x, gen);
      if (!members.contains(y)) {
        members.insert(y);
        queue.push_back(y);
      }
    }
  }
  return members;
}

ElementSet generated_subgroup(const Group& g, const ElementSet& generators) {
  const auto gens = generators.elements();
  return generated_subgroup(g, std::span<const Element>(gens));
}

ElementSet cyclic_subgroup(const Group& g, Element x) {
  ElementSet members = ElementSet::singleton(Group::identity());
  for (Element y = x; y != Group::identity(); y = g.mul(y, x)) members.insert(y);
  return members;
}

bool is_subgroup(const Group& g, const ElementSet& s) {
  if (!s.contains(Group::identity()) || !s.is_subset_of(g.all())) return false;
  bool closed = true;
  s.for_each([&](Element a) {
    if (!closed) return;
    if (!s.contains(g.inv(a))) closed = false;
    s.for_each([&](Element b) {
      if (closed && !s.contains(g.mul(a, b))) closed = false;
    });
  });
  return closed;
}

bool is_normal(const Group& g, const ElementSet& s) {
  for (Element x = 0; x < g.order(); ++x)
    if (!conjugate_set(g, s, x).is_subset_of(s)) return false;
  return true;
}

ElementSet center(const Group& g) { return centralizer(g, g.all()); }

ElementSet centralizer(const Group& g, const ElementSet& s) {
  ElementSet out;
  for (Element x = 0; x < g.order(); ++x) {
    bool commutes = true;
    s.for_each([&](Element y) {
      if (commutes && g.mul(x, y) != g.mul(y, x)) commutes = false;
    });
    if (commutes) out.insert(x);
  }
  return out;
}

ElementSet conjugate_set(const Group& g, const ElementSet& s, Element x) {
  ElementSet out;
  const Element xi = g.inv(x);
  s.for_each([&](Element y) { out.insert(g.mul(g.mul(xi, y), x)); });
  return out;
}

ElementSet commutator_subgroup(const Group& g, const ElementSet& a, const ElementSet& b) {
  ElementSet commutators;
  a.for_each([&](Element x) {
    b.for_each([&](Element y) { commutators.insert(g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y))); });
  });
  return generated_subgroup(g, commutators);
}

bool is_abelian(const Group& g) { return is_abelian(g, g.all()); }

bool is_abelian(const Group& g, const ElementSet& s) {
  const auto elems = s.elements();
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      if (g.mul(elems[i], elems[j]) != g.mul(elems[j], elems[i])) return false;
  return true;
}

bool is_cyclic(const Group& g) { return is_cyclic(g, g.all()); }

bool is_cyclic(const Group& g, const ElementSet& s) {
  const std::size_t n = s.size();
  bool found = false;
  s.for_each([&](Element x) {
    if (!found && element_order(g, x) == n) found = true;
  });
  return found;
}

QuotientResult quotient(const Group& g, const ElementSet& normal_subgroup) {
  if (!is_subgroup(g, normal_subgroup)) throw Error(ErrorCode::NotSubgroup, "quotient by a non-subgroup");
  if (!is_normal(g, normal_subgroup)) throw Error(ErrorCode::NotNormal, "quotient by a non-normal subgroup");

  const std::size_t n = g.order();
  constexpr Element kUnassigned = ~Element{0};
  std::vector<Element> coset_of(n, kUnassigned);
  std::vector<Element> representatives;
  for (Element x = 0; x < n; ++x) {
    if (coset_of[x] != kUnassigned) continue;
    const auto index = static_cast<Element>(representatives.size());
    representatives.push_back(x);
    normal_subgroup.for_each([&](Element h) { coset_of[g.mul(x, h)] = index; });
  }
  const std::size_t m = representatives.size();
  CayleyTable t(m, std::vector<Element>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) t[a][b] = coset_of[g.mul(representatives[a], representatives[b])];

  QuotientResult result{Group::from_table(t, g.name() + "/N"), Homomorphism{n, m, coset_of}};
  return result;
}

Group induced_group(const Group& g, const ElementSet& s, std::string name) {
  if (!is_subgroup(g, s)) throw Error(ErrorCode::NotSubgroup, "induced_group of a non-subgroup");
  const auto elems = s.elements();
  std::vector<Element> local(g.order(), 0);
  for (std::size_t i = 0; i < elems.size(); ++i) local[elems[i]] = static_cast<Element>(i);
  CayleyTable t(elems.size(), std::vector<Element>(elems.size()));
  for (std::size_t a = 0; a < elems.size(); ++a)
    for (std::size_t b = 0; b < elems.size(); ++b) t[a][b] = local[g.mul(elems[a], elems[b])];
  return Group::from_table(t, std::move(name));
}

// --- arithmetic ------------------------------------------------------------------

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::size_t> prime_divisors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::size_t p_part(std::size_t n, std::size_t p) {
  std::size_t part = 1;
  while (n % p == 0) {
    n /= p;
    part *= p;
  }
  return part;
}

}  // namespace covgroup
