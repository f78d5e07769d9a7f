#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "covgroup/group.hpp"

namespace covgroup {

// Catalog files are line based. A record starts with `group <name>` and holds
// exactly one source line plus an optional `order <m>` assertion:
//
//   group S3
//   perm 3; (1 2 3); (1 2)
//   order 6
//
//   group V4
//   preset product C2 C2
//
// Preset kinds: cyclic n | dihedral n | quaternion k | sym n | alt n |
// product <name> <name> | cpcn p n l. Products name earlier records.
// `#` starts a comment; blank lines separate records.

struct PresetSource {
  std::string kind;
  std::vector<std::string> args;
};

struct PermSource {
  std::size_t degree = 0;
  std::vector<std::string> generators;
};

struct CatalogEntry {
  std::string name;
  std::variant<PresetSource, PermSource> source;
  std::optional<std::size_t> expected_order;
  std::size_t line = 0;
};

/// Entries in file order. Throws ParseError (with the line number) or
/// DuplicateName.
std::vector<CatalogEntry> parse_catalog(std::istream& in);
std::vector<CatalogEntry> parse_catalog_file(const std::filesystem::path& path);

/// Builds catalog groups on demand, memoising each by name so products can
/// refer to earlier entries. Not thread-safe.
class GroupBuilder {
 public:
  explicit GroupBuilder(std::vector<CatalogEntry> entries, std::size_t max_order = ElementSet::kCapacity);

  const std::vector<CatalogEntry>& entries() const { return entries_; }
  const CatalogEntry* find(const std::string& name) const;

  /// Throws UnknownGroup, OrderMismatch, OrderBoundExceeded or any
  /// construction error of the underlying preset.
  const Group& build(const std::string& name);

 private:
  std::vector<CatalogEntry> entries_;
  std::map<std::string, std::size_t> index_;
  std::map<std::string, Group> built_;
  std::size_t max_order_;
};

}  // namespace covgroup
