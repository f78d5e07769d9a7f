#include "covgroup/catalog.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

#include "covgroup/error.hpp"

namespace covgroup {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(w);
  return words;
}

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

std::size_t parse_count(const std::string& text, std::size_t line) {
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) parse_error(line, "expected a non-negative integer, got '" + text + "'");
  return value;
}

std::size_t arity(const std::string& kind) {
  if (kind == "cyclic" || kind == "dihedral" || kind == "quaternion" || kind == "sym" || kind == "alt") return 1;
  if (kind == "product") return 2;
  if (kind == "cpcn") return 3;
  return 0;
}

}  // namespace

std::vector<CatalogEntry> parse_catalog(std::istream& in) {
  std::vector<CatalogEntry> entries;
  std::set<std::string> names;
  std::optional<CatalogEntry> current;
  bool has_source = false;

  auto finish = [&](std::size_t line) {
    if (!current) return;
    if (!has_source) parse_error(line, "group '" + current->name + "' has no perm or preset line");
    entries.push_back(std::move(*current));
    current.reset();
    has_source = false;
  };

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) {
      finish(line_no);
      continue;
    }
    const auto words = split_words(line);
    const std::string& keyword = words.front();

    if (keyword == "group") {
      finish(line_no);
      if (words.size() != 2) parse_error(line_no, "expected 'group <name>'");
      if (!names.insert(words[1]).second)
        throw Error(ErrorCode::DuplicateName, "line " + std::to_string(line_no) + ": group '" + words[1] +
                                                  "' defined twice");
      current = CatalogEntry{words[1], PresetSource{}, std::nullopt, line_no};
      continue;
    }
    if (!current) parse_error(line_no, "'" + keyword + "' outside a group record");

    if (keyword == "order") {
      if (words.size() != 2) parse_error(line_no, "expected 'order <m>'");
      if (current->expected_order) parse_error(line_no, "duplicate order line");
      current->expected_order = parse_count(words[1], line_no);
    } else if (keyword == "perm" || keyword == "preset") {
      if (has_source) parse_error(line_no, "group '" + current->name + "' has two source lines");
      has_source = true;
      if (keyword == "perm") {
        std::vector<std::string> parts;
        std::stringstream ss(line.substr(4));
        for (std::string part; std::getline(ss, part, ';');) parts.push_back(trim(part));
        if (parts.empty() || parts.front().empty()) parse_error(line_no, "expected 'perm <degree>; <perm>; ...'");
        PermSource src;
        src.degree = parse_count(parts.front(), line_no);
        if (src.degree == 0) parse_error(line_no, "degree must be positive");
        for (std::size_t i = 1; i < parts.size(); ++i) {
          if (parts[i].empty()) parse_error(line_no, "empty permutation (write () for the identity)");
          src.generators.push_back(parts[i]);
        }
        current->source = std::move(src);
      } else {
        if (words.size() < 2) parse_error(line_no, "expected 'preset <kind> <args>'");
        PresetSource src{words[1], {words.begin() + 2, words.end()}};
        const std::size_t expected = arity(src.kind);
        if (expected == 0) parse_error(line_no, "unknown preset kind '" + src.kind + "'");
        if (src.args.size() != expected)
          parse_error(line_no, "preset " + src.kind + " takes " + std::to_string(expected) + " argument(s)");
        if (src.kind == "product") {
          for (const auto& ref : src.args)
            if (!names.count(ref) || ref == current->name)
              parse_error(line_no, "product refers to '" + ref + "', which is not an earlier group");
        } else {
          for (const auto& a : src.args) parse_count(a, line_no);
        }
        current->source = std::move(src);
      }
    } else {
      parse_error(line_no, "unknown keyword '" + keyword + "'");
    }
  }
  finish(line_no + 1);
  return entries;
}

std::vector<CatalogEntry> parse_catalog_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open catalog '" + path.string() + "'");
  return parse_catalog(in);
}

GroupBuilder::GroupBuilder(std::vector<CatalogEntry> entries, std::size_t max_order)
    : entries_(std::move(entries)), max_order_(max_order) {
  for (std::size_t i = 0; i < entries_.size(); ++i) index_.emplace(entries_[i].name, i);
}

const CatalogEntry* GroupBuilder::find(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? nullptr : &entries_[it->second];
}

const Group& GroupBuilder::build(const std::string& name) {
  if (auto it = built_.find(name); it != built_.end()) return it->second;
  const CatalogEntry* entry = find(name);
  if (entry == nullptr) throw Error(ErrorCode::UnknownGroup, "no group named '" + name + "'");

  auto arg = [](const PresetSource& p, std::size_t i) { return static_cast<std::size_t>(std::stoul(p.args[i])); };
  Group g = std::visit(
      [&](const auto& src) -> Group {
        using T = std::decay_t<decltype(src)>;
        if constexpr (std::is_same_v<T, PermSource>) {
          return from_permutation_generators(src.degree, src.generators);
        } else {
          if (src.kind == "cyclic") return presets::cyclic(arg(src, 0));
          if (src.kind == "dihedral") return presets::dihedral(arg(src, 0));
          if (src.kind == "quaternion") return presets::generalized_quaternion(arg(src, 0));
          if (src.kind == "sym") return presets::symmetric(arg(src, 0));
          if (src.kind == "alt") return presets::alternating(arg(src, 0));
          if (src.kind == "cpcn") return presets::semidirect_cp_cn(arg(src, 0), arg(src, 1), arg(src, 2));
          if (src.kind == "product") {
            const Group a = build(src.args[0]);
            const Group b = build(src.args[1]);
            return presets::direct_product(a, b);
          }
          throw Error(ErrorCode::InvalidParameters, "unknown preset kind '" + src.kind + "'");
        }
      },
      entry->source);

  if (entry->expected_order && *entry->expected_order != g.order())
    throw Error(ErrorCode::OrderMismatch, "group '" + name + "' has order " + std::to_string(g.order()) +
                                              ", catalog says " + std::to_string(*entry->expected_order));
  if (g.order() > max_order_)
    throw Error(ErrorCode::OrderBoundExceeded, "group '" + name + "' has order " + std::to_string(g.order()) +
                                                   " above the bound " + std::to_string(max_order_));
  return built_.emplace(name, g.renamed(name)).first->second;
}

}  // namespace covgroup
