#ifndef CONSTELLA_IO_HPP
#define CONSTELLA_IO_HPP

// Line-oriented text format for structures and morphisms.
//
//   kind semigroupoid | kind constellation     (first directive)
//   elements a b c
//   plus a e                                   (one per element)
//   comp a b c                                 (a*b = c; absent means undefined)
//   order a b                                  (a <= b; constellation kind only)
//
// `#` starts a comment and `;` separates directives on one physical line.

#include <algorithm>
#include <array>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "constellation.hpp"
#include "semigroupoid.hpp"

namespace constella {

/// Malformed input. `line()` is 1-based; 0 means the error concerns the whole
/// file (for example a missing `plus` line).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message, const std::string& source = {})
      : std::runtime_error(format(line, message, source)), line_(line), message_(message) {}

  std::size_t line() const noexcept { return line_; }
  /// The message without location.
  const std::string& message() const noexcept { return message_; }

 private:
  static std::string format(std::size_t line, const std::string& message, const std::string& source) {
    std::string where = source;
    if (line) where += (where.empty() ? "line " : ":") + std::to_string(line);
    return where.empty() ? message : where + ": " + message;
  }

  std::size_t line_;
  std::string message_;
};

using Structure = std::variant<RawSemigroupoid, OrderedConstellation>;

namespace detail {

struct Directive {
  std::size_t line;
  std::vector<std::string> tokens;
};

inline std::vector<Directive> tokenize(std::string_view text) {
  std::vector<Directive> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string line(text.substr(pos, end - pos));
    ++line_no;
    pos = end + 1;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::replace(line.begin(), line.end(), ';', '\n');
    std::istringstream segments(line);
    std::string segment;
    while (std::getline(segments, segment)) {
      std::istringstream words(segment);
      Directive d{line_no, {}};
      for (std::string w; words >> w;) d.tokens.push_back(std::move(w));
      if (!d.tokens.empty()) out.push_back(std::move(d));
    }
    if (end == text.size()) break;
  }
  return out;
}

inline std::vector<Element> sorted_by_label(const PartialTable& t) {
  std::vector<Element> order(t.size());
  for (Element x = 0; x < t.size(); ++x) order[x] = x;
  std::sort(order.begin(), order.end(), [&](Element a, Element b) { return t.label(a) < t.label(b); });
  return order;
}

inline void write_header(std::ostringstream& out, std::string_view kind, const PartialTable& t,
                         const RestrictionStructure& plus) {
  const auto order = sorted_by_label(t);
  out << "kind " << kind << "\nelements";
  for (Element x : order) out << ' ' << t.label(x);
  out << '\n';
  for (Element x : order) out << "plus " << t.label(x) << ' ' << t.label(plus(x)) << '\n';
  std::vector<std::array<std::string, 3>> comps;
  for (Element a = 0; a < t.size(); ++a)
    for (Element b = 0; b < t.size(); ++b)
      if (const auto c = t.compose(a, b)) comps.push_back({t.label(a), t.label(b), t.label(*c)});
  std::sort(comps.begin(), comps.end());
  for (const auto& [a, b, c] : comps) out << "comp " << a << ' ' << b << ' ' << c << '\n';
}

}  // namespace detail

/// Parses one structure file. The carrier keeps the order of the `elements`
/// line; the order relation is the reflexive-transitive closure of the
/// listed pairs.
inline Structure parse_structure(std::string_view text) {
  const auto directives = detail::tokenize(text);
  if (directives.empty()) throw ParseError(0, "empty input");

  const auto& first = directives.front();
  if (first.tokens[0] != "kind" || first.tokens.size() != 2)
    throw ParseError(first.line, "expected `kind semigroupoid` or `kind constellation`");
  const bool constellation = first.tokens[1] == "constellation";
  if (!constellation && first.tokens[1] != "semigroupoid")
    throw ParseError(first.line, "unknown kind '" + first.tokens[1] + "'");

  std::optional<PartialTable> table;
  std::vector<std::optional<Element>> plus;
  std::optional<OrderRelation> order;

  auto lookup = [&](const detail::Directive& d, const std::string& label) {
    const auto x = table->find(label);
    if (!x) throw ParseError(d.line, "unknown element '" + label + "'");
    return *x;
  };
  auto arity = [](const detail::Directive& d, std::size_t n) {
    if (d.tokens.size() != n + 1)
      throw ParseError(d.line, "`" + d.tokens[0] + "` takes " + std::to_string(n) + " arguments");
  };

  for (std::size_t i = 1; i < directives.size(); ++i) {
    const auto& d = directives[i];
    const auto& verb = d.tokens[0];
    if (verb == "kind") throw ParseError(d.line, "`kind` must appear exactly once, first");
    if (verb == "elements") {
      if (table) throw ParseError(d.line, "duplicate `elements` line");
      std::vector<std::string> labels(d.tokens.begin() + 1, d.tokens.end());
      if (labels.empty()) throw ParseError(d.line, "empty elements list");
      for (const auto& l : labels)
        if (!is_valid_label(l)) throw ParseError(d.line, "invalid element id '" + l + "'");
      try {
        table.emplace(std::move(labels));
      } catch (const std::invalid_argument& e) {
        throw ParseError(d.line, e.what());
      }
      plus.assign(table->size(), std::nullopt);
      order = OrderRelation::identity(table->size());
      continue;
    }
    if (verb != "plus" && verb != "comp" && verb != "order") throw ParseError(d.line, "unknown directive '" + verb + "'");
    if (!table) throw ParseError(d.line, "`" + verb + "` before `elements`");
    if (verb == "plus") {
      arity(d, 2);
      const Element x = lookup(d, d.tokens[1]);
      if (plus[x]) throw ParseError(d.line, "duplicate plus for '" + d.tokens[1] + "'");
      plus[x] = lookup(d, d.tokens[2]);
    } else if (verb == "comp") {
      arity(d, 3);
      const Element a = lookup(d, d.tokens[1]), b = lookup(d, d.tokens[2]), c = lookup(d, d.tokens[3]);
      if (table->defined(a, b))
        throw ParseError(d.line, "duplicate comp for (" + d.tokens[1] + ", " + d.tokens[2] + ")");
      table->set(a, b, c);
    } else {
      if (!constellation) throw ParseError(d.line, "order lines are not allowed for kind semigroupoid");
      arity(d, 2);
      order->set(lookup(d, d.tokens[1]), lookup(d, d.tokens[2]));
      *order = order->closure();
      if (!order->is_antisymmetric()) throw ParseError(d.line, "order relation is not antisymmetric");
    }
  }

  if (!table) throw ParseError(0, "missing `elements` line");
  std::vector<Element> plus_map(table->size());
  for (Element x = 0; x < table->size(); ++x) {
    if (!plus[x]) throw ParseError(0, "missing plus for '" + table->label(x) + "'");
    plus_map[x] = *plus[x];
  }
  RestrictionStructure r(std::move(plus_map));
  if (constellation) return OrderedConstellation{std::move(*table), std::move(r), std::move(*order)};
  return RawSemigroupoid{std::move(*table), std::move(r)};
}

/// Canonical text: elements sorted, plus lines in element order, comp lines
/// sorted by their tokens, order lines the covering pairs only.
inline std::string serialize_structure(const RawSemigroupoid& s) {
  std::ostringstream out;
  detail::write_header(out, "semigroupoid", s.table, s.plus);
  return out.str();
}

inline std::string serialize_structure(const OrderedConstellation& t) {
  std::ostringstream out;
  detail::write_header(out, "constellation", t.table, t.plus);
  std::vector<std::pair<std::string, std::string>> covers;
  for (const auto& [a, b] : t.order.covering_pairs()) covers.emplace_back(t.label(a), t.label(b));
  std::sort(covers.begin(), covers.end());
  for (const auto& [a, b] : covers) out << "order " << a << ' ' << b << '\n';
  return out.str();
}

inline std::string serialize_structure(const LeftRestrictionSemigroupoid& s) { return serialize_structure(s.raw()); }

inline std::string serialize_structure(const Structure& s) {
  return std::visit([](const auto& v) { return serialize_structure(v); }, s);
}

/// A structure file on disk. Read errors surface as ParseError at line 0.
inline std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot read file", path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline Structure load_structure(const std::filesystem::path& path) {
  try {
    return parse_structure(read_text(path));
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.message(), path.string());
  }
}

/// `source`/`target` references plus the label map, exactly as written.
/// A reference of the form `expand:<path>` names the expansion of <path>.
struct MorphismFile {
  std::string source;
  std::string target;
  std::vector<std::pair<std::string, std::string>> map;
};

inline MorphismFile parse_morphism(std::string_view text) {
  MorphismFile m;
  std::map<std::string, std::size_t> seen;
  for (const auto& d : detail::tokenize(text)) {
    const auto& verb = d.tokens[0];
    if (verb == "source" || verb == "target") {
      if (d.tokens.size() != 2) throw ParseError(d.line, "`" + verb + "` takes one path");
      auto& slot = verb == "source" ? m.source : m.target;
      if (!slot.empty()) throw ParseError(d.line, "duplicate `" + verb + "` line");
      slot = d.tokens[1];
    } else if (verb == "map") {
      if (d.tokens.size() != 3) throw ParseError(d.line, "`map` takes 2 arguments");
      if (!seen.emplace(d.tokens[1], d.line).second) throw ParseError(d.line, "duplicate map for '" + d.tokens[1] + "'");
      m.map.emplace_back(d.tokens[1], d.tokens[2]);
    } else {
      throw ParseError(d.line, "unknown directive '" + verb + "'");
    }
  }
  if (m.source.empty()) throw ParseError(0, "missing `source` line");
  if (m.target.empty()) throw ParseError(0, "missing `target` line");
  return m;
}

/// Map lines follow the carrier order of `source`.
inline std::string serialize_morphism(const std::string& source_ref, const std::string& target_ref,
                                      const PartialTable& source, const PartialTable& target,
                                      const std::vector<Element>& map) {
  std::ostringstream out;
  out << "source " << source_ref << "\ntarget " << target_ref << '\n';
  for (Element x : detail::sorted_by_label(source))
    out << "map " << source.label(x) << ' ' << target.label(map.at(x)) << '\n';
  return out.str();
}

/// Resolves a label map against concrete carriers; every source element must
/// be mapped exactly once.
inline std::vector<Element> resolve_map(const MorphismFile& m, const PartialTable& source, const PartialTable& target) {
  std::vector<std::optional<Element>> map(source.size());
  for (const auto& [a, b] : m.map) {
    const auto x = source.find(a);
    if (!x) throw ParseError(0, "map: unknown source element '" + a + "'");
    const auto y = target.find(b);
    if (!y) throw ParseError(0, "map: unknown target element '" + b + "'");
    map[*x] = *y;
  }
  std::vector<Element> out;
  for (Element x = 0; x < source.size(); ++x) {
    if (!map[x]) throw ParseError(0, "map: no image for '" + source.label(x) + "'");
    out.push_back(*map[x]);
  }
  return out;
}

}  // namespace constella

#endif  // CONSTELLA_IO_HPP
